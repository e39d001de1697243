/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#pragma once

#include "poly.hh"

#include <cstdint>
#include <string>
#include <vector>

namespace ratsynth {

struct generated_problem {
	std::string name;
	std::string smt2;
	std::vector<var> inputs, outputs;
};

/* The unit-circle band and the two-output ellipsoid example. */
std::vector<generated_problem> named_problems();

/* named_problems() followed by `count` seeded instances of annuli,
 * intersecting circles, ellipses, spheres, parabolas, hyperbolas and
 * high-degree boundaries (the first of which has degree 100). */
std::vector<generated_problem> generate_geometric(size_t count, uint64_t seed);

/* Writes <name>.smt2 and <name>.json (I/O sidecar) into dir. */
void write_problems(const std::string &dir, const std::vector<generated_problem> &ps);

}
