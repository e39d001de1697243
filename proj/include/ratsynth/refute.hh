/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#pragma once

#include "interval.hh"

namespace ratsynth {

enum class refutation { refuted, unknown };

inline constexpr unsigned max_propagation_rounds = 64;

/* Bounds implied by the atoms: each atom p = q(v) + r with q univariate
 * bounds v through the sublevel set of q against the interval of r.
 * Sets conflict when some atom cannot hold in the box. */
box propagate_bounds(const std::vector<atom> &atoms, bool &conflict, box start = {});

/* Sound: refuted implies the conjunction has no real solution. */
refutation interval_refute(const clause &c);

/* Whether f is certainly false everywhere in the box. */
bool infeasible(const formula &f, const box &b);

/* Sound refutation of an arbitrary formula by bound propagation with
 * case splits on disjunctions, exploring at most leaf_budget cases. */
bool refute(const formula &f, size_t leaf_budget = default_dnf_budget);

}
