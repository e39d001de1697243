/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#pragma once

#include "formula.hh"

#include <array>
#include <map>
#include <optional>

namespace ratsynth {

/* A conjunction of inequalities rewritten as one polynomial equation
 * "equation = 0" over the original variables plus fresh witnesses: the
 * clause holds at a point iff some rational value of the fresh variables
 * makes the equation vanish. */
struct reduction_result {
	poly equation;
	std::vector<var> fresh;
	std::map<var, size_t> origin; /* fresh variable -> index of its atom */
};

/* Strict p > 0 becomes p = z1^2+z2^2+z3^2+z4^2 together with p*z' = 1;
 * non-strict p >= 0 only the four-square equation. The equations q_j = 0
 * are merged into sum q_j^2 = 0. Atoms must be normalized. */
reduction_result htp_reduce(const clause &c);

/* Fresh variable names used for atom i, in the order they appear in
 * reduction_result::fresh. */
struct atom_witnesses {
	std::optional<var> reciprocal;
	std::array<var, 4> squares;
};
std::vector<atom_witnesses> witness_layout(const clause &c, const reduction_result &r);

/* z with z1^2+..+z4^2 = q exactly, searched over integer 4-tuples for
 * num(q)*den(q), at most search_bound candidates. nullopt means the budget
 * ran out; a decomposition always exists. Throws negative_input. */
std::optional<std::array<Rat, 4>> four_square_decompose(const Rat &q, uint64_t search_bound);

}
