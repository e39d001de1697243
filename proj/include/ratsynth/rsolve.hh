/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#pragma once

#include "synth.hh"

#include <deque>
#include <set>

namespace ratsynth {

enum class rsolve_status { model, unknown, unsat };

struct rsolve_result {
	rsolve_status status = rsolve_status::unknown;
	/* every input and output; irrational coordinates are left out */
	assignment model;
	std::set<var> irrational;
	/* replay, refutation, search or external */
	std::string source;
};

/* Rational model search: replayed models, interval refutation,
 * Calkin-Wilf enumeration closed by univariate solving, then an optional
 * external SMT solver. */
class rsolver {
	synth_config cfg_;
	std::deque<assignment> replay_;
	std::string external_;

public:
	explicit rsolver(const synth_config &cfg);

	rsolve_result solve(const formula &phi, const std::vector<var> &inputs, const std::vector<var> &outputs);
};

/* Internal enumeration only: the last output occurring in phi is solved,
 * all other variables range over signed Calkin-Wilf rationals. */
std::optional<assignment> search_model(const formula &phi, const std::vector<var> &vars, const var &close,
                                       size_t tuple_budget, uint64_t divisor_budget);

}
