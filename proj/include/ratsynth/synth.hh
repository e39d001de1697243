/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#pragma once

#include "qe.hh"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ratsynth {

/* phi(X, y) with its strict version and boundary polynomials. */
struct single_output_program {
	formula phi;
	formula phi_hat;
	std::vector<poly> nonstrict;
	/* exists y. phi_hat, kept only when the elimination was exact */
	std::optional<qe_result> psi;
	var y;
};

struct branch {
	formula guard;
	bool guard_exact = true;
	/* values of the outputs that are not solved in this branch */
	std::map<var, Rat> fixed;
	/* absent: the branch returns `fixed` as is */
	std::optional<single_output_program> solve;
};

enum class run_mode { guard, fallthrough };

const char *mode_name(run_mode m);
run_mode mode_from_name(const std::string &s);

inline constexpr int prog_ir_version = 1;

/* Decision list; an input that no branch answers gets bot. */
struct prog_ir {
	int version = prog_ir_version;
	run_mode mode = run_mode::guard;
	std::string spec_digest;
	spec sp;
	std::vector<branch> branches;
};

enum class completeness { complete, budget_exhausted, qe_incomplete };

const char *completeness_name(completeness c);

struct synth_config {
	size_t iteration_budget = 64;
	/* seconds; 0 disables the wall clock */
	double wall_timeout = 120;
	Rat eps0 = 1;
	uint64_t divisor_budget = uint64_t(1) << 22;
	size_t dnf_budget = 4096;
	/* candidate tuples tried by the internal model search per call */
	size_t search_budget = 2000;
	/* "internal" or "cmd:<executable and arguments>" */
	std::string rsolve = "internal";
	std::vector<assignment> replay;
	run_mode mode = run_mode::guard;
	uint64_t seed = 0;
	std::string strategy = "nqsynth";
};

/* Throws config_error on a non-positive budget or unknown backend. */
void check_config(const synth_config &c);

struct synth_report {
	std::string strategy;
	size_t iterations = 0;
	size_t iteration_budget = 0;
	double wall_timeout = 0;
	std::vector<assignment> models;
	/* guards added in each iteration */
	std::vector<std::vector<formula>> guards;
	completeness status = completeness::budget_exhausted;
	size_t skipped_irrational = 0;
	bool wall_clock_hit = false;
	std::string stop_reason;
};

single_output_program make_single(const formula &phi, const var &y);

/* Program for a spec with exactly one output. Throws input_arity. */
single_output_program synth_single(const spec &s);

struct synth_outcome {
	prog_ir prog;
	synth_report report;
};

synth_outcome synth_multi(const spec &s, const synth_config &cfg);
synth_outcome synth_modenum(const spec &s, const synth_config &cfg);
/* Dispatches on cfg.strategy. */
synth_outcome synthesize(const spec &s, const synth_config &cfg);

}
