/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#pragma once

#include "synth.hh"

namespace ratsynth {

/* combined: rational samples then root candidates regardless of psi;
 * paper: samples only when the exact psi holds. */
enum class single_mode { combined, paper };

struct runtime_options {
	single_mode single = single_mode::combined;
	uint64_t divisor_budget = uint64_t(1) << 22;
	Rat eps0 = 1;
};

struct single_result {
	std::optional<Rat> value;
	size_t samples_tried = 0;
	size_t candidates_tried = 0;
	bool divisor_budget_hit = false;
};

single_result run_single(const single_output_program &prog, const assignment &inputs,
                         const runtime_options &opt = {});

struct run_result {
	/* output values, or none for bot */
	std::optional<assignment> outputs;
	std::optional<size_t> branch;
	size_t samples_tried = 0;
	size_t candidates_tried = 0;
	bool divisor_budget_hit = false;
};

/* Throws input_arity when inputs do not assign exactly the program inputs,
 * soundness_violation when an answer fails the final check. */
run_result run_program(const prog_ir &prog, const assignment &inputs, const runtime_options &opt = {});

bool verify_output(const formula &phi, const assignment &inputs, const assignment &outputs);

}
