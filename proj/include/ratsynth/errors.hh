/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#pragma once

#include <stdexcept>
#include <string>

namespace ratsynth {

struct error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

#define RATSYNTH_ERROR(name) \
	struct name : error { using error::error; }

RATSYNTH_ERROR(zero_polynomial);
RATSYNTH_ERROR(unassigned_variable);
RATSYNTH_ERROR(degree_overflow);
RATSYNTH_ERROR(divisor_budget_exceeded);
RATSYNTH_ERROR(dnf_budget_exceeded);
RATSYNTH_ERROR(variable_clash);
RATSYNTH_ERROR(negative_input);
RATSYNTH_ERROR(empty_formula);
RATSYNTH_ERROR(degree_too_high);
RATSYNTH_ERROR(too_many_free_variables);
RATSYNTH_ERROR(parse_error);
RATSYNTH_ERROR(unsupported_construct);
RATSYNTH_ERROR(sort_error);
RATSYNTH_ERROR(unknown_variable);
RATSYNTH_ERROR(external_solver_failure);
RATSYNTH_ERROR(solver_timeout);
RATSYNTH_ERROR(input_arity);
RATSYNTH_ERROR(config_error);

/* Raised when a program is about to return an output that does not satisfy
 * its specification. Never caught inside the library. */
RATSYNTH_ERROR(soundness_violation);

#undef RATSYNTH_ERROR

}
