/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#pragma once

#include "formula.hh"

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ratsynth {

/* Parsed QF_NRA script: declared constants in declaration order and the
 * conjunction of all assertions. */
struct smt_script {
	std::string logic;
	std::vector<var> declared;
	formula assertions;
};

/* Throws parse_error, unsupported_construct (with line:column) and
 * sort_error. */
smt_script parse_script(std::string_view text);

/* Assigns the declared constants to inputs and outputs. Throws
 * unknown_variable for names not declared, variable_clash for overlaps, and
 * parse_error when a declared constant is left unassigned. */
spec make_spec(const smt_script &s, const std::vector<var> &inputs, const std::vector<var> &outputs);

spec parse_problem(std::string_view text, const std::vector<var> &inputs, const std::vector<var> &outputs);

/* Sidecar {"inputs": [...], "outputs": [...]}. Throws parse_error. */
std::pair<std::vector<var>, std::vector<var>> parse_io_sidecar(std::string_view json_text);
std::string io_sidecar(const std::vector<var> &inputs, const std::vector<var> &outputs);

std::string print_rat(const Rat &q);
std::string print_poly(const poly &p);
std::string print_formula(const formula &f);
std::string print_model(const assignment &m);
/* Complete script: set-logic, declarations, one assert, check-sat. */
std::string print_script(const formula &f, const std::vector<var> &vars, bool get_values = false);

struct external_answer {
	enum class status { sat, unsat, unknown } st = status::unknown;
	/* rational coordinates only */
	assignment values;
	std::set<var> irrational;
	std::string raw;
};

/* Runs `command` (split on whitespace), writes the query to its standard
 * input and reads the answer. Throws external_solver_failure on malformed
 * output or spawn failure and solver_timeout after wall_seconds. */
external_answer external_solve(const formula &phi, const std::vector<var> &vars, const std::string &command,
                               double wall_seconds);

}
