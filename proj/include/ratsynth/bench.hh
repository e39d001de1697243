/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#pragma once

#include "runtime.hh"

#include <string>
#include <vector>

namespace ratsynth {

/* First inputs walk the signed Calkin-Wilf rationals diagonally, the rest
 * are seeded random rationals in [-16, 16]. */
std::vector<assignment> fuzz_inputs(const std::vector<var> &inputs, size_t n, uint64_t seed);

struct check_report {
	size_t inputs = 0;
	size_t answered = 0;
	size_t bot = 0;
	size_t violations = 0;
	std::vector<std::string> messages;
};

/* Runs prog on n fuzzed inputs and verifies every answer against phi. A
 * soundness_violation from the runtime counts as a violation. */
check_report check_program(const prog_ir &prog, const formula &phi, size_t n, uint64_t seed,
                           const runtime_options &opt = {});

struct bench_problem {
	std::string id;
	std::string smt_path;
	std::string io_path;
};

/* *.smt2 files with a same-stem *.json sidecar, sorted by id. Throws
 * config_error for a missing or empty directory. */
std::vector<bench_problem> discover_problems(const std::string &dir);

enum class bench_outcome { solved, timeout, error };

const char *outcome_name(bench_outcome o);

struct bench_record {
	std::string id;
	std::string strategy;
	bench_outcome outcome = bench_outcome::error;
	double wall_s = 0;
	size_t iterations = 0;
	size_t branches = 0;
	std::string completeness;
	std::string detail;
};

/* Solved = synthesis finished with a Complete report and the program
 * passed check_program with check_n inputs. */
bench_record run_benchmark(const bench_problem &p, const synth_config &cfg, size_t check_n);

/* One forked child per problem, at most `jobs` at a time, killed after the
 * wall timeout plus a grace period. Records come back sorted by id. */
std::vector<bench_record> run_bench(const std::vector<bench_problem> &ps, const synth_config &cfg, size_t jobs,
                                    size_t check_n);

struct triple {
	double min = 0, avg = 0, max = 0;
};

struct bench_summary {
	size_t total = 0;
	size_t solved = 0;
	double par2 = 0;
	triple solved_time;
	triple solved_iterations;
};

/* PAR2 = mean of (wall time if solved else 2 * timeout). */
bench_summary summarize(const std::vector<bench_record> &rs, double timeout);

inline constexpr const char *csv_version_line = "# ratsynth-bench-csv v1";

std::string to_csv(const std::vector<bench_record> &rs);
std::vector<bench_record> from_csv(const std::string &text);
std::string summary_text(const bench_summary &s);

}
