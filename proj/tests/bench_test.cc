/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#include "oracles.hh"
#include "ratsynth/bench.hh"
#include "ratsynth/errors.hh"
#include "ratsynth/geometric.hh"
#include "ratsynth/smtlib.hh"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace ratsynth;
using namespace ratsynth::testing;
namespace fs = std::filesystem;

namespace {

bench_record rec(const std::string &id, bench_outcome o, double t, size_t iters)
{
	bench_record r;
	r.id = id;
	r.strategy = "nqsynth";
	r.outcome = o;
	r.wall_s = t;
	r.iterations = iters;
	r.completeness = o == bench_outcome::solved ? "Complete" : "BudgetExhausted";
	return r;
}

fs::path scratch(const std::string &name)
{
	fs::path p = fs::temp_directory_path() / ("ratsynth_bench_test_" + name + "_" + std::to_string(getpid()));
	fs::remove_all(p);
	fs::create_directories(p);
	return p;
}

std::string slurp(const fs::path &p)
{
	std::ifstream in(p, std::ios::binary);
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

}

TEST(Par2, Examples)
{
	auto s = summarize({rec("a", bench_outcome::solved, 10, 1), rec("b", bench_outcome::timeout, 120, 64)}, 120);
	EXPECT_DOUBLE_EQ(s.par2, 125);
	EXPECT_EQ(s.solved, 1u);
	auto all = summarize({rec("a", bench_outcome::solved, 1, 1), rec("b", bench_outcome::solved, 2, 3),
	                      rec("c", bench_outcome::solved, 6, 2)},
	                     120);
	EXPECT_DOUBLE_EQ(all.par2, 3);
	EXPECT_DOUBLE_EQ(all.solved_time.min, 1);
	EXPECT_DOUBLE_EQ(all.solved_time.max, 6);
	EXPECT_DOUBLE_EQ(all.solved_iterations.avg, 2);
}

TEST(Par2, RecomputedFromRecords)
{
	std::mt19937_64 rng(1);
	std::vector<bench_record> rs;
	for (int i = 0; i < 40; ++i) {
		bench_outcome o = rng() % 3 == 0 ? bench_outcome::timeout : rng() % 5 == 0 ? bench_outcome::error : bench_outcome::solved;
		rs.push_back(rec("p" + std::to_string(i), o, double(rng() % 1000) / 10, rng() % 20));
	}
	double T = 120, total = 0, mn = 1e300, mx = -1, sum = 0;
	size_t solved = 0;
	for (auto &r : rs) {
		if (r.outcome == bench_outcome::solved) {
			total += r.wall_s;
			sum += r.wall_s;
			mn = std::min(mn, r.wall_s);
			mx = std::max(mx, r.wall_s);
			++solved;
		} else {
			total += 2 * T;
		}
	}
	auto s = summarize(rs, T);
	EXPECT_DOUBLE_EQ(s.par2, total / double(rs.size()));
	EXPECT_EQ(s.solved, solved);
	EXPECT_DOUBLE_EQ(s.solved_time.min, mn);
	EXPECT_DOUBLE_EQ(s.solved_time.max, mx);
	EXPECT_DOUBLE_EQ(s.solved_time.avg, sum / double(solved));
}

TEST(Csv, VersionedRoundTrip)
{
	std::vector<bench_record> rs{rec("a", bench_outcome::solved, 1.5, 2), rec("b,c", bench_outcome::error, 0.25, 0)};
	rs[1].detail = "parse error: \"x\"";
	std::string csv = to_csv(rs);
	EXPECT_EQ(csv.substr(0, csv.find('\n')), csv_version_line);
	auto back = from_csv(csv);
	ASSERT_EQ(back.size(), 2u);
	EXPECT_EQ(back[1].id, "b,c");
	EXPECT_EQ(back[1].detail, rs[1].detail);
	EXPECT_EQ(back[0].outcome, bench_outcome::solved);
	EXPECT_DOUBLE_EQ(back[0].wall_s, 1.5);
	EXPECT_THROW(from_csv("id,strategy\n"), parse_error);
}

TEST(Discover, EmptyDirectoryIsAnError)
{
	fs::path d = scratch("empty");
	EXPECT_THROW(discover_problems(d.string()), config_error);
	EXPECT_THROW(discover_problems((d / "missing").string()), config_error);
	fs::remove_all(d);
}

TEST(Fuzz, DeterministicAndSized)
{
	auto a = fuzz_inputs({"x", "z"}, 100, 3), b = fuzz_inputs({"x", "z"}, 100, 3), c = fuzz_inputs({"x", "z"}, 100, 4);
	EXPECT_EQ(a.size(), 100u);
	EXPECT_EQ(a, b);
	EXPECT_NE(a, c);
	EXPECT_EQ(a[0], (assignment{{"x", Q(0)}, {"z", Q(0)}}));
	EXPECT_EQ(fuzz_inputs({}, 10, 0).size(), 1u);
}

TEST(Generator, NamedProblemsAndDeterminism)
{
	auto none = generate_geometric(0, 5);
	ASSERT_EQ(none.size(), 2u);
	EXPECT_EQ(none[0].name, "circle");
	EXPECT_EQ(none[1].name, "ellipsoid");
	fs::path d1 = scratch("gen1"), d2 = scratch("gen2");
	write_problems(d1.string(), generate_geometric(30, 5));
	write_problems(d2.string(), generate_geometric(30, 5));
	size_t files = 0;
	for (const auto &e : fs::directory_iterator(d1)) {
		++files;
		EXPECT_EQ(slurp(e.path()), slurp(d2 / e.path().filename())) << e.path();
	}
	EXPECT_EQ(files, 64u);
	EXPECT_EQ(discover_problems(d1.string()).size(), 32u);
	fs::remove_all(d1);
	fs::remove_all(d2);
}

TEST(Generator, EveryProblemParsesAndDegreeHundredIsPresent)
{
	bool hundred = false;
	for (const auto &p : generate_geometric(30, 5)) {
		spec s = parse_problem(p.smt2, p.inputs, p.outputs);
		for (const var &y : s.outputs)
			for (const atom &a : atoms_of(s.phi))
				hundred |= a.p.degree(y) == 100;
	}
	EXPECT_TRUE(hundred);
}

TEST(Harness, SmallCorpusInWorkers)
{
	fs::path d = scratch("run");
	write_problems(d.string(), generate_geometric(0, 1));
	synth_config c;
	c.wall_timeout = 60;
	auto rs = run_bench(discover_problems(d.string()), c, 2, 200);
	ASSERT_EQ(rs.size(), 2u);
	EXPECT_EQ(rs[0].id, "circle");
	EXPECT_EQ(rs[0].outcome, bench_outcome::solved) << rs[0].detail;
	EXPECT_EQ(rs[0].branches, 1u);
	EXPECT_EQ(rs[1].id, "ellipsoid");
	EXPECT_NE(rs[1].outcome, bench_outcome::error) << rs[1].detail;
	auto direct = run_benchmark(discover_problems(d.string())[0], c, 200);
	EXPECT_EQ(direct.outcome, bench_outcome::solved);
	fs::remove_all(d);
}
