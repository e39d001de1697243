/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#include "oracles.hh"
#include "ratsynth/errors.hh"
#include "ratsynth/rsolve.hh"
#include "ratsynth/smtlib.hh"

#include <gtest/gtest.h>

#include <chrono>

using namespace ratsynth;
using namespace ratsynth::testing;

namespace {

poly x = X("x"), y = X("y");

const std::string fake = std::string("python3 ") + RATSYNTH_TEST_DIR + "/fake_solver.py";

std::string script(const std::string &body, const std::string &decls = "(declare-const x Real)(declare-const y Real)")
{
	return "(set-logic QF_NRA)\n" + decls + "\n" + body + "\n(check-sat)\n";
}

formula parse_body(const std::string &body) { return parse_script(script(body)).assertions; }

bool same_truth(const formula &a, const formula &b)
{
	auto s = sample_rationals(Q(-2), Q(2), 9, 20, 5);
	for (const Rat &u : s)
		for (const Rat &v : s)
			if (formula_eval(a, {{"x", u}, {"y", v}}) != formula_eval(b, {{"x", u}, {"y", v}}))
				return false;
	return true;
}

}

TEST(Parse, DecimalIsExact)
{
	formula f = parse_body("(assert (<= 0.9 (+ (* x x) (* y y))))");
	EXPECT_TRUE(same_truth(f, A(x * x + y * y - poly(Q(9, 10)), rel::ge)));
	EXPECT_TRUE(formula_eval(f, {{"x", Q(3, 10)}, {"y", Q(9, 10)}}));
	EXPECT_FALSE(formula_eval(f, {{"x", Q(3, 10)}, {"y", Q(89, 100)}}));
}

TEST(Parse, EqualityAndCompoundForms)
{
	formula eq = parse_body("(assert (= (* x y) 1))");
	EXPECT_TRUE(same_truth(eq, A(x * y - poly(1), rel::le) && A(x * y - poly(1), rel::ge)));
	formula f = parse_body(
	    "(define-fun two () Real 2)"
	    "(assert (! (let ((s (+ x y))) (=> (> s two) (< x y 1))) :named a1))"
	    "(assert (distinct x (- y) (/ 1 3)))");
	formula g = (!A(x + y - poly(2), rel::gt) || (A(x - y, rel::lt) && A(y - poly(1), rel::lt))) &&
	            A(x + y, rel::ne) && A(x - poly(Q(1, 3)), rel::ne) && A(-y - poly(Q(1, 3)), rel::ne);
	EXPECT_TRUE(same_truth(f, g));
	formula p = parse_body("(assert (>= (* x x x) (* 2 y y)))");
	EXPECT_TRUE(same_truth(p, A(x.pow(3) - (y * y).scaled(2), rel::ge)));
	EXPECT_THROW(parse_body("(assert (>= (^ x 3) 0))"), unsupported_construct);
}

TEST(Parse, DesignatedOutput)
{
	smt_script s = parse_script(script("(assert (> (* a b) 1))", "(declare-fun a () Real)(declare-const b Real)"));
	spec sp = make_spec(s, {"a"}, {"b"});
	EXPECT_EQ(sp.outputs, std::vector<var>{"b"});
	EXPECT_THROW(make_spec(s, {"a"}, {"c"}), unknown_variable);
	EXPECT_THROW(make_spec(s, {}, {"b"}), error);
}

TEST(Parse, Errors)
{
	EXPECT_THROW(parse_script("(set-logic QF_NIA)(declare-const x Int)(assert (> x 0))"), error);
	EXPECT_THROW(parse_script(script("(assert (> z 0))")), error);
	EXPECT_THROW(parse_script(script("(assert (> x 0)")), parse_error);
	EXPECT_THROW(parse_script(script("(assert (exists ((z Real)) (> z x)))")), unsupported_construct);
	EXPECT_THROW(parse_script(script("(assert (+ x 1))")), sort_error);
	try {
		parse_script("(set-logic QF_NRA)\n(declare-const x Real)\n(assert (> x w))\n");
		FAIL();
	} catch (const error &e) {
		EXPECT_NE(std::string(e.what()).find("3:"), std::string::npos) << e.what();
	}
}

TEST(Print, Examples)
{
	EXPECT_EQ(print_formula(A(x * x - poly(1), rel::lt)), "(< (- (* x x) 1) 0)");
	EXPECT_EQ(print_model({{"x", Q(-127, 128)}}), "(define-fun x () Real (/ (- 127) 128))");
	EXPECT_EQ(print_formula(formula::top()), "true");
	EXPECT_EQ(print_rat(Q(-127, 128)), "(/ (- 127) 128)");
	EXPECT_EQ(print_rat(Q(5)), "5");
}

TEST(Print, RoundTrip)
{
	std::mt19937_64 rng(2);
	std::uniform_int_distribution<long> c(-5, 5);
	const rel rels[] = {rel::lt, rel::le, rel::gt, rel::ge, rel::eq, rel::ne};
	for (int i = 0; i < 100; ++i) {
		poly p = (x * x).scaled(Q(c(rng), 3)) + (x * y).scaled(c(rng)) + y.scaled(Q(c(rng), 7)) + poly(Q(c(rng), 2));
		poly q = y.pow(3).scaled(c(rng)) - x.scaled(Q(1, 1 + (rng() % 5)));
		formula f = A(p, rels[rng() % 6]) || (A(q, rels[rng() % 6]) && !A(p - q, rels[rng() % 6]));
		formula g = parse_script(print_script(f, {"x", "y"})).assertions;
		EXPECT_TRUE(same_truth(f, g)) << print_formula(f);
	}
}

TEST(Sidecar, RoundTrip)
{
	auto [in, out] = parse_io_sidecar(io_sidecar({"x", "delta"}, {"y"}));
	EXPECT_EQ(in, (std::vector<var>{"x", "delta"}));
	EXPECT_EQ(out, std::vector<var>{"y"});
	EXPECT_THROW(parse_io_sidecar("{\"inputs\": 3}"), parse_error);
}

TEST(External, Answers)
{
	formula phi = A(x - y, rel::gt);
	EXPECT_EQ(external_solve(phi, {"x", "y"}, fake + " unsat", 10).st, external_answer::status::unsat);
	EXPECT_EQ(external_solve(phi, {"x", "y"}, fake + " unknown", 10).st, external_answer::status::unknown);
	auto sat = external_solve(phi, {"x", "y"}, fake + " \"x=(/ (- 127) 128)\" \"y=(- 2)\"", 10);
	ASSERT_EQ(sat.st, external_answer::status::sat);
	EXPECT_EQ(sat.values.at("x"), Q(-127, 128));
	EXPECT_EQ(sat.values.at("y"), -2);
	EXPECT_TRUE(formula_eval(phi, sat.values));
	auto irr = external_solve(A(y * y - poly(2), rel::eq), {"y"}, fake + " \"y=(root-obj (+ (^ y 2) (- 2)) 1)\"", 10);
	ASSERT_EQ(irr.st, external_answer::status::sat);
	EXPECT_TRUE(irr.irrational.count("y"));
	auto dec = external_solve(A(y * y - poly(2), rel::eq), {"y"}, fake + " y=1.4142135?", 10);
	EXPECT_TRUE(dec.irrational.count("y"));
	EXPECT_THROW(external_solve(phi, {"x"}, fake + " garbage", 10), external_solver_failure);
	EXPECT_THROW(external_solve(phi, {"x"}, "/nonexistent/solver", 10), external_solver_failure);
}

TEST(External, TimeoutKillsChild)
{
	auto t0 = std::chrono::steady_clock::now();
	EXPECT_THROW(external_solve(A(x, rel::gt), {"x"}, fake + " sleep", 1), solver_timeout);
	EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 10);
}

TEST(External, RsolveFallsBackToCommand)
{
	formula phi = A(x - poly(Q(12345, 678)), rel::le) && A(x - poly(Q(12345, 678)), rel::ge) && A(y - x, rel::gt);
	synth_config c;
	c.search_budget = 50;
	c.rsolve = "cmd:" + fake + " \"x=(/ 12345 678)\" y=20";
	rsolver r(c);
	auto m = r.solve(phi, {"x"}, {"y"});
	ASSERT_EQ(m.status, rsolve_status::model);
	EXPECT_EQ(m.source, "external");
	EXPECT_EQ(m.model.at("x"), Q(12345, 678));
	EXPECT_TRUE(formula_eval(phi, m.model));

	c.rsolve = "cmd:" + fake + " \"x=(/ 12345 678)\" \"y=(root-obj (+ (^ y 2) (- 2)) 1)\"";
	rsolver ri(c);
	auto mi = ri.solve(phi, {"x"}, {"y"});
	ASSERT_EQ(mi.status, rsolve_status::model);
	EXPECT_TRUE(mi.irrational.count("y"));
}
