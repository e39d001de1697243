/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#include "oracles.hh"
#include "ratsynth/errors.hh"
#include "ratsynth/qe.hh"
#include "ratsynth/realroots.hh"

#include <gtest/gtest.h>

using namespace ratsynth;
using namespace ratsynth::testing;

namespace {

poly x = X("x"), y = X("y"), z = X("z");

/* psi against a closed form on samples in [-2, 2] */
size_t disagreements(const formula &psi, const formula &expect, size_t grid = 201, size_t random = 800)
{
	size_t bad = 0;
	for (const Rat &v : sample_rationals(Q(-2), Q(2), grid, random, 17))
		bad += formula_eval(psi, {{"x", v}}) != formula_eval(expect, {{"x", v}});
	return bad;
}

/* exists y over a fine rational grid implies psi; psi at x implies a real
 * witness for the substituted formula */
void check_one_param(const formula &phi, const formula &psi)
{
	auto grid = y_grid(6, 16);
	for (const Rat &v : sample_rationals(Q(-3), Q(3), 61, 60, 23)) {
		bool p = formula_eval(psi, {{"x", v}});
		if (grid_exists(phi, {{"x", v}}, "y", grid))
			EXPECT_TRUE(p) << phi.str() << " at x=" << to_string(v);
		EXPECT_EQ(p, decide_exists_real(substitute(phi, {{"x", v}}), "y")) << phi.str() << " at x=" << to_string(v);
	}
}

formula circle_hat()
{
	poly c = x * x + y * y;
	return A(c - poly(Q(9, 10)), rel::gt) && A(c - poly(1), rel::lt);
}

}

TEST(Vts, CircleIsUnitInterval)
{
	qe_result r = eliminate_exists(circle_hat(), "y");
	EXPECT_TRUE(r.exact);
	EXPECT_EQ(r.engine, qe_engine::vts2);
	EXPECT_EQ(disagreements(r.psi, A(x * x - poly(1), rel::lt)), 0u);
}

TEST(Vts, EllipsoidFirstBranch)
{
	poly e = x * x + (y * y).scaled(Q(1, 9)) - poly(Q(7, 16));
	poly s = -(x * x).scaled(Q(1, 9)) - (y * y).scaled(Q(1, 16)) - poly(9 + 12 + 2);
	qe_result r = eliminate_exists(A(e, rel::le) && A(s, rel::lt), "y");
	EXPECT_EQ(disagreements(r.psi, A((x * x).scaled(16) - poly(7), rel::le)), 0u);
}

TEST(Vts, Examples)
{
	EXPECT_EQ(disagreements(eliminate_exists(A(y * y - x, rel::le), "y").psi, A(x, rel::ge)), 0u);
	EXPECT_EQ(disagreements(eliminate_exists(A(y.scaled(3) + poly(2), rel::le) && A(y.scaled(3) + poly(2), rel::ge), "y").psi,
	                        formula::top()),
	          0u);
	EXPECT_EQ(disagreements(eliminate_exists(A(y * y + x, rel::le), "y").psi, A(x, rel::le)), 0u);
	EXPECT_EQ(disagreements(eliminate_exists(A((y - x) * (y - x) - poly(1), rel::lt), "y").psi, formula::top()), 0u);
	EXPECT_EQ(disagreements(eliminate_exists(A(y * y - x, rel::le) && A(y * y - x, rel::ge), "y").psi, A(x, rel::ge)),
	          0u);
	formula noy = A(x - poly(1), rel::gt);
	EXPECT_EQ(disagreements(eliminate_exists(noy, "y").psi, noy), 0u);
	EXPECT_EQ(disagreements(eliminate_exists(A(y * y + x * x + poly(1), rel::le), "y").psi, formula::bottom()), 0u);
}

TEST(Vts, DegreeTooHigh)
{
	EXPECT_THROW(vts_quadratic(A(y * y * y - x, rel::le), "y"), degree_too_high);
}

TEST(Cad, CircleIsUnitInterval)
{
	formula psi = cad_one_param(circle_hat(), "y");
	EXPECT_EQ(disagreements(psi, A(x * x - poly(1), rel::lt)), 0u);
}

TEST(Cad, CubicAndQuarticInY)
{
	formula f1 = A(y * y * y - x, rel::eq) && A(y, rel::gt);
	qe_result r1 = eliminate_exists(f1, "y");
	EXPECT_EQ(r1.engine, qe_engine::cad1);
	EXPECT_TRUE(r1.exact);
	EXPECT_EQ(disagreements(r1.psi, A(x, rel::gt)), 0u);

	formula f2 = A(y.pow(4) - x * y - poly(1), rel::lt) && A(y - poly(2), rel::gt);
	check_one_param(f2, eliminate_exists(f2, "y").psi);

	formula f3 = A(y.pow(4) + x * x - poly(1), rel::le);
	EXPECT_EQ(disagreements(eliminate_exists(f3, "y").psi, A(x * x - poly(1), rel::le)), 0u);
}

TEST(Cad, TooManyParameters)
{
	EXPECT_THROW(cad_one_param(A(y.pow(3) - x * z, rel::le), "y"), too_many_free_variables);
	qe_result r = eliminate_exists(A(y.pow(4) - x * z - X("w"), rel::le), "y");
	EXPECT_FALSE(r.exact);
	EXPECT_EQ(r.engine, qe_engine::none);
}

TEST(QeDifferential, VtsAgreesWithCadAndOracles)
{
	std::mt19937_64 rng(29);
	std::uniform_int_distribution<long> c(-3, 3);
	const rel rels[] = {rel::lt, rel::le, rel::gt, rel::ge, rel::eq};
	for (int i = 0; i < 40; ++i) {
		formula f = formula::top();
		int atoms = 1 + int(rng() % 2);
		for (int k = 0; k < atoms; ++k) {
			poly p = (y * y).scaled(c(rng)) + (x * y).scaled(c(rng)) + y.scaled(c(rng)) + (x * x).scaled(c(rng)) +
			         x.scaled(c(rng)) + poly(c(rng));
			if (!p.contains("y"))
				p += y;
			f = f && A(p, rels[rng() % 5]);
		}
		formula v = vts_quadratic(f, "y"), d = cad_one_param(f, "y");
		size_t bad = 0;
		for (const Rat &s : sample_rationals(Q(-3), Q(3), 61, 100, i))
			bad += formula_eval(v, {{"x", s}}) != formula_eval(d, {{"x", s}});
		EXPECT_EQ(bad, 0u) << f.str();
		check_one_param(f, v);
	}
}

TEST(QeEngine, Names)
{
	EXPECT_EQ(engine_from_name(engine_name(qe_engine::cad1)), qe_engine::cad1);
	EXPECT_THROW(engine_from_name("qepcad"), parse_error);
}
