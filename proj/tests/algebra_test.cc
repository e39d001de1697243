/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#include "oracles.hh"
#include "ratsynth/errors.hh"
#include "ratsynth/resultant.hh"

#include <gtest/gtest.h>

using namespace ratsynth;
using namespace ratsynth::testing;

namespace {

poly wilkinson(const var &y)
{
	poly w(1);
	for (long j = 1; j <= 20; ++j)
		w *= X(y) - poly(j);
	return w;
}

}

TEST(Rat, ParsesIntegersFractionsAndDecimals)
{
	EXPECT_EQ(parse_rat("0.9"), Q(9, 10));
	EXPECT_EQ(parse_rat("-127/128"), Q(-127, 128));
	EXPECT_EQ(parse_rat("08"), Q(8));
	EXPECT_EQ(parse_rat("4/6"), Q(2, 3));
	EXPECT_EQ(parse_rat("14.4913767503"), Q(144913767503L, 10000000000L));
	EXPECT_THROW(parse_rat("1/0"), parse_error);
	EXPECT_THROW(parse_rat("abc"), parse_error);
	EXPECT_THROW(parse_rat("."), parse_error);
}

TEST(Rat, CanonicalText)
{
	EXPECT_EQ(to_string(Q(-6, 4)), "-3/2");
	EXPECT_EQ(to_string(Q(4, 2)), "2");
}

TEST(Rat, SignedRationalsEnumerateEachValueOnce)
{
	auto v = signed_rationals(2001);
	std::set<Rat> seen(v.begin(), v.end());
	EXPECT_EQ(seen.size(), v.size());
	EXPECT_EQ(v[0], 0);
	EXPECT_EQ(v[1], 1);
	EXPECT_EQ(v[2], -1);
	EXPECT_TRUE(seen.count(Q(1, 2)) && seen.count(Q(-2)) && seen.count(Q(3, 2)));
}

TEST(Poly, EvalExamples)
{
	poly x = X("x"), y = X("y");
	EXPECT_EQ((x * x + y * y).eval({{"x", Q(3, 5)}, {"y", Q(4, 5)}}), 1);
	EXPECT_EQ(poly().eval({}), 0);
	EXPECT_THROW((x * y).eval({{"x", Q(1)}}), unassigned_variable);
}

TEST(Poly, PerturbedWilkinsonAtTwentyIsExact)
{
	poly y = X("y");
	poly p = wilkinson("y") - y.pow(19).scaled(Rat(1, 8388608));
	EXPECT_EQ(p.eval({{"y", Q(20)}}), Rat(BigInt("-625000000000000000", 10)));
}

TEST(Poly, SubstituteExamples)
{
	poly x = X("x"), y = X("y"), z = X("z");
	EXPECT_EQ((x * x + y * y).substitute({{"x", Q(1)}}), y * y + poly(1));
	EXPECT_TRUE((x * y).substitute({{"x", Q(0)}}).is_zero());
	poly e = x * x + (y * y).scaled(Q(1, 9)) + (z * z).scaled(Q(1, 16)) - poly(1);
	EXPECT_EQ(e.substitute({{"z", Q(-3)}}), x * x + (y * y).scaled(Q(1, 9)) - poly(Q(7, 16)));
}

TEST(Poly, GrlexLeadingTerm)
{
	poly x = X("x"), y = X("y");
	poly p = x + y * y * y + x * x * y;
	EXPECT_EQ(p.total_degree(), 3u);
	EXPECT_EQ(p.leading_monomial().degree(), 3u);
	EXPECT_EQ(p.degree("y"), 3u);
	EXPECT_EQ(p.coeffs_in("x").size(), 3u);
}

TEST(Poly, ArithmeticIdentities)
{
	poly x = X("x"), y = X("y");
	poly a = x * x - y + poly(Q(1, 3)), b = x * y + poly(2);
	EXPECT_EQ((a + b) * (a - b), a * a - b * b);
	EXPECT_EQ(*(a * b).divide_exact(b), a);
	EXPECT_FALSE((a * b + poly(1)).divide_exact(b).has_value());
	EXPECT_EQ((a * b).derivative("x"), a.derivative("x") * b + a * b.derivative("x"));
	EXPECT_EQ(a.substitute("y", b), x * x - b + poly(Q(1, 3)));
}

TEST(UniPoly, ClearDenominators)
{
	auto c1 = clear_denominators(unipoly("y", {Q(-9, 10), 0, 1}));
	EXPECT_EQ(c1.integral, unipoly("y", {-9, 0, 10}));
	EXPECT_EQ(c1.multiplier, 10);
	auto c2 = clear_denominators(unipoly("y", {4, 2}));
	EXPECT_EQ(c2.integral, unipoly("y", {2, 1}));
	EXPECT_EQ(c2.multiplier, Q(1, 2));
	unipoly p3("y", {0, Q(1, 6), Q(1, 4)});
	auto c3 = clear_denominators(p3);
	EXPECT_EQ(c3.integral, unipoly("y", {0, 2, 3}));
	EXPECT_EQ(c3.integral, p3.scaled(c3.multiplier));
	EXPECT_THROW(clear_denominators(unipoly("y", {})), zero_polynomial);
}

TEST(UniPoly, GcdAndSquareFree)
{
	unipoly y1("y", {-1, 1}), y2("y", {2, 1});
	unipoly g = gcd_uni(unipoly("y", {-1, 0, 1}), y1);
	EXPECT_EQ(g.monic(), y1);
	unipoly sf = square_free_part(y1 * y1 * y2);
	EXPECT_EQ(sf.monic(), (y1 * y2).monic());
	auto [q, r] = divmod(y1 * y1 * y2, sf);
	EXPECT_TRUE(r.is_zero());
	EXPECT_EQ(q.monic(), y1);
}

TEST(Resultant, DiscriminantOfParabola)
{
	EXPECT_EQ(discriminant(X("y") * X("y") - X("x"), "y"), X("x").scaled(4));
}

TEST(Resultant, MatchesSylvesterDeterminant)
{
	std::mt19937_64 rng(7);
	std::uniform_int_distribution<long> c(-5, 5), dg(1, 4);
	for (int trial = 0; trial < 60; ++trial) {
		auto rnd = [&] {
			int d = int(dg(rng));
			poly p;
			for (int k = 0; k <= d; ++k) {
				poly coef = poly(c(rng)) + X("x").scaled(c(rng)) + (X("x") * X("z")).scaled(c(rng));
				if (k == d && coef.is_zero())
					coef = poly(1);
				p += coef * X("y").pow(k);
			}
			return p;
		};
		poly p = rnd(), q = rnd();
		if (p.degree("y") == 0 || q.degree("y") == 0)
			continue;
		poly r = resultant(p, q, "y");
		for (int k = 0; k < 4; ++k) {
			assignment at{{"x", Q(c(rng), 3)}, {"z", Q(c(rng), 2)}};
			ASSERT_EQ(r.eval(at), sylvester_resultant_at(p, q, "y", at)) << p.str() << " | " << q.str();
		}
	}
}
