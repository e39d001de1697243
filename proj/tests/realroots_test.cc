/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#include "oracles.hh"
#include "ratsynth/errors.hh"
#include "ratsynth/realroots.hh"

#include <gtest/gtest.h>

using namespace ratsynth;
using namespace ratsynth::testing;

namespace {

root_interval open_iv(const Rat &a, const Rat &b) { return {a, b, true, true}; }

unipoly U(std::vector<Rat> c) { return unipoly("y", std::move(c)); }

int certified_count(const unipoly &p, const root_interval &iv) { return count_roots(p, iv); }

}

TEST(Count, Examples)
{
	EXPECT_EQ(count_roots(U({-2, 0, 1}), open_iv(-2, 2)), 2);
	EXPECT_EQ(count_roots(U({1, 0, 1}), open_iv(-10, 10)), 0);
	EXPECT_EQ(count_roots(U({1, -2, 1}), open_iv(0, 2)), 1);
}

TEST(Count, EndpointsFollowOpenness)
{
	unipoly p = U({-1, 0, 1});
	EXPECT_EQ(count_roots(p, {Q(-1), Q(1), true, true}), 0);
	EXPECT_EQ(count_roots(p, {Q(-1), Q(1), false, true}), 1);
	EXPECT_EQ(count_roots(p, {Q(-1), Q(1), false, false}), 2);
	EXPECT_EQ(count_roots(p, {Q(1), Q(1), false, false}), 1);
}

TEST(Count, AgreesWithHermiteSignature)
{
	std::mt19937_64 rng(11);
	for (int i = 0; i < 200; ++i) {
		unipoly p = random_int_poly(rng, "y", 1 + int(rng() % 7), 9);
		ASSERT_EQ(count_real_roots(p), hermite_real_root_count(square_free_part(p))) << p.str();
	}
}

TEST(Isolate, Examples)
{
	auto r2 = isolate_roots(U({-2, 0, 1}));
	ASSERT_EQ(r2.size(), 2u);
	EXPECT_TRUE(r2[0].hi <= r2[1].lo);
	unipoly s2 = U({-2, 0, 1});
	for (auto &iv : r2)
		EXPECT_EQ(certified_count(s2, iv), 1);
	EXPECT_LT(r2[0].hi, 0);
	EXPECT_GT(r2[1].lo, 0);
	EXPECT_TRUE(isolate_roots(U({1, 0, 1})).empty());
	auto r12 = isolate_roots(U({2, -3, 1}), 4);
	ASSERT_EQ(r12.size(), 2u);
	EXPECT_TRUE(r12[0].contains(1));
	EXPECT_TRUE(r12[1].contains(2));
	EXPECT_FALSE(r12[0].contains(2));
}

TEST(Isolate, KnownRootsAreSeparated)
{
	/* roots -3, -1/2, 1/3, sqrt(2), -sqrt(2), 5 */
	unipoly p = U({3, 1}) * U({1, 2}) * U({-1, 3}) * U({-2, 0, 1}) * U({-5, 1});
	auto iv = isolate_roots(p);
	ASSERT_EQ(iv.size(), 6u);
	for (size_t i = 0; i + 1 < iv.size(); ++i)
		EXPECT_TRUE(iv[i].hi < iv[i + 1].lo || (iv[i].hi == iv[i + 1].lo && (iv[i].hi_open || iv[i + 1].lo_open)));
	std::vector<Rat> rational{Q(-3), Q(-1, 2), Q(1, 3), Q(5)};
	for (const Rat &r : rational) {
		int hits = 0;
		for (auto &v : iv)
			hits += v.contains(r);
		EXPECT_EQ(hits, 1) << to_string(r);
	}
}

TEST(Samples, Examples)
{
	poly y = X("y");
	formula chi = A(y * y - poly(Q(13, 20)), rel::gt) && A(y * y - poly(Q(3, 4)), rel::lt);
	bool found = false;
	for (const Rat &a : rational_samples(chi, "y"))
		found |= formula_eval(chi, {{"y", a}});
	EXPECT_TRUE(found);

	formula neg = A(y * y + poly(1), rel::lt);
	auto s = rational_samples(neg, "y");
	EXPECT_FALSE(s.empty());
	for (const Rat &a : s)
		EXPECT_FALSE(formula_eval(neg, {{"y", a}}));

	auto pos = rational_samples(A(y, rel::gt), "y");
	EXPECT_NE(std::find(pos.begin(), pos.end(), Rat(1)), pos.end());
	EXPECT_THROW(rational_samples(formula::top(), "y"), empty_formula);
}

TEST(CandidateRoots, Examples)
{
	auto c0 = cand_rat_roots(U({0, 0, 1}));
	EXPECT_NE(std::find(c0.begin(), c0.end(), Rat(0)), c0.end());

	unipoly p = U({-1, -1, 2});
	auto c = cand_rat_roots(p);
	for (Rat r : {Q(1), Q(-1), Q(1, 2), Q(-1, 2)})
		EXPECT_NE(std::find(c.begin(), c.end(), r), c.end());
	std::vector<Rat> roots;
	for (const Rat &r : c)
		if (p.eval(r) == 0)
			roots.push_back(r);
	EXPECT_EQ(roots, (std::vector<Rat>{Q(-1, 2), Q(1)}));

	auto c2 = cand_rat_roots(U({-2, 0, 1}));
	EXPECT_EQ(std::set<Rat>(c2.begin(), c2.end()), (std::set<Rat>{Q(-2), Q(-1), Q(1), Q(2)}));
	for (const Rat &r : c2)
		EXPECT_NE(U({-2, 0, 1}).eval(r), 0);
	EXPECT_THROW(cand_rat_roots(U({})), zero_polynomial);
}

TEST(CandidateRoots, DivisorBudgetIsReported)
{
	uint64_t budget = 10;
	EXPECT_THROW(divisors(BigInt("1000000007", 10) * BigInt("998244353", 10), budget), divisor_budget_exceeded);
	uint64_t big = 1 << 20;
	auto d = divisors(360, big);
	EXPECT_EQ(d.size(), 24u);
}

TEST(Exists, Examples)
{
	poly y = X("y");
	EXPECT_TRUE(decide_exists_real(A(y * y - poly(Q(9, 10)), rel::gt) && A(y * y - poly(1), rel::lt), "y"));
	EXPECT_TRUE(decide_exists_real(A(y, rel::ge) && A(y, rel::le) && A(y * y - poly(2), rel::le), "y"));
	EXPECT_FALSE(decide_exists_real(A(y * y + poly(1), rel::le), "y"));
	/* only witness is irrational */
	EXPECT_TRUE(decide_exists_real(A(y * y - poly(2), rel::eq), "y"));
	EXPECT_FALSE(decide_exists_real(A(y * y - poly(2), rel::eq) && A(y, rel::lt) && A(y + poly(1), rel::gt), "y"));
}

TEST(Witness, BoundaryAndIrrational)
{
	poly y = X("y");
	auto w = univariate_witness(A(y * y, rel::le), "y", witness_order::samples_first);
	ASSERT_TRUE(w.value);
	EXPECT_EQ(*w.value, 0);
	auto none = univariate_witness(A(y * y - poly(2), rel::eq), "y", witness_order::roots_first);
	EXPECT_FALSE(none.value);
	auto lo = univariate_witness(A(y * y - poly(1), rel::le), "y", witness_order::roots_first);
	ASSERT_TRUE(lo.value);
	EXPECT_EQ(*lo.value, -1);
}

TEST(Witness, MatchesGridOracleOnRandomFormulas)
{
	std::mt19937_64 rng(5);
	auto grid = y_grid(8, 12);
	const rel rels[] = {rel::lt, rel::le, rel::gt, rel::ge, rel::eq};
	for (int i = 0; i < 150; ++i) {
		formula f = formula::top();
		int atoms = 1 + int(rng() % 3);
		for (int k = 0; k < atoms; ++k) {
			/* products of linear factors with small rational roots */
			poly p(1);
			int d = 1 + int(rng() % 3);
			for (int j = 0; j < d; ++j)
				p *= X("y") - poly(Q(long(rng() % 13) - 6, 1 + long(rng() % 3)));
			f = f && A(p, rels[rng() % 5]);
		}
		auto w = univariate_witness(f, "y", witness_order::samples_first);
		if (w.value)
			EXPECT_TRUE(formula_eval(f, {{"y", *w.value}}));
		/* every root lies on the 1/6 grid, so the grid finds a witness whenever one exists */
		bool exists = grid_exists(f, {}, "y", grid) || decide_exists_real(f, "y");
		EXPECT_EQ(w.value.has_value(), exists) << f.str();
	}
}
