/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#pragma once

#include "formula.hh"
#include "unipoly.hh"

#include <functional>
#include <optional>

namespace ratsynth {

/* Rational-endpoint interval. A point interval [r, r] marks an exactly
 * known rational root. */
struct root_interval {
	Rat lo, hi;
	bool lo_open = true, hi_open = true;

	bool is_point() const { return lo == hi; }
	bool contains(const Rat &x) const;
};

inline constexpr uint64_t default_divisor_budget = uint64_t(1) << 22;

/* Sturm sequence of the square-free part of p, kept as primitive integer
 * polynomials (positive rescaling does not change sign variations). */
class sturm_chain {
	std::vector<std::vector<BigInt>> seq_;

public:
	explicit sturm_chain(const unipoly &p);

	size_t size() const { return seq_.size(); }
	const std::vector<BigInt> &at(size_t i) const { return seq_[i]; }
	/* sign of the square-free base polynomial */
	int base_sign_at(const Rat &x) const;
	int variations_at(const Rat &x) const;
	int variations_at_neg_inf() const;
	int variations_at_pos_inf() const;
};

/* Sign of an integer-coefficient polynomial (c_0..c_n) at x. */
int int_poly_sign(const std::vector<BigInt> &c, const Rat &x);

/* 1 + max |c_i| / |c_n|, rounded up to an integer. */
BigInt cauchy_bound(const unipoly &p);

/* Number of distinct real roots in iv (openness respected). */
int count_roots(const unipoly &p, const root_interval &iv);
int count_real_roots(const unipoly &p);

/* Disjoint, increasing isolating intervals, one per distinct real root,
 * each of width <= the final epsilon; every rational root comes back as a
 * point interval. Neighbouring intervals never touch at a root. Throws
 * zero_polynomial. */
std::vector<root_interval> isolate_roots(const unipoly &p, const Rat &eps0 = 1);

/* {l_1 - 1, (u_1 + l_2)/2, ..., u_k + 1} for the isolating intervals of the
 * product of all atom polynomials; {0} when that product has no real root.
 * chi must mention no variable but y. Throws empty_formula for a formula
 * without atoms and zero_polynomial for an identically-zero atom. */
std::vector<Rat> rational_samples(const formula &chi, const var &y, const Rat &eps0 = 1);
std::vector<Rat> gap_samples(const std::vector<root_interval> &roots);

/* Finite superset of the rational roots of p (rational root theorem), in
 * increasing order. Throws divisor_budget_exceeded, zero_polynomial. */
std::vector<Rat> cand_rat_roots(const unipoly &p, uint64_t divisor_budget = default_divisor_budget);

/* Positive divisors of |n| by trial division; throws when more than
 * *budget trial steps are needed (budget is decremented). */
std::vector<BigInt> divisors(const BigInt &n, uint64_t &budget);

/* Whether some real y satisfies chi (univariate in y). */
bool decide_exists_real(const formula &chi, const var &y);

/* Truth value of f where each atom's sign is supplied by the callback. */
bool eval_with_signs(const formula &f, const std::function<int(const poly &)> &sign_of);

enum class witness_order { samples_first, roots_first };

struct witness_search {
	std::optional<Rat> value;
	size_t samples_tried = 0;
	size_t candidates_tried = 0;
	bool divisor_budget_hit = false;
};

/* Rational y satisfying phi (univariate in y, constants folded): first the
 * gap samples of the strict version of phi, then rational-root candidates
 * of its non-strict polynomials (or the other way round). With
 * try_samples false only the candidates are examined. */
witness_search univariate_witness(const formula &phi, const var &y, witness_order order,
                                  uint64_t divisor_budget = default_divisor_budget,
                                  bool try_samples = true, const Rat &eps0 = 1);

}
