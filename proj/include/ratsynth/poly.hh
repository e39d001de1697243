/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#pragma once

#include "rat.hh"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ratsynth {

using var = std::string;
using assignment = std::map<var, Rat>;

inline constexpr uint64_t max_exponent = (uint64_t(1) << 31) - 1;

/* Power product v1^e1 ... vk^ek; variables sorted by name, exponents > 0. */
class monomial {
	std::vector<std::pair<var, uint32_t>> pw_;

public:
	monomial() = default;
	explicit monomial(const var &v, uint64_t e = 1);

	/* Merges repeated variables, drops zero exponents. */
	static monomial from_powers(std::vector<std::pair<var, uint64_t>> pw);

	const std::vector<std::pair<var, uint32_t>> &powers() const { return pw_; }
	bool is_one() const { return pw_.empty(); }
	uint64_t degree() const;
	uint32_t exponent(const var &v) const;
	bool contains(const var &v) const { return exponent(v) != 0; }

	monomial operator*(const monomial &o) const;
	monomial without(const var &v) const;
	std::optional<monomial> divide(const monomial &o) const;

	friend bool operator==(const monomial &, const monomial &) = default;
};

/* Graded lexicographic order, variables ranked by name ("x" > "y"). */
int grlex_compare(const monomial &a, const monomial &b);

struct grlex_greater {
	bool operator()(const monomial &a, const monomial &b) const
	{
		return grlex_compare(a, b) > 0;
	}
};

/* Sparse multivariate polynomial over Q. Terms iterate in descending grlex
 * order; no zero coefficient is ever stored. */
class poly {
public:
	using term_map = std::map<monomial, Rat, grlex_greater>;

private:
	term_map terms_;

public:
	poly() = default;
	poly(const Rat &c);
	poly(long c) : poly(Rat(c)) {}

	static poly variable(const var &v);
	static poly term(const Rat &c, const monomial &m);
	static poly from_coeffs(const std::vector<poly> &coeffs, const var &v);

	const term_map &terms() const { return terms_; }
	size_t size() const { return terms_.size(); }
	bool is_zero() const { return terms_.empty(); }
	bool is_constant() const;
	Rat constant_term() const;
	/* Only meaningful when is_constant(). */
	Rat constant_value() const { return constant_term(); }

	std::set<var> vars() const;
	bool contains(const var &v) const;
	uint64_t degree(const var &v) const;
	uint64_t total_degree() const;

	/* Coefficients w.r.t. v; index is the power of v. Empty for zero. */
	std::vector<poly> coeffs_in(const var &v) const;

	const monomial &leading_monomial() const;
	const Rat &leading_coeff() const;

	poly operator-() const;
	poly &operator+=(const poly &o);
	poly &operator-=(const poly &o);
	poly &operator*=(const poly &o);
	friend poly operator+(poly a, const poly &b) { return a += b; }
	friend poly operator-(poly a, const poly &b) { return a -= b; }
	friend poly operator*(const poly &a, const poly &b);

	poly scaled(const Rat &c) const;
	poly pow(uint64_t e) const;
	poly derivative(const var &v) const;

	/* Exact value; throws unassigned_variable. */
	Rat eval(const assignment &a) const;
	/* Partial evaluation; unbound variables stay symbolic. */
	poly substitute(const assignment &a) const;
	poly substitute(const var &v, const poly &by) const;

	/* Quotient when o divides *this exactly, nullopt otherwise. */
	std::optional<poly> divide_exact(const poly &o) const;

	/* Divided by its leading coefficient (zero stays zero). */
	poly monic() const;
	/* Divided by |leading coefficient|: same sign everywhere. */
	poly sign_normalized() const;

	std::string str() const;

	friend bool operator==(const poly &a, const poly &b) { return a.terms_ == b.terms_; }
	friend bool operator<(const poly &a, const poly &b);
};

}
