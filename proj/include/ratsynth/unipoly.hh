/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#pragma once

#include "poly.hh"

#include <utility>
#include <vector>

namespace ratsynth {

/* Dense univariate polynomial c_0 + c_1 v + ... + c_n v^n over Q, with
 * c_n != 0 unless the polynomial is zero. */
class unipoly {
	var v_;
	std::vector<Rat> c_;

	void trim();

public:
	unipoly() = default;
	unipoly(var v, std::vector<Rat> coeffs);

	/* Throws unsupported_construct if p mentions a variable other than v. */
	static unipoly from_poly(const poly &p, const var &v);
	poly to_poly() const;

	const var &variable() const { return v_; }
	const std::vector<Rat> &coeffs() const { return c_; }
	bool is_zero() const { return c_.empty(); }
	/* -1 for the zero polynomial. */
	int degree() const { return static_cast<int>(c_.size()) - 1; }
	const Rat &lc() const;
	Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

	Rat eval(const Rat &x) const;
	int sign_at(const Rat &x) const { return sgn(eval(x)); }

	unipoly derivative() const;
	unipoly scaled(const Rat &k) const;
	unipoly monic() const;

	unipoly operator-() const { return scaled(-1); }
	friend unipoly operator+(const unipoly &a, const unipoly &b);
	friend unipoly operator-(const unipoly &a, const unipoly &b);
	friend unipoly operator*(const unipoly &a, const unipoly &b);
	friend bool operator==(const unipoly &a, const unipoly &b) { return a.c_ == b.c_; }

	std::string str() const { return to_poly().str(); }
};

/* Quotient and remainder; throws zero_polynomial for b == 0. */
std::pair<unipoly, unipoly> divmod(const unipoly &a, const unipoly &b);

/* Monic gcd; gcd(0, 0) = 0. */
unipoly gcd_uni(const unipoly &a, const unipoly &b);

/* p / gcd(p, p'), leading-coefficient sign preserved. */
unipoly square_free_part(const unipoly &p);

struct cleared_poly {
	unipoly integral;  /* primitive, integer coefficients */
	Rat multiplier;    /* integral == multiplier * p, multiplier > 0 */
};

/* Multiplies by the lcm of all denominators, then divides by the integer
 * content. Throws zero_polynomial. */
cleared_poly clear_denominators(const unipoly &p);

}
