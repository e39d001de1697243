/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ratsynth {

using BigInt = mpz_class;
using Rat = mpq_class;

/* Canonical text: "num/den", den omitted when 1. */
std::string to_string(const Rat &q);
std::string to_string(const BigInt &z);

/* Accepts "p", "p/q", and exact decimals "1.25", each with optional sign. */
Rat parse_rat(std::string_view s);

inline int sign(const Rat &q) { return sgn(q); }
inline int sign(const BigInt &z) { return sgn(z); }

BigInt floor(const Rat &q);
BigInt lcm(const BigInt &a, const BigInt &b);
BigInt gcd(const BigInt &a, const BigInt &b);
Rat pow(const Rat &q, unsigned long e);
BigInt isqrt(const BigInt &n);
bool is_square(const BigInt &n);

/* Positive rationals in Calkin-Wilf order: 1, 1/2, 2, 1/3, 3/2, 2/3, 3, ... */
class calkin_wilf {
	Rat q_{1};
public:
	const Rat &current() const { return q_; }
	void next();
};

/* 0, 1, -1, 1/2, -1/2, 2, -2, ... : every rational exactly once. */
std::vector<Rat> signed_rationals(size_t n);

}
