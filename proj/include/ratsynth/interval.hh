/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#pragma once

#include "formula.hh"

#include <map>

namespace ratsynth {

/* Interval endpoint; inf = -1 / +1 marks an infinite (always open) end. */
struct endpoint {
	int inf = 0;
	Rat v;
	bool open = false;

	bool finite() const { return inf == 0; }
	friend bool operator==(const endpoint &, const endpoint &) = default;
};

/* Connected subset of the reals with rational or infinite endpoints. */
struct ival {
	endpoint lo{-1, Rat(0), true};
	endpoint hi{1, Rat(0), true};

	static ival whole() { return {}; }
	static ival point(const Rat &r) { return {{0, r, false}, {0, r, false}}; }
	static ival empty_set() { return {{0, Rat(1), true}, {0, Rat(0), true}}; }
	static ival above(const Rat &r, bool open) { return {{0, r, open}, {1, Rat(0), true}}; }
	static ival below(const Rat &r, bool open) { return {{-1, Rat(0), true}, {0, r, open}}; }
	static ival between(const Rat &a, bool ao, const Rat &b, bool bo) { return {{0, a, ao}, {0, b, bo}}; }

	bool empty() const;
	std::string str() const;
	friend bool operator==(const ival &, const ival &) = default;
};

ival operator+(const ival &a, const ival &b);
ival operator-(const ival &a);
ival operator*(const ival &a, const ival &b);
ival power(const ival &a, unsigned n);
ival intersect(const ival &a, const ival &b);
/* Smallest interval containing both. */
ival hull(const ival &a, const ival &b);

using box = std::map<var, ival>;

/* Natural interval extension over the box; absent variables range over R. */
ival eval_interval(const poly &p, const box &b);

/* Whether some value in the interval satisfies "value rel 0". */
bool may_satisfy(const ival &v, rel r);

}
