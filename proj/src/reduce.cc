/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#include "ratsynth/reduce.hh"
#include "ratsynth/errors.hh"

namespace ratsynth {

static var fresh_name(std::string base, const std::set<var> &used)
{
	while (used.count(base))
		base += "_";
	return base;
}

/* p oriented so that the atom reads "p >= 0" or "p > 0" */
static poly oriented(const atom &a)
{
	switch (a.r) {
	case rel::gt:
	case rel::ge: return a.p;
	case rel::lt:
	case rel::le: return -a.p;
	default: throw error("htp_reduce expects atoms over <, >, <=, >=");
	}
}

reduction_result htp_reduce(const clause &c)
{
	std::set<var> used;
	for (auto &a : c) {
		auto vs = a.p.vars();
		used.insert(vs.begin(), vs.end());
	}
	reduction_result r;
	for (size_t i = 0; i < c.size(); i++) {
		poly p = oriented(c[i]);
		poly sum;
		for (int k = 1; k <= 4; k++) {
			var z = fresh_name("zs" + std::to_string(i) + "_" + std::to_string(k), used);
			used.insert(z);
			r.fresh.push_back(z);
			r.origin[z] = i;
			sum += poly::variable(z).pow(2);
		}
		r.equation += (p - sum).pow(2);
		if (is_strict(c[i].r)) {
			var z = fresh_name("zr" + std::to_string(i), used);
			used.insert(z);
			r.fresh.push_back(z);
			r.origin[z] = i;
			r.equation += (p * poly::variable(z) - poly(1)).pow(2);
		}
	}
	return r;
}

std::vector<atom_witnesses> witness_layout(const clause &c, const reduction_result &r)
{
	std::vector<atom_witnesses> out(c.size());
	std::vector<int> filled(c.size(), 0);
	for (auto &z : r.fresh) {
		size_t i = r.origin.at(z);
		if (filled[i] < 4)
			out[i].squares[filled[i]++] = z;
		else
			out[i].reciprocal = z;
	}
	return out;
}

std::optional<std::array<Rat, 4>> four_square_decompose(const Rat &q, uint64_t search_bound)
{
	if (q < 0)
		throw negative_input("four-square decomposition of negative " + to_string(q));
	const BigInt &den = q.get_den();
	BigInt n = q.get_num() * den;
	uint64_t steps = 0;
	auto make = [&](const BigInt &a, const BigInt &b, const BigInt &c, const BigInt &d) {
		std::array<Rat, 4> z{Rat(a, den), Rat(b, den), Rat(c, den), Rat(d, den)};
		for (auto &x : z)
			x.canonicalize();
		return z;
	};
	for (BigInt a = isqrt(n); a >= 0; --a) {
		BigInt ra = n - a * a;
		BigInt b0 = isqrt(ra);
		for (BigInt b = b0 < a ? b0 : a; b >= 0; --b) {
			BigInt rb = ra - b * b;
			/* three remaining squares, each <= b^2 */
			if (rb > 3 * b * b)
				break;
			BigInt c0 = isqrt(rb);
			for (BigInt c = c0 < b ? c0 : b; c >= 0; --c) {
				if (++steps > search_bound)
					return std::nullopt;
				BigInt rc = rb - c * c;
				if (rc > 2 * c * c)
					break;
				if (is_square(rc))
					return make(a, b, c, isqrt(rc));
			}
		}
	}
	return std::nullopt;
}

}
