/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#include "ratsynth/resultant.hh"
#include "ratsynth/errors.hh"

namespace ratsynth {

namespace {

using upoly = std::vector<poly>; /* coefficients in v, index = power */

int deg(const upoly &a) { return static_cast<int>(a.size()) - 1; }

void trim(upoly &a)
{
	while (!a.empty() && a.back().is_zero())
		a.pop_back();
}

/* lc(b)^(deg a - deg b + 1) * a mod b */
upoly prem(upoly a, const upoly &b)
{
	int db = deg(b);
	int e = deg(a) - db + 1;
	const poly &lb = b.back();
	while (deg(a) >= db) {
		int shift = deg(a) - db;
		poly la = a.back();
		for (auto &c : a)
			c *= lb;
		for (int j = 0; j <= db; j++)
			a[j + shift] -= la * b[j];
		trim(a);
		e--;
	}
	if (e > 0) {
		poly f = lb.pow(e);
		for (auto &c : a)
			c *= f;
	}
	return a;
}

poly exact_div(const poly &a, const poly &b)
{
	auto q = a.divide_exact(b);
	if (!q)
		throw error("internal: inexact division in subresultant PRS");
	return *q;
}

struct subres {
	poly res;
	poly last_lc;
};

subres subresultant(const poly &p, const poly &q, const var &v)
{
	upoly a = p.coeffs_in(v), b = q.coeffs_in(v);
	if (a.empty() || b.empty())
		return {poly(), poly()};
	int s = 1;
	if (deg(a) < deg(b)) {
		std::swap(a, b);
		if (deg(a) % 2 && deg(b) % 2)
			s = -1;
	}
	if (deg(b) == 0)
		return {b.back().pow(deg(a)).scaled(s), b.back()};
	poly g = 1, h = 1;
	for (;;) {
		int delta = deg(a) - deg(b);
		if (deg(a) % 2 && deg(b) % 2)
			s = -s;
		upoly r = prem(a, b);
		a = std::move(b);
		if (r.empty())
			return {poly(), a.back()};
		poly div = g * h.pow(delta);
		for (auto &c : r)
			c = exact_div(c, div);
		b = std::move(r);
		g = a.back();
		if (delta == 1)
			h = g;
		else if (delta > 1)
			h = exact_div(g.pow(delta), h.pow(delta - 1));
		if (deg(b) == 0) {
			int da = deg(a);
			if (da == 1)
				h = b.back();
			else
				h = exact_div(b.back().pow(da), h.pow(da - 1));
			return {h.scaled(s), h};
		}
	}
}

}

poly resultant(const poly &p, const poly &q, const var &v)
{
	return subresultant(p, q, v).res;
}

poly first_nonzero_psc(const poly &p, const poly &q, const var &v)
{
	auto r = subresultant(p, q, v);
	return r.res.is_zero() ? r.last_lc : r.res;
}

poly discriminant(const poly &p, const var &v)
{
	if (p.is_zero())
		throw zero_polynomial("discriminant of zero polynomial");
	auto cs = p.coeffs_in(v);
	int n = static_cast<int>(cs.size()) - 1;
	if (n < 1)
		return poly(1);
	poly r = resultant(p, p.derivative(v), v);
	auto q = r.divide_exact(cs.back());
	if (!q)
		throw error("internal: discriminant not divisible by leading coefficient");
	return (n * (n - 1) / 2) % 2 ? -*q : *q;
}

}
