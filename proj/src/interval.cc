/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#include "ratsynth/interval.hh"

namespace ratsynth {

namespace {

/* total order on extended values */
int cmp(const endpoint &a, const endpoint &b)
{
	if (a.inf != b.inf || a.inf != 0)
		return a.inf < b.inf ? -1 : a.inf > b.inf ? 1 : 0;
	return cmp(a.v, b.v);
}

int ext_sign(const endpoint &e) { return e.inf != 0 ? e.inf : sgn(e.v); }

bool is_closed_zero(const endpoint &e) { return e.finite() && !e.open && sgn(e.v) == 0; }

endpoint mul(const endpoint &a, const endpoint &b)
{
	endpoint r;
	if ((a.finite() && sgn(a.v) == 0) || (b.finite() && sgn(b.v) == 0)) {
		r.v = 0;
	} else if (!a.finite() || !b.finite()) {
		r.inf = ext_sign(a) * ext_sign(b);
	} else {
		r.v = a.v * b.v;
	}
	r.open = !((!a.open && !b.open) || is_closed_zero(a) || is_closed_zero(b));
	if (!r.finite())
		r.open = true;
	return r;
}

/* pick the better lower (want_min) or upper bound; ties prefer closed */
void consider(endpoint &best, bool &have, const endpoint &c, bool want_min)
{
	if (!have) {
		best = c;
		have = true;
		return;
	}
	int d = cmp(c, best);
	if ((want_min && d < 0) || (!want_min && d > 0))
		best = c;
	else if (d == 0 && best.open && !c.open)
		best.open = false;
}

endpoint epow(const endpoint &e, unsigned n)
{
	endpoint r = e;
	if (!e.finite()) {
		r.inf = (n % 2 == 0) ? 1 : e.inf;
		return r;
	}
	r.v = pow(e.v, n);
	return r;
}

}

bool ival::empty() const
{
	if (lo.inf > 0 || hi.inf < 0)
		return true;
	if (!lo.finite() || !hi.finite())
		return false;
	int d = cmp(lo.v, hi.v);
	return d > 0 || (d == 0 && (lo.open || hi.open));
}

std::string ival::str() const
{
	std::string s = lo.open ? "(" : "[";
	s += lo.finite() ? to_string(lo.v) : "-inf";
	s += ", ";
	s += hi.finite() ? to_string(hi.v) : "+inf";
	s += hi.open ? ")" : "]";
	return s;
}

ival operator+(const ival &a, const ival &b)
{
	if (a.empty() || b.empty())
		return ival::empty_set();
	ival r;
	if (a.lo.finite() && b.lo.finite())
		r.lo = {0, a.lo.v + b.lo.v, a.lo.open || b.lo.open};
	if (a.hi.finite() && b.hi.finite())
		r.hi = {0, a.hi.v + b.hi.v, a.hi.open || b.hi.open};
	return r;
}

ival operator-(const ival &a)
{
	ival r;
	r.lo = a.hi;
	r.hi = a.lo;
	r.lo.inf = -a.hi.inf;
	r.hi.inf = -a.lo.inf;
	r.lo.v = -a.hi.v;
	r.hi.v = -a.lo.v;
	return r;
}

ival operator*(const ival &a, const ival &b)
{
	if (a.empty() || b.empty())
		return ival::empty_set();
	endpoint lo, hi;
	bool hl = false, hh = false;
	for (const endpoint *x : {&a.lo, &a.hi})
		for (const endpoint *y : {&b.lo, &b.hi}) {
			endpoint c = mul(*x, *y);
			consider(lo, hl, c, true);
			consider(hi, hh, c, false);
		}
	return {lo, hi};
}

ival power(const ival &a, unsigned n)
{
	if (a.empty())
		return ival::empty_set();
	if (n == 0)
		return ival::point(1);
	if (n % 2 == 1)
		return {epow(a.lo, n), epow(a.hi, n)};
	bool lo_nonneg = a.lo.finite() && sgn(a.lo.v) >= 0;
	bool hi_nonpos = a.hi.finite() && sgn(a.hi.v) <= 0;
	if (lo_nonneg)
		return {epow(a.lo, n), epow(a.hi, n)};
	if (hi_nonpos)
		return {epow(a.hi, n), epow(a.lo, n)};
	endpoint lo{0, Rat(0), false};
	endpoint l = epow(a.lo, n), h = epow(a.hi, n);
	int d = cmp(l, h);
	endpoint hi = d > 0 ? l : h;
	if (d == 0)
		hi.open = l.open && h.open;
	return {lo, hi};
}

ival intersect(const ival &a, const ival &b)
{
	ival r = a;
	int d = cmp(b.lo, a.lo);
	if (d > 0 || (d == 0 && b.lo.open))
		r.lo = b.lo;
	d = cmp(b.hi, a.hi);
	if (d < 0 || (d == 0 && b.hi.open))
		r.hi = b.hi;
	return r;
}

ival hull(const ival &a, const ival &b)
{
	if (a.empty())
		return b;
	if (b.empty())
		return a;
	ival r = a;
	int d = cmp(b.lo, a.lo);
	if (d < 0 || (d == 0 && !b.lo.open))
		r.lo = b.lo;
	d = cmp(b.hi, a.hi);
	if (d > 0 || (d == 0 && !b.hi.open))
		r.hi = b.hi;
	return r;
}

ival eval_interval(const poly &p, const box &b)
{
	ival sum = ival::point(0);
	for (const auto &[m, c] : p.terms()) {
		ival t = ival::point(c);
		for (const auto &[v, e] : m.powers()) {
			auto it = b.find(v);
			ival x = it == b.end() ? ival::whole() : it->second;
			t = t * power(x, e);
		}
		sum = sum + t;
	}
	return sum;
}

bool may_satisfy(const ival &v, rel r)
{
	if (v.empty())
		return false;
	auto lo_s = [&] { return v.lo.finite() ? sgn(v.lo.v) : -1; };
	auto hi_s = [&] { return v.hi.finite() ? sgn(v.hi.v) : 1; };
	switch (r) {
	case rel::lt: return lo_s() < 0;
	case rel::gt: return hi_s() > 0;
	case rel::le: return lo_s() < 0 || (lo_s() == 0 && !v.lo.open);
	case rel::ge: return hi_s() > 0 || (hi_s() == 0 && !v.hi.open);
	case rel::eq:
		return (lo_s() < 0 || (lo_s() == 0 && !v.lo.open)) && (hi_s() > 0 || (hi_s() == 0 && !v.hi.open));
	case rel::ne: return !(v.lo.finite() && v.hi.finite() && sgn(v.lo.v) == 0 && sgn(v.hi.v) == 0);
	}
	return true;
}

}
