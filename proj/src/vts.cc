/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#include "ratsynth/errors.hh"
#include "ratsynth/qe.hh"

#include <set>

namespace ratsynth {

namespace {

using coeffs = std::vector<poly>;  /* in y, low to high */

/* (a + b sqrt(c)) / d with d != 0 and c >= 0 under the test point guard */
struct root_term {
	poly a, b, c, d;
};

/* a + b sqrt(c), c implicit */
struct surd {
	poly a, b;
};

coeffs trimmed(coeffs q)
{
	while (!q.empty() && q.back().is_zero())
		q.pop_back();
	return q;
}

coeffs deriv(const coeffs &q)
{
	coeffs d;
	for (size_t i = 1; i < q.size(); ++i)
		d.push_back(q[i].scaled(Rat(long(i))));
	return trimmed(d);
}

/* q(t) * d^k, k even and >= deg q, so the sign is that of q(t) */
surd evaluate(const coeffs &q, const root_term &t)
{
	size_t k = q.empty() ? 0 : q.size() - 1;
	k += k % 2;
	std::vector<poly> dp(k + 1);
	dp[0] = poly(1);
	for (size_t i = 1; i <= k; ++i)
		dp[i] = dp[i - 1] * t.d;
	surd out{poly(), poly()};
	poly p(1), r;
	for (size_t i = 0; i < q.size(); ++i) {
		if (!q[i].is_zero()) {
			out.a += q[i] * p * dp[k - i];
			if (!r.is_zero())
				out.b += q[i] * r * dp[k - i];
		}
		if (i + 1 < q.size()) {
			poly np = p * t.a;
			if (!r.is_zero() && !t.b.is_zero())
				np += r * t.b * t.c;
			poly nr;
			if (!t.b.is_zero())
				nr += p * t.b;
			if (!r.is_zero())
				nr += r * t.a;
			p = std::move(np);
			r = std::move(nr);
		}
	}
	return out;
}

formula at(const poly &p, rel r) { return canonical_atom(p, r); }

formula sign_lt(const surd &v, const poly &c)
{
	if (v.b.is_zero())
		return at(v.a, rel::lt);
	poly n = v.a * v.a - v.b * v.b * c;
	return (at(v.a, rel::lt) && at(n, rel::gt)) || (at(v.b, rel::lt) && (at(v.a, rel::lt) || at(n, rel::lt)));
}

formula sign_le(const surd &v, const poly &c)
{
	if (v.b.is_zero())
		return at(v.a, rel::le);
	poly n = v.a * v.a - v.b * v.b * c;
	return (at(v.a, rel::le) && at(n, rel::ge)) || (at(v.b, rel::le) && at(n, rel::le));
}

formula sign_eq(const surd &v, const poly &c)
{
	if (v.b.is_zero())
		return at(v.a, rel::eq);
	poly n = v.a * v.a - v.b * v.b * c;
	return at(v.a * v.b, rel::le) && at(n, rel::eq);
}

surd negated(const surd &v) { return {-v.a, -v.b}; }

formula sign_rel(const surd &v, const poly &c, rel r)
{
	switch (r) {
	case rel::lt: return sign_lt(v, c);
	case rel::le: return sign_le(v, c);
	case rel::gt: return sign_lt(negated(v), c);
	case rel::ge: return sign_le(negated(v), c);
	case rel::eq: return sign_eq(v, c);
	case rel::ne: return !sign_eq(v, c);
	}
	return formula::bottom();
}

/* q(t + eps) r 0 */
formula sign_rel_eps(const coeffs &q, const root_term &t, rel r)
{
	if (q.size() <= 1) {
		poly c0 = q.empty() ? poly() : q[0];
		return at(c0, r);
	}
	surd v = evaluate(q, t);
	switch (r) {
	case rel::lt:
	case rel::gt:
		return sign_rel(v, t.c, r) || (sign_eq(v, t.c) && sign_rel_eps(deriv(q), t, r));
	case rel::le:
		return sign_lt(v, t.c) || (sign_eq(v, t.c) && sign_rel_eps(deriv(q), t, r));
	case rel::ge:
		return sign_lt(negated(v), t.c) || (sign_eq(v, t.c) && sign_rel_eps(deriv(q), t, r));
	case rel::eq:
		return sign_eq(v, t.c) && sign_rel_eps(deriv(q), t, r);
	case rel::ne:
		return !sign_rel_eps(q, t, rel::eq);
	}
	return formula::bottom();
}

/* q(-inf) r 0 */
formula sign_rel_minf(const coeffs &q, rel r)
{
	if (q.empty())
		return formula::constant(holds(r, 0));
	size_t k = q.size() - 1;
	poly top = k % 2 ? -q[k] : q[k];
	coeffs rest(q.begin(), q.end() - 1);
	rest = trimmed(rest);
	switch (r) {
	case rel::lt:
	case rel::le:
		return at(top, rel::lt) || (at(q[k], rel::eq) && sign_rel_minf(rest, r));
	case rel::gt:
	case rel::ge:
		return at(top, rel::gt) || (at(q[k], rel::eq) && sign_rel_minf(rest, r));
	case rel::eq:
		return at(q[k], rel::eq) && sign_rel_minf(rest, r);
	case rel::ne:
		return !sign_rel_minf(q, rel::eq);
	}
	return formula::bottom();
}

struct test_point {
	formula guard;
	root_term t;
	bool eps;
};

}

formula vts_quadratic(const formula &phi0, const var &y)
{
	formula phi = normalize(phi0);
	std::set<std::pair<poly, bool>> seen;
	std::vector<test_point> tps;
	for (const atom &a : atoms_of(phi)) {
		if (!a.p.contains(y))
			continue;
		uint64_t deg = a.p.degree(y);
		if (deg > 2)
			throw degree_too_high("degree " + std::to_string(deg) + " in " + y + " exceeds 2");
		bool eps = is_strict(a.r);
		if (!seen.insert({a.p, eps}).second)
			continue;
		coeffs c = a.p.coeffs_in(y);
		c.resize(3);
		if (deg == 1) {
			tps.push_back({at(c[1], rel::ne), {-c[0], poly(), poly(), c[1]}, eps});
			continue;
		}
		formula lin = at(c[2], rel::eq) && at(c[1], rel::ne);
		if (!lin.is_false())
			tps.push_back({lin, {-c[0], poly(), poly(), c[1]}, eps});
		poly disc = c[1] * c[1] - c[0] * c[2].scaled(4);
		formula quad = at(c[2], rel::ne) && at(disc, rel::ge);
		if (quad.is_false())
			continue;
		for (long s : {-1L, 1L})
			tps.push_back({quad, {-c[1], poly(s), disc, c[2].scaled(2)}, eps});
	}

	std::vector<formula> cases;
	cases.push_back(transform_atoms(phi, [&](const atom &a) {
		if (!a.p.contains(y))
			return formula::make_atom(a.p, a.r);
		return sign_rel_minf(trimmed(a.p.coeffs_in(y)), a.r);
	}));
	for (const test_point &tp : tps) {
		formula body = transform_atoms(phi, [&](const atom &a) {
			if (!a.p.contains(y))
				return formula::make_atom(a.p, a.r);
			coeffs q = trimmed(a.p.coeffs_in(y));
			if (tp.eps)
				return sign_rel_eps(q, tp.t, a.r);
			return sign_rel(evaluate(q, tp.t), tp.t.c, a.r);
		});
		cases.push_back(tp.guard && body);
	}
	return normalize(formula::disj(std::move(cases)));
}

}
