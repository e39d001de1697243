/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#include "ratsynth/realroots.hh"
#include "ratsynth/errors.hh"

#include <algorithm>
#include <set>

namespace ratsynth {

bool root_interval::contains(const Rat &x) const
{
	if (x < lo || x > hi)
		return false;
	if (x == lo && lo_open && !is_point())
		return false;
	if (x == hi && hi_open && !is_point())
		return false;
	return true;
}

namespace {

std::vector<BigInt> integral_coeffs(const unipoly &p)
{
	unipoly q = clear_denominators(p).integral;
	std::vector<BigInt> out;
	out.reserve(q.coeffs().size());
	for (const Rat &c : q.coeffs())
		out.push_back(c.get_num());
	return out;
}

int count_variations(const std::vector<int> &signs)
{
	int v = 0, last = 0;
	for (int s : signs) {
		if (s == 0)
			continue;
		if (last != 0 && s != last)
			++v;
		last = s;
	}
	return v;
}

}

int int_poly_sign(const std::vector<BigInt> &c, const Rat &x)
{
	if (c.empty())
		return 0;
	const BigInt &n = x.get_num(), &d = x.get_den();
	size_t deg = c.size() - 1;
	BigInt acc = c[deg], dp = 1;
	for (size_t i = deg; i-- > 0;) {
		dp *= d;
		acc = acc * n + c[i] * dp;
	}
	return sgn(acc);
}

sturm_chain::sturm_chain(const unipoly &p)
{
	if (p.is_zero())
		throw zero_polynomial("Sturm chain of the zero polynomial");
	unipoly a = clear_denominators(square_free_part(p)).integral;
	seq_.push_back(integral_coeffs(a));
	if (a.degree() == 0)
		return;
	unipoly b = clear_denominators(a.derivative()).integral;
	seq_.push_back(integral_coeffs(b));
	while (b.degree() > 0) {
		unipoly r = divmod(a, b).second;
		if (r.is_zero())
			break;
		unipoly next = clear_denominators(-r).integral;
		seq_.push_back(integral_coeffs(next));
		a = std::move(b);
		b = std::move(next);
	}
}

int sturm_chain::base_sign_at(const Rat &x) const
{
	return int_poly_sign(seq_[0], x);
}

int sturm_chain::variations_at(const Rat &x) const
{
	std::vector<int> s;
	s.reserve(seq_.size());
	for (const auto &c : seq_)
		s.push_back(int_poly_sign(c, x));
	return count_variations(s);
}

int sturm_chain::variations_at_neg_inf() const
{
	std::vector<int> s;
	for (const auto &c : seq_) {
		int lc = sgn(c.back());
		s.push_back((c.size() - 1) % 2 ? -lc : lc);
	}
	return count_variations(s);
}

int sturm_chain::variations_at_pos_inf() const
{
	std::vector<int> s;
	for (const auto &c : seq_)
		s.push_back(sgn(c.back()));
	return count_variations(s);
}

BigInt cauchy_bound(const unipoly &p)
{
	if (p.is_zero())
		throw zero_polynomial("root bound of the zero polynomial");
	Rat lc = abs(p.lc()), m = 0;
	for (int i = 0; i < p.degree(); ++i)
		m = std::max(m, Rat(abs(p.coeff(i)) / lc));
	Rat b = 1 + m;
	BigInt f = floor(b);
	return Rat(f) == b ? f : BigInt(f + 1);
}

int count_roots(const unipoly &p, const root_interval &iv)
{
	sturm_chain ch(p);
	if (iv.lo > iv.hi)
		return 0;
	if (iv.is_point())
		return (iv.lo_open || iv.hi_open) ? 0 : ch.base_sign_at(iv.lo) == 0;
	int n = ch.variations_at(iv.lo) - ch.variations_at(iv.hi);
	if (!iv.lo_open && ch.base_sign_at(iv.lo) == 0)
		++n;
	if (iv.hi_open && ch.base_sign_at(iv.hi) == 0)
		--n;
	return n;
}

int count_real_roots(const unipoly &p)
{
	sturm_chain ch(p);
	return ch.variations_at_neg_inf() - ch.variations_at_pos_inf();
}

namespace {

struct isolator {
	const sturm_chain &ch;
	Rat eps;
	std::vector<root_interval> out;

	void run(const Rat &a, const Rat &b, int va, int vb)
	{
		int n = va - vb;
		if (n <= 0)
			return;
		if (n == 1) {
			single(a, b, va);
			return;
		}
		Rat m = (a + b) / 2;
		int vm = ch.variations_at(m);
		run(a, m, va, vm);
		run(m, b, vm, vb);
	}

	/* exactly one root in (a, b] */
	void single(Rat a, Rat b, int va)
	{
		if (ch.base_sign_at(b) == 0) {
			out.push_back({b, b, false, false});
			return;
		}
		/* rational roots of the integer base polynomial lie on (1/lc) Z */
		BigInt lc = abs(ch.at(0).back());
		Rat spacing(BigInt(1), lc);
		spacing.canonicalize();
		while (b - a > eps || b - a >= spacing) {
			Rat m = (a + b) / 2;
			if (ch.base_sign_at(m) == 0) {
				out.push_back({m, m, false, false});
				return;
			}
			int vm = ch.variations_at(m);
			if (va - vm == 1) {
				b = m;
			} else {
				a = m;
				va = vm;
			}
		}
		Rat c(BigInt(floor(a * lc) + 1), lc);
		c.canonicalize();
		if (c < b && ch.base_sign_at(c) == 0) {
			out.push_back({c, c, false, false});
			return;
		}
		out.push_back({a, b, true, true});
	}
};

/* Moves the endpoints of open intervals away from neighbouring point roots
 * so that every gap between consecutive intervals has positive width. */
void separate(const sturm_chain &ch, std::vector<root_interval> &rs)
{
	for (size_t i = 0; i + 1 < rs.size(); ++i) {
		root_interval &l = rs[i], &r = rs[i + 1];
		if (l.hi != r.lo)
			continue;
		if (l.is_point() && r.is_point())
			continue;
		if (l.is_point()) {
			Rat x = l.hi;
			Rat m = (x + r.hi) / 2;
			while (ch.variations_at(x) - ch.variations_at(m) > 0 || ch.base_sign_at(m) == 0)
				m = (x + m) / 2;
			r.lo = m;
		} else if (r.is_point()) {
			Rat x = r.lo;
			Rat m = (l.lo + x) / 2;
			while (ch.variations_at(m) - ch.variations_at(x) - 1 > 0 || ch.base_sign_at(m) == 0)
				m = (m + x) / 2;
			l.hi = m;
		}
	}
}

bool disjoint(const std::vector<root_interval> &rs)
{
	for (size_t i = 0; i + 1 < rs.size(); ++i) {
		if (rs[i].hi > rs[i + 1].lo)
			return false;
		if (rs[i].hi == rs[i + 1].lo && (rs[i].is_point() || rs[i + 1].is_point()))
			return false;
	}
	return true;
}

}

std::vector<root_interval> isolate_roots(const unipoly &p, const Rat &eps0)
{
	if (p.is_zero())
		throw zero_polynomial("root isolation of the zero polynomial");
	sturm_chain ch(p);
	Rat b = Rat(cauchy_bound(p));
	Rat eps = eps0 > 0 ? eps0 : Rat(1);
	for (;;) {
		isolator iso{ch, eps, {}};
		iso.run(-b, b, ch.variations_at(-b), ch.variations_at(b));
		separate(ch, iso.out);
		if (disjoint(iso.out))
			return iso.out;
		eps /= 2;
	}
}

std::vector<Rat> gap_samples(const std::vector<root_interval> &roots)
{
	if (roots.empty())
		return {Rat(0)};
	std::vector<Rat> s;
	s.push_back(roots.front().lo - 1);
	for (size_t i = 0; i + 1 < roots.size(); ++i)
		s.push_back((roots[i].hi + roots[i + 1].lo) / 2);
	s.push_back(roots.back().hi + 1);
	return s;
}

namespace {

unipoly atom_product(const formula &chi, const var &y)
{
	unipoly prod(y, {Rat(1)});
	for (const atom &a : atoms_of(chi)) {
		if (a.p.is_zero())
			throw zero_polynomial("atom polynomial is identically zero");
		if (!a.p.is_constant())
			prod = prod * square_free_part(unipoly::from_poly(a.p, y));
	}
	return prod;
}

}

std::vector<Rat> rational_samples(const formula &chi, const var &y, const Rat &eps0)
{
	if (atom_count(chi) == 0)
		throw empty_formula("formula has no atoms");
	unipoly prod = atom_product(chi, y);
	if (prod.degree() <= 0)
		return {Rat(0)};
	return gap_samples(isolate_roots(prod, eps0));
}

std::vector<BigInt> divisors(const BigInt &n0, uint64_t &budget)
{
	BigInt n = abs(n0);
	if (n == 0)
		throw zero_polynomial("divisors of zero");
	std::vector<std::pair<BigInt, unsigned>> fac;
	auto step = [&] {
		if (budget == 0)
			throw divisor_budget_exceeded("divisor enumeration budget exhausted");
		--budget;
	};
	for (BigInt d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
		step();
		if (n % d == 0) {
			unsigned e = 0;
			while (n % d == 0) {
				n /= d;
				++e;
			}
			fac.emplace_back(d, e);
		}
	}
	if (n > 1)
		fac.emplace_back(n, 1);
	std::vector<BigInt> ds{BigInt(1)};
	for (const auto &[p, e] : fac) {
		size_t k = ds.size();
		BigInt pw = 1;
		for (unsigned i = 0; i < e; ++i) {
			pw *= p;
			for (size_t j = 0; j < k; ++j)
				ds.push_back(ds[j] * pw);
		}
	}
	std::sort(ds.begin(), ds.end());
	return ds;
}

std::vector<Rat> cand_rat_roots(const unipoly &p, uint64_t budget)
{
	if (p.is_zero())
		throw zero_polynomial("rational roots of the zero polynomial");
	const auto c = clear_denominators(p).integral.coeffs();
	std::set<Rat> out;
	size_t low = 0;
	while (c[low] == 0)
		++low;
	if (low > 0)
		out.insert(Rat(0));
	if (low + 1 < c.size()) {
		auto us = divisors(c[low].get_num(), budget);
		auto vs = divisors(c.back().get_num(), budget);
		for (const BigInt &u : us)
			for (const BigInt &v : vs) {
				Rat q(u, v);
				q.canonicalize();
				out.insert(q);
				out.insert(-q);
			}
	}
	return {out.begin(), out.end()};
}

bool eval_with_signs(const formula &f, const std::function<int(const poly &)> &sign_of)
{
	switch (f.k()) {
	case formula::kind::tru:
		return true;
	case formula::kind::fls:
		return false;
	case formula::kind::atom:
		return holds(f.get_atom().r, sign_of(f.get_atom().p));
	case formula::kind::conj:
		for (const formula &g : f.args())
			if (!eval_with_signs(g, sign_of))
				return false;
		return true;
	case formula::kind::disj:
		for (const formula &g : f.args())
			if (eval_with_signs(g, sign_of))
				return true;
		return false;
	case formula::kind::neg:
		return !eval_with_signs(f.args()[0], sign_of);
	}
	return false;
}

bool decide_exists_real(const formula &chi, const var &y)
{
	if (chi.is_true() || chi.is_false())
		return chi.is_true();
	unipoly prod = atom_product(chi, y);
	auto at_point = [&](const Rat &x) {
		return eval_with_signs(chi, [&](const poly &p) {
			return p.is_constant() ? sign(p.constant_term()) : unipoly::from_poly(p, y).sign_at(x);
		});
	};
	if (prod.degree() <= 0)
		return at_point(0);
	auto roots = isolate_roots(prod);
	for (const Rat &s : gap_samples(roots))
		if (at_point(s))
			return true;
	unipoly base = square_free_part(prod);
	for (const root_interval &iv : roots) {
		if (iv.is_point()) {
			if (at_point(iv.lo))
				return true;
			continue;
		}
		Rat mid = (iv.lo + iv.hi) / 2;
		bool ok = eval_with_signs(chi, [&](const poly &p) {
			if (p.is_constant())
				return sign(p.constant_term());
			unipoly q = unipoly::from_poly(p, y);
			unipoly g = gcd_uni(q, base);
			if (g.degree() > 0 && count_roots(g, iv) > 0)
				return 0;
			return q.sign_at(mid);
		});
		if (ok)
			return true;
	}
	return false;
}

witness_search univariate_witness(const formula &phi, const var &y, witness_order order,
                                  uint64_t divisor_budget, bool try_samples, const Rat &eps0)
{
	witness_search ws;
	formula nphi = normalize(phi);
	auto holds_at = [&](const Rat &v) { return formula_eval(phi, {{y, v}}); };

	auto samples = [&]() -> bool {
		if (!try_samples)
			return false;
		formula hat = hat_transform(nphi, y);
		if (hat.is_false())
			return false;
		std::vector<Rat> pts = hat.is_true() ? std::vector<Rat>{Rat(0)} : rational_samples(hat, y, eps0);
		for (const Rat &s : pts) {
			++ws.samples_tried;
			if (holds_at(s)) {
				ws.value = s;
				return true;
			}
		}
		return false;
	};
	auto roots = [&]() -> bool {
		for (const poly &p : nonstrict_polys(nphi, y)) {
			unipoly q = unipoly::from_poly(p, y);
			if (count_real_roots(q) == 0)
				continue;
			std::vector<Rat> cands;
			try {
				cands = cand_rat_roots(q, divisor_budget);
			} catch (const divisor_budget_exceeded &) {
				ws.divisor_budget_hit = true;
				continue;
			}
			for (const Rat &c : cands) {
				if (q.sign_at(c) != 0)
					continue;
				++ws.candidates_tried;
				if (holds_at(c)) {
					ws.value = c;
					return true;
				}
			}
		}
		return false;
	};

	if (phi.is_false())
		return ws;
	if (order == witness_order::samples_first) {
		if (!samples())
			roots();
	} else {
		if (!roots())
			samples();
	}
	return ws;
}

}
