/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#include "ratsynth/errors.hh"
#include "ratsynth/realroots.hh"
#include "ratsynth/refute.hh"

#include <algorithm>
#include <optional>
#include <set>

namespace ratsynth {

namespace {

const Rat root_width(1, 1024);
constexpr uint64_t exact_root_budget = 4096;
constexpr uint64_t max_bound_degree = 12;

/* roots of g with rational roots made exact where cheaply possible */
std::vector<root_interval> boundary_roots(const unipoly &g)
{
	if (g.degree() == 1) {
		Rat r = -g.coeff(0) / g.coeff(1);
		return {{r, r, false, false}};
	}
	auto roots = isolate_roots(g, root_width);
	std::vector<Rat> cands;
	try {
		cands = cand_rat_roots(g, exact_root_budget);
	} catch (const divisor_budget_exceeded &) {
	}
	for (root_interval &iv : roots) {
		if (iv.is_point())
			continue;
		for (const Rat &c : cands)
			if (c > iv.lo && c < iv.hi && g.sign_at(c) == 0) {
				iv = {c, c, false, false};
				break;
			}
	}
	return roots;
}

/* hull of {v in within : g(v) r 0} */
ival sublevel_hull(const unipoly &g, rel r, const ival &within)
{
	if (g.degree() <= 0)
		return holds(r, g.is_zero() ? 0 : sgn(g.coeff(0))) ? within : ival::empty_set();
	auto roots = boundary_roots(g);
	std::vector<Rat> samples = gap_samples(roots);
	ival out = ival::empty_set();
	auto take = [&](const ival &cell) { out = hull(out, intersect(cell, within)); };
	size_t k = roots.size();
	for (size_t i = 0; i <= k; ++i) {
		if (holds(r, g.sign_at(samples[i]))) {
			ival cell;
			if (i > 0)
				cell.lo = {0, roots[i - 1].lo, true};
			if (i < k)
				cell.hi = {0, roots[i].hi, true};
			take(cell);
		}
		if (i < k && holds(r, 0)) {
			const root_interval &iv = roots[i];
			take(iv.is_point() ? ival::point(iv.lo) : ival::between(iv.lo, true, iv.hi, true));
		}
	}
	return out;
}

bool lower_than(const endpoint &a, const endpoint &b)
{
	if (a.inf != b.inf)
		return a.inf < b.inf;
	if (a.inf != 0)
		return false;
	return a.v < b.v || (a.v == b.v && !a.open && b.open);
}

bool higher_than(const endpoint &a, const endpoint &b)
{
	if (a.inf != b.inf)
		return a.inf > b.inf;
	if (a.inf != 0)
		return false;
	return a.v > b.v || (a.v == b.v && !a.open && b.open);
}

/* enclosure of g over dom from its values at the ends of dom and at the
 * critical points inside it */
ival uni_range(const unipoly &g, const ival &dom)
{
	const var &v = g.variable();
	if (dom.empty())
		return ival::empty_set();
	if (g.degree() <= 1 || g.degree() > int(max_bound_degree))
		return eval_interval(g.to_poly(), {{v, dom}});
	std::optional<endpoint> lo, hi;
	auto add = [&](const endpoint &l, const endpoint &h) {
		if (!lo || lower_than(l, *lo))
			lo = l;
		if (!hi || higher_than(h, *hi))
			hi = h;
	};
	int lc = sgn(g.lc());
	auto end_value = [&](const endpoint &e, int limit) {
		if (e.finite()) {
			endpoint at{0, g.eval(e.v), e.open};
			add(at, at);
		} else if (limit > 0) {
			add({1, Rat(0), true}, {1, Rat(0), true});
		} else {
			add({-1, Rat(0), true}, {-1, Rat(0), true});
		}
	};
	end_value(dom.lo, g.degree() % 2 ? -lc : lc);
	end_value(dom.hi, lc);
	for (const root_interval &iv : isolate_roots(square_free_part(g.derivative()), root_width)) {
		ival cell = iv.is_point() ? ival::point(iv.lo) : ival::between(iv.lo, true, iv.hi, true);
		cell = intersect(cell, dom);
		if (cell.empty())
			continue;
		ival e = eval_interval(g.to_poly(), {{v, cell}});
		add(e.lo, e.hi);
	}
	return {*lo, *hi};
}

/* interval enclosure that bounds each single-variable part exactly */
ival poly_range(const poly &p, const box &b)
{
	std::map<var, poly> groups;
	poly mixed;
	for (const auto &[m, c] : p.terms()) {
		if (m.powers().size() == 1)
			groups[m.powers()[0].first] += poly::term(c, m);
		else
			mixed += poly::term(c, m);
	}
	ival out = eval_interval(mixed, b);
	for (const auto &[v, g] : groups) {
		auto it = b.find(v);
		out = out + uni_range(unipoly::from_poly(g, v), it == b.end() ? ival::whole() : it->second);
	}
	return out;
}

bool tighter(const ival &n, const ival &o) { return !(n == o); }

constexpr size_t max_linear_rows = 2000;

/* sum c_m m + k, compared with 0 by >= (or > when strict) */
struct lin_row {
	std::map<monomial, Rat, grlex_greater> c;
	Rat k;
	bool strict = false;

	void scale_to_unit()
	{
		Rat d = c.empty() ? Rat(abs(k)) : Rat(abs(c.begin()->second));
		if (d == 0)
			return;
		for (auto &[m, v] : c)
			v /= d;
		k /= d;
	}
	friend bool operator<(const lin_row &a, const lin_row &b)
	{
		if (a.strict != b.strict)
			return a.strict < b.strict;
		if (a.k != b.k)
			return a.k < b.k;
		return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end(),
		                                    [](const auto &x, const auto &y) {
			                                    if (x.first != y.first)
				                                    return grlex_greater{}(x.first, y.first);
			                                    return x.second < y.second;
		                                    });
	}
};

void add_row(std::set<lin_row> &rows, const poly &p, bool strict)
{
	lin_row r;
	for (const auto &[m, c] : p.terms()) {
		if (m.is_one())
			r.k = c;
		else
			r.c[m] = c;
	}
	r.strict = strict;
	r.scale_to_unit();
	rows.insert(r);
}

/* Fourier-Motzkin on the relaxation that treats every monomial as an
 * independent unknown; true means the atoms have no common real solution */
bool linear_infeasible(const std::vector<atom> &atoms, const box &b)
{
	std::set<lin_row> rows;
	std::set<monomial, grlex_greater> seen;
	for (const atom &a : atoms) {
		switch (a.r) {
		case rel::ge: add_row(rows, a.p, false); break;
		case rel::gt: add_row(rows, a.p, true); break;
		case rel::le: add_row(rows, -a.p, false); break;
		case rel::lt: add_row(rows, -a.p, true); break;
		case rel::eq:
			add_row(rows, a.p, false);
			add_row(rows, -a.p, false);
			break;
		case rel::ne: continue;
		}
		for (const auto &[m, c] : a.p.terms())
			seen.insert(m);
	}
	for (const monomial &m : seen) {
		if (m.is_one())
			continue;
		bool even = std::all_of(m.powers().begin(), m.powers().end(), [](const auto &pw) { return pw.second % 2 == 0; });
		if (even)
			add_row(rows, poly::term(1, m), false);
		ival r = poly_range(poly::term(1, m), b);
		if (r.lo.finite())
			add_row(rows, poly::term(1, m) - poly(r.lo.v), r.lo.open);
		if (r.hi.finite())
			add_row(rows, poly(r.hi.v) - poly::term(1, m), r.hi.open);
	}
	for (;;) {
		std::map<monomial, std::pair<size_t, size_t>, grlex_greater> counts;
		for (const lin_row &r : rows) {
			if (r.c.empty()) {
				if (r.k < 0 || (r.k == 0 && r.strict))
					return true;
				continue;
			}
			for (const auto &[m, v] : r.c)
				(v > 0 ? counts[m].first : counts[m].second)++;
		}
		if (counts.empty())
			return false;
		auto pick = counts.begin();
		for (auto it = counts.begin(); it != counts.end(); ++it)
			if (it->second.first * it->second.second < pick->second.first * pick->second.second)
				pick = it;
		const monomial m = pick->first;
		std::set<lin_row> next;
		std::vector<const lin_row *> pos, neg;
		for (const lin_row &r : rows) {
			auto it = r.c.find(m);
			if (it == r.c.end()) {
				if (!r.c.empty() || r.k < 0 || (r.k == 0 && r.strict))
					next.insert(r);
			} else {
				(it->second > 0 ? pos : neg).push_back(&r);
			}
		}
		if (next.size() + pos.size() * neg.size() > max_linear_rows)
			return false;
		for (const lin_row *p : pos)
			for (const lin_row *n : neg) {
				Rat a = p->c.at(m), bneg = -n->c.at(m);
				lin_row r;
				r.k = p->k * bneg + n->k * a;
				r.strict = p->strict || n->strict;
				for (const auto &[mm, v] : p->c)
					r.c[mm] += v * bneg;
				for (const auto &[mm, v] : n->c)
					r.c[mm] += v * a;
				for (auto it = r.c.begin(); it != r.c.end();)
					it = it->second == 0 ? r.c.erase(it) : std::next(it);
				r.scale_to_unit();
				next.insert(r);
			}
		rows = std::move(next);
	}
}

}

box propagate_bounds(const std::vector<atom> &atoms, bool &conflict, box b)
{
	conflict = false;
	for (unsigned round = 0; round < max_propagation_rounds; ++round) {
		bool changed = false;
		for (const atom &a : atoms) {
			if (!may_satisfy(poly_range(a.p, b), a.r)) {
				conflict = true;
				return b;
			}
			for (const var &v : a.p.vars()) {
				poly q, r;
				bool separable = true;
				for (const auto &[m, c] : a.p.terms()) {
					if (!m.contains(v)) {
						r += poly::term(c, m);
					} else if (m.powers().size() == 1) {
						q += poly::term(c, m);
					} else {
						separable = false;
						break;
					}
				}
				if (!separable || q.degree(v) > max_bound_degree)
					continue;
				ival rv = poly_range(r, b);
				if (rv.empty()) {
					conflict = true;
					return b;
				}
				rel rr = a.r;
				Rat shift;
				if (rr == rel::le || rr == rel::lt) {
					if (!rv.lo.finite())
						continue;
					shift = rv.lo.v;
					if (rv.lo.open)
						rr = rel::lt;
				} else if (rr == rel::ge || rr == rel::gt) {
					if (!rv.hi.finite())
						continue;
					shift = rv.hi.v;
					if (rv.hi.open)
						rr = rel::gt;
				} else {
					continue;
				}
				unipoly g = unipoly::from_poly(q + poly(shift), v);
				auto it = b.find(v);
				ival cur = it == b.end() ? ival::whole() : it->second;
				ival nv = sublevel_hull(g, rr, cur);
				if (nv.empty()) {
					b[v] = nv;
					conflict = true;
					return b;
				}
				if (tighter(nv, cur)) {
					b[v] = nv;
					changed = true;
				}
			}
		}
		if (!changed)
			break;
	}
	return b;
}

refutation interval_refute(const clause &c)
{
	bool conflict = false;
	propagate_bounds(c, conflict);
	return conflict ? refutation::refuted : refutation::unknown;
}

bool infeasible(const formula &f, const box &b)
{
	using K = formula::kind;
	switch (f.k()) {
	case K::tru: return false;
	case K::fls: return true;
	case K::atom: return !may_satisfy(poly_range(f.get_atom().p, b), f.get_atom().r);
	case K::conj:
		for (const formula &g : f.args())
			if (infeasible(g, b))
				return true;
		return false;
	case K::disj:
		for (const formula &g : f.args())
			if (!infeasible(g, b))
				return false;
		return true;
	case K::neg: return false;
	}
	return false;
}

namespace {

struct goal {
	std::vector<atom> atoms;
	std::vector<formula> pending;

	void absorb(const formula &f)
	{
		using K = formula::kind;
		switch (f.k()) {
		case K::atom: atoms.push_back(f.get_atom()); break;
		case K::conj:
			for (const formula &g : f.args())
				absorb(g);
			break;
		case K::fls: atoms.push_back({poly(1), rel::lt}); break;
		case K::tru:
		case K::neg: break;
		case K::disj: pending.push_back(f); break;
		}
	}
};

bool search(goal g, size_t &budget)
{
	box b;
	for (;;) {
		bool conflict = false;
		b = propagate_bounds(g.atoms, conflict);
		if (conflict)
			return true;
		bool progressed = false;
		for (size_t i = 0; i < g.pending.size(); ++i) {
			std::vector<formula> alive;
			for (const formula &d : g.pending[i].args())
				if (!infeasible(d, b))
					alive.push_back(d);
			if (alive.empty())
				return true;
			if (alive.size() == 1) {
				g.pending.erase(g.pending.begin() + i);
				g.absorb(alive[0]);
				progressed = true;
				break;
			}
		}
		if (!progressed)
			break;
	}
	if (linear_infeasible(g.atoms, b))
		return true;
	if (g.pending.empty())
		return false;

	size_t pick = 0, fewest = SIZE_MAX;
	std::vector<formula> choice;
	for (size_t i = 0; i < g.pending.size(); ++i) {
		std::vector<formula> alive;
		for (const formula &d : g.pending[i].args())
			if (!infeasible(d, b))
				alive.push_back(d);
		if (alive.size() < fewest) {
			fewest = alive.size();
			pick = i;
			choice = std::move(alive);
		}
	}
	g.pending.erase(g.pending.begin() + pick);
	for (const formula &d : choice) {
		if (budget == 0)
			return false;
		--budget;
		goal sub = g;
		sub.absorb(d);
		if (!search(std::move(sub), budget))
			return false;
	}
	return true;
}

}

bool refute(const formula &f, size_t leaf_budget)
{
	formula n = normalize(f);
	if (n.is_false())
		return true;
	if (n.is_true())
		return false;
	goal g;
	g.absorb(n);
	return search(std::move(g), leaf_budget);
}

}
