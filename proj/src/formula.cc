/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#include "ratsynth/formula.hh"
#include "ratsynth/errors.hh"

#include <algorithm>

namespace ratsynth {

rel negate(rel r)
{
	switch (r) {
	case rel::lt: return rel::ge;
	case rel::gt: return rel::le;
	case rel::le: return rel::gt;
	case rel::ge: return rel::lt;
	case rel::eq: return rel::ne;
	case rel::ne: return rel::eq;
	}
	return r;
}

rel flip(rel r)
{
	switch (r) {
	case rel::lt: return rel::gt;
	case rel::gt: return rel::lt;
	case rel::le: return rel::ge;
	case rel::ge: return rel::le;
	default: return r;
	}
}

bool is_strict(rel r) { return r == rel::lt || r == rel::gt; }

bool holds(rel r, int s)
{
	switch (r) {
	case rel::lt: return s < 0;
	case rel::gt: return s > 0;
	case rel::le: return s <= 0;
	case rel::ge: return s >= 0;
	case rel::eq: return s == 0;
	case rel::ne: return s != 0;
	}
	return false;
}

const char *rel_symbol(rel r)
{
	switch (r) {
	case rel::lt: return "<";
	case rel::gt: return ">";
	case rel::le: return "<=";
	case rel::ge: return ">=";
	case rel::eq: return "=";
	case rel::ne: return "!=";
	}
	return "?";
}

formula formula::top() { return formula(); }

formula formula::bottom()
{
	formula f;
	f.k_ = kind::fls;
	return f;
}

formula formula::make_atom(poly p, rel r)
{
	formula f;
	f.k_ = kind::atom;
	f.a_ = {std::move(p), r};
	return f;
}

static bool complementary(const formula &a, const formula &b)
{
	return a.is_atom() && b.is_atom() && a.get_atom().p == b.get_atom().p &&
	       a.get_atom().r == negate(b.get_atom().r);
}

/* shared body of conj/disj: 'absorb' is the constant that swallows the
 * whole connective, 'unit' the neutral one */
static formula junction(formula::kind k, std::vector<formula> fs, bool absorb_is_true)
{
	std::vector<formula> flat;
	std::set<formula> seen;
	auto push = [&](formula &&g) {
		if (seen.insert(g).second)
			flat.push_back(std::move(g));
	};
	for (auto &f : fs) {
		if (f.is_true() || f.is_false()) {
			if (f.is_true() == absorb_is_true)
				return formula::constant(absorb_is_true);
			continue;
		}
		if (f.k() == k) {
			for (auto &g : f.args())
				push(formula(g));
		} else
			push(std::move(f));
	}
	for (size_t i = 0; i < flat.size(); i++)
		if (flat[i].is_atom())
			for (size_t j = i + 1; j < flat.size(); j++)
				if (complementary(flat[i], flat[j]))
					return formula::constant(absorb_is_true);
	if (flat.empty())
		return formula::constant(!absorb_is_true);
	if (flat.size() == 1)
		return std::move(flat[0]);
	return formula::make_junction(k, std::move(flat));
}

formula formula::make_junction(kind k, std::vector<formula> args)
{
	formula f;
	f.k_ = k;
	f.args_ = std::move(args);
	return f;
}

formula formula::conj(std::vector<formula> fs) { return junction(kind::conj, std::move(fs), false); }
formula formula::disj(std::vector<formula> fs) { return junction(kind::disj, std::move(fs), true); }

formula formula::neg(formula f)
{
	if (f.is_true())
		return bottom();
	if (f.is_false())
		return top();
	if (f.k_ == kind::neg)
		return f.args_[0];
	formula g;
	g.k_ = kind::neg;
	g.args_.push_back(std::move(f));
	return g;
}

formula operator&&(formula a, formula b) { return formula::conj({std::move(a), std::move(b)}); }
formula operator||(formula a, formula b) { return formula::disj({std::move(a), std::move(b)}); }
formula operator!(formula f) { return formula::neg(std::move(f)); }

std::string formula::str() const
{
	switch (k_) {
	case kind::tru: return "true";
	case kind::fls: return "false";
	case kind::atom: return a_.p.str() + " " + rel_symbol(a_.r) + " 0";
	case kind::neg: return "!(" + args_[0].str() + ")";
	case kind::conj:
	case kind::disj: {
		std::string s = "(";
		for (size_t i = 0; i < args_.size(); i++) {
			if (i)
				s += k_ == kind::conj ? " & " : " | ";
			s += args_[i].str();
		}
		return s + ")";
	}
	}
	return "?";
}

bool operator==(const formula &a, const formula &b)
{
	return a.k_ == b.k_ && a.a_ == b.a_ && a.args_ == b.args_;
}

bool operator<(const formula &a, const formula &b)
{
	if (a.k_ != b.k_)
		return a.k_ < b.k_;
	if (a.k_ == formula::kind::atom) {
		if (a.a_.r != b.a_.r)
			return a.a_.r < b.a_.r;
		return a.a_.p < b.a_.p;
	}
	return std::lexicographical_compare(a.args_.begin(), a.args_.end(), b.args_.begin(),
	                                    b.args_.end());
}

namespace {

enum class definiteness { none, pos, nonneg, neg, nonpos };

/* Recognizes c + sum of a_i * (even power products) with all a_i of one
 * sign. */
definiteness definite(const poly &p)
{
	int s = 0;
	Rat c = 0;
	for (auto &[m, k] : p.terms()) {
		if (m.is_one()) {
			c = k;
			continue;
		}
		for (auto &[v, e] : m.powers())
			if (e % 2)
				return definiteness::none;
		int ks = sgn(k);
		if (s && ks != s)
			return definiteness::none;
		s = ks;
	}
	if (s > 0 && c >= 0)
		return c > 0 ? definiteness::pos : definiteness::nonneg;
	if (s < 0 && c <= 0)
		return c < 0 ? definiteness::neg : definiteness::nonpos;
	return definiteness::none;
}

}

formula canonical_atom(const poly &p, rel r)
{
	if (p.is_constant())
		return formula::constant(holds(r, sgn(p.constant_value())));
	switch (definite(p)) {
	case definiteness::pos: return formula::constant(holds(r, 1));
	case definiteness::neg: return formula::constant(holds(r, -1));
	case definiteness::nonneg:
		if (r == rel::lt)
			return formula::bottom();
		if (r == rel::ge)
			return formula::top();
		break;
	case definiteness::nonpos:
		if (r == rel::gt)
			return formula::bottom();
		if (r == rel::le)
			return formula::top();
		break;
	case definiteness::none: break;
	}
	return formula::make_atom(p.monic(), sgn(p.leading_coeff()) < 0 ? flip(r) : r);
}

void validate(const spec &s)
{
	std::set<var> io;
	for (auto &v : s.inputs)
		if (!io.insert(v).second)
			throw variable_clash("variable '" + v + "' declared twice");
	for (auto &v : s.outputs)
		if (!io.insert(v).second)
			throw variable_clash("variable '" + v + "' is both input and output");
	for (auto &v : free_vars(s.phi))
		if (!io.count(v))
			throw unknown_variable("free variable '" + v + "' is neither input nor output");
}

static void collect_vars(const formula &f, std::set<var> &out)
{
	if (f.is_atom()) {
		auto vs = f.get_atom().p.vars();
		out.insert(vs.begin(), vs.end());
	}
	for (auto &g : f.args())
		collect_vars(g, out);
}

std::set<var> free_vars(const formula &f)
{
	std::set<var> r;
	collect_vars(f, r);
	return r;
}

static void collect_atoms(const formula &f, std::vector<atom> &out)
{
	if (f.is_atom())
		out.push_back(f.get_atom());
	for (auto &g : f.args())
		collect_atoms(g, out);
}

std::vector<atom> atoms_of(const formula &f)
{
	std::vector<atom> r;
	collect_atoms(f, r);
	return r;
}

size_t atom_count(const formula &f) { return atoms_of(f).size(); }

static formula fold_atom(const poly &p, rel r)
{
	if (p.is_constant())
		return formula::constant(holds(r, sgn(p.constant_value())));
	switch (r) {
	case rel::eq: return formula::conj({formula::make_atom(p, rel::le), formula::make_atom(p, rel::ge)});
	case rel::ne: return formula::disj({formula::make_atom(p, rel::lt), formula::make_atom(p, rel::gt)});
	default: return formula::make_atom(p, r);
	}
}

static formula nnf(const formula &f, bool positive)
{
	using K = formula::kind;
	switch (f.k()) {
	case K::tru:
	case K::fls: return formula::constant(f.is_true() == positive);
	case K::atom: {
		auto &a = f.get_atom();
		return fold_atom(a.p, positive ? a.r : negate(a.r));
	}
	case K::neg: return nnf(f.args()[0], !positive);
	case K::conj:
	case K::disj: {
		std::vector<formula> xs;
		for (auto &g : f.args())
			xs.push_back(nnf(g, positive));
		return (f.k() == K::conj) == positive ? formula::conj(std::move(xs))
		                                      : formula::disj(std::move(xs));
	}
	}
	return f;
}

formula normalize(const formula &f) { return nnf(f, true); }

static std::vector<clause> dnf(const formula &f, size_t budget)
{
	using K = formula::kind;
	switch (f.k()) {
	case K::tru: return {clause{}};
	case K::fls: return {};
	case K::atom: return {clause{f.get_atom()}};
	case K::neg: throw error("to_dnf expects a normalized formula");
	case K::disj: {
		std::vector<clause> r;
		for (auto &g : f.args()) {
			auto d = dnf(g, budget);
			r.insert(r.end(), d.begin(), d.end());
			if (r.size() > budget)
				throw dnf_budget_exceeded("DNF exceeds " + std::to_string(budget) + " clauses");
		}
		return r;
	}
	case K::conj: {
		std::vector<clause> r{clause{}};
		for (auto &g : f.args()) {
			auto d = dnf(g, budget);
			if (r.size() * d.size() > budget)
				throw dnf_budget_exceeded("DNF exceeds " + std::to_string(budget) + " clauses");
			std::vector<clause> next;
			for (auto &c : r)
				for (auto &e : d) {
					clause n = c;
					for (auto &a : e)
						if (std::find(n.begin(), n.end(), a) == n.end())
							n.push_back(a);
					next.push_back(std::move(n));
				}
			r = std::move(next);
		}
		return r;
	}
	}
	return {};
}

std::vector<clause> to_dnf(const formula &f, size_t budget)
{
	auto r = dnf(f, budget);
	std::vector<clause> out;
	for (auto &c : r)
		if (std::find(out.begin(), out.end(), c) == out.end())
			out.push_back(std::move(c));
	return out;
}

formula from_clause(const clause &c)
{
	std::vector<formula> xs;
	for (auto &a : c)
		xs.push_back(formula::make_atom(a.p, a.r));
	return formula::conj(std::move(xs));
}

static formula map_atoms(const formula &f, const auto &fn)
{
	using K = formula::kind;
	switch (f.k()) {
	case K::tru:
	case K::fls: return f;
	case K::atom: return fn(f.get_atom());
	case K::neg: return formula::neg(map_atoms(f.args()[0], fn));
	case K::conj:
	case K::disj: {
		std::vector<formula> xs;
		for (auto &g : f.args())
			xs.push_back(map_atoms(g, fn));
		return f.k() == K::conj ? formula::conj(std::move(xs)) : formula::disj(std::move(xs));
	}
	}
	return f;
}

formula transform_atoms(const formula &f, const std::function<formula(const atom &)> &fn)
{
	return map_atoms(f, fn);
}

formula hat_transform(const formula &f, const var &y)
{
	return map_atoms(f, [&](const atom &a) {
		rel r = a.r;
		if (a.p.contains(y)) {
			if (r == rel::le)
				r = rel::lt;
			else if (r == rel::ge)
				r = rel::gt;
		}
		return formula::make_atom(a.p, r);
	});
}

std::vector<poly> nonstrict_polys(const formula &f, const var &y)
{
	std::set<poly> s;
	for (auto &a : atoms_of(f))
		if ((a.r == rel::le || a.r == rel::ge) && a.p.contains(y))
			s.insert(a.p.monic());
	return {s.begin(), s.end()};
}

bool formula_eval(const formula &f, const assignment &a)
{
	using K = formula::kind;
	switch (f.k()) {
	case K::tru: return true;
	case K::fls: return false;
	case K::atom: return holds(f.get_atom().r, sgn(f.get_atom().p.eval(a)));
	case K::neg: return !formula_eval(f.args()[0], a);
	case K::conj:
		for (auto &g : f.args())
			if (!formula_eval(g, a))
				return false;
		return true;
	case K::disj:
		for (auto &g : f.args())
			if (formula_eval(g, a))
				return true;
		return false;
	}
	return false;
}

formula substitute(const formula &f, const assignment &a)
{
	return map_atoms(f, [&](const atom &at) {
		poly p = at.p.substitute(a);
		if (p.is_constant())
			return formula::constant(holds(at.r, sgn(p.constant_value())));
		return formula::make_atom(std::move(p), at.r);
	});
}

formula substitute(const formula &f, const var &v, const poly &by)
{
	return map_atoms(f, [&](const atom &at) {
		poly p = at.p.substitute(v, by);
		if (p.is_constant())
			return formula::constant(holds(at.r, sgn(p.constant_value())));
		return formula::make_atom(std::move(p), at.r);
	});
}

spec delta_relax(const spec &s, const var &delta)
{
	auto used = free_vars(s.phi);
	used.insert(s.inputs.begin(), s.inputs.end());
	used.insert(s.outputs.begin(), s.outputs.end());
	if (used.count(delta))
		throw variable_clash("relaxation variable '" + delta + "' already in use");
	poly d = poly::variable(delta);
	formula nonneg = formula::make_atom(d, rel::ge);
	spec r = s;
	r.phi = map_atoms(s.phi, [&](const atom &a) {
		if (a.r != rel::eq)
			return formula::make_atom(a.p, a.r);
		return formula::conj({nonneg, formula::make_atom(a.p - d, rel::le),
		                      formula::make_atom(a.p + d, rel::ge)});
	});
	r.inputs.push_back(delta);
	return r;
}

}
