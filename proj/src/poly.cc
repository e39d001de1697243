/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#include "ratsynth/poly.hh"
#include "ratsynth/errors.hh"

#include <algorithm>

namespace ratsynth {

static uint32_t checked_exponent(uint64_t e)
{
	if (e > max_exponent)
		throw degree_overflow("exponent " + std::to_string(e) + " exceeds 2^31-1");
	return static_cast<uint32_t>(e);
}

monomial::monomial(const var &v, uint64_t e)
{
	if (e)
		pw_.emplace_back(v, checked_exponent(e));
}

monomial monomial::from_powers(std::vector<std::pair<var, uint64_t>> pw)
{
	std::sort(pw.begin(), pw.end());
	monomial m;
	for (size_t i = 0; i < pw.size();) {
		uint64_t e = 0;
		size_t j = i;
		for (; j < pw.size() && pw[j].first == pw[i].first; j++) {
			e += pw[j].second;
			if (e > max_exponent)
				checked_exponent(e);
		}
		if (e)
			m.pw_.emplace_back(pw[i].first, checked_exponent(e));
		i = j;
	}
	return m;
}

uint64_t monomial::degree() const
{
	uint64_t d = 0;
	for (auto &[v, e] : pw_)
		d += e;
	return d;
}

uint32_t monomial::exponent(const var &v) const
{
	for (auto &[w, e] : pw_)
		if (w == v)
			return e;
	return 0;
}

monomial monomial::operator*(const monomial &o) const
{
	monomial r;
	r.pw_.reserve(pw_.size() + o.pw_.size());
	size_t i = 0, j = 0;
	while (i < pw_.size() || j < o.pw_.size()) {
		if (j == o.pw_.size() || (i < pw_.size() && pw_[i].first < o.pw_[j].first))
			r.pw_.push_back(pw_[i++]);
		else if (i == pw_.size() || o.pw_[j].first < pw_[i].first)
			r.pw_.push_back(o.pw_[j++]);
		else {
			r.pw_.emplace_back(pw_[i].first,
			                   checked_exponent(uint64_t(pw_[i].second) + o.pw_[j].second));
			i++, j++;
		}
	}
	return r;
}

monomial monomial::without(const var &v) const
{
	monomial r;
	for (auto &p : pw_)
		if (p.first != v)
			r.pw_.push_back(p);
	return r;
}

std::optional<monomial> monomial::divide(const monomial &o) const
{
	monomial r;
	size_t i = 0;
	for (auto &[v, e] : o.pw_) {
		while (i < pw_.size() && pw_[i].first < v)
			r.pw_.push_back(pw_[i++]);
		if (i == pw_.size() || pw_[i].first != v || pw_[i].second < e)
			return std::nullopt;
		if (pw_[i].second > e)
			r.pw_.emplace_back(v, pw_[i].second - e);
		i++;
	}
	while (i < pw_.size())
		r.pw_.push_back(pw_[i++]);
	return r;
}

int grlex_compare(const monomial &a, const monomial &b)
{
	uint64_t da = a.degree(), db = b.degree();
	if (da != db)
		return da < db ? -1 : 1;
	auto &pa = a.powers(), &pb = b.powers();
	size_t n = std::min(pa.size(), pb.size());
	for (size_t i = 0; i < n; i++) {
		if (pa[i].first != pb[i].first)
			/* the earlier variable is present in one and absent in the other */
			return pa[i].first < pb[i].first ? 1 : -1;
		if (pa[i].second != pb[i].second)
			return pa[i].second < pb[i].second ? -1 : 1;
	}
	if (pa.size() != pb.size())
		return pa.size() > pb.size() ? 1 : -1;
	return 0;
}

poly::poly(const Rat &c)
{
	if (c != 0)
		terms_.emplace(monomial(), c);
}

poly poly::variable(const var &v) { return term(1, monomial(v)); }

poly poly::term(const Rat &c, const monomial &m)
{
	poly p;
	if (c != 0)
		p.terms_.emplace(m, c);
	return p;
}

poly poly::from_coeffs(const std::vector<poly> &coeffs, const var &v)
{
	poly r;
	for (size_t i = 0; i < coeffs.size(); i++) {
		if (coeffs[i].is_zero())
			continue;
		monomial m(v, i);
		for (auto &[mono, c] : coeffs[i].terms_)
			r.terms_[mono * m] += c;
	}
	std::erase_if(r.terms_, [](auto &t) { return t.second == 0; });
	return r;
}

bool poly::is_constant() const
{
	return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rat poly::constant_term() const
{
	if (terms_.empty())
		return 0;
	auto it = terms_.rbegin();
	return it->first.is_one() ? it->second : Rat(0);
}

std::set<var> poly::vars() const
{
	std::set<var> r;
	for (auto &[m, c] : terms_)
		for (auto &[v, e] : m.powers())
			r.insert(v);
	return r;
}

bool poly::contains(const var &v) const
{
	for (auto &[m, c] : terms_)
		if (m.contains(v))
			return true;
	return false;
}

uint64_t poly::degree(const var &v) const
{
	uint64_t d = 0;
	for (auto &[m, c] : terms_)
		d = std::max<uint64_t>(d, m.exponent(v));
	return d;
}

uint64_t poly::total_degree() const
{
	return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::vector<poly> poly::coeffs_in(const var &v) const
{
	if (is_zero())
		return {};
	std::vector<poly> r(degree(v) + 1);
	for (auto &[m, c] : terms_)
		r[m.exponent(v)].terms_.emplace(m.without(v), c);
	return r;
}

const monomial &poly::leading_monomial() const
{
	if (is_zero())
		throw zero_polynomial("leading monomial of zero polynomial");
	return terms_.begin()->first;
}

const Rat &poly::leading_coeff() const
{
	if (is_zero())
		throw zero_polynomial("leading coefficient of zero polynomial");
	return terms_.begin()->second;
}

poly poly::operator-() const
{
	poly r = *this;
	for (auto &[m, c] : r.terms_)
		c = -c;
	return r;
}

poly &poly::operator+=(const poly &o)
{
	for (auto &[m, c] : o.terms_) {
		auto [it, ins] = terms_.emplace(m, c);
		if (!ins) {
			it->second += c;
			if (it->second == 0)
				terms_.erase(it);
		}
	}
	return *this;
}

poly &poly::operator-=(const poly &o)
{
	for (auto &[m, c] : o.terms_) {
		auto [it, ins] = terms_.emplace(m, -c);
		if (!ins) {
			it->second -= c;
			if (it->second == 0)
				terms_.erase(it);
		}
	}
	return *this;
}

poly operator*(const poly &a, const poly &b)
{
	poly r;
	for (auto &[ma, ca] : a.terms_)
		for (auto &[mb, cb] : b.terms_)
			r.terms_[ma * mb] += ca * cb;
	std::erase_if(r.terms_, [](auto &t) { return t.second == 0; });
	return r;
}

poly &poly::operator*=(const poly &o) { return *this = *this * o; }

poly poly::scaled(const Rat &c) const
{
	if (c == 0)
		return {};
	poly r = *this;
	for (auto &[m, k] : r.terms_)
		k *= c;
	return r;
}

poly poly::pow(uint64_t e) const
{
	poly r(1), b = *this;
	while (e) {
		if (e & 1)
			r *= b;
		e >>= 1;
		if (e)
			b *= b;
	}
	return r;
}

poly poly::derivative(const var &v) const
{
	poly r;
	for (auto &[m, c] : terms_) {
		uint32_t e = m.exponent(v);
		if (!e)
			continue;
		monomial rest = m.without(v) * monomial(v, e - 1);
		r.terms_[rest] += c * e;
	}
	std::erase_if(r.terms_, [](auto &t) { return t.second == 0; });
	return r;
}

Rat poly::eval(const assignment &a) const
{
	Rat sum = 0;
	std::map<std::pair<var, uint32_t>, Rat> powcache;
	for (auto &[m, c] : terms_) {
		Rat t = c;
		for (auto &pe : m.powers()) {
			auto it = a.find(pe.first);
			if (it == a.end())
				throw unassigned_variable("variable '" + pe.first + "' is not assigned");
			auto [pc, ins] = powcache.try_emplace(pe);
			if (ins)
				pc->second = ratsynth::pow(it->second, pe.second);
			t *= pc->second;
		}
		sum += t;
	}
	return sum;
}

poly poly::substitute(const assignment &a) const
{
	poly r;
	for (auto &[m, c] : terms_) {
		Rat k = c;
		std::vector<std::pair<var, uint64_t>> rest;
		for (auto &[v, e] : m.powers()) {
			auto it = a.find(v);
			if (it == a.end())
				rest.emplace_back(v, e);
			else
				k *= ratsynth::pow(it->second, e);
		}
		if (k == 0)
			continue;
		auto [it, ins] = r.terms_.emplace(monomial::from_powers(std::move(rest)), k);
		if (!ins)
			it->second += k;
	}
	std::erase_if(r.terms_, [](auto &t) { return t.second == 0; });
	return r;
}

poly poly::substitute(const var &v, const poly &by) const
{
	auto cs = coeffs_in(v);
	poly r;
	for (size_t i = cs.size(); i-- > 0;)
		r = r * by + cs[i];
	return r;
}

std::optional<poly> poly::divide_exact(const poly &o) const
{
	if (o.is_zero())
		throw zero_polynomial("division by zero polynomial");
	poly rem = *this, q;
	const monomial &lm = o.leading_monomial();
	const Rat &lc = o.leading_coeff();
	while (!rem.is_zero()) {
		auto m = rem.leading_monomial().divide(lm);
		if (!m)
			return std::nullopt;
		poly t = term(rem.leading_coeff() / lc, *m);
		q += t;
		rem -= t * o;
	}
	return q;
}

poly poly::monic() const
{
	return is_zero() ? poly() : scaled(1 / leading_coeff());
}

poly poly::sign_normalized() const
{
	return is_zero() ? poly() : scaled(1 / abs(leading_coeff()));
}

std::string poly::str() const
{
	if (is_zero())
		return "0";
	std::string s;
	bool first = true;
	for (auto &[m, c] : terms_) {
		Rat a = abs(c);
		if (first)
			s += c < 0 ? "-" : "";
		else
			s += c < 0 ? " - " : " + ";
		first = false;
		bool unit = a == 1 && !m.is_one();
		if (!unit)
			s += to_string(a);
		bool star = !unit;
		for (auto &[v, e] : m.powers()) {
			s += star ? "*" : "";
			star = true;
			s += v;
			if (e > 1)
				s += "^" + std::to_string(e);
		}
	}
	return s;
}

bool operator<(const poly &a, const poly &b)
{
	auto ia = a.terms_.begin(), ib = b.terms_.begin();
	for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
		if (int c = grlex_compare(ia->first, ib->first))
			return c < 0;
		if (ia->second != ib->second)
			return ia->second < ib->second;
	}
	return ia == a.terms_.end() && ib != b.terms_.end();
}

}
