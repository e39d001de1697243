/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#include "ratsynth/unipoly.hh"
#include "ratsynth/errors.hh"

namespace ratsynth {

unipoly::unipoly(var v, std::vector<Rat> coeffs) : v_(std::move(v)), c_(std::move(coeffs))
{
	trim();
}

void unipoly::trim()
{
	while (!c_.empty() && c_.back() == 0)
		c_.pop_back();
}

unipoly unipoly::from_poly(const poly &p, const var &v)
{
	std::vector<Rat> c(p.is_zero() ? 0 : p.degree(v) + 1);
	for (auto &[m, k] : p.terms()) {
		for (auto &[w, e] : m.powers())
			if (w != v)
				throw unsupported_construct("polynomial " + p.str() +
				                            " is not univariate in " + v);
		c[m.exponent(v)] = k;
	}
	return unipoly(v, std::move(c));
}

poly unipoly::to_poly() const
{
	poly r;
	for (size_t i = 0; i < c_.size(); i++)
		r += poly::term(c_[i], monomial(v_, i));
	return r;
}

const Rat &unipoly::lc() const
{
	if (c_.empty())
		throw zero_polynomial("leading coefficient of zero polynomial");
	return c_.back();
}

Rat unipoly::eval(const Rat &x) const
{
	Rat r = 0;
	for (size_t i = c_.size(); i-- > 0;)
		r = r * x + c_[i];
	return r;
}

unipoly unipoly::derivative() const
{
	std::vector<Rat> d;
	for (size_t i = 1; i < c_.size(); i++)
		d.push_back(c_[i] * static_cast<unsigned long>(i));
	return unipoly(v_, std::move(d));
}

unipoly unipoly::scaled(const Rat &k) const
{
	if (k == 0)
		return unipoly(v_, {});
	unipoly r = *this;
	for (auto &c : r.c_)
		c *= k;
	return r;
}

unipoly unipoly::monic() const
{
	return is_zero() ? *this : scaled(1 / lc());
}

static const var &pick_var(const unipoly &a, const unipoly &b)
{
	return a.variable().empty() ? b.variable() : a.variable();
}

unipoly operator+(const unipoly &a, const unipoly &b)
{
	std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
	for (size_t i = 0; i < c.size(); i++)
		c[i] = a.coeff(i) + b.coeff(i);
	return unipoly(pick_var(a, b), std::move(c));
}

unipoly operator-(const unipoly &a, const unipoly &b)
{
	std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
	for (size_t i = 0; i < c.size(); i++)
		c[i] = a.coeff(i) - b.coeff(i);
	return unipoly(pick_var(a, b), std::move(c));
}

unipoly operator*(const unipoly &a, const unipoly &b)
{
	if (a.is_zero() || b.is_zero())
		return unipoly(pick_var(a, b), {});
	std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
	for (size_t i = 0; i < a.c_.size(); i++) {
		if (a.c_[i] == 0)
			continue;
		for (size_t j = 0; j < b.c_.size(); j++)
			c[i + j] += a.c_[i] * b.c_[j];
	}
	return unipoly(pick_var(a, b), std::move(c));
}

std::pair<unipoly, unipoly> divmod(const unipoly &a, const unipoly &b)
{
	if (b.is_zero())
		throw zero_polynomial("division by zero polynomial");
	std::vector<Rat> r = a.coeffs();
	int db = b.degree();
	int dq = a.degree() - db;
	std::vector<Rat> q(dq >= 0 ? dq + 1 : 0);
	Rat inv = 1 / b.lc();
	for (int k = dq; k >= 0; k--) {
		Rat t = r[k + db] * inv;
		q[k] = t;
		if (t == 0)
			continue;
		for (int j = 0; j <= db; j++)
			r[k + j] -= t * b.coeffs()[j];
	}
	return {unipoly(pick_var(a, b), std::move(q)), unipoly(pick_var(a, b), std::move(r))};
}

unipoly gcd_uni(const unipoly &a, const unipoly &b)
{
	unipoly x = a.monic(), y = b.monic();
	while (!y.is_zero()) {
		auto r = divmod(x, y).second;
		x = std::move(y);
		y = r.monic();
	}
	return x;
}

unipoly square_free_part(const unipoly &p)
{
	if (p.is_zero())
		throw zero_polynomial("square-free part of zero polynomial");
	if (p.degree() <= 1)
		return p;
	unipoly g = gcd_uni(p, p.derivative());
	return divmod(p, g).first;
}

cleared_poly clear_denominators(const unipoly &p)
{
	if (p.is_zero())
		throw zero_polynomial("cannot clear denominators of zero polynomial");
	BigInt l = 1;
	for (auto &c : p.coeffs())
		l = lcm(l, c.get_den());
	BigInt content = 0;
	for (auto &c : p.coeffs())
		content = gcd(content, BigInt(c.get_num() * (l / c.get_den())));
	Rat m(l, content);
	m.canonicalize();
	return {p.scaled(m), m};
}

}
