/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#include "ratsynth/rat.hh"
#include "ratsynth/errors.hh"

#include <cctype>

namespace ratsynth {

std::string to_string(const BigInt &z) { return z.get_str(); }

std::string to_string(const Rat &q)
{
	if (q.get_den() == 1)
		return q.get_num().get_str();
	return q.get_num().get_str() + "/" + q.get_den().get_str();
}

static bool all_digits(std::string_view s)
{
	if (s.empty())
		return false;
	for (char c : s)
		if (!std::isdigit(static_cast<unsigned char>(c)))
			return false;
	return true;
}

Rat parse_rat(std::string_view s)
{
	std::string_view t = s;
	bool neg = false;
	if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
		neg = t[0] == '-';
		t.remove_prefix(1);
	}
	Rat r;
	if (auto slash = t.find('/'); slash != std::string_view::npos) {
		auto n = t.substr(0, slash), d = t.substr(slash + 1);
		if (!all_digits(n) || !all_digits(d))
			throw parse_error("malformed rational '" + std::string(s) + "'");
		BigInt den(std::string(d), 10);
		if (den == 0)
			throw parse_error("zero denominator in '" + std::string(s) + "'");
		r = Rat(BigInt(std::string(n), 10), den);
	} else if (auto dot = t.find('.'); dot != std::string_view::npos) {
		auto ip = t.substr(0, dot), fp = t.substr(dot + 1);
		if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) ||
		    (ip.empty() && fp.empty()))
			throw parse_error("malformed decimal '" + std::string(s) + "'");
		BigInt num(std::string(ip.empty() ? "0" : ip) + std::string(fp), 10);
		BigInt den;
		mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
		r = Rat(num, den);
	} else {
		if (!all_digits(t))
			throw parse_error("malformed rational '" + std::string(s) + "'");
		r = Rat(BigInt(std::string(t), 10));
	}
	r.canonicalize();
	return neg ? Rat(-r) : r;
}

BigInt floor(const Rat &q)
{
	BigInt r;
	mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
	return r;
}

BigInt lcm(const BigInt &a, const BigInt &b)
{
	BigInt r;
	mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
	return r;
}

BigInt gcd(const BigInt &a, const BigInt &b)
{
	BigInt r;
	mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
	return r;
}

Rat pow(const Rat &q, unsigned long e)
{
	BigInt n, d;
	mpz_pow_ui(n.get_mpz_t(), q.get_num_mpz_t(), e);
	mpz_pow_ui(d.get_mpz_t(), q.get_den_mpz_t(), e);
	Rat r(n, d);
	r.canonicalize();
	return r;
}

BigInt isqrt(const BigInt &n)
{
	BigInt r;
	mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
	return r;
}

bool is_square(const BigInt &n)
{
	return n >= 0 && mpz_perfect_square_p(n.get_mpz_t());
}

void calkin_wilf::next()
{
	/* q' = 1 / (2 floor(q) - q + 1) */
	Rat f(floor(q_));
	q_ = 1 / (2 * f - q_ + 1);
}

std::vector<Rat> signed_rationals(size_t n)
{
	std::vector<Rat> out;
	out.reserve(n);
	if (n == 0)
		return out;
	out.emplace_back(0);
	calkin_wilf cw;
	while (out.size() < n) {
		out.push_back(cw.current());
		if (out.size() < n)
			out.push_back(-cw.current());
		cw.next();
	}
	return out;
}

}
