/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#include "ratsynth/errors.hh"
#include "ratsynth/qe.hh"
#include "ratsynth/realroots.hh"
#include "ratsynth/resultant.hh"

#include <set>

namespace ratsynth {

namespace {

struct cell_builder {
	var x;
	std::vector<unipoly> factors;  /* square-free projection factors */
	std::vector<root_interval> roots;

	formula x_rel(const Rat &r, rel rl) const
	{
		return canonical_atom(poly::variable(x) - poly(r), rl);
	}

	/* factor with a root inside a non-point isolating interval */
	const unipoly &owner(const root_interval &iv) const
	{
		const unipoly *best = nullptr;
		for (const unipoly &f : factors)
			if (count_roots(f, iv) > 0 && (!best || f.degree() < best->degree()))
				best = &f;
		return *best;
	}

	formula above(size_t i) const
	{
		const root_interval &iv = roots[i];
		if (iv.is_point())
			return x_rel(iv.lo, rel::gt);
		const unipoly &f = owner(iv);
		poly fp = f.to_poly().scaled(Rat(f.sign_at(iv.hi)));
		return x_rel(iv.hi, rel::ge) || (x_rel(iv.lo, rel::gt) && canonical_atom(fp, rel::gt));
	}

	formula below(size_t i) const
	{
		const root_interval &iv = roots[i];
		if (iv.is_point())
			return x_rel(iv.lo, rel::lt);
		const unipoly &f = owner(iv);
		poly fp = f.to_poly().scaled(Rat(f.sign_at(iv.lo)));
		return x_rel(iv.lo, rel::le) || (x_rel(iv.hi, rel::lt) && canonical_atom(fp, rel::gt));
	}
};

void add_projection(std::set<poly> &out, const poly &p)
{
	if (!p.is_constant())
		out.insert(p.sign_normalized());
}

}

formula cad_one_param(const formula &phi0, const var &y)
{
	formula phi = normalize(phi0);
	std::set<var> fv = free_vars(phi);
	if (!fv.count(y))
		return phi;
	fv.erase(y);
	if (fv.size() > 1)
		throw too_many_free_variables("cylindrical decomposition supports one parameter, got " +
		                              std::to_string(fv.size()));
	if (fv.empty())
		return formula::constant(decide_exists_real(phi, y));
	const var x = *fv.begin();

	std::vector<poly> with_y;
	std::set<poly> proj;
	{
		std::set<poly> seen;
		for (const atom &a : atoms_of(phi)) {
			poly p = a.p.sign_normalized();
			if (!p.contains(y))
				add_projection(proj, p);
			else if (seen.insert(p).second)
				with_y.push_back(p);
		}
	}
	for (size_t i = 0; i < with_y.size(); ++i) {
		const poly &p = with_y[i];
		for (const poly &c : p.coeffs_in(y))
			add_projection(proj, c);
		if (p.degree(y) >= 2)
			add_projection(proj, first_nonzero_psc(p, p.derivative(y), y));
		for (size_t j = i + 1; j < with_y.size(); ++j)
			add_projection(proj, first_nonzero_psc(p, with_y[j], y));
	}

	cell_builder cb{x, {}, {}};
	unipoly prod(x, {Rat(1)});
	for (const poly &p : proj) {
		unipoly f = square_free_part(unipoly::from_poly(p, x));
		if (f.degree() <= 0)
			continue;
		cb.factors.push_back(f);
		prod = prod * f;
	}
	auto holds_at = [&](const Rat &s) { return decide_exists_real(substitute(phi, {{x, s}}), y); };
	if (prod.degree() <= 0)
		return formula::constant(holds_at(0));
	cb.roots = isolate_roots(square_free_part(prod));

	std::vector<Rat> samples = gap_samples(cb.roots);
	std::vector<formula> cells;
	size_t k = cb.roots.size();
	for (size_t i = 0; i <= k; ++i) {
		if (holds_at(samples[i])) {
			formula lo = i == 0 ? formula::top() : cb.above(i - 1);
			formula hi = i == k ? formula::top() : cb.below(i);
			cells.push_back(lo && hi);
		}
		if (i < k && cb.roots[i].is_point() && holds_at(cb.roots[i].lo))
			cells.push_back(cb.x_rel(cb.roots[i].lo, rel::eq));
	}
	return normalize(formula::disj(std::move(cells)));
}

}
