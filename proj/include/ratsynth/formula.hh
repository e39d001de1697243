/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#pragma once

#include "poly.hh"

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace ratsynth {

/* Relation of an atom "p rel 0". */
enum class rel { lt, gt, le, ge, eq, ne };

rel negate(rel r);
/* Relation obtained when p is replaced by -p. */
rel flip(rel r);
bool is_strict(rel r);
bool holds(rel r, int sign);
const char *rel_symbol(rel r);

struct atom {
	poly p;
	rel r;

	friend bool operator==(const atom &, const atom &) = default;
};

class formula {
public:
	enum class kind { tru, fls, atom, conj, disj, neg };

private:
	kind k_ = kind::tru;
	ratsynth::atom a_{};
	std::vector<formula> args_;

public:
	formula() = default;

	static formula top();
	static formula bottom();
	static formula constant(bool b) { return b ? top() : bottom(); }
	/* Raw atom; no folding. */
	static formula make_atom(poly p, rel r);
	/* Flattening, True/False absorbing, deduplicating constructors. */
	static formula conj(std::vector<formula> fs);
	static formula disj(std::vector<formula> fs);
	static formula neg(formula f);
	/* Unchecked n-ary node. */
	static formula make_junction(kind k, std::vector<formula> args);

	kind k() const { return k_; }
	bool is_true() const { return k_ == kind::tru; }
	bool is_false() const { return k_ == kind::fls; }
	bool is_atom() const { return k_ == kind::atom; }
	const ratsynth::atom &get_atom() const { return a_; }
	const std::vector<formula> &args() const { return args_; }

	std::string str() const;

	friend bool operator==(const formula &a, const formula &b);
	friend bool operator<(const formula &a, const formula &b);
};

formula operator&&(formula a, formula b);
formula operator||(formula a, formula b);
formula operator!(formula f);

/* Atom with constant folding, sign-definiteness folding and p rescaled to
 * leading coefficient 1 (flipping the relation for a negative factor). */
formula canonical_atom(const poly &p, rel r);

struct spec {
	formula phi;
	std::vector<var> inputs;
	std::vector<var> outputs;
};

/* Throws variable_clash / unknown_variable when the I/O split is invalid. */
void validate(const spec &s);

std::set<var> free_vars(const formula &f);
size_t atom_count(const formula &f);
std::vector<atom> atoms_of(const formula &f);

/* NNF over {<, >, <=, >=}: = and != compiled away, negations pushed into
 * atoms, constant atoms folded. */
formula normalize(const formula &f);

using clause = std::vector<atom>;
inline constexpr size_t default_dnf_budget = 4096;

/* DNF of a normalized formula. Throws dnf_budget_exceeded. */
std::vector<clause> to_dnf(const formula &f, size_t budget = default_dnf_budget);
formula from_clause(const clause &c);

/* Rebuilds f with every atom replaced by fn(atom). */
formula transform_atoms(const formula &f, const std::function<formula(const atom &)> &fn);

/* Every <= / >= atom whose polynomial contains y becomes strict. */
formula hat_transform(const formula &f, const var &y);

/* Polynomials containing y that occur in non-strict atoms, deduplicated up
 * to nonzero constant factors (stored monic) and sorted. */
std::vector<poly> nonstrict_polys(const formula &f, const var &y);

/* Exact truth value; throws unassigned_variable. */
bool formula_eval(const formula &f, const assignment &a);

/* Substitutes the bound variables and folds atoms that became constant:
 * an identically-zero p makes "p <= 0" true and "p < 0" false. */
formula substitute(const formula &f, const assignment &a);
formula substitute(const formula &f, const var &v, const poly &by);

/* Replaces every equality t = 0 by (d >= 0) & (t - d <= 0) & (t + d >= 0)
 * and appends d to the inputs. Throws variable_clash. */
spec delta_relax(const spec &s, const var &delta);

}
