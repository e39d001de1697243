/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#include "ratsynth/errors.hh"
#include "ratsynth/realroots.hh"
#include "ratsynth/refute.hh"
#include "ratsynth/rsolve.hh"
#include "ratsynth/smtlib.hh"

#include <algorithm>
#include <functional>

namespace ratsynth {

namespace {

/* calls fn on every tuple of n indices with the given sum, in
 * lexicographic order; stops when fn returns true */
bool for_each_tuple(size_t n, size_t sum, std::vector<size_t> &idx, size_t pos,
                    const std::function<bool(const std::vector<size_t> &)> &fn)
{
	if (pos + 1 == n) {
		idx[pos] = sum;
		return fn(idx);
	}
	for (size_t k = 0; k <= sum; ++k) {
		idx[pos] = k;
		if (for_each_tuple(n, sum - k, idx, pos + 1, fn))
			return true;
	}
	return false;
}

}

std::optional<assignment> search_model(const formula &phi, const std::vector<var> &vars, const var &close,
                                       size_t tuple_budget, uint64_t divisor_budget)
{
	std::set<var> fv = free_vars(phi);
	std::vector<var> enumerated;
	assignment rest;
	for (const var &v : vars) {
		if (v == close)
			continue;
		if (fv.count(v))
			enumerated.push_back(v);
		else
			rest[v] = 0;
	}
	if (!fv.count(close))
		rest[close] = 0;

	std::vector<Rat> seq = signed_rationals(64);
	std::optional<assignment> found;
	size_t tried = 0;
	auto attempt = [&](const std::vector<size_t> &idx) {
		if (tried++ >= tuple_budget)
			return true;
		assignment a = rest;
		for (size_t i = 0; i < enumerated.size(); ++i) {
			while (idx[i] >= seq.size())
				seq = signed_rationals(seq.size() * 2);
			a[enumerated[i]] = seq[idx[i]];
		}
		formula sub = substitute(phi, a);
		if (sub.is_false())
			return false;
		if (fv.count(close)) {
			if (sub.is_true()) {
				a[close] = 0;
			} else {
				witness_search ws = univariate_witness(sub, close, witness_order::roots_first, divisor_budget);
				if (!ws.value)
					return false;
				a[close] = *ws.value;
			}
		}
		if (!formula_eval(phi, a))
			return false;
		found = std::move(a);
		return true;
	};

	if (enumerated.empty()) {
		std::vector<size_t> none;
		attempt(none);
		return found;
	}
	std::vector<size_t> idx(enumerated.size());
	for (size_t sum = 0; tried < tuple_budget && !found; ++sum)
		for_each_tuple(enumerated.size(), sum, idx, 0, attempt);
	return found;
}

rsolver::rsolver(const synth_config &cfg) : cfg_(cfg), replay_(cfg.replay.begin(), cfg.replay.end())
{
	if (cfg.rsolve.rfind("cmd:", 0) == 0)
		external_ = cfg.rsolve.substr(4);
}

rsolve_result rsolver::solve(const formula &phi, const std::vector<var> &inputs, const std::vector<var> &outputs)
{
	std::vector<var> vars = inputs;
	vars.insert(vars.end(), outputs.begin(), outputs.end());
	rsolve_result res;

	while (!replay_.empty()) {
		assignment m = replay_.front();
		replay_.pop_front();
		bool complete = std::all_of(vars.begin(), vars.end(), [&](const var &v) { return m.count(v) > 0; });
		if (complete && formula_eval(phi, m)) {
			res.status = rsolve_status::model;
			for (const var &v : vars)
				res.model[v] = m[v];
			res.source = "replay";
			return res;
		}
	}

	if (refute(phi, cfg_.dnf_budget)) {
		res.status = rsolve_status::unsat;
		res.source = "refutation";
		return res;
	}

	std::set<var> fv = free_vars(phi);
	std::optional<var> close;
	for (auto it = outputs.rbegin(); it != outputs.rend() && !close; ++it)
		if (fv.count(*it))
			close = *it;
	for (auto it = vars.rbegin(); it != vars.rend() && !close; ++it)
		if (fv.count(*it))
			close = *it;
	if (!close && !vars.empty())
		close = vars.back();
	if (close) {
		if (auto m = search_model(phi, vars, *close, cfg_.search_budget, cfg_.divisor_budget)) {
			res.status = rsolve_status::model;
			res.model = std::move(*m);
			res.source = "search";
			return res;
		}
	} else if (phi.is_true()) {
		res.status = rsolve_status::model;
		res.source = "search";
		return res;
	}

	if (!external_.empty()) {
		try {
			double budget = cfg_.wall_timeout > 0 ? cfg_.wall_timeout : 60;
			external_answer ans = external_solve(phi, vars, external_, budget);
			res.source = "external";
			if (ans.st == external_answer::status::unsat) {
				res.status = rsolve_status::unsat;
				return res;
			}
			if (ans.st == external_answer::status::sat) {
				res.model = ans.values;
				res.irrational = ans.irrational;
				bool rational = ans.irrational.empty();
				for (const var &v : vars)
					if (!res.model.count(v) && !res.irrational.count(v))
						res.model[v] = 0;
				if (!rational || formula_eval(phi, res.model)) {
					res.status = rsolve_status::model;
					return res;
				}
			}
		} catch (const external_solver_failure &) {
		} catch (const solver_timeout &) {
		}
	}
	res.status = rsolve_status::unknown;
	res.model.clear();
	res.irrational.clear();
	res.source = "budget";
	return res;
}

}
