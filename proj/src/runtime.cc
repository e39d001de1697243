/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#include "ratsynth/errors.hh"
#include "ratsynth/realroots.hh"
#include "ratsynth/runtime.hh"

#include <set>

namespace ratsynth {

bool verify_output(const formula &phi, const assignment &inputs, const assignment &outputs)
{
	assignment all = inputs;
	for (const auto &[v, q] : outputs)
		all[v] = q;
	try {
		return formula_eval(phi, all);
	} catch (const unassigned_variable &) {
		return false;
	}
}

single_result run_single(const single_output_program &prog, const assignment &inputs, const runtime_options &opt)
{
	single_result res;
	formula phi_a = substitute(prog.phi, inputs);
	bool try_samples = true;
	if (opt.single == single_mode::paper && prog.psi && prog.psi->exact)
		try_samples = formula_eval(prog.psi->psi, inputs);
	witness_search ws = univariate_witness(phi_a, prog.y, witness_order::samples_first, opt.divisor_budget,
	                                       try_samples, opt.eps0);
	res.samples_tried = ws.samples_tried;
	res.candidates_tried = ws.candidates_tried;
	res.divisor_budget_hit = ws.divisor_budget_hit;
	if (ws.value) {
		assignment a = inputs;
		a[prog.y] = *ws.value;
		if (!formula_eval(prog.phi, a))
			throw soundness_violation("branch value " + to_string(*ws.value) + " fails its formula");
		res.value = ws.value;
	}
	return res;
}

namespace {

void check_arity(const prog_ir &prog, const assignment &inputs)
{
	std::set<var> want(prog.sp.inputs.begin(), prog.sp.inputs.end());
	for (const auto &[v, q] : inputs)
		if (!want.count(v))
			throw input_arity("unexpected input '" + v + "'");
	for (const var &v : want)
		if (!inputs.count(v))
			throw input_arity("missing input '" + v + "'");
}

}

run_result run_program(const prog_ir &prog, const assignment &inputs, const runtime_options &opt)
{
	check_arity(prog, inputs);
	run_result res;
	bool guard_mode = prog.mode == run_mode::guard;
	for (const branch &b : prog.branches)
		if (!b.guard_exact)
			guard_mode = false;

	for (size_t i = 0; i < prog.branches.size(); ++i) {
		const branch &b = prog.branches[i];
		bool taken = !b.guard_exact || formula_eval(b.guard, inputs);
		if (!taken)
			continue;
		assignment out(b.fixed.begin(), b.fixed.end());
		bool answered = true;
		if (b.solve) {
			single_result r = run_single(*b.solve, inputs, opt);
			res.samples_tried += r.samples_tried;
			res.candidates_tried += r.candidates_tried;
			res.divisor_budget_hit = res.divisor_budget_hit || r.divisor_budget_hit;
			if (r.value)
				out[b.solve->y] = *r.value;
			else
				answered = false;
		}
		if (answered) {
			if (!verify_output(prog.sp.phi, inputs, out))
				throw soundness_violation("branch " + std::to_string(i) + " produced an output violating the spec");
			res.outputs = std::move(out);
			res.branch = i;
			return res;
		}
		if (guard_mode) {
			res.branch = i;
			return res;
		}
	}
	return res;
}

}
