/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#include "ratsynth/errors.hh"
#include "ratsynth/rsolve.hh"
#include "ratsynth/serialize.hh"
#include "ratsynth/synth.hh"

#include <chrono>

namespace ratsynth {

const char *mode_name(run_mode m) { return m == run_mode::guard ? "guard" : "fallthrough"; }

run_mode mode_from_name(const std::string &s)
{
	if (s == "guard")
		return run_mode::guard;
	if (s == "fallthrough")
		return run_mode::fallthrough;
	throw config_error("unknown runtime mode '" + s + "'");
}

const char *completeness_name(completeness c)
{
	switch (c) {
	case completeness::complete: return "Complete";
	case completeness::budget_exhausted: return "BudgetExhausted";
	case completeness::qe_incomplete: return "QEIncomplete";
	}
	return "BudgetExhausted";
}

void check_config(const synth_config &c)
{
	if (c.iteration_budget == 0 || c.divisor_budget == 0 || c.dnf_budget == 0 || c.search_budget == 0)
		throw config_error("budgets must be positive");
	if (c.wall_timeout < 0)
		throw config_error("wall timeout must be non-negative");
	if (c.eps0 <= 0)
		throw config_error("initial isolation width must be positive");
	if (c.rsolve != "internal" && (c.rsolve.rfind("cmd:", 0) != 0 || c.rsolve.size() == 4))
		throw config_error("rsolve backend must be 'internal' or 'cmd:<executable>'");
	if (c.strategy != "nqsynth" && c.strategy != "modenum")
		throw config_error("unknown strategy '" + c.strategy + "'");
}

single_output_program make_single(const formula &phi, const var &y)
{
	single_output_program p;
	p.phi = normalize(phi);
	p.phi_hat = hat_transform(p.phi, y);
	p.nonstrict = nonstrict_polys(p.phi, y);
	p.y = y;
	qe_result q = eliminate_exists(p.phi_hat, y);
	if (q.exact)
		p.psi = std::move(q);
	return p;
}

single_output_program synth_single(const spec &s)
{
	if (s.outputs.size() != 1)
		throw input_arity("single-output synthesis needs exactly one output, got " +
		                  std::to_string(s.outputs.size()));
	validate(s);
	return make_single(s.phi, s.outputs[0]);
}

namespace {

using clock = std::chrono::steady_clock;

struct loop_state {
	const spec &s;
	const synth_config &cfg;
	clock::time_point deadline;
	bool timed;
	formula phi, residual;
	rsolver rs;
	synth_outcome out;
	bool inexact = false;
	bool proved = false;

	loop_state(const spec &sp, const synth_config &c)
	    : s(sp), cfg(c), timed(c.wall_timeout > 0), rs(c)
	{
		deadline = clock::now() + std::chrono::duration_cast<clock::duration>(
		                              std::chrono::duration<double>(c.wall_timeout));
		phi = normalize(s.phi);
		residual = phi;
		out.prog.sp = s;
		out.prog.mode = c.mode;
		out.prog.spec_digest = spec_digest(s);
		out.report.strategy = c.strategy;
		out.report.iteration_budget = c.iteration_budget;
		out.report.wall_timeout = c.wall_timeout;
	}

	bool expired()
	{
		if (timed && clock::now() >= deadline) {
			out.report.wall_clock_hit = true;
			return true;
		}
		return false;
	}

	/* sum of squares of (x - a) over the inputs, > 0 */
	formula point_block(const assignment &m) const
	{
		if (s.inputs.empty())
			return formula::bottom();
		poly sq;
		for (const var &x : s.inputs) {
			poly d = poly::variable(x) - poly(m.at(x));
			sq += d * d;
		}
		return canonical_atom(sq, rel::gt);
	}

	bool inputs_rational(const rsolve_result &r) const
	{
		for (const var &x : s.inputs)
			if (r.irrational.count(x) || !r.model.count(x))
				return false;
		return true;
	}

	/* returns the model to process, or none when the loop ends */
	std::optional<rsolve_result> next()
	{
		synth_report &rep = out.report;
		if (rep.iterations >= cfg.iteration_budget) {
			rep.stop_reason = "iteration budget reached";
			return std::nullopt;
		}
		if (expired()) {
			rep.stop_reason = "wall clock reached";
			return std::nullopt;
		}
		rsolve_result r = rs.solve(residual, s.inputs, s.outputs);
		if (r.status == rsolve_status::unsat) {
			proved = true;
			rep.stop_reason = "residual unsatisfiable (" + r.source + ")";
			return std::nullopt;
		}
		if (r.status == rsolve_status::unknown) {
			rep.stop_reason = "no model found within the search budget";
			return std::nullopt;
		}
		if (!inputs_rational(r)) {
			rep.stop_reason = "model with irrational inputs";
			++rep.skipped_irrational;
			return std::nullopt;
		}
		++rep.iterations;
		rep.models.push_back(r.model);
		return r;
	}

	void finish()
	{
		synth_report &rep = out.report;
		if (proved)
			rep.status = inexact ? completeness::qe_incomplete : completeness::complete;
		else
			rep.status = inexact ? completeness::qe_incomplete : completeness::budget_exhausted;
		if (inexact)
			out.prog.mode = run_mode::fallthrough;
	}
};

}

synth_outcome synth_multi(const spec &s, const synth_config &cfg)
{
	check_config(cfg);
	validate(s);
	if (s.outputs.empty())
		throw input_arity("synthesis needs at least one output");
	loop_state st(s, cfg);
	while (auto r = st.next()) {
		std::vector<formula> added, negs;
		bool block = false;
		for (size_t i = 0; i < s.outputs.size(); ++i) {
			const var &y = s.outputs[i];
			bool skip = false;
			assignment fixed;
			for (const var &o : s.outputs) {
				if (o == y)
					continue;
				if (r->irrational.count(o))
					skip = true;
				else
					fixed[o] = r->model.at(o);
			}
			if (skip) {
				++st.out.report.skipped_irrational;
				continue;
			}
			formula phi_i = normalize(substitute(st.phi, fixed));
			qe_result q = eliminate_exists(phi_i, y);
			branch b;
			b.guard_exact = q.exact;
			b.guard = q.exact ? q.psi : formula::top();
			b.fixed = {fixed.begin(), fixed.end()};
			b.solve = make_single(phi_i, y);
			if (q.exact) {
				negs.push_back(!q.psi);
			} else {
				block = true;
				st.inexact = true;
			}
			added.push_back(b.guard);
			st.out.prog.branches.push_back(std::move(b));
			if (st.expired())
				break;
		}
		if (block || negs.empty())
			negs.push_back(st.point_block(r->model));
		st.out.report.guards.push_back(std::move(added));
		negs.insert(negs.begin(), st.residual);
		st.residual = normalize(formula::conj(std::move(negs)));
	}
	st.finish();
	return std::move(st.out);
}

synth_outcome synth_modenum(const spec &s, const synth_config &cfg)
{
	check_config(cfg);
	validate(s);
	if (s.outputs.empty())
		throw input_arity("synthesis needs at least one output");
	loop_state st(s, cfg);
	while (auto r = st.next()) {
		formula block;
		bool rational = true;
		for (const var &o : s.outputs)
			if (r->irrational.count(o))
				rational = false;
		if (!rational) {
			++st.out.report.skipped_irrational;
			block = st.point_block(r->model);
			st.out.report.guards.push_back({});
		} else {
			assignment sigma;
			for (const var &o : s.outputs)
				sigma[o] = r->model.at(o);
			branch b;
			b.guard = normalize(substitute(st.phi, sigma));
			b.guard_exact = true;
			b.fixed = {sigma.begin(), sigma.end()};
			block = !b.guard;
			st.out.report.guards.push_back({b.guard});
			st.out.prog.branches.push_back(std::move(b));
		}
		st.residual = normalize(st.residual && block);
	}
	st.finish();
	return std::move(st.out);
}

synth_outcome synthesize(const spec &s, const synth_config &cfg)
{
	check_config(cfg);
	return cfg.strategy == "modenum" ? synth_modenum(s, cfg) : synth_multi(s, cfg);
}

}
