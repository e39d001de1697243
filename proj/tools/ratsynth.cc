/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#include "ratsynth/bench.hh"
#include "ratsynth/errors.hh"
#include "ratsynth/geometric.hh"
#include "ratsynth/reduce.hh"
#include "ratsynth/serialize.hh"
#include "ratsynth/smtlib.hh"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace ratsynth;

namespace {

enum exit_code { ok = 0, usage = 1, no_program = 2, check_failed = 3, bot = 10 };

std::string read_file(const std::string &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw config_error("cannot read " + path);
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

void write_output(const std::string &path, const std::string &text)
{
	if (path.empty() || path == "-") {
		std::cout << text;
		return;
	}
	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw config_error("cannot write " + path);
	out << text;
}

std::vector<var> split_list(const std::string &s)
{
	std::vector<var> out;
	std::string cur;
	for (char c : s + ",") {
		if (c == ',') {
			if (!cur.empty())
				out.push_back(cur);
			cur.clear();
		} else if (c != ' ') {
			cur += c;
		}
	}
	return out;
}

struct problem_opts {
	std::string path;
	std::string io;
	std::string inputs;
	std::string outputs;
	bool inputs_set = false, outputs_set = false;
};

void add_problem(CLI::App *cmd, problem_opts &o, bool required = true)
{
	cmd->add_option("problem", o.path, "SMT-LIB problem file")->required(required);
	cmd->add_option("--io", o.io, "I/O sidecar JSON (default: problem stem + .json)");
	cmd->add_option("--inputs", o.inputs, "comma-separated input variables");
	cmd->add_option("--outputs", o.outputs, "comma-separated output variables");
}

spec load_problem(const problem_opts &o)
{
	std::vector<var> in, out;
	std::string io = o.io;
	bool flags = (!o.inputs.empty() || o.inputs_set) && (!o.outputs.empty() || o.outputs_set);
	if (io.empty() && !flags) {
		std::filesystem::path p(o.path);
		p.replace_extension(".json");
		if (std::filesystem::exists(p))
			io = p.string();
	}
	if (!io.empty())
		std::tie(in, out) = parse_io_sidecar(read_file(io));
	if (!o.inputs.empty() || o.inputs_set)
		in = split_list(o.inputs);
	if (!o.outputs.empty() || o.outputs_set)
		out = split_list(o.outputs);
	if (io.empty() && out.empty())
		throw config_error("no I/O designation: pass --outputs or a sidecar");
	return parse_problem(read_file(o.path), in, out);
}

struct config_opts {
	std::string strategy = "nqsynth";
	size_t iters = 64;
	double wall = 120;
	std::string rsolve;
	std::string replay;
	std::string mode = "guard";
	uint64_t seed = 0;
	size_t search = 2000;
};

void add_config(CLI::App *cmd, config_opts &c)
{
	cmd->add_option("--strategy", c.strategy, "nqsynth or modenum")->capture_default_str();
	cmd->add_option("--timeout-iters", c.iters, "iteration budget")->capture_default_str();
	cmd->add_option("--wall-timeout", c.wall, "wall-clock budget in seconds (0 disables)")->capture_default_str();
	cmd->add_option("--rsolve", c.rsolve, "internal or cmd:<executable> (default: $RATSYNTH_SOLVER or internal)");
	cmd->add_option("--replay", c.replay, "file of models to answer the first solver queries");
	cmd->add_option("--mode", c.mode, "guard or fallthrough")->capture_default_str();
	cmd->add_option("--seed", c.seed, "seed")->capture_default_str();
	cmd->add_option("--search-budget", c.search, "tuples tried by the internal model search")->capture_default_str();
}

synth_config make_config(const config_opts &c)
{
	synth_config cfg;
	cfg.strategy = c.strategy;
	cfg.iteration_budget = c.iters;
	cfg.wall_timeout = c.wall;
	cfg.mode = mode_from_name(c.mode);
	cfg.seed = c.seed;
	cfg.search_budget = c.search;
	if (!c.rsolve.empty()) {
		cfg.rsolve = c.rsolve;
	} else if (const char *env = std::getenv("RATSYNTH_SOLVER"); env && *env) {
		std::string e = env;
		cfg.rsolve = e.rfind("cmd:", 0) == 0 || e == "internal" ? e : "cmd:" + e;
	}
	if (!c.replay.empty())
		cfg.replay = parse_replay(read_file(c.replay));
	check_config(cfg);
	return cfg;
}

int cmd_synth(const problem_opts &po, const config_opts &co, const std::string &out, const std::string &report)
{
	spec s = load_problem(po);
	synth_config cfg = make_config(co);
	synth_outcome so = synthesize(s, cfg);
	write_output(out, dump(prog_to_json(so.prog)));
	if (!report.empty())
		write_output(report, dump(report_to_json(so.report)));
	std::cerr << "status " << completeness_name(so.report.status) << ", " << so.prog.branches.size()
	          << " branches, " << so.report.iterations << " iterations\n";
	if (so.prog.branches.empty() && so.report.status == completeness::budget_exhausted)
		return no_program;
	return ok;
}

prog_ir load_prog(const std::string &path)
{
	json j;
	try {
		j = json::parse(read_file(path));
	} catch (const json::exception &e) {
		throw parse_error(path + ": " + e.what());
	}
	return prog_from_json(j);
}

int cmd_run(const std::string &prog_path, const std::string &input, bool paper)
{
	prog_ir p = load_prog(prog_path);
	runtime_options opt;
	opt.single = paper ? single_mode::paper : single_mode::combined;
	run_result r = run_program(p, parse_assignment(input), opt);
	if (!r.outputs) {
		std::cout << "bot\n";
		return bot;
	}
	std::cout << format_assignment(*r.outputs) << "\n";
	return ok;
}

int cmd_check(const std::string &prog_path, const problem_opts &po, size_t n, uint64_t seed, const std::string &mode)
{
	prog_ir p = load_prog(prog_path);
	if (!mode.empty())
		p.mode = mode_from_name(mode);
	formula phi = p.sp.phi;
	if (!po.path.empty()) {
		problem_opts q = po;
		if (q.io.empty() && q.inputs.empty() && q.outputs.empty()) {
			q.inputs_set = q.outputs_set = true;
			for (size_t i = 0; i < p.sp.inputs.size(); ++i)
				q.inputs += (i ? "," : "") + p.sp.inputs[i];
			for (size_t i = 0; i < p.sp.outputs.size(); ++i)
				q.outputs += (i ? "," : "") + p.sp.outputs[i];
		}
		phi = load_problem(q).phi;
	}
	check_report r = check_program(p, phi, n, seed);
	for (const auto &m : r.messages)
		std::cout << "violation: " << m << "\n";
	std::cout << "inputs " << r.inputs << " answered " << r.answered << " bot " << r.bot << " violations "
	          << r.violations << "\n";
	return r.violations ? check_failed : ok;
}

int cmd_qe(const problem_opts &po, const std::string &y, bool hat)
{
	spec s = load_problem(po);
	var v = y.empty() ? (s.outputs.size() == 1 ? s.outputs[0] : "") : y;
	if (v.empty())
		throw config_error("qe needs --var when the problem has several outputs");
	formula f = hat ? hat_transform(s.phi, v) : s.phi;
	qe_result r = eliminate_exists(f, v);
	std::cout << "; engine " << engine_name(r.engine) << (r.exact ? " exact" : " inexact") << "\n";
	std::cout << print_formula(r.psi) << "\n";
	return ok;
}

int cmd_reduce(const problem_opts &po, const std::string &out)
{
	spec s = load_problem(po);
	std::vector<formula> eqs;
	std::set<var> vars = free_vars(s.phi);
	vars.insert(s.inputs.begin(), s.inputs.end());
	vars.insert(s.outputs.begin(), s.outputs.end());
	for (const clause &c : to_dnf(s.phi)) {
		reduction_result r = htp_reduce(c);
		vars.insert(r.fresh.begin(), r.fresh.end());
		eqs.push_back(formula::make_atom(r.equation, rel::eq));
	}
	formula f = eqs.empty() ? formula::bottom() : eqs.size() == 1 ? eqs[0] : formula::make_junction(formula::kind::disj, eqs);
	write_output(out, print_script(f, std::vector<var>(vars.begin(), vars.end())));
	return ok;
}

int cmd_relax(const problem_opts &po, const std::string &delta, const std::string &out)
{
	spec s = delta_relax(load_problem(po), delta);
	std::set<var> vars = free_vars(s.phi);
	vars.insert(s.inputs.begin(), s.inputs.end());
	vars.insert(s.outputs.begin(), s.outputs.end());
	write_output(out, print_script(s.phi, std::vector<var>(vars.begin(), vars.end())));
	if (!out.empty() && out != "-") {
		std::filesystem::path io(out);
		io.replace_extension(".json");
		write_output(io.string(), io_sidecar(s.inputs, s.outputs));
	}
	return ok;
}

int cmd_bench(const std::string &dir, const config_opts &co, size_t jobs, size_t check_n, const std::string &csv)
{
	synth_config cfg = make_config(co);
	auto records = run_bench(discover_problems(dir), cfg, jobs, check_n);
	if (!csv.empty())
		write_output(csv, to_csv(records));
	std::cout << summary_text(summarize(records, cfg.wall_timeout));
	return ok;
}

}

int main(int argc, char **argv)
{
	CLI::App app{"ratsynth: synthesis of rational-valued programs from nonlinear real arithmetic specifications"};
	app.require_subcommand(1);

	problem_opts po;
	config_opts co;
	std::string out, report, prog, input, var_name, mode, delta = "delta", dir, csv;
	size_t n = 1000, jobs = 1, count = 30;
	uint64_t seed = 0;
	bool paper = false, hat = false;

	auto *synth = app.add_subcommand("synth", "synthesize a program");
	add_problem(synth, po);
	add_config(synth, co);
	synth->add_option("-o,--out", out, "program output file (default: stdout)");
	synth->add_option("--report", report, "synthesis report output file");

	auto *run = app.add_subcommand("run", "run a program on one input");
	run->add_option("program", prog, "program JSON")->required();
	run->add_option("input", input, "assignment such as x=1/2,z=-3")->required();
	run->add_flag("--paper-runtime", paper, "use only the exact weakest precondition to decide bot");

	auto *check = app.add_subcommand("check", "fuzz a program against its specification");
	check->add_option("program", prog, "program JSON")->required();
	add_problem(check, po, false);
	check->add_option("-n,--samples", n, "number of inputs")->capture_default_str();
	check->add_option("--seed", seed, "seed")->capture_default_str();
	check->add_option("--mode", mode, "override the program's run mode");

	auto *qe = app.add_subcommand("qe", "eliminate an output variable");
	add_problem(qe, po);
	qe->add_option("--var", var_name, "variable to eliminate (default: the single output)");
	qe->add_flag("--hat", hat, "make non-strict atoms in the variable strict first");

	auto *reduce = app.add_subcommand("reduce", "reduce each DNF clause to a single equation");
	add_problem(reduce, po);
	reduce->add_option("-o,--out", out, "SMT-LIB output file (default: stdout)");

	auto *relax = app.add_subcommand("relax", "replace equalities by delta-bands");
	add_problem(relax, po);
	relax->add_option("--delta", delta, "name of the relaxation input")->capture_default_str();
	relax->add_option("-o,--out", out, "SMT-LIB output file; a sidecar is written next to it");

	auto *bench = app.add_subcommand("bench", "run every problem in a directory");
	bench->add_option("dir", dir, "directory of *.smt2 problems with *.json sidecars")->required();
	add_config(bench, co);
	bench->add_option("--jobs", jobs, "parallel workers")->capture_default_str();
	bench->add_option("--check-samples", n, "fuzz inputs per solved program")->capture_default_str();
	bench->add_option("--csv", csv, "CSV output file");

	auto *gen = app.add_subcommand("gen-geometric", "write the geometric problem corpus");
	gen->add_option("dir", dir, "output directory")->required();
	gen->add_option("--count", count, "generated problems besides the two named ones")->capture_default_str();
	gen->add_option("--seed", seed, "seed")->capture_default_str();

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp &e) {
		return app.exit(e);
	} catch (const CLI::ParseError &e) {
		app.exit(e);
		return usage;
	}

	for (CLI::App *sub : {synth, check, qe, reduce, relax})
		if (*sub) {
			po.inputs_set = sub->count("--inputs") > 0;
			po.outputs_set = sub->count("--outputs") > 0;
		}

	try {
		if (*synth)
			return cmd_synth(po, co, out, report);
		if (*run)
			return cmd_run(prog, input, paper);
		if (*check)
			return cmd_check(prog, po, n, seed, mode);
		if (*qe)
			return cmd_qe(po, var_name, hat);
		if (*reduce)
			return cmd_reduce(po, out);
		if (*relax)
			return cmd_relax(po, delta, out);
		if (*bench)
			return cmd_bench(dir, co, jobs, n, csv);
		if (*gen) {
			write_problems(dir, generate_geometric(count, seed));
			return ok;
		}
	} catch (const soundness_violation &e) {
		std::cerr << "soundness violation: " << e.what() << "\n";
		return check_failed;
	} catch (const std::exception &e) {
		std::cerr << "error: " << e.what() << "\n";
		return usage;
	}
	return usage;
}
