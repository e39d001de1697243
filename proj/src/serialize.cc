/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#include "ratsynth/errors.hh"
#include "ratsynth/serialize.hh"

#include <openssl/evp.h>

#include <cstdio>

namespace ratsynth {

namespace {

rel rel_from_name(const std::string &s)
{
	for (rel r : {rel::lt, rel::gt, rel::le, rel::ge, rel::eq, rel::ne})
		if (s == rel_symbol(r))
			return r;
	throw parse_error("unknown relation '" + s + "'");
}

template <typename F>
auto guarded(const char *what, F &&f)
{
	try {
		return f();
	} catch (const nlohmann::json::exception &e) {
		throw parse_error(std::string("malformed ") + what + ": " + e.what());
	}
}

std::vector<var> vars_from_json(const json &j)
{
	std::vector<var> out;
	for (const auto &v : j)
		out.push_back(v.get<std::string>());
	return out;
}

}

json poly_to_json(const poly &p)
{
	json terms = json::array();
	for (const auto &[m, c] : p.terms()) {
		json vars = json::object();
		for (const auto &[v, e] : m.powers())
			vars[v] = e;
		terms.push_back({{"vars", vars}, {"coeff", to_string(c)}});
	}
	return terms;
}

poly poly_from_json(const json &j)
{
	return guarded("polynomial", [&] {
		poly p;
		for (const auto &t : j) {
			std::vector<std::pair<var, uint64_t>> pw;
			for (const auto &[v, e] : t.at("vars").items())
				pw.emplace_back(v, e.template get<uint64_t>());
			p += poly::term(parse_rat(t.at("coeff").template get<std::string>()), monomial::from_powers(pw));
		}
		return p;
	});
}

json formula_to_json(const formula &f)
{
	using K = formula::kind;
	switch (f.k()) {
	case K::tru: return {{"op", "true"}};
	case K::fls: return {{"op", "false"}};
	case K::atom:
		return {{"op", "atom"}, {"rel", rel_symbol(f.get_atom().r)}, {"poly", poly_to_json(f.get_atom().p)}};
	case K::neg: return {{"op", "not"}, {"args", json::array({formula_to_json(f.args()[0])})}};
	case K::conj:
	case K::disj: {
		json args = json::array();
		for (const formula &g : f.args())
			args.push_back(formula_to_json(g));
		return {{"op", f.k() == K::conj ? "and" : "or"}, {"args", args}};
	}
	}
	return {{"op", "false"}};
}

formula formula_from_json(const json &j)
{
	return guarded("formula", [&] {
		std::string op = j.at("op").get<std::string>();
		if (op == "true")
			return formula::top();
		if (op == "false")
			return formula::bottom();
		if (op == "atom")
			return formula::make_atom(poly_from_json(j.at("poly")), rel_from_name(j.at("rel").get<std::string>()));
		std::vector<formula> args;
		for (const auto &a : j.at("args"))
			args.push_back(formula_from_json(a));
		if (op == "not") {
			if (args.size() != 1)
				throw parse_error("'not' takes one argument");
			return formula::make_junction(formula::kind::neg, std::move(args));
		}
		if (op == "and")
			return formula::make_junction(formula::kind::conj, std::move(args));
		if (op == "or")
			return formula::make_junction(formula::kind::disj, std::move(args));
		throw parse_error("unknown formula operator '" + op + "'");
	});
}

json assignment_to_json(const assignment &a)
{
	json j = json::object();
	for (const auto &[v, q] : a)
		j[v] = to_string(q);
	return j;
}

assignment assignment_from_json(const json &j)
{
	return guarded("assignment", [&] {
		if (!j.is_object())
			throw parse_error("assignment must be a JSON object");
		assignment a;
		for (const auto &[v, q] : j.items())
			a[v] = parse_rat(q.template get<std::string>());
		return a;
	});
}

json spec_to_json(const spec &s)
{
	return {{"formula", formula_to_json(s.phi)}, {"inputs", s.inputs}, {"outputs", s.outputs}};
}

spec spec_from_json(const json &j)
{
	return guarded("spec", [&] {
		return spec{formula_from_json(j.at("formula")), vars_from_json(j.at("inputs")),
		            vars_from_json(j.at("outputs"))};
	});
}

std::string spec_digest(const spec &s)
{
	std::string text = spec_to_json(s).dump();
	unsigned char md[EVP_MAX_MD_SIZE];
	unsigned int len = 0;
	if (!EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr))
		throw error("SHA-256 computation failed");
	std::string hex;
	char buf[3];
	for (unsigned i = 0; i < len; ++i) {
		std::snprintf(buf, sizeof buf, "%02x", md[i]);
		hex += buf;
	}
	return "sha256:" + hex;
}

json prog_to_json(const prog_ir &p)
{
	json branches = json::array();
	for (const branch &b : p.branches) {
		json jb = {{"guard", formula_to_json(b.guard)}, {"guard_exact", b.guard_exact}, {"fixed", json::object()}};
		for (const auto &[v, q] : b.fixed)
			jb["fixed"][v] = to_string(q);
		if (b.solve) {
			const single_output_program &s = *b.solve;
			jb["solve_var"] = s.y;
			jb["phi"] = formula_to_json(s.phi);
			jb["phi_hat"] = formula_to_json(s.phi_hat);
			json ns = json::array();
			for (const poly &q : s.nonstrict)
				ns.push_back(poly_to_json(q));
			jb["nonstrict"] = ns;
			if (s.psi)
				jb["psi"] = {{"formula", formula_to_json(s.psi->psi)}, {"engine", engine_name(s.psi->engine)}};
			else
				jb["psi"] = nullptr;
		} else {
			jb["solve_var"] = nullptr;
		}
		branches.push_back(std::move(jb));
	}
	return {{"version", p.version},
	        {"mode", mode_name(p.mode)},
	        {"spec_digest", p.spec_digest},
	        {"spec", spec_to_json(p.sp)},
	        {"branches", branches}};
}

prog_ir prog_from_json(const json &j)
{
	return guarded("program", [&] {
		prog_ir p;
		p.version = j.at("version").get<int>();
		if (p.version != prog_ir_version)
			throw parse_error("unsupported program version " + std::to_string(p.version));
		try {
			p.mode = mode_from_name(j.at("mode").get<std::string>());
		} catch (const config_error &e) {
			throw parse_error(e.what());
		}
		p.spec_digest = j.at("spec_digest").get<std::string>();
		p.sp = spec_from_json(j.at("spec"));
		for (const auto &jb : j.at("branches")) {
			branch b;
			b.guard = formula_from_json(jb.at("guard"));
			b.guard_exact = jb.at("guard_exact").get<bool>();
			for (const auto &[v, q] : jb.at("fixed").items())
				b.fixed[v] = parse_rat(q.get<std::string>());
			if (!jb.at("solve_var").is_null()) {
				single_output_program s;
				s.y = jb.at("solve_var").get<std::string>();
				s.phi = formula_from_json(jb.at("phi"));
				s.phi_hat = formula_from_json(jb.at("phi_hat"));
				for (const auto &q : jb.at("nonstrict"))
					s.nonstrict.push_back(poly_from_json(q));
				if (!jb.at("psi").is_null())
					s.psi = qe_result{formula_from_json(jb.at("psi").at("formula")),
					                  engine_from_name(jb.at("psi").at("engine").get<std::string>()), true};
				b.solve = std::move(s);
			}
			p.branches.push_back(std::move(b));
		}
		return p;
	});
}

json report_to_json(const synth_report &r)
{
	json models = json::array();
	for (const assignment &m : r.models)
		models.push_back(assignment_to_json(m));
	json guards = json::array();
	for (const auto &it : r.guards) {
		json g = json::array();
		for (const formula &f : it)
			g.push_back(formula_to_json(f));
		guards.push_back(g);
	}
	return {{"strategy", r.strategy},
	        {"iterations", r.iterations},
	        {"iteration_budget", r.iteration_budget},
	        {"wall_timeout", r.wall_timeout},
	        {"completeness", completeness_name(r.status)},
	        {"stop_reason", r.stop_reason},
	        {"wall_clock_hit", r.wall_clock_hit},
	        {"skipped_irrational", r.skipped_irrational},
	        {"models", models},
	        {"guards", guards}};
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

std::vector<assignment> parse_replay(std::string_view text)
{
	json j;
	try {
		j = json::parse(text);
	} catch (const nlohmann::json::exception &e) {
		throw parse_error(std::string("replay file is not JSON: ") + e.what());
	}
	if (!j.is_array())
		throw parse_error("replay file must hold a JSON list of assignments");
	std::vector<assignment> out;
	for (const auto &m : j)
		out.push_back(assignment_from_json(m));
	return out;
}

assignment parse_assignment(std::string_view text)
{
	assignment a;
	std::string tok;
	auto flush = [&] {
		if (tok.empty())
			return;
		auto eq = tok.find('=');
		if (eq == std::string::npos || eq == 0)
			throw parse_error("expected var=value, got '" + tok + "'");
		var v = tok.substr(0, eq);
		if (a.count(v))
			throw parse_error("variable '" + v + "' assigned twice");
		a[v] = parse_rat(tok.substr(eq + 1));
		tok.clear();
	};
	for (char c : text) {
		if (c == ',' || c == ' ' || c == '\t' || c == '\n')
			flush();
		else
			tok += c;
	}
	flush();
	return a;
}

std::string format_assignment(const assignment &a)
{
	std::string s;
	for (const auto &[v, q] : a) {
		if (!s.empty())
			s += ' ';
		s += v + "=" + to_string(q);
	}
	return s;
}

}
