/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#include "ratsynth/errors.hh"
#include "ratsynth/smtlib.hh"

#include <json.hpp>

#include <cctype>
#include <map>
#include <memory>

namespace ratsynth {

namespace {

struct sexpr {
	bool is_list = false;
	std::string atom;
	std::vector<sexpr> items;
	int line = 0, col = 0;

	std::string where() const { return std::to_string(line) + ":" + std::to_string(col); }
	bool is(const char *s) const { return !is_list && atom == s; }
};

class reader {
	std::string_view text_;
	size_t pos_ = 0;
	int line_ = 1, col_ = 1;

	void advance()
	{
		if (text_[pos_] == '\n') {
			++line_;
			col_ = 1;
		} else {
			++col_;
		}
		++pos_;
	}

	void skip_space()
	{
		while (pos_ < text_.size()) {
			char c = text_[pos_];
			if (c == ';') {
				while (pos_ < text_.size() && text_[pos_] != '\n')
					advance();
			} else if (std::isspace(static_cast<unsigned char>(c))) {
				advance();
			} else {
				break;
			}
		}
	}

	std::string loc() const { return std::to_string(line_) + ":" + std::to_string(col_); }

public:
	explicit reader(std::string_view t) : text_(t) {}

	bool at_end()
	{
		skip_space();
		return pos_ >= text_.size();
	}

	sexpr read()
	{
		skip_space();
		if (pos_ >= text_.size())
			throw parse_error(loc() + ": unexpected end of input");
		sexpr e;
		e.line = line_;
		e.col = col_;
		char c = text_[pos_];
		if (c == '(') {
			advance();
			e.is_list = true;
			for (;;) {
				skip_space();
				if (pos_ >= text_.size())
					throw parse_error(e.where() + ": unbalanced parenthesis");
				if (text_[pos_] == ')') {
					advance();
					break;
				}
				e.items.push_back(read());
			}
			return e;
		}
		if (c == ')')
			throw parse_error(loc() + ": unexpected ')'");
		if (c == '|' || c == '"') {
			char close = c;
			advance();
			while (pos_ < text_.size() && text_[pos_] != close) {
				e.atom += text_[pos_];
				advance();
			}
			if (pos_ >= text_.size())
				throw parse_error(e.where() + ": unterminated literal");
			advance();
			if (close == '"')
				e.atom = "\"" + e.atom + "\"";
			return e;
		}
		while (pos_ < text_.size()) {
			char d = text_[pos_];
			if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == ';')
				break;
			e.atom += d;
			advance();
		}
		return e;
	}
};

bool is_numeral(const std::string &s)
{
	if (s.empty())
		return false;
	size_t dots = 0;
	for (char c : s) {
		if (c == '.')
			++dots;
		else if (!std::isdigit(static_cast<unsigned char>(c)))
			return false;
	}
	return dots <= 1 && s.front() != '.' && s.back() != '.';
}

struct value {
	bool is_bool = false;
	formula f;
	poly p;
};

class translator {
	const std::set<var> &declared_;
	std::vector<std::map<std::string, value>> scopes_;
	const std::map<std::string, value> &defs_;

	[[noreturn]] void unsupported(const sexpr &e, const std::string &what)
	{
		throw unsupported_construct(e.where() + ": unsupported construct: " + what);
	}

	poly arith(const sexpr &e)
	{
		value v = term(e);
		if (v.is_bool)
			throw sort_error(e.where() + ": expected a Real term");
		return v.p;
	}

	formula boolean(const sexpr &e)
	{
		value v = term(e);
		if (!v.is_bool)
			throw sort_error(e.where() + ": expected a Bool term");
		return v.f;
	}

	static value of(formula f) { return {true, std::move(f), {}}; }
	static value of(poly p) { return {false, {}, std::move(p)}; }

	static formula compare(const poly &a, const poly &b, rel r)
	{
		poly d = a - b;
		if (d.is_constant())
			return formula::constant(holds(r, sgn(d.constant_value())));
		bool neg = sgn(d.leading_coeff()) < 0;
		return formula::make_atom(d.monic(), neg ? flip(r) : r);
	}

public:
	translator(const std::set<var> &declared, const std::map<std::string, value> &defs)
	    : declared_(declared), defs_(defs)
	{
	}

	value term(const sexpr &e)
	{
		if (!e.is_list) {
			const std::string &s = e.atom;
			if (is_numeral(s))
				return of(poly(parse_rat(s)));
			if (s == "true")
				return of(formula::top());
			if (s == "false")
				return of(formula::bottom());
			for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it)
				if (auto f = it->find(s); f != it->end())
					return f->second;
			if (auto f = defs_.find(s); f != defs_.end())
				return f->second;
			if (declared_.count(s))
				return of(poly::variable(s));
			throw unknown_variable(e.where() + ": undeclared symbol '" + s + "'");
		}
		if (e.items.empty() || e.items[0].is_list)
			unsupported(e, "application of a non-symbol");
		const std::string &op = e.items[0].atom;
		std::vector<sexpr> args(e.items.begin() + 1, e.items.end());

		if (op == "let") {
			if (args.size() != 2 || !args[0].is_list)
				throw parse_error(e.where() + ": malformed let");
			std::map<std::string, value> scope;
			for (const sexpr &b : args[0].items) {
				if (!b.is_list || b.items.size() != 2 || b.items[0].is_list)
					throw parse_error(b.where() + ": malformed let binding");
				scope[b.items[0].atom] = term(b.items[1]);
			}
			scopes_.push_back(std::move(scope));
			value v = term(args[1]);
			scopes_.pop_back();
			return v;
		}
		if (op == "!") {
			if (args.empty())
				throw parse_error(e.where() + ": empty annotation");
			return term(args[0]);
		}
		if (op == "+" || op == "*") {
			if (args.empty())
				throw parse_error(e.where() + ": '" + op + "' needs arguments");
			poly acc = arith(args[0]);
			for (size_t i = 1; i < args.size(); ++i)
				acc = op == "+" ? acc + arith(args[i]) : acc * arith(args[i]);
			return of(acc);
		}
		if (op == "-") {
			if (args.empty())
				throw parse_error(e.where() + ": '-' needs arguments");
			poly acc = arith(args[0]);
			if (args.size() == 1)
				return of(-acc);
			for (size_t i = 1; i < args.size(); ++i)
				acc -= arith(args[i]);
			return of(acc);
		}
		if (op == "/") {
			if (args.size() < 2)
				throw parse_error(e.where() + ": '/' needs two arguments");
			poly acc = arith(args[0]);
			for (size_t i = 1; i < args.size(); ++i) {
				poly d = arith(args[i]);
				if (!d.is_constant())
					unsupported(args[i], "division by a non-constant term");
				if (sgn(d.constant_value()) == 0)
					unsupported(args[i], "division by zero");
				acc = acc.scaled(1 / d.constant_value());
			}
			return of(acc);
		}
		static const std::map<std::string, rel> cmp = {
		    {"<", rel::lt}, {">", rel::gt}, {"<=", rel::le}, {">=", rel::ge}};
		if (auto c = cmp.find(op); c != cmp.end()) {
			if (args.size() < 2)
				throw parse_error(e.where() + ": comparison needs two arguments");
			std::vector<formula> parts;
			for (size_t i = 0; i + 1 < args.size(); ++i)
				parts.push_back(compare(arith(args[i]), arith(args[i + 1]), c->second));
			return of(parts.size() == 1 ? parts[0] : formula::conj(std::move(parts)));
		}
		if (op == "=" || op == "distinct") {
			if (args.size() < 2)
				throw parse_error(e.where() + ": '" + op + "' needs two arguments");
			std::vector<value> vs;
			for (const sexpr &a : args)
				vs.push_back(term(a));
			bool boolean_args = vs[0].is_bool;
			for (const value &v : vs)
				if (v.is_bool != boolean_args)
					throw sort_error(e.where() + ": mixed sorts in '" + op + "'");
			std::vector<formula> parts;
			if (op == "=") {
				for (size_t i = 0; i + 1 < vs.size(); ++i) {
					if (boolean_args)
						parts.push_back((vs[i].f && vs[i + 1].f) || (!vs[i].f && !vs[i + 1].f));
					else
						parts.push_back(compare(vs[i].p, vs[i + 1].p, rel::eq));
				}
			} else {
				if (boolean_args)
					unsupported(e, "distinct over Bool");
				for (size_t i = 0; i < vs.size(); ++i)
					for (size_t j = i + 1; j < vs.size(); ++j)
						parts.push_back(compare(vs[i].p, vs[j].p, rel::ne));
			}
			return of(parts.size() == 1 ? parts[0] : formula::conj(std::move(parts)));
		}
		if (op == "and" || op == "or") {
			std::vector<formula> parts;
			for (const sexpr &a : args)
				parts.push_back(boolean(a));
			return of(op == "and" ? formula::conj(std::move(parts)) : formula::disj(std::move(parts)));
		}
		if (op == "not") {
			if (args.size() != 1)
				throw parse_error(e.where() + ": 'not' takes one argument");
			return of(!boolean(args[0]));
		}
		if (op == "=>") {
			if (args.size() < 2)
				throw parse_error(e.where() + ": '=>' needs two arguments");
			formula acc = boolean(args.back());
			for (size_t i = args.size() - 1; i-- > 0;)
				acc = !boolean(args[i]) || acc;
			return of(acc);
		}
		unsupported(e, "operator '" + op + "'");
	}
};

void require_real_sort(const sexpr &s)
{
	if (s.is_list || s.atom != "Real")
		throw sort_error(s.where() + ": only constants of sort Real are supported");
}

}

smt_script parse_script(std::string_view text)
{
	reader rd(text);
	smt_script out;
	std::set<var> declared;
	std::map<std::string, value> defs;
	std::vector<formula> asserts;
	while (!rd.at_end()) {
		sexpr cmd = rd.read();
		if (!cmd.is_list || cmd.items.empty() || cmd.items[0].is_list)
			throw parse_error(cmd.where() + ": expected a command");
		const std::string &name = cmd.items[0].atom;
		const auto &a = cmd.items;
		if (name == "set-logic") {
			if (a.size() != 2)
				throw parse_error(cmd.where() + ": malformed set-logic");
			out.logic = a[1].atom;
			if (out.logic != "QF_NRA" && out.logic != "QF_LRA")
				throw unsupported_construct(cmd.where() + ": unsupported construct: logic " + out.logic);
		} else if (name == "set-info" || name == "set-option" || name == "check-sat" || name == "exit" ||
		           name == "get-model" || name == "get-value" || name == "push" || name == "pop") {
			continue;
		} else if (name == "declare-const" || name == "declare-fun") {
			size_t sort_at = name == "declare-const" ? 2 : 3;
			if (a.size() != sort_at + 1 || a[1].is_list)
				throw parse_error(cmd.where() + ": malformed " + name);
			if (name == "declare-fun" && (!a[2].is_list || !a[2].items.empty()))
				throw unsupported_construct(cmd.where() + ": unsupported construct: function with arguments");
			require_real_sort(a[sort_at]);
			if (!declared.insert(a[1].atom).second)
				throw parse_error(cmd.where() + ": '" + a[1].atom + "' declared twice");
			out.declared.push_back(a[1].atom);
		} else if (name == "define-fun") {
			if (a.size() != 5 || a[1].is_list || !a[2].is_list)
				throw parse_error(cmd.where() + ": malformed define-fun");
			if (!a[2].items.empty())
				throw unsupported_construct(cmd.where() + ": unsupported construct: function with arguments");
			translator tr(declared, defs);
			value v = tr.term(a[4]);
			if (a[3].is("Real") == v.is_bool)
				throw sort_error(cmd.where() + ": definition sort mismatch");
			defs[a[1].atom] = v;
		} else if (name == "assert") {
			if (a.size() != 2)
				throw parse_error(cmd.where() + ": malformed assert");
			translator tr(declared, defs);
			value v = tr.term(a[1]);
			if (!v.is_bool)
				throw sort_error(a[1].where() + ": assertion is not Bool");
			asserts.push_back(v.f);
		} else {
			throw unsupported_construct(cmd.where() + ": unsupported construct: command " + name);
		}
	}
	out.assertions = formula::conj(std::move(asserts));
	return out;
}

spec make_spec(const smt_script &s, const std::vector<var> &inputs, const std::vector<var> &outputs)
{
	std::set<var> decl(s.declared.begin(), s.declared.end());
	for (const auto *list : {&inputs, &outputs})
		for (const var &v : *list)
			if (!decl.count(v))
				throw unknown_variable("'" + v + "' is not declared in the script");
	spec sp{s.assertions, inputs, outputs};
	validate(sp);
	std::set<var> io(inputs.begin(), inputs.end());
	io.insert(outputs.begin(), outputs.end());
	for (const var &v : s.declared)
		if (!io.count(v))
			throw parse_error("declared constant '" + v + "' is neither input nor output");
	return sp;
}

spec parse_problem(std::string_view text, const std::vector<var> &inputs, const std::vector<var> &outputs)
{
	return make_spec(parse_script(text), inputs, outputs);
}

std::pair<std::vector<var>, std::vector<var>> parse_io_sidecar(std::string_view text)
{
	try {
		auto j = nlohmann::json::parse(text);
		return {j.at("inputs").get<std::vector<var>>(), j.at("outputs").get<std::vector<var>>()};
	} catch (const nlohmann::json::exception &e) {
		throw parse_error(std::string("malformed I/O sidecar: ") + e.what());
	}
}

std::string io_sidecar(const std::vector<var> &inputs, const std::vector<var> &outputs)
{
	nlohmann::ordered_json j = {{"inputs", inputs}, {"outputs", outputs}};
	return j.dump() + "\n";
}

std::string print_rat(const Rat &q)
{
	std::string num = BigInt(abs(q.get_num())).get_str();
	if (sgn(q) < 0)
		num = "(- " + num + ")";
	if (q.get_den() == 1)
		return num;
	return "(/ " + num + " " + q.get_den().get_str() + ")";
}

namespace {

std::string print_monomial(const monomial &m)
{
	std::string s;
	for (const auto &[v, e] : m.powers())
		for (uint32_t i = 0; i < e; ++i)
			s += (s.empty() ? "" : " ") + v;
	return s;
}

std::string print_term(const Rat &c, const monomial &m)
{
	if (m.is_one())
		return print_rat(c);
	std::string body = print_monomial(m);
	bool product = m.degree() > 1;
	if (c == 1)
		return product ? "(* " + body + ")" : body;
	if (c == -1)
		return product ? "(- (* " + body + "))" : "(- " + body + ")";
	return "(* " + print_rat(c) + " " + body + ")";
}

}

std::string print_poly(const poly &p)
{
	if (p.is_zero())
		return "0";
	std::string acc;
	bool first = true;
	for (const auto &[m, c] : p.terms()) {
		if (first) {
			acc = print_term(c, m);
			first = false;
		} else if (sgn(c) < 0) {
			acc = "(- " + acc + " " + print_term(-c, m) + ")";
		} else {
			acc = "(+ " + acc + " " + print_term(c, m) + ")";
		}
	}
	return acc;
}

std::string print_formula(const formula &f)
{
	using K = formula::kind;
	switch (f.k()) {
	case K::tru: return "true";
	case K::fls: return "false";
	case K::atom: {
		const atom &a = f.get_atom();
		std::string p = print_poly(a.p);
		if (a.r == rel::ne)
			return "(not (= " + p + " 0))";
		return std::string("(") + rel_symbol(a.r) + " " + p + " 0)";
	}
	case K::neg: return "(not " + print_formula(f.args()[0]) + ")";
	case K::conj:
	case K::disj: {
		std::string s = f.k() == K::conj ? "(and" : "(or";
		for (const formula &g : f.args())
			s += " " + print_formula(g);
		return s + ")";
	}
	}
	return "false";
}

std::string print_model(const assignment &m)
{
	std::string s;
	for (const auto &[v, q] : m) {
		if (!s.empty())
			s += "\n";
		s += "(define-fun " + v + " () Real " + print_rat(q) + ")";
	}
	return s;
}

std::string print_script(const formula &f, const std::vector<var> &vars, bool get_values)
{
	std::string s = "(set-logic QF_NRA)\n";
	for (const var &v : vars)
		s += "(declare-const " + v + " Real)\n";
	s += "(assert " + print_formula(f) + ")\n(check-sat)\n";
	if (get_values && !vars.empty()) {
		s += "(get-value (";
		for (size_t i = 0; i < vars.size(); ++i)
			s += (i ? " " : "") + vars[i];
		s += "))\n";
	}
	return s;
}

}
