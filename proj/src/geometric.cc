/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#include "ratsynth/errors.hh"
#include "ratsynth/geometric.hh"
#include "ratsynth/smtlib.hh"

#include <filesystem>
#include <fstream>
#include <random>

namespace ratsynth {

namespace {

std::string header(const std::vector<var> &vars)
{
	std::string s = "(set-logic QF_NRA)\n";
	for (const var &v : vars)
		s += "(declare-const " + v + " Real)\n";
	return s;
}

std::string script(const std::vector<var> &vars, const std::vector<std::string> &asserts)
{
	std::string s = header(vars);
	for (const std::string &a : asserts)
		s += "(assert " + a + ")\n";
	return s + "(check-sat)\n(exit)\n";
}

class param_source {
	std::mt19937_64 rng_;

public:
	explicit param_source(uint64_t seed) : rng_(seed) {}

	/* k / den with k uniform in [lo*den, hi*den] */
	Rat pick(long lo, long hi, long den = 2)
	{
		std::uniform_int_distribution<long> d(lo * den, hi * den);
		return Rat(d(rng_), den);
	}

	long integer(long lo, long hi)
	{
		std::uniform_int_distribution<long> d(lo, hi);
		return d(rng_);
	}
};

std::string r(const Rat &q)
{
	Rat c = q;
	c.canonicalize();
	return print_rat(c);
}

/* (v - c)^2 */
std::string shifted_square(const var &v, const Rat &c)
{
	if (c == 0)
		return "(* " + v + " " + v + ")";
	std::string d = "(- " + v + " " + r(c) + ")";
	return "(* " + d + " " + d + ")";
}

std::string power(const var &v, long d)
{
	std::string s = "(*";
	for (long i = 0; i < d; ++i)
		s += " " + v;
	return s + ")";
}

generated_problem annulus(param_source &ps, size_t i)
{
	Rat a = ps.pick(-2, 2), b = ps.pick(-2, 2);
	Rat r1 = ps.pick(1, 3), w = ps.pick(1, 2, 4);
	std::string dist = "(+ " + shifted_square("x", a) + " " + shifted_square("y", b) + ")";
	return {"annulus_" + std::to_string(i),
	        script({"x", "y"}, {"(<= " + r(r1 * r1) + " " + dist + ")", "(<= " + dist + " " + r((r1 + w) * (r1 + w)) + ")"}),
	        {"x"},
	        {"y"}};
}

generated_problem circles(param_source &ps, size_t i)
{
	Rat a1 = ps.pick(-1, 1), b1 = ps.pick(-1, 1), a2 = ps.pick(-1, 1), b2 = ps.pick(-1, 1);
	Rat r1 = ps.pick(1, 3), r2 = ps.pick(1, 3);
	std::string c1 = "(+ " + shifted_square("x", a1) + " " + shifted_square("y", b1) + ")";
	std::string c2 = "(+ " + shifted_square("x", a2) + " " + shifted_square("y", b2) + ")";
	return {"circles_" + std::to_string(i),
	        script({"x", "y"}, {"(<= " + c1 + " " + r(r1 * r1) + ")", "(< " + c2 + " " + r(r2 * r2) + ")"}),
	        {"x"},
	        {"y"}};
}

generated_problem ellipse(param_source &ps, size_t i)
{
	Rat a = ps.pick(1, 4), b = ps.pick(1, 4);
	std::string lhs = "(+ (/ (* x x) " + r(a * a) + ") (/ (* y y) " + r(b * b) + "))";
	return {"ellipse_" + std::to_string(i), script({"x", "y"}, {"(< " + lhs + " 1)"}), {"x"}, {"y"}};
}

generated_problem sphere(param_source &ps, size_t i)
{
	Rat rad = ps.pick(1, 3);
	Rat c = ps.pick(-1, 1);
	std::string lhs = "(+ (* x x) (* y y) " + shifted_square("z", c) + ")";
	return {"sphere_" + std::to_string(i), script({"x", "y", "z"}, {"(<= " + lhs + " " + r(rad * rad) + ")"}), {"x"},
	        {"y", "z"}};
}

generated_problem sphere_shell(param_source &ps, size_t i)
{
	Rat rad = ps.pick(1, 3);
	std::string lhs = "(+ (* x x) (* y y) (* z z))";
	return {"sphere_eq_" + std::to_string(i), script({"x", "y", "z"}, {"(= " + lhs + " " + r(rad * rad) + ")"}),
	        {"x"}, {"y", "z"}};
}

generated_problem parabola(param_source &ps, size_t i)
{
	Rat a = ps.pick(-2, 2), top = ps.pick(1, 4);
	return {"parabola_" + std::to_string(i),
	        script({"x", "y"}, {"(>= y (+ (* x x) " + r(a) + "))", "(<= y " + r(top) + ")"}),
	        {"x"},
	        {"y"}};
}

generated_problem hyperbola(param_source &ps, size_t i)
{
	Rat k = ps.pick(1, 3), m = ps.pick(2, 6);
	return {"hyperbola_" + std::to_string(i),
	        script({"x", "y"}, {"(>= (* x y) " + r(k) + ")", "(<= y " + r(m) + ")", "(>= y (- " + r(m) + "))"}),
	        {"x"},
	        {"y"}};
}

generated_problem high_degree(param_source &ps, size_t i, bool first)
{
	long d = first ? 100 : ps.integer(3, 24);
	return {"degree" + std::to_string(d) + "_" + std::to_string(i),
	        script({"x", "y"}, {"(<= " + power("y", d) + " x)", "(>= y 0)"}),
	        {"x"},
	        {"y"}};
}

}

std::vector<generated_problem> named_problems()
{
	return {
	    {"circle",
	     script({"x", "y"}, {"(<= 0.9 (+ (* x x) (* y y)))", "(<= (+ (* x x) (* y y)) 1)"}),
	     {"x"},
	     {"y"}},
	    {"ellipsoid",
	     script({"x", "y", "z"},
	            {"(>= 0 (- (+ (* x x) (/ (* y y) 9) (/ (* z z) 16)) 1))",
	             "(> 0 (+ (- (/ (* x x) 9)) (- (/ (* y y) 16)) (- (* z z)) (* 4 z) (- 2)))"}),
	     {"x"},
	     {"y", "z"}},
	};
}

std::vector<generated_problem> generate_geometric(size_t count, uint64_t seed)
{
	std::vector<generated_problem> out = named_problems();
	param_source ps(seed);
	bool seen_high = false;
	for (size_t i = 0; i < count; ++i) {
		switch (i % 8) {
		case 0: out.push_back(annulus(ps, i)); break;
		case 1: out.push_back(circles(ps, i)); break;
		case 2: out.push_back(ellipse(ps, i)); break;
		case 3: out.push_back(sphere(ps, i)); break;
		case 4: out.push_back(parabola(ps, i)); break;
		case 5: out.push_back(hyperbola(ps, i)); break;
		case 6: out.push_back(sphere_shell(ps, i)); break;
		case 7:
			out.push_back(high_degree(ps, i, !seen_high));
			seen_high = true;
			break;
		}
	}
	return out;
}

void write_problems(const std::string &dir, const std::vector<generated_problem> &ps)
{
	namespace fs = std::filesystem;
	fs::create_directories(dir);
	for (const generated_problem &p : ps) {
		std::ofstream smt(fs::path(dir) / (p.name + ".smt2"), std::ios::binary);
		std::ofstream io(fs::path(dir) / (p.name + ".json"), std::ios::binary);
		smt << p.smt2;
		io << io_sidecar(p.inputs, p.outputs);
		if (!smt || !io)
			throw error("cannot write problem '" + p.name + "' into " + dir);
	}
}

}
