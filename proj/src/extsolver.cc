/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#include "ratsynth/errors.hh"
#include "ratsynth/smtlib.hh"

#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <iomanip>
#include <sstream>

namespace ratsynth {

namespace {

std::vector<std::string> split_command(const std::string &cmd)
{
	std::istringstream in(cmd);
	std::vector<std::string> out;
	std::string w;
	while (in >> std::quoted(w))
		out.push_back(w);
	return out;
}

/* Writes input to the child's stdin and collects its stdout. */
std::string run_child(const std::vector<std::string> &argv, const std::string &input, double wall_seconds)
{
	int to_child[2], from_child[2];
	if (pipe(to_child) != 0 || pipe(from_child) != 0)
		throw external_solver_failure(std::string("pipe: ") + std::strerror(errno));
	pid_t pid = fork();
	if (pid < 0)
		throw external_solver_failure(std::string("fork: ") + std::strerror(errno));
	if (pid == 0) {
		dup2(to_child[0], STDIN_FILENO);
		dup2(from_child[1], STDOUT_FILENO);
		close(to_child[0]);
		close(to_child[1]);
		close(from_child[0]);
		close(from_child[1]);
		std::vector<char *> args;
		for (const std::string &a : argv)
			args.push_back(const_cast<char *>(a.c_str()));
		args.push_back(nullptr);
		execvp(args[0], args.data());
		_exit(127);
	}
	close(to_child[0]);
	close(from_child[1]);
	signal(SIGPIPE, SIG_IGN);
	size_t off = 0;
	while (off < input.size()) {
		ssize_t n = write(to_child[1], input.data() + off, input.size() - off);
		if (n <= 0)
			break;
		off += size_t(n);
	}
	close(to_child[1]);

	auto deadline = std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
	                                                       std::chrono::duration<double>(wall_seconds));
	std::string out;
	char buf[4096];
	bool timed_out = false;
	for (;;) {
		auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
		if (left.count() <= 0) {
			timed_out = true;
			break;
		}
		pollfd pfd{from_child[0], POLLIN, 0};
		int r = poll(&pfd, 1, int(std::min<long long>(left.count(), 1000)));
		if (r < 0 && errno == EINTR)
			continue;
		if (r == 0)
			continue;
		ssize_t n = read(from_child[0], buf, sizeof buf);
		if (n <= 0)
			break;
		out.append(buf, size_t(n));
	}
	close(from_child[0]);
	if (timed_out)
		kill(pid, SIGKILL);
	int status = 0;
	waitpid(pid, &status, 0);
	if (timed_out)
		throw solver_timeout("external solver exceeded " + std::to_string(wall_seconds) + " s");
	if (WIFEXITED(status) && WEXITSTATUS(status) == 127 && out.empty())
		throw external_solver_failure("cannot execute '" + argv[0] + "'");
	return out;
}

/* minimal s-expression tokenizer for get-value answers */
struct tok_stream {
	std::string s;
	size_t i = 0;

	std::string next()
	{
		while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
			++i;
		if (i >= s.size())
			return "";
		if (s[i] == '(' || s[i] == ')')
			return std::string(1, s[i++]);
		size_t j = i;
		while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != '(' && s[j] != ')')
			++j;
		std::string t = s.substr(i, j - i);
		i = j;
		return t;
	}

	std::string peek()
	{
		size_t save = i;
		std::string t = next();
		i = save;
		return t;
	}
};

/* value term: rational, or nullopt for algebraic / approximate forms */
std::optional<Rat> read_value(tok_stream &ts)
{
	std::string t = ts.next();
	if (t.empty() || t == ")")
		throw external_solver_failure("truncated value in solver answer");
	if (t != "(") {
		if (!t.empty() && t.back() == '?')
			return std::nullopt;
		try {
			return parse_rat(t);
		} catch (const parse_error &) {
			throw external_solver_failure("unexpected value '" + t + "' in solver answer");
		}
	}
	std::string op = ts.next();
	std::vector<std::optional<Rat>> args;
	bool opaque = op != "-" && op != "/";
	if (opaque) {
		int depth = 1;
		while (depth > 0) {
			std::string u = ts.next();
			if (u.empty())
				throw external_solver_failure("unbalanced value in solver answer");
			depth += u == "(" ? 1 : u == ")" ? -1 : 0;
		}
		if (op == "root-obj" || op == "root-of" || op == "_")
			return std::nullopt;
		throw external_solver_failure("unsupported value form '" + op + "'");
	}
	while (ts.peek() != ")") {
		if (ts.peek().empty())
			throw external_solver_failure("unbalanced value in solver answer");
		args.push_back(read_value(ts));
	}
	ts.next();
	for (const auto &a : args)
		if (!a)
			return std::nullopt;
	if (op == "-") {
		if (args.size() == 1)
			return -*args[0];
		if (args.size() == 2)
			return *args[0] - *args[1];
	} else if (args.size() == 2 && *args[1] != 0) {
		return *args[0] / *args[1];
	}
	throw external_solver_failure("malformed '" + op + "' value");
}

}

external_answer external_solve(const formula &phi, const std::vector<var> &vars, const std::string &command,
                               double wall_seconds)
{
	auto argv = split_command(command);
	if (argv.empty())
		throw external_solver_failure("empty solver command");
	std::string query = print_script(phi, vars, true);
	external_answer ans;
	ans.raw = run_child(argv, query, wall_seconds);
	tok_stream ts{ans.raw, 0};
	std::string head = ts.next();
	if (head == "unsat") {
		ans.st = external_answer::status::unsat;
		return ans;
	}
	if (head == "unknown" || head == "timeout") {
		ans.st = external_answer::status::unknown;
		return ans;
	}
	if (head != "sat")
		throw external_solver_failure("unexpected solver answer '" + head + "'");
	ans.st = external_answer::status::sat;
	if (vars.empty())
		return ans;
	if (ts.next() != "(")
		throw external_solver_failure("missing get-value answer");
	while (ts.peek() == "(") {
		ts.next();
		std::string name = ts.next();
		std::optional<Rat> v = read_value(ts);
		if (ts.next() != ")")
			throw external_solver_failure("malformed get-value pair for '" + name + "'");
		if (v)
			ans.values[name] = *v;
		else
			ans.irrational.insert(name);
	}
	if (ts.next() != ")")
		throw external_solver_failure("malformed get-value answer");
	for (const var &v : vars)
		if (!ans.values.count(v) && !ans.irrational.count(v))
			throw external_solver_failure("solver gave no value for '" + v + "'");
	return ans;
}

}
