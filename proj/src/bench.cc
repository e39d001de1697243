/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ratsynth Authors
 */

#include "ratsynth/bench.hh"
#include "ratsynth/errors.hh"
#include "ratsynth/serialize.hh"
#include "ratsynth/smtlib.hh"

#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

namespace ratsynth {

namespace {

std::string slurp(const std::string &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw config_error("cannot read " + path);
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

void diagonal(size_t n, size_t sum, std::vector<size_t> &idx, size_t pos,
              const std::function<bool(const std::vector<size_t> &)> &fn, bool &stop)
{
	if (stop)
		return;
	if (pos + 1 == n) {
		idx[pos] = sum;
		stop = fn(idx);
		return;
	}
	for (size_t k = 0; k <= sum && !stop; ++k) {
		idx[pos] = k;
		diagonal(n, sum - k, idx, pos + 1, fn, stop);
	}
}

}

std::vector<assignment> fuzz_inputs(const std::vector<var> &inputs, size_t n, uint64_t seed)
{
	std::vector<assignment> out;
	if (inputs.empty()) {
		if (n > 0)
			out.emplace_back();
		return out;
	}
	size_t enumerated = n / 2;
	std::vector<Rat> seq = signed_rationals(std::max<size_t>(enumerated + 1, 16));
	std::vector<size_t> idx(inputs.size());
	bool stop = enumerated == 0;
	for (size_t sum = 0; !stop; ++sum)
		diagonal(inputs.size(), sum, idx, 0,
		         [&](const std::vector<size_t> &t) {
			         assignment a;
			         for (size_t i = 0; i < t.size(); ++i)
				         a[inputs[i]] = seq[t[i]];
			         out.push_back(std::move(a));
			         return out.size() >= enumerated;
		         },
		         stop);
	std::mt19937_64 rng(seed);
	std::uniform_int_distribution<long> den(1, 256);
	while (out.size() < n) {
		assignment a;
		for (const var &v : inputs) {
			long d = den(rng);
			std::uniform_int_distribution<long> num(-16 * d, 16 * d);
			Rat q(num(rng), d);
			q.canonicalize();
			a[v] = q;
		}
		out.push_back(std::move(a));
	}
	return out;
}

check_report check_program(const prog_ir &prog, const formula &phi, size_t n, uint64_t seed,
                           const runtime_options &opt)
{
	check_report rep;
	for (const assignment &a : fuzz_inputs(prog.sp.inputs, n, seed)) {
		++rep.inputs;
		try {
			run_result r = run_program(prog, a, opt);
			if (!r.outputs) {
				++rep.bot;
				continue;
			}
			++rep.answered;
			if (!verify_output(phi, a, *r.outputs)) {
				++rep.violations;
				rep.messages.push_back("output " + format_assignment(*r.outputs) + " violates the spec at " +
				                       format_assignment(a));
			}
		} catch (const soundness_violation &e) {
			++rep.violations;
			rep.messages.push_back(std::string(e.what()) + " at " + format_assignment(a));
		}
	}
	return rep;
}

std::vector<bench_problem> discover_problems(const std::string &dir)
{
	namespace fs = std::filesystem;
	if (!fs::is_directory(dir))
		throw config_error("benchmark directory " + dir + " does not exist");
	std::vector<bench_problem> out;
	for (const auto &e : fs::directory_iterator(dir)) {
		if (e.path().extension() != ".smt2")
			continue;
		fs::path io = e.path();
		io.replace_extension(".json");
		if (!fs::exists(io))
			continue;
		out.push_back({e.path().stem().string(), e.path().string(), io.string()});
	}
	if (out.empty())
		throw config_error("no benchmarks (*.smt2 with *.json sidecar) in " + dir);
	std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.id < b.id; });
	return out;
}

const char *outcome_name(bench_outcome o)
{
	switch (o) {
	case bench_outcome::solved: return "Solved";
	case bench_outcome::timeout: return "Timeout";
	case bench_outcome::error: return "Error";
	}
	return "Error";
}

static bench_outcome outcome_from_name(const std::string &s)
{
	if (s == "Solved")
		return bench_outcome::solved;
	if (s == "Timeout")
		return bench_outcome::timeout;
	if (s == "Error")
		return bench_outcome::error;
	throw parse_error("unknown outcome '" + s + "'");
}

bench_record run_benchmark(const bench_problem &p, const synth_config &cfg, size_t check_n)
{
	bench_record rec;
	rec.id = p.id;
	rec.strategy = cfg.strategy;
	auto t0 = std::chrono::steady_clock::now();
	try {
		auto [in, out] = parse_io_sidecar(slurp(p.io_path));
		spec s = parse_problem(slurp(p.smt_path), in, out);
		synth_outcome so = synthesize(s, cfg);
		rec.iterations = so.report.iterations;
		rec.branches = so.prog.branches.size();
		rec.completeness = completeness_name(so.report.status);
		check_report ck = check_program(so.prog, s.phi, check_n, cfg.seed);
		double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
		if (ck.violations > 0) {
			rec.outcome = bench_outcome::error;
			rec.detail = std::to_string(ck.violations) + " soundness violations";
		} else if (so.report.status == completeness::complete && (cfg.wall_timeout <= 0 || elapsed <= cfg.wall_timeout)) {
			rec.outcome = bench_outcome::solved;
		} else {
			rec.outcome = bench_outcome::timeout;
			rec.detail = so.report.stop_reason;
		}
	} catch (const std::exception &e) {
		rec.outcome = bench_outcome::error;
		rec.detail = e.what();
	}
	rec.wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
	return rec;
}

namespace {

nlohmann::json record_json(const bench_record &r)
{
	return {{"id", r.id},         {"strategy", r.strategy}, {"outcome", outcome_name(r.outcome)},
	        {"wall_s", r.wall_s}, {"iterations", r.iterations}, {"branches", r.branches},
	        {"completeness", r.completeness}, {"detail", r.detail}};
}

bench_record record_from_json(const nlohmann::json &j)
{
	bench_record r;
	r.id = j.at("id");
	r.strategy = j.at("strategy");
	r.outcome = outcome_from_name(j.at("outcome"));
	r.wall_s = j.at("wall_s");
	r.iterations = j.at("iterations");
	r.branches = j.at("branches");
	r.completeness = j.at("completeness");
	r.detail = j.at("detail");
	return r;
}

struct worker {
	pid_t pid;
	int fd;
	size_t index;
	std::chrono::steady_clock::time_point start;
	std::string data;
};

constexpr double grace_s = 5;

}

std::vector<bench_record> run_bench(const std::vector<bench_problem> &ps, const synth_config &cfg, size_t jobs,
                                    size_t check_n)
{
	using clock = std::chrono::steady_clock;
	if (jobs == 0)
		jobs = 1;
	std::vector<bench_record> out(ps.size());
	std::vector<worker> active;
	size_t next = 0;
	double limit = cfg.wall_timeout > 0 ? cfg.wall_timeout + grace_s : 0;

	auto finish = [&](worker &w, bool killed) {
		close(w.fd);
		if (killed)
			kill(w.pid, SIGKILL);
		int status = 0;
		waitpid(w.pid, &status, 0);
		double elapsed = std::chrono::duration<double>(clock::now() - w.start).count();
		bench_record r;
		r.id = ps[w.index].id;
		r.strategy = cfg.strategy;
		if (killed) {
			r.outcome = bench_outcome::timeout;
			r.detail = "killed after wall timeout";
		} else {
			try {
				r = record_from_json(nlohmann::json::parse(w.data));
			} catch (const std::exception &) {
				r.outcome = bench_outcome::error;
				r.detail = "worker exited without a record";
			}
		}
		r.wall_s = elapsed;
		out[w.index] = r;
	};

	while (next < ps.size() || !active.empty()) {
		while (active.size() < jobs && next < ps.size()) {
			int fds[2];
			if (pipe(fds) != 0)
				throw error("pipe failed");
			pid_t pid = fork();
			if (pid < 0)
				throw error("fork failed");
			if (pid == 0) {
				close(fds[0]);
				std::string rec = record_json(run_benchmark(ps[next], cfg, check_n)).dump();
				size_t off = 0;
				while (off < rec.size()) {
					ssize_t n = write(fds[1], rec.data() + off, rec.size() - off);
					if (n <= 0)
						break;
					off += size_t(n);
				}
				close(fds[1]);
				_exit(0);
			}
			close(fds[1]);
			active.push_back({pid, fds[0], next, clock::now(), {}});
			++next;
		}
		std::vector<pollfd> pfds;
		for (const worker &w : active)
			pfds.push_back({w.fd, POLLIN, 0});
		poll(pfds.data(), pfds.size(), 100);
		for (size_t i = 0; i < active.size();) {
			worker &w = active[i];
			bool done = false, killed = false;
			if (pfds[i].revents & (POLLIN | POLLHUP | POLLERR)) {
				char buf[4096];
				ssize_t n = read(w.fd, buf, sizeof buf);
				if (n > 0)
					w.data.append(buf, size_t(n));
				else
					done = true;
			}
			if (!done && limit > 0 && std::chrono::duration<double>(clock::now() - w.start).count() > limit)
				done = killed = true;
			if (done) {
				finish(w, killed);
				active.erase(active.begin() + i);
				pfds.erase(pfds.begin() + i);
			} else {
				++i;
			}
		}
	}
	std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.id < b.id; });
	return out;
}

bench_summary summarize(const std::vector<bench_record> &rs, double timeout)
{
	bench_summary s;
	s.total = rs.size();
	double penalized = 0;
	std::vector<double> times, iters;
	for (const bench_record &r : rs) {
		if (r.outcome == bench_outcome::solved) {
			++s.solved;
			penalized += r.wall_s;
			times.push_back(r.wall_s);
			iters.push_back(double(r.iterations));
		} else {
			penalized += 2 * timeout;
		}
	}
	s.par2 = rs.empty() ? 0 : penalized / double(rs.size());
	auto tri = [](const std::vector<double> &v) {
		triple t;
		if (v.empty())
			return t;
		t.min = *std::min_element(v.begin(), v.end());
		t.max = *std::max_element(v.begin(), v.end());
		double sum = 0;
		for (double x : v)
			sum += x;
		t.avg = sum / double(v.size());
		return t;
	};
	s.solved_time = tri(times);
	s.solved_iterations = tri(iters);
	return s;
}

namespace {

std::string csv_field(const std::string &s)
{
	if (s.find_first_of(",\"\n") == std::string::npos)
		return s;
	std::string q = "\"";
	for (char c : s) {
		if (c == '"')
			q += '"';
		q += c == '\n' ? ' ' : c;
	}
	return q + "\"";
}

std::vector<std::string> csv_split(const std::string &line)
{
	std::vector<std::string> out;
	std::string cur;
	bool quoted = false;
	for (size_t i = 0; i < line.size(); ++i) {
		char c = line[i];
		if (quoted) {
			if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
				cur += '"';
				++i;
			} else if (c == '"') {
				quoted = false;
			} else {
				cur += c;
			}
		} else if (c == '"') {
			quoted = true;
		} else if (c == ',') {
			out.push_back(cur);
			cur.clear();
		} else {
			cur += c;
		}
	}
	out.push_back(cur);
	return out;
}

std::string fmt(double x)
{
	char buf[64];
	std::snprintf(buf, sizeof buf, "%.6f", x);
	return buf;
}

}

std::string to_csv(const std::vector<bench_record> &rs)
{
	std::string s = std::string(csv_version_line) + "\n";
	s += "id,strategy,outcome,wall_s,iterations,branches,completeness,detail\n";
	for (const bench_record &r : rs)
		s += csv_field(r.id) + "," + csv_field(r.strategy) + "," + outcome_name(r.outcome) + "," + fmt(r.wall_s) +
		     "," + std::to_string(r.iterations) + "," + std::to_string(r.branches) + "," +
		     csv_field(r.completeness) + "," + csv_field(r.detail) + "\n";
	return s;
}

std::vector<bench_record> from_csv(const std::string &text)
{
	std::istringstream in(text);
	std::string line;
	if (!std::getline(in, line) || line != csv_version_line)
		throw parse_error("missing or unsupported CSV version line");
	if (!std::getline(in, line))
		throw parse_error("missing CSV header");
	std::vector<bench_record> out;
	while (std::getline(in, line)) {
		if (line.empty())
			continue;
		auto f = csv_split(line);
		if (f.size() != 8)
			throw parse_error("CSV row with " + std::to_string(f.size()) + " fields");
		bench_record r;
		r.id = f[0];
		r.strategy = f[1];
		r.outcome = outcome_from_name(f[2]);
		r.wall_s = std::stod(f[3]);
		r.iterations = std::stoul(f[4]);
		r.branches = std::stoul(f[5]);
		r.completeness = f[6];
		r.detail = f[7];
		out.push_back(std::move(r));
	}
	return out;
}

std::string summary_text(const bench_summary &s)
{
	return "benchmarks " + std::to_string(s.total) + "\nsolved " + std::to_string(s.solved) + "\npar2 " +
	       fmt(s.par2) + "\ntime (min,avg,max) (" + fmt(s.solved_time.min) + "," + fmt(s.solved_time.avg) + "," +
	       fmt(s.solved_time.max) + ")\niterations (min,avg,max) (" + fmt(s.solved_iterations.min) + "," +
	       fmt(s.solved_iterations.avg) + "," + fmt(s.solved_iterations.max) + ")\n";
}

}
