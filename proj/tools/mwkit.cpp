// SPDX-License-Identifier: Apache-2.0
//
// mwkit: evaluate, tabulate and verify solutions of
//   phi(x) = phi(x/2) + phi((x+1)/2) - phi(1/2),  phi(0) = 0, phi(1) = 1.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mwkit/errors.hpp"
#include "mwkit/expr.hpp"
#include "mwkit/harness.hpp"
#include "mwkit/ifs.hpp"
#include "mwkit/moments.hpp"
#include "mwkit/solutions.hpp"

namespace {

enum Exit : int { ok = 0, verification_failed = 1, parse_failure = 2, domain_failure = 3, io_failure = 4 };

struct IoError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

constexpr unsigned max_table_level = 20;
constexpr unsigned max_verify_level = 14;
constexpr unsigned max_digits = 4096;
constexpr unsigned max_moment_order = 512;

// Writes to `path`, or stdout when empty.
void emit(const std::string &path, const std::string &text)
{
	if (path.empty() || path == "-") {
		std::cout << text;
		std::cout.flush();
		if (!std::cout)
			throw IoError("cannot write to stdout");
		return;
	}
	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw IoError("cannot open '" + path + "' for writing");
	out << text;
	out.close();
	if (!out)
		throw IoError("write to '" + path + "' failed");
}

std::vector<std::string> split(const std::string &s, char sep)
{
	std::vector<std::string> out;
	std::string cur;
	std::istringstream in(s);
	while (std::getline(in, cur, sep))
		out.push_back(cur);
	return out;
}

std::string sign_of(const mwkit::Rational &q)
{
	const int s = sgn(q);
	return s > 0 ? "+" : s < 0 ? "-" : "0";
}

int cmd_eval(const std::string &expr, const std::string &x_text, unsigned digits, const std::string &format)
{
	using namespace mwkit;
	const Solution s = parse_solution(expr);
	const Rational x = parse_rational(x_text);
	if (!in_unit_interval(x))
		throw DomainError("x = " + to_string(x) + " outside [0,1]");
	if (DyadicPoint::is_dyadic(x)) {
		try {
			const Rational v = eval_solution(s, DyadicPoint::from_rational(x));
			if (format == "json") {
				nlohmann::ordered_json j{{"x", to_string(x)}, {"exact", true}, {"value", to_string(v)}};
				emit("", j.dump() + "\n");
			} else {
				emit("", to_string(v) + "\n");
			}
			return ok;
		} catch (const ModeError &) {
			// falls through to the enclosure path
		}
	}
	const Evaluation e = eval_solution_enclosed(s, x, digits);
	if (format == "json") {
		nlohmann::ordered_json j{{"x", to_string(x)},
		                         {"exact", false},
		                         {"lo", to_string(e.enclosure.lo())},
		                         {"hi", to_string(e.enclosure.hi())},
		                         {"width", to_string(e.enclosure.width())},
		                         {"digits", digits},
		                         {"rigorous", e.rigorous},
		                         {"quadrature_tolerance", e.quadrature_tolerance}};
		emit("", j.dump() + "\n");
	} else {
		emit("", to_string(e.enclosure) + "\n");
		if (!e.rigorous)
			std::cerr << "note: includes quadrature, estimated tolerance " << e.quadrature_tolerance << "\n";
	}
	return ok;
}

int cmd_table(const std::string &expr, unsigned level, unsigned digits, const std::string &out)
{
	using namespace mwkit;
	if (level > max_table_level)
		throw DomainError("level " + std::to_string(level) + " above cap " + std::to_string(max_table_level));
	const Solution s = parse_solution(expr);
	std::string csv = "x_num,x_den,value_num,value_den,value_float\n";
	bool approximate = false;
	for (const auto &x : dyadic_grid(level)) {
		Rational v;
		try {
			v = eval_solution(s, x);
		} catch (const ModeError &) {
			v = eval_solution_enclosed(s, x.value(), digits).enclosure.midpoint();
			approximate = true;
		}
		const Rational xv = x.value();
		csv += xv.get_num().get_str() + "," + xv.get_den().get_str() + "," + v.get_num().get_str() + ","
		       + v.get_den().get_str() + "," + to_float_string(v) + "\n";
	}
	emit(out, csv);
	if (approximate)
		std::cerr << "note: values are enclosure midpoints (" << digits << " digits)\n";
	return ok;
}

int cmd_attractor(const std::string &spec, unsigned n, std::size_t cap, const std::string &out)
{
	using namespace mwkit;
	const ProbabilityVector P = parse_probability_vector(spec);
	const IntervalSet A = attractor_approx(P, n, cap);
	std::string csv = "lo_num,lo_den,hi_num,hi_den\n";
	for (const auto &iv : A.intervals()) {
		const Rational lo = iv.lo.value();
		const Rational hi = iv.hi.value();
		csv += lo.get_num().get_str() + "," + lo.get_den().get_str() + "," + hi.get_num().get_str() + ","
		       + hi.get_den().get_str() + "\n";
	}
	emit(out, csv);
	return ok;
}

struct MomentsOptions {
	unsigned N = 24;
	int K = -1;
	int Nmax = -1;
	bool limit = false;
	bool samples = false;
	std::string out;
};

int cmd_moments(const std::string &expr, const MomentsOptions &o)
{
	using namespace mwkit;
	if (o.N > max_moment_order)
		throw DomainError("N above cap " + std::to_string(max_moment_order));
	const Solution s = parse_solution(expr);
	MomentSequence c;
	if (const auto *t = std::get_if<IntegralTerm>(&s.node()); t && !t->measure.is_atomic())
		c = moments_of_measure(t->measure, o.N);
	else
		c = dyadic_samples(s, o.N);

	std::string csv;
	if (o.samples) {
		csv = "j,c_num,c_den,c_float\n";
		for (std::size_t j = 0; j < c.size(); ++j)
			csv += std::to_string(j) + "," + c[j].get_num().get_str() + "," + c[j].get_den().get_str() + ","
			       + to_float_string(c[j]) + "\n";
		emit(o.out, csv);
		return ok;
	}
	if (o.limit) {
		const auto L = limit_condition_partial_sums(c);
		csv = "n,L_num,L_den,L_float\n";
		for (std::size_t n = 0; n < L.size(); ++n)
			csv += std::to_string(n) + "," + L[n].get_num().get_str() + "," + L[n].get_den().get_str() + ","
			       + to_float_string(L[n]) + "\n";
		emit(o.out, csv);
		return ok;
	}

	DifferenceTable table;
	if (o.K < 0 && o.Nmax < 0) {
		table = complete_monotonicity_triangle(c, o.N);
	} else {
		const unsigned nmax = o.Nmax >= 0 ? static_cast<unsigned>(o.Nmax) : o.N - static_cast<unsigned>(o.K);
		const unsigned k = o.K >= 0 ? static_cast<unsigned>(o.K) : o.N - nmax;
		table = complete_monotonicity_table(c, k, nmax);
	}
	csv = "k,n,delta_num,delta_den,sign\n";
	for (const auto &e : table.entries)
		csv += std::to_string(e.k) + "," + std::to_string(e.n) + "," + e.value.get_num().get_str() + ","
		       + e.value.get_den().get_str() + "," + sign_of(e.value) + "\n";
	emit(o.out, csv);
	std::cerr << "verdict: " << (table.passed() ? "PASS" : "FAIL") << " (" << table.tested_range() << ")";
	if (c.tolerance > 0)
		std::cerr << ", quadrature tolerance " << c.tolerance;
	std::cerr << "\n";
	return ok;
}

struct VerifyOptions {
	std::string suite = "all";
	std::string m_values = "2,3";
	std::string p_values = "1/3,1/2,3/4";
	unsigned level = 8;
	unsigned N = 24;
	std::string mutate = "none";
	std::string format = "text";
	std::string out;
	std::uint64_t seed = mwkit::BuiltinSuiteConfig{}.seed;
	std::string expr;
};

int cmd_verify(const VerifyOptions &o)
{
	using namespace mwkit;
	if (o.level > max_verify_level)
		throw DomainError("level above cap " + std::to_string(max_verify_level));
	SuiteReport report;
	if (!o.expr.empty()) {
		report = verify_solution_suite(parse_solution(o.expr), o.level, max_verify_level);
	} else {
		BuiltinSuiteConfig cfg;
		cfg.suite = o.suite;
		cfg.grid_level = o.level;
		cfg.moment_order = o.N;
		cfg.seed = o.seed;
		cfg.m_values.clear();
		for (const auto &m : split(o.m_values, ',')) {
			const Rational q = parse_rational(m);
			if (q.get_den() != 1 || q < 2 || q > 4)
				throw DomainError("--m values must be integers in 2..4, got " + m);
			cfg.m_values.push_back(static_cast<unsigned>(q.get_num().get_ui()));
		}
		cfg.p_values.clear();
		for (const auto &p : split(o.p_values, ','))
			cfg.p_values.push_back(parse_rational(p));
		if (o.mutate == "half-value")
			cfg.mutation = Mutation::half_value;
		else if (o.mutate != "none")
			throw DomainError("unknown mutation '" + o.mutate + "'");
		report = verify_builtin_suite(cfg);
	}
	emit(o.out, o.format == "json" ? to_json(report) : to_text(report));
	return report.all_passed() ? ok : verification_failed;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Exact evaluation and verification of solutions of phi(x) = phi(x/2) + phi((x+1)/2) - phi(1/2)"};
	app.require_subcommand(1);

	std::string expr, x_text, out, format = "text", spec;
	unsigned digits = 32, level = 8, n = 0;
	std::size_t cap = mwkit::default_interval_cap;

	auto *eval = app.add_subcommand("eval", "evaluate a solution at a point");
	eval->add_option("expr", expr, "solution expression")->required();
	eval->add_option("x", x_text, "point: k/2^n (exact) or any rational/decimal (enclosure)")->required();
	eval->add_option("--digits", digits, "digit budget for enclosures")->check(CLI::Range(1u, max_digits));
	eval->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

	auto *table = app.add_subcommand("table", "tabulate a solution on k/2^level as CSV");
	table->add_option("expr", expr, "solution expression")->required();
	table->add_option("--level", level, "grid level");
	table->add_option("--digits", digits, "digit budget when only enclosures exist")
	    ->check(CLI::Range(1u, max_digits));
	table->add_option("--out", out, "output path (default stdout)");

	VerifyOptions vo;
	auto *verify = app.add_subcommand("verify", "run the verification suites");
	verify->add_option("--suite", vo.suite, "all, or a check prefix: derham, ifs, solutions, moments, probes");
	verify->add_option("--m", vo.m_values, "comma-separated m values");
	verify->add_option("--p", vo.p_values, "comma-separated p values");
	verify->add_option("--level", vo.level, "grid level");
	verify->add_option("--N", vo.N, "moment order")->check(CLI::Range(2u, max_moment_order));
	verify->add_option("--mutate", vo.mutate, "negative control: half-value (compares phi_P(1/2) with p/(m+1))");
	verify->add_option("--format", vo.format, "text or json")->check(CLI::IsMember({"text", "json"}));
	verify->add_option("--out", vo.out, "report path (default stdout)");
	verify->add_option("--seed", vo.seed, "seed of the deep dyadic sampler");
	verify->add_option("--expr", vo.expr, "verify a single solution expression instead");

	auto *attractor = app.add_subcommand("attractor", "attractor approximation A_n as CSV intervals");
	attractor->add_option("P", spec, "m=<m>:P=<weights> or m=<m>:K=<support>")->required();
	attractor->add_option("n", n, "level")->required();
	attractor->add_option("--cap", cap, "maximum interval count");
	attractor->add_option("--out", out, "output path (default stdout)");

	MomentsOptions mo;
	auto *moments = app.add_subcommand("moments", "difference tables of phi(1/2^j)");
	moments->add_option("expr", expr, "solution expression")->required();
	moments->add_option("--N", mo.N, "highest sample index");
	moments->add_option("--K", mo.K, "rectangular table: k <= K");
	moments->add_option("--Nmax", mo.Nmax, "rectangular table: n <= Nmax");
	moments->add_flag("--limit", mo.limit, "emit L(n) = Delta(0,n) instead of the table");
	moments->add_flag("--samples", mo.samples, "emit the samples c_j instead of the table");
	moments->add_option("--out", mo.out, "output path (default stdout)");

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp &e) {
		return app.exit(e);
	} catch (const CLI::ParseError &e) {
		app.exit(e);
		return parse_failure;
	}

	try {
		if (*eval)
			return cmd_eval(expr, x_text, digits, format);
		if (*table)
			return cmd_table(expr, level, digits, out);
		if (*verify)
			return cmd_verify(vo);
		if (*attractor)
			return cmd_attractor(spec, n, cap, out);
		if (*moments)
			return cmd_moments(expr, mo);
	} catch (const mwkit::ParseError &e) {
		std::cerr << "parse error: " << e.what() << "\n";
		return parse_failure;
	} catch (const IoError &e) {
		std::cerr << "i/o error: " << e.what() << "\n";
		return io_failure;
	} catch (const mwkit::DomainError &e) {
		std::cerr << "domain error: " << e.what() << "\n";
		return domain_failure;
	} catch (const mwkit::ModeError &e) {
		std::cerr << "mode error: " << e.what() << "\n";
		return domain_failure;
	} catch (const mwkit::ResourceError &e) {
		std::cerr << "resource error: " << e.what() << "\n";
		return domain_failure;
	} catch (const mwkit::NotAtomicError &e) {
		std::cerr << "error: " << e.what() << "\n";
		return domain_failure;
	}
	return ok;
}
