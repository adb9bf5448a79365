// SPDX-License-Identifier: Apache-2.0

#include "mwkit/harness.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include <json.hpp>

#include "mwkit/derham.hpp"
#include "mwkit/errors.hpp"
#include "mwkit/expr.hpp"
#include "mwkit/ifs.hpp"
#include "mwkit/moments.hpp"

namespace mwkit {

namespace {

constexpr std::size_t max_witnesses = 5;
constexpr std::string_view label_separator = " @ ";

// "expr @ x" labels become separate witness fields.
Witness split_label(const std::string &label, const std::string &expected, const std::string &got)
{
	const auto at = label.rfind(label_separator);
	if (at == std::string::npos)
		return {"", label, expected, got};
	return {label.substr(0, at), label.substr(at + label_separator.size()), expected, got};
}


class Check {
public:
	Check(std::string id, std::string description)
	{
		r_.id = std::move(id);
		r_.description = std::move(description);
	}

	void expect(bool ok, const std::string &x, const std::string &expected, const std::string &got)
	{
		++r_.evaluated;
		if (ok)
			return;
		++r_.failures;
		r_.status = CheckStatus::fail;
		if (r_.witnesses.size() < max_witnesses)
			r_.witnesses.push_back(split_label(x, expected, got));
	}

	void expect_equal(const std::string &x, const Rational &expected, const Rational &got)
	{
		expect(expected == got, x, to_string(expected), to_string(got));
	}

	void note(std::string key, std::string value) { r_.values.emplace_back(std::move(key), std::move(value)); }

	CheckResult done() { return std::move(r_); }

private:
	CheckResult r_;
};

std::string join(const std::vector<Rational> &v)
{
	std::string out;
	for (const auto &q : v) {
		if (!out.empty())
			out += ' ';
		out += to_string(q);
	}
	return out;
}

std::string label(const Solution &s, const DyadicPoint &x)
{
	return to_string(s) + std::string(label_separator) + to_string(x);
}

void check_boundary(Check &c, const Solution &s)
{
	c.expect_equal(label(s, DyadicPoint::zero()), 0, eval_solution(s, DyadicPoint::zero()));
	c.expect_equal(label(s, DyadicPoint::one()), 1, eval_solution(s, DyadicPoint::one()));
}

void check_residual(Check &c, const Solution &s, const std::vector<DyadicPoint> &points)
{
	for (const auto &x : points)
		c.expect_equal(label(s, x), 0, mw_residual(s, x));
}

void check_monotone(Check &c, const Solution &s, const std::vector<DyadicPoint> &grid, bool strict)
{
	Rational prev = eval_solution(s, grid.front());
	for (std::size_t i = 1; i < grid.size(); ++i) {
		Rational cur = eval_solution(s, grid[i]);
		const bool ok = strict ? prev < cur : prev <= cur;
		c.expect(ok, label(s, grid[i]), (strict ? "> " : ">= ") + to_string(prev), to_string(cur));
		prev = std::move(cur);
	}
}

} // namespace

bool SuiteReport::all_passed() const
{
	return std::all_of(checks.begin(), checks.end(),
	                   [](const CheckResult &c) { return c.status == CheckStatus::pass; });
}

const CheckResult *SuiteReport::find(const std::string &id) const
{
	for (const auto &c : checks)
		if (c.id == id)
			return &c;
	return nullptr;
}

std::string to_json(const SuiteReport &report)
{
	using json = nlohmann::ordered_json;
	json j;
	j["suite"] = report.suite_id;
	j["passed"] = report.all_passed();
	json params = json::object();
	for (const auto &[k, v] : report.parameters)
		params[k] = v;
	j["parameters"] = params;
	json checks = json::array();
	for (const auto &c : report.checks) {
		json cj;
		cj["id"] = c.id;
		cj["status"] = c.status == CheckStatus::pass ? "PASS" : "FAIL";
		cj["description"] = c.description;
		cj["evaluated"] = c.evaluated;
		cj["failures"] = c.failures;
		json w = json::array();
		for (const auto &wi : c.witnesses)
			w.push_back({{"expr", wi.expr}, {"x", wi.x}, {"expected", wi.expected}, {"got", wi.got}});
		cj["witnesses"] = w;
		json vals = json::object();
		for (const auto &[k, v] : c.values)
			vals[k] = v;
		cj["values"] = vals;
		checks.push_back(cj);
	}
	j["checks"] = checks;
	return j.dump(2) + "\n";
}

std::string to_text(const SuiteReport &report)
{
	std::ostringstream out;
	out << "suite " << report.suite_id << "\n";
	for (const auto &[k, v] : report.parameters)
		out << "  " << k << " = " << v << "\n";
	std::size_t width = 0;
	for (const auto &c : report.checks)
		width = std::max(width, c.id.size());
	std::size_t failed = 0;
	for (const auto &c : report.checks) {
		const bool ok = c.status == CheckStatus::pass;
		failed += !ok;
		out << (ok ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << c.id
		    << "  " << std::right << std::setw(7) << c.evaluated << "  " << c.description << "\n";
		for (const auto &w : c.witnesses)
			out << "        " << (w.expr.empty() ? "" : w.expr + " at ") << "x = " << w.x << "; expected "
			    << w.expected << "; got " << w.got << "\n";
		if (c.failures > c.witnesses.size())
			out << "        ... " << (c.failures - c.witnesses.size()) << " more\n";
		for (const auto &[k, v] : c.values)
			out << "        " << k << ": " << v << "\n";
	}
	out << (failed ? "FAILED " : "PASSED ") << (report.checks.size() - failed) << "/"
	    << report.checks.size() << " checks\n";
	return out.str();
}

SuiteReport verify_solution_suite(const Solution &s, unsigned grid_level, unsigned max_level)
{
	if (grid_level > max_level)
		throw DomainError("grid level " + std::to_string(grid_level) + " above cap "
		                  + std::to_string(max_level));
	const auto grid = dyadic_grid(grid_level);
	SuiteReport report;
	report.suite_id = "solution " + to_string(s);
	report.parameters = {{"grid_level", std::to_string(grid_level)}};

	Check boundary("boundary", "phi(0) = 0 and phi(1) = 1");
	check_boundary(boundary, s);
	report.checks.push_back(boundary.done());

	Check monotone("monotone", "nondecreasing on the grid");
	check_monotone(monotone, s, grid, false);
	report.checks.push_back(monotone.done());

	Check residual("residual", "functional equation residual vanishes on the grid");
	check_residual(residual, s, grid);
	report.checks.push_back(residual.done());

	if (implies_strict_increase(s)) {
		Check strict("strict", "strictly increasing on the grid");
		check_monotone(strict, s, grid, true);
		report.checks.push_back(strict.done());
	}
	std::sort(report.checks.begin(), report.checks.end(),
	          [](const CheckResult &a, const CheckResult &b) { return a.id < b.id; });
	return report;
}

std::vector<DyadicPoint> sample_deep_dyadics(std::uint64_t seed, std::size_t count, unsigned level)
{
	std::mt19937_64 rng(seed);
	std::vector<DyadicPoint> out;
	out.reserve(count);
	for (std::size_t i = 0; i < count; ++i) {
		Integer k = 0;
		for (unsigned bits = 0; bits < level; bits += 64) {
			k <<= 64;
			const std::uint64_t word = rng();
			k += Integer(static_cast<unsigned long>(word >> 32)) * pow2(32)
			     + Integer(static_cast<unsigned long>(word & 0xffffffffu));
		}
		mpz_fdiv_r_2exp(k.get_mpz_t(), k.get_mpz_t(), level);
		out.emplace_back(std::move(k), level);
	}
	return out;
}

std::string trend_flag(const std::vector<Rational> &values)
{
	bool up = false;
	bool down = false;
	for (std::size_t i = 1; i < values.size(); ++i) {
		up = up || values[i] > values[i - 1];
		down = down || values[i] < values[i - 1];
	}
	if (up && down)
		return "mixed";
	if (up)
		return "increasing";
	if (down)
		return "decreasing";
	return "constant";
}

SuiteReport verify_builtin_suite(const BuiltinSuiteConfig &cfg)
{
	for (unsigned m : cfg.m_values)
		if (m < 2 || m > 10)
			throw DomainError("suite m values must lie in 2..10, got " + std::to_string(m));
	SuiteReport report;
	report.suite_id = "builtin:" + cfg.suite;
	{
		std::string ms, ps;
		for (unsigned m : cfg.m_values)
			ms += (ms.empty() ? "" : ",") + std::to_string(m);
		for (const auto &p : cfg.p_values)
			ps += (ps.empty() ? "" : ",") + to_string(p);
		report.parameters = {
		    {"m_values", ms},
		    {"p_values", ps},
		    {"grid_level", std::to_string(cfg.grid_level)},
		    {"moment_order", std::to_string(cfg.moment_order)},
		    {"seed", std::to_string(cfg.seed)},
		    {"deep_samples", std::to_string(cfg.deep_samples)},
		    {"deep_level", std::to_string(cfg.deep_level)},
		    {"mutation", cfg.mutation == Mutation::half_value ? "half-value" : "none"},
		};
	}

	const auto grid = dyadic_grid(cfg.grid_level);
	const unsigned N = cfg.moment_order;
	const Rational half = make_rational(1, 2);

	std::vector<ProbabilityVector> two_tails;
	for (unsigned m : cfg.m_values)
		for (const auto &p : cfg.p_values)
			two_tails.push_back(ProbabilityVector::two_tail(m, p));

	const MeasureSpec single = MeasureSpec::atomic({{make_rational(1, 3), 1}});
	const MeasureSpec pair = MeasureSpec::atomic({{make_rational(1, 4), half}, {make_rational(3, 4), half}});

	std::vector<Solution> family{Solution::derham(make_rational(1, 3)), Solution::integral(pair)};
	for (const auto &P : two_tails)
		family.push_back(Solution::averaged(P));
	for (unsigned m : cfg.m_values)
		for (const auto &p : cfg.p_values)
			if (m >= 2)
				family.push_back(strict_nonintegral_witness(m, p, half));

	using Builder = std::function<CheckResult()>;
	std::vector<std::pair<std::string, Builder>> builders;
	auto add = [&](std::string id, Builder b) { builders.emplace_back(std::move(id), std::move(b)); };

	add("derham.dyadic_powers", [&] {
		Check c("derham.dyadic_powers", "phi_p(1/2^n) = p^n for n <= 64");
		std::vector<Rational> ps{make_rational(1, 3), make_rational(2, 5), half, make_rational(3, 4)};
		for (const auto &p : cfg.p_values)
			if (std::find(ps.begin(), ps.end(), p) == ps.end())
				ps.push_back(p);
		for (const auto &p : ps)
			for (unsigned n = 0; n <= 64; ++n)
				c.expect_equal("p=" + to_string(p) + " n=" + std::to_string(n), pow(p, n),
				               eval_derham(DeRhamParam(p), DyadicPoint::inverse_pow2(n)));
		return c.done();
	});
	add("derham.reflection", [&] {
		Check c("derham.reflection", "phi_p(x) = 1 - phi_{1-p}(1-x) on the grid");
		for (const auto &p : cfg.p_values)
			for (const auto &x : grid) {
				auto [a, b] = reflect_check(DeRhamParam(p), x);
				c.expect_equal("p=" + to_string(p) + " x=" + to_string(x), a, b);
			}
		return c.done();
	});
	add("derham.system", [&] {
		Check c("derham.system", "two-branch de Rham system on the grid");
		for (const auto &p : cfg.p_values) {
			const DeRhamParam dp(p);
			for (const auto &x : grid) {
				const Rational v = eval_derham(dp, x);
				const std::string at = "p=" + to_string(p) + " x=" + to_string(x);
				c.expect_equal(at + " (x/2)", p * v, eval_derham(dp, x.half()));
				c.expect_equal(at + " ((x+1)/2)", (1 - p) * v + p, eval_derham(dp, x.half_shifted()));
			}
		}
		return c.done();
	});

	add("ifs.digit_recursion", [&] {
		Check c("ifs.digit_recursion", "Phi_P((x+l)/2^m) = S_l + p_l Phi_P(x)");
		for (const auto &P : two_tails)
			for (unsigned l = 0; l < P.base(); ++l)
				for (const auto &x : grid)
					c.expect_equal("P=" + to_string(P) + " l=" + std::to_string(l) + " x=" + to_string(x),
					               P.prefix_sum(l) + P[l] * eval_phi(P, x),
					               eval_phi(P, x.shift_scale(l, P.m())));
		return c.done();
	});
	add("ifs.self_replication", [&] {
		Check c("ifs.self_replication", "self-replication residual vanishes on the grid");
		std::vector<ProbabilityVector> Ps = two_tails;
		Ps.push_back(ProbabilityVector(2, {make_rational(1, 10), make_rational(2, 10), make_rational(3, 10),
		                                   make_rational(4, 10)}));
		Ps.push_back(ProbabilityVector::uniform_on(2, {0, 3}));
		for (const auto &P : Ps)
			for (const auto &x : grid)
				c.expect_equal("P=" + to_string(P) + " x=" + to_string(x), 0,
				               self_replication_residual(P, x));
		return c.done();
	});
	add("ifs.gap_constancy", [&] {
		Check c("ifs.gap_constancy", "Phi_P agrees at both ends of every gap of A_3");
		for (const auto &P : two_tails)
			for (const auto &[a, b] : attractor_approx(P, 3).gaps())
				c.expect_equal("P=" + to_string(P) + " gap " + to_string(a) + ".." + to_string(b),
				               eval_phi(P, a), eval_phi(P, b));
		return c.done();
	});
	add("ifs.m1_reduction", [&] {
		Check c("ifs.m1_reduction", "Phi_(p,1-p) = phi_p on the grid");
		for (const auto &p : cfg.p_values) {
			const ProbabilityVector P(1, {p, 1 - p});
			for (const auto &x : grid)
				c.expect_equal("p=" + to_string(p) + " x=" + to_string(x), eval_derham(DeRhamParam(p), x),
				               eval_phi(P, x));
		}
		return c.done();
	});
	add("ifs.zero_sequences", [&] {
		Check c("ifs.zero_sequences", "Phi_P(x_q) = 0 and Phi_P(y_q) = p^(q+1) for q <= 10");
		for (const auto &P : two_tails) {
			const Rational &p = P[P.base() - 2];
			for (unsigned q = 0; q <= 10; ++q) {
				const auto x = zero_sequence_below(P.m(), q);
				const auto y = zero_sequence_above(P.m(), q);
				c.expect_equal("P=" + to_string(P) + " x_" + std::to_string(q) + "=" + to_string(x), 0,
				               eval_phi(P, x));
				c.expect_equal("P=" + to_string(P) + " y_" + std::to_string(q) + "=" + to_string(y),
				               pow(p, q + 1), eval_phi(P, y));
			}
		}
		return c.done();
	});
	add("ifs.zero_set", [&] {
		Check c("ifs.zero_set", "Phi_P(x) = 0 iff x <= (2^m-2)/(2^m-1) on the grid");
		for (const auto &P : two_tails) {
			const Rational t = phi_zero_threshold(P);
			for (const auto &x : grid) {
				const Rational v = eval_phi(P, x);
				const bool below = x.value() <= t;
				c.expect((v == 0) == below, "P=" + to_string(P) + " x=" + to_string(x),
				         below ? "0" : "> 0", to_string(v));
			}
		}
		return c.done();
	});

	add("moments.integral_cm", [&] {
		Check c("moments.integral_cm", "Delta(k,n) >= 0 for k+n <= N on atomic integral solutions");
		for (const auto *mu : {&single, &pair}) {
			const Solution s = Solution::integral(*mu);
			const auto table = complete_monotonicity_triangle(dyadic_samples(s, N), N);
			for (const auto &e : table.entries)
				c.expect(e.value >= 0,
				         to_string(s) + " k=" + std::to_string(e.k) + " n=" + std::to_string(e.n), ">= 0",
				         to_string(e.value));
		}
		return c.done();
	});
	add("moments.integral_limit", [&] {
		Check c("moments.integral_limit",
		        "L(n) = sum mass (1-p)^n, decreasing, below 1e-3 at n = N");
		for (const auto *mu : {&single, &pair}) {
			const Solution s = Solution::integral(*mu);
			const auto L = limit_condition_partial_sums(dyadic_samples(s, N));
			for (unsigned n = 0; n < L.size(); ++n) {
				Rational expected = 0;
				for (const auto &a : mu->atoms())
					expected += a.mass * pow(1 - a.location, n);
				c.expect_equal(to_string(s) + " n=" + std::to_string(n), expected, L[n]);
				if (n > 0)
					c.expect(L[n] < L[n - 1], to_string(s) + " n=" + std::to_string(n),
					         "< " + to_string(L[n - 1]), to_string(L[n]));
			}
			c.expect(L.back() < make_rational(1, 1000), to_string(s) + " n=" + std::to_string(N), "< 1/1000",
			         to_string(L.back()));
		}
		return c.done();
	});
	add("moments.monotonicity_forced", [&] {
		Check c("moments.monotonicity_forced", "orders 0..2 of the difference table are nonnegative");
		for (const auto &s : family) {
			const auto v = monotonicity_forced_inequalities(s, 10);
			for (const auto &f : v.failures)
				c.expect(false, to_string(s) + " k=" + std::to_string(f.k) + " order=" + std::to_string(f.order),
				         ">= 0", to_string(f.value));
			for (unsigned k : v.identity_mismatches)
				c.expect(false, to_string(s) + " k=" + std::to_string(k), "second difference identity",
				         "mismatch");
			c.expect(true, "", "", "");
		}
		return c.done();
	});
	add("moments.recovery", [&] {
		Check c("moments.recovery", "Hankel recovery of atomic measures and rejection of (1,1/6,0,0)");
		for (const auto *mu : {&single, &pair}) {
			const auto r = static_cast<unsigned>(mu->atoms().size());
			const auto moments = moments_of_measure(*mu, 2 * r);
			try {
				const auto got = recover_discrete_measure(moments, r);
				c.expect(got.atoms() == mu->atoms(), to_string(Solution::integral(*mu)), "same atoms",
				         to_string(Solution::integral(got)));
			} catch (const NotAtomicError &e) {
				c.expect(false, to_string(Solution::integral(*mu)), "recovered", e.what());
			}
		}
		const MomentSequence bad{{1, make_rational(1, 6), 0, 0}};
		for (unsigned r : {1u, 2u}) {
			bool rejected = false;
			try {
				recover_discrete_measure(bad, r);
			} catch (const NotAtomicError &) {
				rejected = true;
			}
			c.expect(rejected, "(1,1/6,0,0) r=" + std::to_string(r), "not-r-atomic", rejected ? "" : "accepted");
		}
		return c.done();
	});
	add("moments.two_tail_divergence", [&] {
		Check c("moments.two_tail_divergence", "L(n) = 1 - n p/m for the two-tail averaged solutions");
		for (const auto &P : two_tails) {
			const Solution s = Solution::averaged(P);
			const Rational &p = P[P.base() - 2];
			const auto L = limit_condition_partial_sums(dyadic_samples(s, N));
			for (unsigned n = 0; n < L.size(); ++n)
				c.expect_equal(to_string(s) + " n=" + std::to_string(n), 1 - n * p / P.m(), L[n]);
		}
		return c.done();
	});
	add("moments.witness_divergence", [&] {
		Check c("moments.witness_divergence",
		        "strict witness: L(n) = a 2^-n + (1-a)(1 - n p/m) and L(N) < 0");
		for (unsigned m : cfg.m_values)
			for (const auto &p : cfg.p_values) {
				if (m < 2)
					continue;
				const Solution s = strict_nonintegral_witness(m, p, half);
				const auto L = limit_condition_partial_sums(dyadic_samples(s, N));
				for (unsigned n = 0; n < L.size(); ++n)
					c.expect_equal(to_string(s) + " n=" + std::to_string(n),
					               half * pow(half, n) + half * (1 - n * p / m), L[n]);
				c.expect(L.back() < 0, to_string(s) + " n=" + std::to_string(N), "< 0", to_string(L.back()));
				c.note(to_string(s) + " min L", to_string(*std::min_element(L.begin(), L.end())));
			}
		return c.done();
	});

	add("probes.left", [&] {
		Check c("probes.left", "2^n phi_{1/4}(1/2^n) = (1/2)^n for n < 32; trend reported");
		const Solution s = Solution::derham(make_rational(1, 4));
		const auto v = left_slope_probe(s, 32);
		for (unsigned n = 0; n < v.size(); ++n)
			c.expect_equal("n=" + std::to_string(n), pow(half, n), v[n]);
		c.note("terms", join(v));
		c.note("trend", trend_flag(v));
		return c.done();
	});
	add("probes.right", [&] {
		Check c("probes.right", "2^n (1 - phi_{3/4}(1 - 1/2^n)) = (1/2)^n for n < 32; trend reported");
		const Solution s = Solution::derham(make_rational(3, 4));
		const auto v = right_slope_probe(s, 32);
		for (unsigned n = 0; n < v.size(); ++n)
			c.expect_equal("n=" + std::to_string(n), pow(half, n), v[n]);
		c.note("terms", join(v));
		c.note("trend", trend_flag(v));
		return c.done();
	});

	add("solutions.boundary_monotone", [&] {
		Check c("solutions.boundary_monotone", "boundary values and monotonicity, strict where implied");
		for (const auto &s : family) {
			check_boundary(c, s);
			check_monotone(c, s, grid, implies_strict_increase(s));
		}
		return c.done();
	});
	add("solutions.deep_residual", [&] {
		Check c("solutions.deep_residual", "residual vanishes at seeded deep dyadic points");
		const auto points = sample_deep_dyadics(cfg.seed, cfg.deep_samples, cfg.deep_level);
		for (const auto &s : family)
			check_residual(c, s, points);
		return c.done();
	});
	add("solutions.embedding", [&] {
		Check c("solutions.embedding", "phi_P = phi_(P tensor P) on the grid");
		std::vector<ProbabilityVector> Ps;
		for (const auto &p : cfg.p_values)
			Ps.push_back(ProbabilityVector(1, {p, 1 - p}));
		for (const auto &P : two_tails)
			if (2 * P.m() <= 6)
				Ps.push_back(P);
		for (const auto &P : Ps) {
			const Solution a = Solution::averaged(P);
			const Solution b = Solution::averaged(tensor_square(P));
			for (const auto &x : grid)
				c.expect_equal(label(a, x), eval_solution(b, x), eval_solution(a, x));
		}
		return c.done();
	});
	add("solutions.integral_atoms", [&] {
		Check c("solutions.integral_atoms", "atomic integral = mass-weighted de Rham values");
		const Solution s = Solution::integral(pair);
		for (const auto &x : grid) {
			Rational expected = 0;
			for (const auto &a : pair.atoms())
				expected += a.mass * eval_derham(DeRhamParam(a.location), x);
			c.expect_equal(label(s, x), expected, eval_solution(s, x));
		}
		return c.done();
	});
	add("solutions.two_tail_values", [&] {
		Check c("solutions.two_tail_values", "phi_P(1/2) = p/m and phi_P(1/2^(j+1)) = 0 for 1 <= j <= 20");
		for (const auto &P : two_tails) {
			const Solution s = Solution::averaged(P);
			const Rational &p = P[P.base() - 2];
			const Rational expected =
			    cfg.mutation == Mutation::half_value ? Rational(p / (P.m() + 1)) : two_tail_half_value(P.m(), p);
			c.expect_equal(label(s, DyadicPoint::inverse_pow2(1)), expected,
			               eval_solution(s, DyadicPoint::inverse_pow2(1)));
			for (unsigned j = 1; j <= 20; ++j) {
				const auto x = DyadicPoint::inverse_pow2(j + 1);
				c.expect_equal(label(s, x), 0, eval_solution(s, x));
			}
		}
		return c.done();
	});
	add("solutions.residual", [&] {
		Check c("solutions.residual", "functional equation residual vanishes on the grid");
		for (const auto &s : family)
			check_residual(c, s, grid);
		return c.done();
	});
	add("solutions.zero_set", [&] {
		Check c("solutions.zero_set", "phi_P(x) = 0 iff x <= (2^m-2^(m-1)-1)/(2^m-1) on the grid");
		for (const auto &P : two_tails) {
			const Solution s = Solution::averaged(P);
			const Rational t = two_tail_flat_threshold(P.m());
			for (const auto &x : grid) {
				const Rational v = eval_solution(s, x);
				const bool below = x.value() <= t;
				c.expect((v == 0) == below, label(s, x), below ? "0" : "> 0", to_string(v));
			}
		}
		return c.done();
	});

	for (auto &[id, build] : builders) {
		const bool selected = cfg.suite == "all" || id == cfg.suite || id.starts_with(cfg.suite + ".");
		if (selected)
			report.checks.push_back(build());
	}
	if (report.checks.empty())
		throw DomainError("no checks match suite '" + cfg.suite + "'");
	std::sort(report.checks.begin(), report.checks.end(),
	          [](const CheckResult &a, const CheckResult &b) { return a.id < b.id; });
	return report;
}

} // namespace mwkit
