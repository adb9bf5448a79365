// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mwkit/numerics.hpp"
#include "mwkit/solutions.hpp"

namespace mwkit {

enum class CheckStatus { pass, fail };

/// Exact counterexample: the solution expression (empty when the check is
/// not about a single solution), the point or case label, what the check
/// expected and what was computed. `mwkit eval <expr> <x>` reproduces `got`.
struct Witness {
	std::string expr;
	std::string x;
	std::string expected;
	std::string got;
};

struct CheckResult {
	std::string id;
	std::string description;
	CheckStatus status = CheckStatus::pass;
	/// Number of individual comparisons made.
	std::size_t evaluated = 0;
	/// Total failures; `witnesses` keeps only the first few.
	std::size_t failures = 0;
	std::vector<Witness> witnesses;
	/// Informational values, e.g. probe sequences.
	std::vector<std::pair<std::string, std::string>> values;
};

struct SuiteReport {
	std::string suite_id;
	std::vector<std::pair<std::string, std::string>> parameters;
	/// Sorted by id.
	std::vector<CheckResult> checks;

	bool all_passed() const;
	const CheckResult *find(const std::string &id) const;
};

std::string to_json(const SuiteReport &report);
std::string to_text(const SuiteReport &report);

/// Boundary values, residual, monotonicity (and strict increase when the
/// expression class implies it) over every k/2^grid_level. Throws
/// DomainError when grid_level exceeds `max_level`.
SuiteReport verify_solution_suite(const Solution &s, unsigned grid_level, unsigned max_level = 16);

enum class Mutation {
	none,
	/// Compares phi_P(1/2) against p/(m+1) instead of p/m.
	half_value,
};

struct BuiltinSuiteConfig {
	/// "all", or a check-id prefix such as "moments" or "ifs".
	std::string suite = "all";
	/// Two-tail families (0,...,0,p,1-p); each m in 2..10. The m = 1 case
	/// (p,1-p) is always part of the embedding check.
	std::vector<unsigned> m_values{2, 3};
	std::vector<Rational> p_values{Rational(1, 3), Rational(1, 2), Rational(3, 4)};
	unsigned grid_level = 8;
	unsigned moment_order = 24;
	/// Seeded deep-dyadic sampler: `deep_samples` points at level `deep_level`.
	std::uint64_t seed = 20240601;
	unsigned deep_samples = 16;
	unsigned deep_level = 48;
	Mutation mutation = Mutation::none;
};

/// Every desk-scale check of the solution families, moment criteria and
/// probes selected by `config.suite`. Deterministic for a given config.
/// Throws DomainError for an m value outside 2..10 or a suite selecting
/// no checks.
SuiteReport verify_builtin_suite(const BuiltinSuiteConfig &config);

/// `count` points k/2^level, k drawn from the raw mt19937_64 stream so the
/// sample is identical across standard libraries.
std::vector<DyadicPoint> sample_deep_dyadics(std::uint64_t seed, std::size_t count, unsigned level);

/// "decreasing", "increasing", "constant" or "mixed".
std::string trend_flag(const std::vector<Rational> &values);

} // namespace mwkit
