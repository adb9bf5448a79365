// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mwkit/derham.hpp"
#include "mwkit/ifs.hpp"
#include "mwkit/numerics.hpp"

namespace mwkit {

// Measures on (0,1)

struct Atom {
	Rational location;
	Rational mass;

	friend bool operator==(const Atom &, const Atom &) = default;
};

enum class QuadratureRule { gauss_legendre, midpoint };

/// Probability density on (0,1), integrated numerically. Results derived
/// from it carry a quadrature tolerance and are not rigorous.
struct Density {
	/// Textual id, e.g. "uniform" or "beta(2,3)".
	std::string name;
	std::function<double(double)> pdf;
	QuadratureRule rule = QuadratureRule::gauss_legendre;
	unsigned nodes = 64;
};

/// Density for a textual id: "uniform" or "beta(a,b)" with positive
/// integer a, b. Throws DomainError for unknown ids.
Density make_density(const std::string &name, QuadratureRule rule, unsigned nodes);

/// A Borel probability measure on (0,1): finitely many atoms plus an
/// optional density carrying the remaining mass.
class MeasureSpec {
public:
	/// Purely atomic; masses must sum to 1 exactly.
	static MeasureSpec atomic(std::vector<Atom> atoms);
	/// Atoms plus a density holding mass 1 - sum(atom masses) > 0. The
	/// density must integrate to 1 within 1e-6 under its own rule.
	static MeasureSpec mixed(std::vector<Atom> atoms, Density density);

	const std::vector<Atom> &atoms() const noexcept { return atoms_; }
	const std::optional<Density> &density() const noexcept { return density_; }
	const Rational &density_mass() const noexcept { return density_mass_; }
	bool is_atomic() const noexcept { return !density_.has_value(); }

private:
	MeasureSpec() = default;
	static void validate_atoms(const std::vector<Atom> &atoms);

	std::vector<Atom> atoms_;
	std::optional<Density> density_;
	Rational density_mass_ = 0;
};

struct QuadratureNode {
	/// Exact binary value of the double node.
	Rational location;
	/// weight * pdf(location), exact binary value of the double product.
	Rational weight;
};

/// Nodes of the density's rule on (0,1) with `panels` subintervals.
std::vector<QuadratureNode> quadrature_nodes(const Density &density, unsigned panels);

/// Integral of f against the density; the tolerance is the difference
/// between the rule at its node count and at half of it.
struct QuadratureResult {
	double value = 0;
	double tolerance = 0;
};
QuadratureResult integrate_density(const Density &density, const std::function<double(double)> &f);

// Solution expressions

class Solution;
using SolutionPtr = std::shared_ptr<const Solution>;

struct DeRhamTerm {
	DeRhamParam param;
};

/// phi_P(x) = (1/m) sum_{i<m} sum_{k<2^i} [Phi_P((x+k)/2^i) - Phi_P(k/2^i)].
struct AveragedTerm {
	ProbabilityVector P;
};

/// phi_mu(x) = integral of phi_p(x) dmu(p).
struct IntegralTerm {
	MeasureSpec measure;
};

/// alpha * left + (1 - alpha) * right.
struct ConvexTerm {
	Rational alpha;
	SolutionPtr left;
	SolutionPtr right;
};

/// sum alpha_n s_n over a finite list; `tail_mass` = 1 - sum alpha_n is the
/// weight of dropped terms and only widens enclosures.
struct SeriesTerm {
	std::vector<std::pair<Rational, SolutionPtr>> terms;
	Rational tail_mass;
};

/// Immutable description of a solution of
///
///     phi(x) = phi(x/2) + phi((x+1)/2) - phi(1/2),  phi(0) = 0, phi(1) = 1.
class Solution {
public:
	using Node = std::variant<DeRhamTerm, AveragedTerm, IntegralTerm, ConvexTerm, SeriesTerm>;

	static Solution derham(Rational p);
	static Solution averaged(ProbabilityVector P);
	static Solution integral(MeasureSpec mu);
	/// Throws DomainError unless alpha is in [0,1].
	static Solution convex(Rational alpha, Solution left, Solution right);
	/// Throws DomainError unless every alpha_n >= 0, tail >= 0 and the
	/// weights plus tail sum to 1.
	static Solution series(std::vector<std::pair<Rational, Solution>> terms, Rational tail_mass = 0);

	const Node &node() const noexcept { return node_; }

private:
	explicit Solution(Node node)
	: node_(std::move(node))
	{}

	Node node_;
};

/// Exact value at a dyadic point. Throws ModeError for density measures
/// or a series with nonzero tail mass.
Rational eval_solution(const Solution &s, const DyadicPoint &x);

struct Evaluation {
	Enclosure enclosure;
	/// Estimated quadrature error already folded into `enclosure`.
	double quadrature_tolerance = 0;
	/// False once any density quadrature contributed.
	bool rigorous = true;
};

/// Enclosure at any rational x in [0,1], using `digits` digits for each
/// underlying distribution function (binary for de Rham terms, base 2^m
/// for averaged terms).
Evaluation eval_solution_enclosed(const Solution &s, const Rational &x, unsigned digits);

/// eval(x) - eval(x/2) - eval((x+1)/2) + eval(1/2); vanishes exactly.
Rational mw_residual(const Solution &s, const DyadicPoint &x);

/// Weights p_k p_l at index 2^m k + l, realizing f_k o f_l.
ProbabilityVector tensor_square(const ProbabilityVector &P);

/// alpha * id + (1 - alpha) * phi_P with P = (0, ..., 0, p, 1-p): strictly
/// increasing, yet its dyadic samples violate the moment limit condition.
/// Requires m >= 2 and p, alpha in (0,1).
Solution strict_nonintegral_witness(unsigned m, const Rational &p, const Rational &alpha);

/// True when the expression class guarantees strict increase.
bool implies_strict_increase(const Solution &s);

/// p/m: value at 1/2 of the averaged solution for P = (0, ..., 0, p, 1-p).
Rational two_tail_half_value(unsigned m, const Rational &p);

/// (2^m - 2^(m-1) - 1)/(2^m - 1): the averaged solution for
/// P = (0, ..., 0, p, 1-p) vanishes exactly on [0, threshold].
Rational two_tail_flat_threshold(unsigned m);

/// 2^n phi(1/2^n), n = 0..count-1.
std::vector<Rational> left_slope_probe(const Solution &s, unsigned count);
/// 2^n (1 - phi(1 - 1/2^n)), n = 0..count-1.
std::vector<Rational> right_slope_probe(const Solution &s, unsigned count);

} // namespace mwkit
