// SPDX-License-Identifier: Apache-2.0

#include "mwkit/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <boost/math/quadrature/gauss.hpp>

#include "mwkit/errors.hpp"

namespace mwkit {

namespace {

template <class... Ts>
struct overloaded : Ts... {
	using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr unsigned gauss_points = 5;

unsigned panel_count(const Density &d)
{
	if (d.rule == QuadratureRule::gauss_legendre)
		return std::max(1u, d.nodes / gauss_points);
	return std::max(1u, d.nodes);
}

} // namespace

Density make_density(const std::string &name, QuadratureRule rule, unsigned nodes)
{
	if (nodes == 0)
		throw DomainError("density needs at least one quadrature node");
	if (name == "uniform")
		return {name, [](double) { return 1.0; }, rule, nodes};
	if (name.starts_with("beta(") && name.ends_with(")")) {
		const std::string args = name.substr(5, name.size() - 6);
		const auto comma = args.find(',');
		if (comma != std::string::npos) {
			try {
				const int a = std::stoi(args.substr(0, comma));
				const int b = std::stoi(args.substr(comma + 1));
				if (a >= 1 && b >= 1) {
					const double norm = std::beta(a, b);
					return {name,
					        [a, b, norm](double p) {
						        return std::pow(p, a - 1) * std::pow(1 - p, b - 1) / norm;
					        },
					        rule, nodes};
				}
			} catch (const std::logic_error &) {
			}
		}
	}
	throw DomainError("unknown density '" + name + "'; expected uniform or beta(a,b)");
}

std::vector<QuadratureNode> quadrature_nodes(const Density &density, unsigned panels)
{
	std::vector<QuadratureNode> out;
	const double h = 1.0 / panels;
	auto add = [&](double t, double w) {
		out.push_back({Rational(t), Rational(w * density.pdf(t))});
	};
	for (unsigned i = 0; i < panels; ++i) {
		const double a = i * h;
		if (density.rule == QuadratureRule::midpoint) {
			add(a + h / 2, h);
			continue;
		}
		using rule = boost::math::quadrature::gauss<double, gauss_points>;
		const auto &x = rule::abscissa();
		const auto &w = rule::weights();
		const double c = a + h / 2;
		// boost stores the nonnegative half of the symmetric rule
		for (std::size_t j = 0; j < x.size(); ++j) {
			add(c + x[j] * h / 2, w[j] * h / 2);
			if (x[j] != 0)
				add(c - x[j] * h / 2, w[j] * h / 2);
		}
	}
	return out;
}

QuadratureResult integrate_density(const Density &density, const std::function<double(double)> &f)
{
	auto run = [&](unsigned panels) {
		double acc = 0;
		for (const auto &n : quadrature_nodes(density, panels))
			acc += n.weight.get_d() * f(n.location.get_d());
		return acc;
	};
	const unsigned panels = panel_count(density);
	const double fine = run(panels);
	const double coarse = run(std::max(1u, panels / 2));
	return {fine, std::abs(fine - coarse)};
}

// MeasureSpec

void MeasureSpec::validate_atoms(const std::vector<Atom> &atoms)
{
	std::set<Rational> locations;
	for (const auto &a : atoms) {
		if (a.location <= 0 || a.location >= 1)
			throw DomainError("atom location " + to_string(a.location) + " outside (0,1)");
		if (a.mass < 0)
			throw DomainError("negative atom mass " + to_string(a.mass));
		if (!locations.insert(a.location).second)
			throw DomainError("duplicate atom location " + to_string(a.location));
	}
}

MeasureSpec MeasureSpec::atomic(std::vector<Atom> atoms)
{
	validate_atoms(atoms);
	Rational total = 0;
	for (const auto &a : atoms)
		total += a.mass;
	if (total != 1)
		throw DomainError("atom masses sum to " + to_string(total) + ", not 1");
	MeasureSpec mu;
	mu.atoms_ = std::move(atoms);
	return mu;
}

MeasureSpec MeasureSpec::mixed(std::vector<Atom> atoms, Density density)
{
	validate_atoms(atoms);
	Rational total = 0;
	for (const auto &a : atoms)
		total += a.mass;
	if (total >= 1)
		throw DomainError("atoms leave no mass for the density");
	const auto q = integrate_density(density, [](double) { return 1.0; });
	if (std::abs(q.value - 1.0) > 1e-6)
		throw DomainError("density '" + density.name + "' integrates to "
		                  + std::to_string(q.value) + ", not 1");
	MeasureSpec mu;
	mu.atoms_ = std::move(atoms);
	mu.density_ = std::move(density);
	mu.density_mass_ = 1 - total;
	return mu;
}

// Solution

Solution Solution::derham(Rational p)
{
	return Solution(DeRhamTerm{DeRhamParam(std::move(p))});
}

Solution Solution::averaged(ProbabilityVector P)
{
	return Solution(AveragedTerm{std::move(P)});
}

Solution Solution::integral(MeasureSpec mu)
{
	return Solution(IntegralTerm{std::move(mu)});
}

Solution Solution::convex(Rational alpha, Solution left, Solution right)
{
	if (alpha < 0 || alpha > 1)
		throw DomainError("convex weight " + to_string(alpha) + " outside [0,1]");
	return Solution(ConvexTerm{std::move(alpha), std::make_shared<const Solution>(std::move(left)),
	                           std::make_shared<const Solution>(std::move(right))});
}

Solution Solution::series(std::vector<std::pair<Rational, Solution>> terms, Rational tail_mass)
{
	if (terms.empty())
		throw DomainError("series needs at least one term");
	if (tail_mass < 0)
		throw DomainError("negative series tail mass");
	SeriesTerm node{{}, tail_mass};
	Rational total = tail_mass;
	for (auto &[w, s] : terms) {
		if (w < 0)
			throw DomainError("negative series weight " + to_string(w));
		total += w;
		node.terms.emplace_back(std::move(w), std::make_shared<const Solution>(std::move(s)));
	}
	if (total != 1)
		throw DomainError("series weights plus tail sum to " + to_string(total) + ", not 1");
	return Solution(std::move(node));
}

namespace {

Rational eval_averaged(const ProbabilityVector &P, const DyadicPoint &x)
{
	Rational acc = 0;
	for (unsigned i = 0; i < P.m(); ++i)
		for (unsigned long k = 0; k < (1ul << i); ++k)
			acc += eval_phi(P, x.shift_scale(k, i)) - eval_phi(P, DyadicPoint(k, i));
	return acc / P.m();
}

} // namespace

Rational eval_solution(const Solution &s, const DyadicPoint &x)
{
	return std::visit(
	    overloaded{
	        [&](const DeRhamTerm &t) { return eval_derham(t.param, x); },
	        [&](const AveragedTerm &t) { return eval_averaged(t.P, x); },
	        [&](const IntegralTerm &t) {
		        if (!t.measure.is_atomic())
			        throw ModeError("integral over a density has no exact value; use an enclosure");
		        Rational acc = 0;
		        for (const auto &a : t.measure.atoms())
			        acc += a.mass * eval_derham(DeRhamParam(a.location), x);
		        return acc;
	        },
	        [&](const ConvexTerm &t) {
		        return Rational(t.alpha * eval_solution(*t.left, x)
		                        + (1 - t.alpha) * eval_solution(*t.right, x));
	        },
	        [&](const SeriesTerm &t) {
		        if (t.tail_mass != 0)
			        throw ModeError("truncated series has no exact value; use an enclosure");
		        Rational acc = 0;
		        for (const auto &[w, term] : t.terms)
			        acc += w * eval_solution(*term, x);
		        return acc;
	        },
	    },
	    s.node());
}

Evaluation eval_solution_enclosed(const Solution &s, const Rational &x, unsigned digits)
{
	if (!in_unit_interval(x))
		throw DomainError("x outside [0,1]: " + to_string(x));
	return std::visit(
	    overloaded{
	        [&](const DeRhamTerm &t) { return Evaluation{eval_derham_enclosed(t.param, x, digits)}; },
	        [&](const AveragedTerm &t) {
		        const auto &P = t.P;
		        Enclosure acc;
		        for (unsigned i = 0; i < P.m(); ++i) {
			        const Integer scale = pow2(i);
			        for (unsigned long k = 0; k < (1ul << i); ++k) {
				        Rational point = (x + k) / scale;
				        acc += eval_phi_enclosed(P, point, digits)
				               - Enclosure::point(eval_phi(P, DyadicPoint(k, i)));
			        }
		        }
		        return Evaluation{make_rational(1, P.m()) * acc};
	        },
	        [&](const IntegralTerm &t) {
		        Evaluation out;
		        for (const auto &a : t.measure.atoms())
			        out.enclosure += a.mass * eval_derham_enclosed(DeRhamParam(a.location), x, digits);
		        if (const auto &density = t.measure.density()) {
			        auto run = [&](unsigned panels) {
				        Enclosure acc;
				        for (const auto &n : quadrature_nodes(*density, panels))
					        acc += n.weight * eval_derham_enclosed(DeRhamParam(n.location), x, digits);
				        return acc;
			        };
			        const unsigned panels = panel_count(*density);
			        const Enclosure fine = run(panels);
			        const Enclosure coarse = run(std::max(1u, panels / 2));
			        const double tol = std::abs(to_double(fine.midpoint() - coarse.midpoint()))
			                           * to_double(t.measure.density_mass());
			        out.enclosure += (t.measure.density_mass() * fine).widened(Rational(tol));
			        out.quadrature_tolerance = tol;
			        out.rigorous = false;
		        }
		        return out;
	        },
	        [&](const ConvexTerm &t) {
		        const Evaluation l = eval_solution_enclosed(*t.left, x, digits);
		        const Evaluation r = eval_solution_enclosed(*t.right, x, digits);
		        return Evaluation{t.alpha * l.enclosure + (1 - t.alpha) * r.enclosure,
		                          to_double(t.alpha) * l.quadrature_tolerance
		                              + to_double(1 - t.alpha) * r.quadrature_tolerance,
		                          l.rigorous && r.rigorous};
	        },
	        [&](const SeriesTerm &t) {
		        Evaluation out;
		        for (const auto &[w, term] : t.terms) {
			        const Evaluation e = eval_solution_enclosed(*term, x, digits);
			        out.enclosure += w * e.enclosure;
			        out.quadrature_tolerance += to_double(w) * e.quadrature_tolerance;
			        out.rigorous = out.rigorous && e.rigorous;
		        }
		        // dropped terms are solutions too, so they take values in [0,1]
		        out.enclosure = Enclosure(out.enclosure.lo(), out.enclosure.hi() + t.tail_mass);
		        return out;
	        },
	    },
	    s.node());
}

Rational mw_residual(const Solution &s, const DyadicPoint &x)
{
	return eval_solution(s, x) - eval_solution(s, x.half()) - eval_solution(s, x.half_shifted())
	       + eval_solution(s, DyadicPoint::inverse_pow2(1));
}

ProbabilityVector tensor_square(const ProbabilityVector &P)
{
	if (2 * P.m() > ProbabilityVector::max_m)
		throw DomainError("tensor square would exceed m = " + std::to_string(ProbabilityVector::max_m));
	const unsigned b = P.base();
	std::vector<Rational> w(std::size_t{b} * b);
	for (unsigned k = 0; k < b; ++k)
		for (unsigned l = 0; l < b; ++l)
			w[std::size_t{b} * k + l] = P[k] * P[l];
	return {2 * P.m(), std::move(w)};
}

Solution strict_nonintegral_witness(unsigned m, const Rational &p, const Rational &alpha)
{
	if (m < 2)
		throw DomainError("witness needs m >= 2");
	if (p <= 0 || p >= 1)
		throw DomainError("witness needs p in (0,1)");
	if (alpha <= 0 || alpha >= 1)
		throw DomainError("witness needs alpha in (0,1)");
	return Solution::convex(alpha, Solution::derham(make_rational(1, 2)),
	                        Solution::averaged(ProbabilityVector::two_tail(m, p)));
}

bool implies_strict_increase(const Solution &s)
{
	return std::visit(overloaded{
	                      [](const DeRhamTerm &) { return true; },
	                      [](const AveragedTerm &t) { return t.P.full_support(); },
	                      [](const IntegralTerm &) { return true; },
	                      [](const ConvexTerm &t) {
		                      return (t.alpha > 0 && implies_strict_increase(*t.left))
		                             || (t.alpha < 1 && implies_strict_increase(*t.right));
	                      },
	                      [](const SeriesTerm &t) {
		                      return std::any_of(t.terms.begin(), t.terms.end(), [](const auto &term) {
			                      return term.first > 0 && implies_strict_increase(*term.second);
		                      });
	                      },
	                  },
	                  s.node());
}

Rational two_tail_half_value(unsigned m, const Rational &p)
{
	return p / m;
}

Rational two_tail_flat_threshold(unsigned m)
{
	const Integer b = pow2(m);
	return make_rational(b - pow2(m - 1) - 1, b - 1);
}

std::vector<Rational> left_slope_probe(const Solution &s, unsigned count)
{
	std::vector<Rational> out;
	for (unsigned n = 0; n < count; ++n)
		out.push_back(pow2(n) * eval_solution(s, DyadicPoint::inverse_pow2(n)));
	return out;
}

std::vector<Rational> right_slope_probe(const Solution &s, unsigned count)
{
	std::vector<Rational> out;
	for (unsigned n = 0; n < count; ++n) {
		const DyadicPoint x(pow2(n) - 1, n);
		out.push_back(pow2(n) * (1 - eval_solution(s, x)));
	}
	return out;
}

} // namespace mwkit
