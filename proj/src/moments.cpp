// SPDX-License-Identifier: Apache-2.0

#include "mwkit/moments.hpp"

#include <algorithm>
#include <cmath>

#include "mwkit/errors.hpp"

namespace mwkit {

MomentSequence dyadic_samples(const Solution &s, unsigned N)
{
	MomentSequence c;
	c.values.reserve(N + 1);
	for (unsigned j = 0; j <= N; ++j)
		c.values.push_back(eval_solution(s, DyadicPoint::inverse_pow2(j)));
	return c;
}

MomentSequence moments_of_measure(const MeasureSpec &mu, unsigned N)
{
	MomentSequence c;
	c.values.assign(N + 1, Rational(0));
	for (const auto &a : mu.atoms()) {
		Rational power = 1;
		for (unsigned j = 0; j <= N; ++j) {
			c.values[j] += a.mass * power;
			power *= a.location;
		}
	}
	if (const auto &density = mu.density()) {
		const double mass = to_double(mu.density_mass());
		for (unsigned j = 0; j <= N; ++j) {
			const auto q = integrate_density(*density, [j](double p) { return std::pow(p, j); });
			c.values[j] += mu.density_mass() * Rational(q.value);
			c.tolerance = std::max(c.tolerance, mass * q.tolerance);
		}
	}
	return c;
}

Rational forward_difference(const MomentSequence &c, unsigned k, unsigned n)
{
	if (std::size_t{k} + n >= c.size())
		throw DomainError("difference Delta(" + std::to_string(k) + "," + std::to_string(n)
		                  + ") needs " + std::to_string(k + n + 1) + " values");
	Rational acc = 0;
	for (unsigned j = 0; j <= n; ++j) {
		Rational term = binomial(n, j) * c[k + j];
		if (j % 2)
			acc -= term;
		else
			acc += term;
	}
	return acc;
}

bool DifferenceTable::passed() const
{
	return !first_negative().has_value();
}

std::optional<DifferenceEntry> DifferenceTable::first_negative() const
{
	for (const auto &e : entries)
		if (e.value < 0)
			return e;
	return std::nullopt;
}

std::string DifferenceTable::tested_range() const
{
	if (triangular)
		return "k+n<=" + std::to_string(max_k);
	return "k<=" + std::to_string(max_k) + ", n<=" + std::to_string(max_n);
}

namespace {

// rows[n][k] = Delta(k, n) for k + n <= last, via Delta(k,n) = Delta(k,n-1) - Delta(k+1,n-1).
std::vector<std::vector<Rational>> difference_rows(const MomentSequence &c, unsigned last, unsigned max_n)
{
	std::vector<std::vector<Rational>> rows;
	rows.emplace_back(c.values.begin(), c.values.begin() + last + 1);
	for (unsigned n = 1; n <= max_n; ++n) {
		const auto &prev = rows.back();
		std::vector<Rational> row(prev.size() - 1);
		for (std::size_t k = 0; k < row.size(); ++k)
			row[k] = prev[k] - prev[k + 1];
		rows.push_back(std::move(row));
	}
	return rows;
}

} // namespace

DifferenceTable complete_monotonicity_table(const MomentSequence &c, unsigned K, unsigned Nmax)
{
	if (std::size_t{K} + Nmax + 1 > c.size())
		throw DomainError("table with k<=" + std::to_string(K) + ", n<=" + std::to_string(Nmax)
		                  + " needs " + std::to_string(K + Nmax + 1) + " values, have "
		                  + std::to_string(c.size()));
	const auto rows = difference_rows(c, K + Nmax, Nmax);
	DifferenceTable t{{}, K, Nmax, false};
	for (unsigned k = 0; k <= K; ++k)
		for (unsigned n = 0; n <= Nmax; ++n)
			t.entries.push_back({k, n, rows[n][k]});
	return t;
}

DifferenceTable complete_monotonicity_triangle(const MomentSequence &c, unsigned total)
{
	if (std::size_t{total} + 1 > c.size())
		throw DomainError("triangle k+n<=" + std::to_string(total) + " needs "
		                  + std::to_string(total + 1) + " values, have " + std::to_string(c.size()));
	const auto rows = difference_rows(c, total, total);
	DifferenceTable t{{}, total, total, true};
	for (unsigned k = 0; k <= total; ++k)
		for (unsigned n = 0; k + n <= total; ++n)
			t.entries.push_back({k, n, rows[n][k]});
	return t;
}

std::vector<Rational> limit_condition_partial_sums(const MomentSequence &c)
{
	if (c.size() == 0)
		return {};
	const auto last = static_cast<unsigned>(c.size() - 1);
	const auto rows = difference_rows(c, last, last);
	std::vector<Rational> out;
	out.reserve(rows.size());
	for (const auto &row : rows)
		out.push_back(row[0]);
	return out;
}

MonotonicityVerdict monotonicity_forced_inequalities(const Solution &s, unsigned K)
{
	const MomentSequence c = dyadic_samples(s, K + 2);
	MonotonicityVerdict v;
	v.max_k = K;
	for (unsigned k = 0; k <= K; ++k) {
		const Rational d0 = c[k];
		const Rational d1 = c[k] - c[k + 1];
		const Rational d2 = c[k] - 2 * c[k + 1] + c[k + 2];
		if (d0 < 0)
			v.failures.push_back({k, 0, d0});
		if (d1 < 0)
			v.failures.push_back({k, 1, d1});
		if (d2 < 0)
			v.failures.push_back({k, 2, d2});
		const DyadicPoint a(pow2(k) + 1, k + 1);      // 1/2^(k+1) + 1/2
		const DyadicPoint b(pow2(k + 1) + 1, k + 2);  // 1/2^(k+2) + 1/2
		if (eval_solution(s, a) - eval_solution(s, b) != d2)
			v.identity_mismatches.push_back(k);
	}
	return v;
}

// Discrete measure recovery

namespace {

using Poly = std::vector<Rational>; // coefficients, lowest degree first

void trim(Poly &p)
{
	while (!p.empty() && p.back() == 0)
		p.pop_back();
}

Rational evaluate(const Poly &p, const Rational &t)
{
	Rational acc = 0;
	for (auto it = p.rbegin(); it != p.rend(); ++it)
		acc = acc * t + *it;
	return acc;
}

Poly derivative(const Poly &p)
{
	Poly d;
	for (std::size_t i = 1; i < p.size(); ++i)
		d.push_back(p[i] * static_cast<unsigned long>(i));
	trim(d);
	return d;
}

Poly remainder(Poly a, const Poly &b)
{
	trim(a);
	while (a.size() >= b.size() && !a.empty()) {
		const Rational f = a.back() / b.back();
		const std::size_t shift = a.size() - b.size();
		for (std::size_t i = 0; i < b.size(); ++i)
			a[shift + i] -= f * b[i];
		trim(a);
	}
	return a;
}

// Exact division by (t - root); the remainder must vanish.
Poly deflate(const Poly &p, const Rational &root)
{
	Poly q(p.size() - 1);
	Rational carry = 0;
	for (std::size_t i = p.size(); i-- > 1;) {
		carry = p[i] + carry * root;
		q[i - 1] = carry;
	}
	return q;
}

std::vector<Poly> sturm_chain(const Poly &p)
{
	std::vector<Poly> chain{p, derivative(p)};
	while (!chain.back().empty()) {
		Poly r = remainder(chain[chain.size() - 2], chain.back());
		for (auto &x : r)
			x = -x;
		if (r.empty())
			break;
		chain.push_back(std::move(r));
	}
	if (chain.back().empty())
		chain.pop_back();
	return chain;
}

int sign_changes(const std::vector<Poly> &chain, const Rational &t)
{
	int changes = 0;
	int last = 0;
	for (const auto &p : chain) {
		const int s = sgn(evaluate(p, t));
		if (s == 0)
			continue;
		if (last != 0 && s != last)
			++changes;
		last = s;
	}
	return changes;
}

// Distinct roots in (a, b], a and b not roots.
int count_roots(const std::vector<Poly> &chain, const Rational &a, const Rational &b)
{
	return sign_changes(chain, a) - sign_changes(chain, b);
}

// Fraction with the smallest denominator in [lo, hi], 0 <= lo <= hi.
Rational simplest_between(const Rational &lo, const Rational &hi)
{
	Integer fl;
	mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
	if (Rational(fl) == lo)
		return lo;
	if (Rational(fl + 1) <= hi)
		return Rational(fl + 1);
	const Rational inner = simplest_between(1 / (hi - fl), 1 / (lo - fl));
	return Rational(fl) + 1 / inner;
}

// Primitive integer multiple of p; returns its leading coefficient.
Integer integer_leading_coefficient(const Poly &p)
{
	Integer l = 1;
	for (const auto &c : p)
		mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
	Integer g = 0;
	std::vector<Integer> ints;
	for (const auto &c : p) {
		Integer v = c.get_num() * (l / c.get_den());
		mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
		ints.push_back(v);
	}
	return abs(ints.back() / g);
}

// Rational roots of p strictly inside (0,1), ascending. Throws when a root in
// (0,1) is irrational.
std::vector<Rational> rational_roots_in_unit_interval(Poly p)
{
	std::vector<Rational> roots;
	trim(p);
	for (;;) {
		if (p.size() <= 1)
			break;
		const auto chain = sturm_chain(p);
		const Integer lead = integer_leading_coefficient(p);
		const Rational separation = make_rational(1, lead * lead);

		struct Span {
			Rational a, b;
		};
		std::vector<Span> work{{0, 1}};
		std::optional<Rational> exact;
		std::vector<Span> isolated;
		while (!work.empty() && !exact) {
			Span s = work.back();
			work.pop_back();
			const int n = count_roots(chain, s.a, s.b);
			if (n == 0)
				continue;
			if (n == 1 && s.b - s.a < separation) {
				isolated.push_back(s);
				continue;
			}
			const Rational mid = (s.a + s.b) / 2;
			if (evaluate(p, mid) == 0) {
				exact = mid;
				break;
			}
			work.push_back({mid, s.b});
			work.push_back({s.a, mid});
		}
		if (exact) {
			roots.push_back(*exact);
			while (p.size() > 1 && evaluate(p, *exact) == 0)
				p = deflate(p, *exact);
			continue; // recount on the deflated polynomial
		}
		for (const auto &s : isolated) {
			const Rational cand = simplest_between(s.a, s.b);
			if (cand.get_den() > lead || evaluate(p, cand) != 0)
				throw NotAtomicError("moment data implies an irrational atom in ("
				                     + to_string(s.a) + ", " + to_string(s.b) + ")");
			roots.push_back(cand);
		}
		break;
	}
	std::sort(roots.begin(), roots.end());
	roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
	return roots;
}

// Gaussian elimination over the rationals; nullopt if singular.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> rhs)
{
	const std::size_t n = rhs.size();
	for (std::size_t col = 0; col < n; ++col) {
		std::size_t pivot = col;
		while (pivot < n && a[pivot][col] == 0)
			++pivot;
		if (pivot == n)
			return std::nullopt;
		std::swap(a[pivot], a[col]);
		std::swap(rhs[pivot], rhs[col]);
		for (std::size_t row = 0; row < n; ++row) {
			if (row == col || a[row][col] == 0)
				continue;
			const Rational f = a[row][col] / a[col][col];
			for (std::size_t j = col; j < n; ++j)
				a[row][j] -= f * a[col][j];
			rhs[row] -= f * rhs[col];
		}
	}
	for (std::size_t i = 0; i < n; ++i)
		rhs[i] /= a[i][i];
	return rhs;
}

} // namespace

MeasureSpec recover_discrete_measure(const MomentSequence &c, unsigned r)
{
	if (r == 0)
		throw DomainError("number of atoms must be positive");
	if (c.size() < 2 * std::size_t{r})
		throw DomainError("recovering " + std::to_string(r) + " atoms needs "
		                  + std::to_string(2 * r) + " moments, have " + std::to_string(c.size()));

	// Monic t^r + a_{r-1} t^{r-1} + ... + a_0 annihilating the moment sequence.
	std::vector<std::vector<Rational>> hankel(r, std::vector<Rational>(r));
	std::vector<Rational> rhs(r);
	for (unsigned j = 0; j < r; ++j) {
		for (unsigned i = 0; i < r; ++i)
			hankel[j][i] = c[j + i];
		rhs[j] = -c[j + r];
	}
	const auto coeffs = solve(hankel, rhs);
	if (!coeffs)
		throw NotAtomicError("Hankel matrix of order " + std::to_string(r) + " is singular");
	Poly q(*coeffs);
	q.push_back(1);

	if (evaluate(q, 0) == 0 || evaluate(q, 1) == 0)
		throw NotAtomicError("moment data puts an atom at 0 or 1");
	const std::vector<Rational> atoms = rational_roots_in_unit_interval(q);
	if (atoms.size() != r)
		throw NotAtomicError("found " + std::to_string(atoms.size()) + " distinct atoms in (0,1), expected "
		                     + std::to_string(r));

	std::vector<std::vector<Rational>> vandermonde(r, std::vector<Rational>(r));
	for (unsigned j = 0; j < r; ++j)
		for (unsigned i = 0; i < r; ++i)
			vandermonde[j][i] = pow(atoms[i], j);
	const auto masses = solve(vandermonde, std::vector<Rational>(c.values.begin(), c.values.begin() + r));
	if (!masses)
		throw NotAtomicError("Vandermonde system is singular");

	std::vector<Atom> out;
	for (unsigned i = 0; i < r; ++i) {
		if ((*masses)[i] <= 0)
			throw NotAtomicError("recovered mass " + to_string((*masses)[i]) + " at "
			                     + to_string(atoms[i]) + " is not positive");
		out.push_back({atoms[i], (*masses)[i]});
	}
	for (std::size_t j = 0; j < c.size(); ++j) {
		Rational m = 0;
		for (const auto &a : out)
			m += a.mass * pow(a.location, j);
		if (m != c[j])
			throw NotAtomicError("recovered measure misses moment c_" + std::to_string(j) + ": "
			                     + to_string(m) + " != " + to_string(c[j]));
	}
	try {
		return MeasureSpec::atomic(std::move(out));
	} catch (const DomainError &e) {
		throw NotAtomicError(std::string("recovered atoms are not a probability measure: ") + e.what());
	}
}

} // namespace mwkit
