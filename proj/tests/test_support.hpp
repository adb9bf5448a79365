// SPDX-License-Identifier: Apache-2.0
//
// Shared oracles and seeded generators. The oracles are written directly
// from the defining recursions with plain Rationals and never call the
// library evaluators they are compared against.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mwkit/numerics.hpp"

namespace oracle {

using mwkit::Integer;
using mwkit::Rational;

inline Rational two_pow(unsigned n)
{
	Integer v = 1;
	v <<= n;
	return Rational(v);
}

// The two-branch de Rham system
//   f(x/2) = p f(x),  f((x+1)/2) = p + (1-p) f(x),  f(0) = 0, f(1) = 1,
// unrolled on a dyadic Rational.
inline Rational derham(const Rational &p, Rational x)
{
	Rational scale = 1, offset = 0;
	for (;;) {
		if (x == 0)
			return offset;
		if (x == 1)
			return offset + scale;
		if (x < Rational(1, 2)) {
			scale *= p;
			x *= 2;
		} else {
			offset += scale * p;
			scale *= 1 - p;
			x = 2 * x - 1;
		}
	}
}

// Phi_P from the self-similarity Phi((y + l)/b) = S_l + p_l Phi(y), y in [0,1).
inline Rational big_phi(const std::vector<Rational> &P, Rational x)
{
	const unsigned b = static_cast<unsigned>(P.size());
	Rational scale = 1, offset = 0;
	for (;;) {
		if (x == 0)
			return offset;
		if (x == 1)
			return offset + scale;
		const Rational bx = x * b;
		const Integer l = bx.get_num() / bx.get_den();
		const unsigned li = static_cast<unsigned>(l.get_ui());
		Rational S = 0;
		for (unsigned i = 0; i < li; ++i)
			S += P[i];
		offset += scale * S;
		scale *= P[li];
		x = bx - l;
	}
}

// (1/m) sum_{i<m} sum_{k<2^i} [Phi((x+k)/2^i) - Phi(k/2^i)]
inline Rational averaged(const std::vector<Rational> &P, unsigned m, const Rational &x)
{
	Rational total = 0;
	for (unsigned i = 0; i < m; ++i) {
		const unsigned n = 1u << i;
		for (unsigned k = 0; k < n; ++k)
			total += big_phi(P, (x + k) / n) - big_phi(P, mwkit::make_rational(k, n));
	}
	return total / m;
}

// Pascal's triangle row n.
inline std::vector<Integer> pascal_row(unsigned n)
{
	std::vector<Integer> row{1};
	for (unsigned r = 1; r <= n; ++r) {
		std::vector<Integer> next(r + 1);
		next[0] = next[r] = 1;
		for (unsigned j = 1; j < r; ++j)
			next[j] = row[j - 1] + row[j];
		row = std::move(next);
	}
	return row;
}

// Delta(k, n) by the recurrence Delta(k, n) = Delta(k, n-1) - Delta(k+1, n-1).
inline Rational difference(const std::vector<Rational> &c, unsigned k, unsigned n)
{
	std::vector<Rational> row(c.begin() + k, c.begin() + k + n + 1);
	for (unsigned r = 0; r < n; ++r)
		for (unsigned i = 0; i + 1 < row.size() - r; ++i)
			row[i] = row[i] - row[i + 1];
	return row[0];
}

inline std::vector<Rational> two_tail(unsigned m, const Rational &p)
{
	std::vector<Rational> P(1u << m, Rational(0));
	P[P.size() - 2] = p;
	P[P.size() - 1] = 1 - p;
	return P;
}

} // namespace oracle

namespace gen {

using mwkit::Rational;

// Hand-rolled generators over a fixed mt19937_64 stream. Only raw engine
// output is used so the sequence is identical everywhere.
class Source {
public:
	explicit Source(std::uint64_t seed)
	: engine_(seed)
	{}

	std::uint64_t below(std::uint64_t n) { return engine_() % n; }

	// Rational in (0,1) with denominator up to `max_den`.
	Rational open_unit(unsigned max_den = 64)
	{
		const std::uint64_t den = 2 + below(max_den - 1);
		const std::uint64_t num = 1 + below(den - 1);
		Rational q(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
		q.canonicalize();
		return q;
	}

	// Rational in [0,1].
	Rational closed_unit(unsigned max_den = 1000)
	{
		const std::uint64_t den = 1 + below(max_den);
		const std::uint64_t num = below(den + 1);
		Rational q(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
		q.canonicalize();
		return q;
	}

	mwkit::DyadicPoint dyadic(unsigned level)
	{
		mwkit::Integer k = 0;
		for (unsigned bits = 0; bits < level + 1; bits += 64) {
			k <<= 64;
			k += mwkit::Integer(std::to_string(engine_()));
		}
		mwkit::Integer den = 1;
		den <<= level;
		k %= den + 1;
		return {k, level};
	}

	// Probability vector on 2^m entries with at least two nonzero weights,
	// every weight below 1.
	std::vector<Rational> probability_vector(unsigned m)
	{
		const unsigned b = 1u << m;
		for (;;) {
			std::vector<Rational> w(b);
			Rational total = 0;
			unsigned nonzero = 0;
			for (auto &x : w) {
				const std::uint64_t r = below(4) == 0 ? 0 : 1 + below(9);
				x = Rational(static_cast<unsigned long>(r));
				total += x;
				nonzero += r != 0;
			}
			if (nonzero < 2)
				continue;
			for (auto &x : w)
				x /= total;
			return w;
		}
	}

private:
	std::mt19937_64 engine_;
};

} // namespace gen
