// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace mwkit {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Builds num/den in canonical form. Throws DomainError for den == 0.
Rational make_rational(const Integer &num, const Integer &den);

/// 2^n as an exact integer.
Integer pow2(unsigned long n);

/// base^e for a rational base.
Rational pow(const Rational &base, unsigned long e);

/// Exact binomial coefficient C(n, j). Throws DomainError if j > n.
Integer binomial(unsigned long n, unsigned long j);

/// "num/den", including "0/1" and "1/1".
std::string to_string(const Rational &q);

/// Accepts "a", "a/b", "a/2^n" and plain decimals such as "0.9".
/// A leading '-' is accepted. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Nearest double; presentation only.
double to_double(const Rational &q);

/// Shortest decimal string that round-trips through `to_double(q)`.
std::string to_float_string(const Rational &q);

/// True iff q is in [0, 1].
bool in_unit_interval(const Rational &q);

/// A point k/2^n of [0,1]. The representation is canonical: the numerator
/// is odd unless the level is 0, so two equal points compare equal
/// field by field.
class DyadicPoint {
public:
	DyadicPoint() = default;

	/// numerator / 2^level; throws DomainError outside [0,1].
	DyadicPoint(Integer numerator, unsigned long level);

	/// Throws DomainError when q is not dyadic or not in [0,1].
	static DyadicPoint from_rational(const Rational &q);
	static bool is_dyadic(const Rational &q);

	static DyadicPoint zero() { return {}; }
	static DyadicPoint one() { return {1, 0}; }
	/// 1/2^n.
	static DyadicPoint inverse_pow2(unsigned long n) { return {1, n}; }

	const Integer &numerator() const noexcept { return num_; }
	unsigned long level() const noexcept { return level_; }
	Rational value() const;

	bool is_zero() const { return num_ == 0; }
	bool is_one() const { return level_ == 0 && num_ == 1; }

	/// x/2.
	DyadicPoint half() const;
	/// (x+1)/2.
	DyadicPoint half_shifted() const;
	/// (x+k)/2^bits. Throws DomainError when the result leaves [0,1].
	DyadicPoint shift_scale(const Integer &k, unsigned long bits) const;
	/// 1 - x.
	DyadicPoint reflected() const;

	/// Terminating base-2^m digits of x < 1, trailing zeros stripped.
	/// Throws DomainError for x = 1 (it has no terminating expansion).
	std::vector<unsigned> digits(unsigned m) const;

	friend bool operator==(const DyadicPoint &, const DyadicPoint &) = default;
	friend std::strong_ordering operator<=>(const DyadicPoint &a, const DyadicPoint &b);

private:
	void canonicalize();

	Integer num_ = 0;
	unsigned long level_ = 0;
};

/// "k/2^n".
std::string to_string(const DyadicPoint &x);

/// Parses any rational form accepted by parse_rational that is dyadic.
DyadicPoint parse_dyadic(std::string_view text);

/// All k/2^level, k = 0..2^level, ascending.
std::vector<DyadicPoint> dyadic_grid(unsigned long level);

/// Digits of a point of [0,1] in base 2^m.
struct DigitString {
	unsigned base = 2;
	std::vector<unsigned> digits;
	/// True when the listed digits terminate the expansion.
	bool exact = false;

	Rational reconstruct() const;
};

/// Base-`base` expansion of x, at most `max_digits` digits. Terminating
/// expansions are preferred for dyadic rationals; x = 1 yields the
/// all-(base-1) expansion, which never terminates.
DigitString expand(const Rational &x, unsigned base, std::size_t max_digits);
DigitString expand(const DyadicPoint &x, unsigned base, std::size_t max_digits);

/// log2(base) for base = 2^m with m >= 1; throws DomainError otherwise.
unsigned base_exponent(unsigned base);

/// Closed rational interval [lo, hi] certified to contain a value.
class Enclosure {
public:
	Enclosure() = default;
	/// Throws DomainError if lo > hi.
	Enclosure(Rational lo, Rational hi);
	static Enclosure point(const Rational &v) { return {v, v}; }

	const Rational &lo() const noexcept { return lo_; }
	const Rational &hi() const noexcept { return hi_; }
	Rational width() const { return hi_ - lo_; }
	Rational midpoint() const { return (lo_ + hi_) / 2; }
	bool contains(const Rational &v) const { return lo_ <= v && v <= hi_; }
	bool contains(const Enclosure &e) const { return lo_ <= e.lo_ && e.hi_ <= hi_; }
	/// Widens both ends by `slack` >= 0.
	Enclosure widened(const Rational &slack) const;

	friend Enclosure operator+(const Enclosure &a, const Enclosure &b);
	friend Enclosure operator-(const Enclosure &a, const Enclosure &b);
	friend Enclosure operator*(const Rational &s, const Enclosure &a);
	Enclosure &operator+=(const Enclosure &b) { return *this = *this + b; }

	friend bool operator==(const Enclosure &, const Enclosure &) = default;

private:
	Rational lo_ = 0;
	Rational hi_ = 0;
};

/// "[lo, hi]".
std::string to_string(const Enclosure &e);

} // namespace mwkit
