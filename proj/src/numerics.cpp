// SPDX-License-Identifier: Apache-2.0

#include "mwkit/numerics.hpp"

#include <charconv>
#include <cmath>
#include <utility>

#include "mwkit/errors.hpp"

namespace mwkit {

Rational make_rational(const Integer &num, const Integer &den)
{
	if (den == 0)
		throw DomainError("rational with zero denominator");
	Rational q(num, den);
	q.canonicalize();
	return q;
}

Integer pow2(unsigned long n)
{
	Integer r;
	mpz_ui_pow_ui(r.get_mpz_t(), 2, n);
	return r;
}

Rational pow(const Rational &base, unsigned long e)
{
	Integer n, d;
	mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), e);
	mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), e);
	// powers of coprime integers stay coprime
	Rational r;
	mpq_set_num(r.get_mpq_t(), n.get_mpz_t());
	mpq_set_den(r.get_mpq_t(), d.get_mpz_t());
	return r;
}

Integer binomial(unsigned long n, unsigned long j)
{
	if (j > n)
		throw DomainError("binomial(n, j) requires j <= n");
	Integer r;
	mpz_bin_uiui(r.get_mpz_t(), n, j);
	return r;
}

std::string to_string(const Rational &q)
{
	return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

struct Cursor {
	std::string_view s;
	std::size_t i = 0;

	bool done() const { return i >= s.size(); }
	char peek() const { return done() ? '\0' : s[i]; }
	bool eat(char c)
	{
		if (peek() != c)
			return false;
		++i;
		return true;
	}
	std::string_view digits()
	{
		std::size_t b = i;
		while (!done() && s[i] >= '0' && s[i] <= '9')
			++i;
		return s.substr(b, i - b);
	}
};

Integer to_integer(std::string_view d)
{
	return Integer(std::string(d), 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
	Cursor c{text};
	if (text.empty())
		throw ParseError("empty rational", 0);
	bool neg = c.eat('-');
	auto whole = c.digits();
	if (whole.empty())
		throw ParseError("expected digits", c.i);
	Rational value;
	if (c.eat('/')) {
		Integer den;
		if (c.peek() == '2' && c.s.substr(c.i).starts_with("2^")) {
			c.i += 2;
			auto e = c.digits();
			if (e.empty())
				throw ParseError("expected exponent after '2^'", c.i);
			unsigned long n = 0;
			auto [p, ec] = std::from_chars(e.data(), e.data() + e.size(), n);
			if (ec != std::errc() || n > (1ul << 20))
				throw ParseError("exponent out of range", c.i - e.size());
			den = pow2(n);
		} else {
			auto d = c.digits();
			if (d.empty())
				throw ParseError("expected denominator digits", c.i);
			den = to_integer(d);
			if (den == 0)
				throw ParseError("zero denominator", c.i - d.size());
		}
		value = make_rational(to_integer(whole), den);
	} else if (c.eat('.')) {
		auto frac = c.digits();
		if (frac.empty())
			throw ParseError("expected digits after '.'", c.i);
		Integer num = to_integer(std::string(whole) + std::string(frac));
		Integer den;
		mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
		value = make_rational(num, den);
	} else {
		value = Rational(to_integer(whole));
	}
	if (!c.done())
		throw ParseError(std::string("unexpected character '") + c.peek() + "'", c.i);
	return neg ? Rational(-value) : value;
}

double to_double(const Rational &q)
{
	// mpq_get_d truncates; correct the last ulp toward the nearer neighbour.
	double d = q.get_d();
	double up = std::nextafter(d, q > 0 ? 1e300 : -1e300);
	if (std::isfinite(up)) {
		Rational err_d = abs(q - Rational(d));
		Rational err_up = abs(q - Rational(up));
		if (err_up < err_d)
			return up;
	}
	return d;
}

std::string to_float_string(const Rational &q)
{
	char buf[64];
	auto [end, ec] = std::to_chars(buf, buf + sizeof buf, to_double(q));
	return std::string(buf, end);
}

bool in_unit_interval(const Rational &q)
{
	return q >= 0 && q <= 1;
}

// DyadicPoint

DyadicPoint::DyadicPoint(Integer numerator, unsigned long level)
: num_(std::move(numerator))
, level_(level)
{
	if (num_ < 0 || num_ > pow2(level_))
		throw DomainError("dyadic point outside [0,1]: " + num_.get_str() + "/2^"
		                  + std::to_string(level_));
	canonicalize();
}

void DyadicPoint::canonicalize()
{
	if (num_ == 0) {
		level_ = 0;
		return;
	}
	unsigned long tz = mpz_scan1(num_.get_mpz_t(), 0);
	if (tz > level_)
		tz = level_;
	if (tz > 0) {
		mpz_fdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), tz);
		level_ -= tz;
	}
}

bool DyadicPoint::is_dyadic(const Rational &q)
{
	const Integer &den = q.get_den();
	return mpz_popcount(den.get_mpz_t()) == 1;
}

DyadicPoint DyadicPoint::from_rational(const Rational &q)
{
	if (!in_unit_interval(q))
		throw DomainError("point outside [0,1]: " + to_string(q));
	if (!is_dyadic(q))
		throw DomainError("not a dyadic rational: " + to_string(q));
	unsigned long level = mpz_scan1(q.get_den_mpz_t(), 0);
	return DyadicPoint(q.get_num(), level);
}

Rational DyadicPoint::value() const
{
	return make_rational(num_, pow2(level_));
}

DyadicPoint DyadicPoint::half() const
{
	if (is_zero())
		return *this;
	return DyadicPoint(num_, level_ + 1);
}

DyadicPoint DyadicPoint::half_shifted() const
{
	return shift_scale(1, 1);
}

DyadicPoint DyadicPoint::shift_scale(const Integer &k, unsigned long bits) const
{
	return DyadicPoint(num_ + k * pow2(level_), level_ + bits);
}

DyadicPoint DyadicPoint::reflected() const
{
	return DyadicPoint(pow2(level_) - num_, level_);
}

std::vector<unsigned> DyadicPoint::digits(unsigned m) const
{
	if (is_one())
		throw DomainError("x = 1 has no terminating expansion");
	std::vector<unsigned> out;
	if (is_zero())
		return out;
	unsigned long padded = (level_ + m - 1) / m * m;
	Integer n = num_ << (padded - level_);
	std::size_t count = padded / m;
	out.resize(count);
	const unsigned long mask = (1ul << m) - 1;
	for (std::size_t j = count; j-- > 0;) {
		out[j] = static_cast<unsigned>(mpz_fdiv_ui(n.get_mpz_t(), mask + 1));
		mpz_fdiv_q_2exp(n.get_mpz_t(), n.get_mpz_t(), m);
	}
	while (!out.empty() && out.back() == 0)
		out.pop_back();
	return out;
}

std::strong_ordering operator<=>(const DyadicPoint &a, const DyadicPoint &b)
{
	int c;
	if (a.level_ >= b.level_)
		c = cmp(a.num_, b.num_ << (a.level_ - b.level_));
	else
		c = cmp(a.num_ << (b.level_ - a.level_), b.num_);
	return c < 0 ? std::strong_ordering::less
	     : c > 0 ? std::strong_ordering::greater
	             : std::strong_ordering::equal;
}

std::string to_string(const DyadicPoint &x)
{
	return x.numerator().get_str() + "/2^" + std::to_string(x.level());
}

DyadicPoint parse_dyadic(std::string_view text)
{
	Rational q = parse_rational(text);
	if (!DyadicPoint::is_dyadic(q))
		throw ParseError("not a dyadic rational: " + std::string(text), 0);
	return DyadicPoint::from_rational(q);
}

std::vector<DyadicPoint> dyadic_grid(unsigned long level)
{
	std::vector<DyadicPoint> grid;
	const Integer n = pow2(level);
	if (level > 30)
		throw DomainError("grid level above 30");
	grid.reserve(n.get_ui() + 1);
	for (Integer k = 0; k <= n; ++k)
		grid.emplace_back(k, level);
	return grid;
}

// Digits

unsigned base_exponent(unsigned base)
{
	if (base < 2 || (base & (base - 1)) != 0)
		throw DomainError("base must be a power of two >= 2, got " + std::to_string(base));
	unsigned m = 0;
	while ((1u << m) != base)
		++m;
	return m;
}

Rational DigitString::reconstruct() const
{
	Rational acc = 0;
	Rational scale = make_rational(1, base);
	Rational w = scale;
	for (unsigned d : digits) {
		acc += d * w;
		w *= scale;
	}
	return acc;
}

DigitString expand(const Rational &x, unsigned base, std::size_t max_digits)
{
	base_exponent(base);
	if (!in_unit_interval(x))
		throw DomainError("expand: x outside [0,1]: " + to_string(x));
	DigitString out{base, {}, false};
	if (x == 1) {
		out.digits.assign(max_digits, base - 1);
		return out;
	}
	// fractional part as num/den, numerator reduced each step
	Integer num = x.get_num();
	const Integer den = x.get_den();
	while (out.digits.size() < max_digits && num != 0) {
		num *= base;
		Integer d = num / den;
		num -= d * den;
		out.digits.push_back(static_cast<unsigned>(d.get_ui()));
	}
	out.exact = (num == 0);
	return out;
}

DigitString expand(const DyadicPoint &x, unsigned base, std::size_t max_digits)
{
	return expand(x.value(), base, max_digits);
}

// Enclosure

Enclosure::Enclosure(Rational lo, Rational hi)
: lo_(std::move(lo))
, hi_(std::move(hi))
{
	if (lo_ > hi_)
		throw DomainError("enclosure with lo > hi: [" + to_string(lo_) + ", " + to_string(hi_) + "]");
}

Enclosure Enclosure::widened(const Rational &slack) const
{
	if (slack < 0)
		throw DomainError("negative enclosure slack");
	return {lo_ - slack, hi_ + slack};
}

Enclosure operator+(const Enclosure &a, const Enclosure &b)
{
	return {a.lo_ + b.lo_, a.hi_ + b.hi_};
}

Enclosure operator-(const Enclosure &a, const Enclosure &b)
{
	return {a.lo_ - b.hi_, a.hi_ - b.lo_};
}

Enclosure operator*(const Rational &s, const Enclosure &a)
{
	if (s >= 0)
		return {s * a.lo_, s * a.hi_};
	return {s * a.hi_, s * a.lo_};
}

std::string to_string(const Enclosure &e)
{
	return "[" + to_string(e.lo()) + ", " + to_string(e.hi()) + "]";
}

} // namespace mwkit
