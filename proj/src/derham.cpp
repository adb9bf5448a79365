// SPDX-License-Identifier: Apache-2.0

#include "mwkit/derham.hpp"

#include "mwkit/errors.hpp"

namespace mwkit {

DeRhamParam::DeRhamParam(Rational p)
: p_(std::move(p))
{
	if (p_ <= 0 || p_ >= 1)
		throw DomainError("de Rham parameter must lie in (0,1), got " + to_string(p_));
}

Rational eval_derham(const DeRhamParam &param, const DyadicPoint &x)
{
	if (x.is_one())
		return 1;
	const Rational &p = param.p();
	const Rational q = 1 - p;
	Rational value = 0;
	Rational weight = 1; // p^(#zeros) (1-p)^(#ones) over the digits seen so far
	for (unsigned d : x.digits(1)) {
		if (d) {
			value += p * weight;
			weight *= q;
		} else {
			weight *= p;
		}
	}
	return value;
}

Enclosure eval_derham_enclosed(const DeRhamParam &param, const Rational &x, unsigned digits)
{
	if (digits == 0)
		throw DomainError("enclosure needs at least one digit");
	if (!in_unit_interval(x))
		throw DomainError("x outside [0,1]: " + to_string(x));
	if (x == 1)
		return Enclosure::point(1);
	const Rational &p = param.p();
	const Rational q = 1 - p;
	DigitString ds = expand(x, 2, digits);
	ds.digits.resize(digits, 0);
	Rational lo = 0;
	Rational weight = 1;
	for (unsigned d : ds.digits) {
		if (d) {
			lo += p * weight;
			weight *= q;
		} else {
			weight *= p;
		}
	}
	return {lo, lo + weight};
}

std::pair<Rational, Rational> reflect_check(const DeRhamParam &p, const DyadicPoint &x)
{
	return {eval_derham(p, x), 1 - eval_derham(p.reflected(), x.reflected())};
}

} // namespace mwkit
