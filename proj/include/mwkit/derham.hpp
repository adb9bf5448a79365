// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>

#include "mwkit/numerics.hpp"

namespace mwkit {

/// Parameter p in (0,1) of the de Rham function phi_p, the unique bounded
/// solution of
///
///     phi_p(x/2)     = p phi_p(x)
///     phi_p((x+1)/2) = (1-p) phi_p(x) + p.
class DeRhamParam {
public:
	/// Throws DomainError unless 0 < p < 1.
	explicit DeRhamParam(Rational p);

	const Rational &p() const noexcept { return p_; }
	/// The parameter 1 - p.
	DeRhamParam reflected() const { return DeRhamParam(1 - p_); }

	friend bool operator==(const DeRhamParam &, const DeRhamParam &) = default;

private:
	Rational p_;
};

/// Exact phi_p(x) from the finite binary expansion of x:
///
///     phi_p(sum x_n 2^-n) = sum x_n p^(n - s) (1-p)^s,  s = x_1 + ... + x_{n-1}.
Rational eval_derham(const DeRhamParam &p, const DyadicPoint &x);

/// Certified enclosure of phi_p(x) from the first `digits` binary digits
/// of x (zero padded). The width p^#zeros (1-p)^#ones is the increment of
/// phi_p over the truncation interval, so it never grows with `digits`.
/// x = 1 returns [1, 1]. Throws DomainError for digits == 0 or x outside
/// [0,1].
Enclosure eval_derham_enclosed(const DeRhamParam &p, const Rational &x, unsigned digits);

/// (phi_p(x), 1 - phi_{1-p}(1-x)); the two components agree exactly.
std::pair<Rational, Rational> reflect_check(const DeRhamParam &p, const DyadicPoint &x);

} // namespace mwkit
