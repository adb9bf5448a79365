// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mwkit/numerics.hpp"

namespace mwkit {

/// Weights (p_0, ..., p_{2^m - 1}) of the iterated function system
/// f_k(x) = (x + k) / 2^m. Every weight lies in [0,1) and they sum to 1,
/// so at least two of them are nonzero.
class ProbabilityVector {
public:
	static constexpr unsigned max_m = 20;

	/// Throws DomainError when the weights do not satisfy the invariants.
	ProbabilityVector(unsigned m, std::vector<Rational> weights);

	/// Equal weights on `support`.
	static ProbabilityVector uniform_on(unsigned m, const std::vector<unsigned> &support);
	/// (0, ..., 0, p, 1-p).
	static ProbabilityVector two_tail(unsigned m, const Rational &p);

	unsigned m() const noexcept { return m_; }
	unsigned base() const noexcept { return 1u << m_; }
	const std::vector<Rational> &weights() const noexcept { return weights_; }
	const Rational &operator[](unsigned k) const { return weights_[k]; }

	/// S_l = p_0 + ... + p_{l-1}; S_0 = 0.
	const Rational &prefix_sum(unsigned l) const { return prefix_[l]; }

	/// Indices with nonzero weight, ascending.
	std::vector<unsigned> support() const;
	bool in_support(unsigned k) const { return weights_[k] != 0; }
	bool full_support() const;
	/// True iff the vector has the form (0, ..., 0, p, 1-p).
	bool is_two_tail() const;

	friend bool operator==(const ProbabilityVector &a, const ProbabilityVector &b)
	{
		return a.m_ == b.m_ && a.weights_ == b.weights_;
	}

private:
	unsigned m_;
	std::vector<Rational> weights_;
	std::vector<Rational> prefix_;
};

/// "p0,p1,...".
std::string to_string(const ProbabilityVector &P);

/// Distribution function Phi_P of the invariant measure, exact on dyadic
/// points. With d_n the base-2^m digits of x,
///
///     Phi_P(x) = sum_n S_{d_n} p_{d_1} ... p_{d_{n-1}}.
Rational eval_phi(const ProbabilityVector &P, const DyadicPoint &x);

/// Enclosure of Phi_P(x) from `digits` base-2^m digits of x (zero padded).
/// The width is the invariant mass p_{d_1} ... p_{d_digits} of the
/// truncation interval and becomes 0 once a zero weight is hit. x = 1
/// returns [1, 1]. Throws DomainError for digits == 0 or x outside [0,1].
Enclosure eval_phi_enclosed(const ProbabilityVector &P, const Rational &x, unsigned digits);

/// Phi_P(x) - sum_k [Phi_P((x+k)/2^m) - Phi_P(k/2^m)], which vanishes.
Rational self_replication_residual(const ProbabilityVector &P, const DyadicPoint &x);

struct Interval {
	DyadicPoint lo;
	DyadicPoint hi;

	friend bool operator==(const Interval &, const Interval &) = default;
};

/// Sorted, pairwise disjoint closed intervals in [0,1] with dyadic ends.
class IntervalSet {
public:
	IntervalSet() = default;
	/// Throws DomainError unless the intervals are sorted, nonempty and
	/// pairwise disjoint.
	explicit IntervalSet(std::vector<Interval> intervals);

	const std::vector<Interval> &intervals() const noexcept { return intervals_; }
	std::size_t size() const noexcept { return intervals_.size(); }
	bool empty() const noexcept { return intervals_.empty(); }
	bool contains(const Rational &x) const;
	Rational total_length() const;

	/// Components of [0,1] minus the set, as (a, b) with a < b. A component
	/// touching 0 or 1 is reported with that end included.
	std::vector<std::pair<DyadicPoint, DyadicPoint>> gaps() const;

	friend bool operator==(const IntervalSet &, const IntervalSet &) = default;

private:
	std::vector<Interval> intervals_;
};

inline constexpr std::size_t default_interval_cap = std::size_t{1} << 20;

/// A_n = union over k in K_P of f_k(A_{n-1}), A_0 = [0,1], with adjacent
/// intervals merged. Throws ResourceError when an intermediate step would
/// hold more than `cap` intervals.
IntervalSet attractor_approx(const ProbabilityVector &P, unsigned n,
                             std::size_t cap = default_interval_cap);

enum class Membership { inside, outside, undecided };

struct MembershipResult {
	Membership status;
	/// For `outside`: first level at which every expansion of x has left
	/// K_P. Otherwise the number of digits inspected.
	unsigned level;
};

/// Decides whether x lies on the attractor, i.e. whether some base-2^m
/// expansion of x uses only digits in K_P. Dyadic points and eventually
/// periodic expansions found within `depth` digits are decided exactly.
MembershipResult membership(const ProbabilityVector &P, const Rational &x, unsigned depth);

/// (2^m - 2)/(2^m - 1): Phi_P vanishes exactly on [0, threshold] for
/// P = (0, ..., 0, p, 1-p). Throws DomainError for any other P.
Rational phi_zero_threshold(const ProbabilityVector &P);

/// x_0 = (2^m-2)/2^m, x_q = (x_{q-1} + 2^m - 2)/2^m; increases to the
/// zero threshold, and Phi_P(x_q) = 0.
DyadicPoint zero_sequence_below(unsigned m, unsigned q);
/// y_0 = (2^m-1)/2^m, y_q = (y_{q-1} + 2^m - 2)/2^m; decreases to the
/// zero threshold, and Phi_P(y_q) = p^(q+1).
DyadicPoint zero_sequence_above(unsigned m, unsigned q);

} // namespace mwkit
