// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mwkit/numerics.hpp"
#include "mwkit/solutions.hpp"

namespace mwkit {

/// c_0, ..., c_N. `tolerance` is nonzero only when the values came from
/// quadrature.
struct MomentSequence {
	std::vector<Rational> values;
	double tolerance = 0;

	std::size_t size() const noexcept { return values.size(); }
	const Rational &operator[](std::size_t j) const { return values[j]; }
};

/// (phi(1/2^j))_{j=0..N}. For an integral-form solution these are the
/// moments of its mixing measure.
MomentSequence dyadic_samples(const Solution &s, unsigned N);

/// c_j = integral of p^j dmu(p), j = 0..N.
MomentSequence moments_of_measure(const MeasureSpec &mu, unsigned N);

/// sum_{j=0}^n (-1)^j C(n,j) c_{k+j}. Throws DomainError if k + n >= size.
Rational forward_difference(const MomentSequence &c, unsigned k, unsigned n);

struct DifferenceEntry {
	unsigned k;
	unsigned n;
	Rational value;
};

/// Finite slice of the complete-monotonicity conditions. The verdict only
/// speaks for the (k, n) range listed in `entries`.
struct DifferenceTable {
	std::vector<DifferenceEntry> entries;
	unsigned max_k = 0;
	unsigned max_n = 0;
	/// Entries restricted to k + n <= max_k (= max_n).
	bool triangular = false;

	bool passed() const;
	std::optional<DifferenceEntry> first_negative() const;
	/// e.g. "k<=4, n<=20" or "k+n<=24".
	std::string tested_range() const;
};

/// All Delta(k, n) for k <= K, n <= Nmax, row-major in k. Requires
/// K + Nmax <= size - 1.
DifferenceTable complete_monotonicity_table(const MomentSequence &c, unsigned K, unsigned Nmax);

/// All Delta(k, n) with k + n <= total. Requires total <= size - 1.
DifferenceTable complete_monotonicity_triangle(const MomentSequence &c, unsigned total);

/// L(n) = Delta(0, n) for n = 0..size-1; tends to 0 for integral-form
/// solutions.
std::vector<Rational> limit_condition_partial_sums(const MomentSequence &c);

struct InequalityFailure {
	unsigned k;
	unsigned order;
	Rational value;
};

/// Outcome of the low-order differences that monotonicity alone forces.
struct MonotonicityVerdict {
	unsigned max_k = 0;
	std::vector<InequalityFailure> failures;
	/// k for which the second difference disagreed with
	/// phi(1/2^(k+1) + 1/2) - phi(1/2^(k+2) + 1/2).
	std::vector<unsigned> identity_mismatches;

	bool passed() const { return failures.empty() && identity_mismatches.empty(); }
};

/// For k <= K checks phi(1/2^k) >= 0, the first difference >= 0 and the
/// second difference >= 0, the last through its identity with values
/// near 1/2.
MonotonicityVerdict monotonicity_forced_inequalities(const Solution &s, unsigned K);

/// Recovers the r-atomic measure on (0,1) with the given moments by a
/// Hankel solve, exact rational root finding and a Vandermonde solve.
/// All supplied moments must be matched. Throws NotAtomicError when no
/// such measure with rational atoms exists, and DomainError when fewer
/// than 2r moments are given.
MeasureSpec recover_discrete_measure(const MomentSequence &c, unsigned r);

} // namespace mwkit
