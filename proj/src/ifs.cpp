// SPDX-License-Identifier: Apache-2.0

#include "mwkit/ifs.hpp"

#include <algorithm>
#include <map>

#include "mwkit/errors.hpp"

namespace mwkit {

ProbabilityVector::ProbabilityVector(unsigned m, std::vector<Rational> weights)
: m_(m)
, weights_(std::move(weights))
{
	if (m_ == 0 || m_ > max_m)
		throw DomainError("m must lie in 1.." + std::to_string(max_m) + ", got "
		                  + std::to_string(m_));
	if (weights_.size() != base())
		throw DomainError("expected " + std::to_string(base()) + " weights for m = "
		                  + std::to_string(m_) + ", got " + std::to_string(weights_.size()));
	prefix_.resize(weights_.size() + 1);
	prefix_[0] = 0;
	std::size_t nonzero = 0;
	for (std::size_t k = 0; k < weights_.size(); ++k) {
		const Rational &w = weights_[k];
		if (w < 0 || w >= 1)
			throw DomainError("weight p_" + std::to_string(k) + " = " + to_string(w)
			                  + " outside [0,1)");
		nonzero += (w != 0);
		prefix_[k + 1] = prefix_[k] + w;
	}
	if (prefix_.back() != 1)
		throw DomainError("weights sum to " + to_string(prefix_.back()) + ", not 1");
	if (nonzero < 2)
		throw DomainError("support of P needs at least two indices");
}

ProbabilityVector ProbabilityVector::uniform_on(unsigned m, const std::vector<unsigned> &support)
{
	if (m == 0 || m > max_m)
		throw DomainError("m out of range");
	std::vector<Rational> w(std::size_t{1} << m, Rational(0));
	if (support.empty())
		throw DomainError("empty support");
	const Rational each = make_rational(1, static_cast<unsigned long>(support.size()));
	for (unsigned k : support) {
		if (k >= w.size())
			throw DomainError("support index " + std::to_string(k) + " >= 2^m");
		if (w[k] != 0)
			throw DomainError("duplicate support index " + std::to_string(k));
		w[k] = each;
	}
	return {m, std::move(w)};
}

ProbabilityVector ProbabilityVector::two_tail(unsigned m, const Rational &p)
{
	if (m == 0 || m > max_m)
		throw DomainError("m out of range");
	std::vector<Rational> w(std::size_t{1} << m, Rational(0));
	w[w.size() - 2] = p;
	w[w.size() - 1] = 1 - p;
	return {m, std::move(w)};
}

std::vector<unsigned> ProbabilityVector::support() const
{
	std::vector<unsigned> s;
	for (unsigned k = 0; k < base(); ++k)
		if (in_support(k))
			s.push_back(k);
	return s;
}

bool ProbabilityVector::full_support() const
{
	return std::none_of(weights_.begin(), weights_.end(), [](const Rational &w) { return w == 0; });
}

bool ProbabilityVector::is_two_tail() const
{
	return std::all_of(weights_.begin(), weights_.end() - 2, [](const Rational &w) { return w == 0; });
}

std::string to_string(const ProbabilityVector &P)
{
	std::string s;
	for (unsigned k = 0; k < P.base(); ++k) {
		if (k)
			s += ',';
		s += to_string(P[k]);
	}
	return s;
}

Rational eval_phi(const ProbabilityVector &P, const DyadicPoint &x)
{
	if (x.is_one())
		return 1;
	Rational value = 0;
	Rational mass = 1; // p_{d_1} ... p_{d_{n-1}}
	for (unsigned d : x.digits(P.m())) {
		value += P.prefix_sum(d) * mass;
		if (P[d] == 0)
			break;
		mass *= P[d];
	}
	return value;
}

Enclosure eval_phi_enclosed(const ProbabilityVector &P, const Rational &x, unsigned digits)
{
	if (digits == 0)
		throw DomainError("enclosure needs at least one digit");
	if (!in_unit_interval(x))
		throw DomainError("x outside [0,1]: " + to_string(x));
	if (x == 1)
		return Enclosure::point(1);
	DigitString ds = expand(x, P.base(), digits);
	ds.digits.resize(digits, 0);
	Rational lo = 0;
	Rational mass = 1;
	for (unsigned d : ds.digits) {
		lo += P.prefix_sum(d) * mass;
		mass *= P[d];
		if (mass == 0)
			break;
	}
	return {lo, lo + mass};
}

Rational self_replication_residual(const ProbabilityVector &P, const DyadicPoint &x)
{
	Rational rhs = 0;
	for (unsigned k = 0; k < P.base(); ++k)
		rhs += eval_phi(P, x.shift_scale(k, P.m())) - eval_phi(P, DyadicPoint(k, P.m()));
	return eval_phi(P, x) - rhs;
}

// IntervalSet

IntervalSet::IntervalSet(std::vector<Interval> intervals)
: intervals_(std::move(intervals))
{
	for (std::size_t i = 0; i < intervals_.size(); ++i) {
		if (intervals_[i].hi < intervals_[i].lo)
			throw DomainError("interval with lo > hi");
		if (i > 0 && !(intervals_[i - 1].hi < intervals_[i].lo))
			throw DomainError("intervals not sorted and disjoint");
	}
}

bool IntervalSet::contains(const Rational &x) const
{
	return std::any_of(intervals_.begin(), intervals_.end(), [&](const Interval &iv) {
		return iv.lo.value() <= x && x <= iv.hi.value();
	});
}

Rational IntervalSet::total_length() const
{
	Rational len = 0;
	for (const auto &iv : intervals_)
		len += iv.hi.value() - iv.lo.value();
	return len;
}

std::vector<std::pair<DyadicPoint, DyadicPoint>> IntervalSet::gaps() const
{
	std::vector<std::pair<DyadicPoint, DyadicPoint>> out;
	if (intervals_.empty()) {
		out.emplace_back(DyadicPoint::zero(), DyadicPoint::one());
		return out;
	}
	if (!intervals_.front().lo.is_zero())
		out.emplace_back(DyadicPoint::zero(), intervals_.front().lo);
	for (std::size_t i = 1; i < intervals_.size(); ++i)
		out.emplace_back(intervals_[i - 1].hi, intervals_[i].lo);
	if (!intervals_.back().hi.is_one())
		out.emplace_back(intervals_.back().hi, DyadicPoint::one());
	return out;
}

IntervalSet attractor_approx(const ProbabilityVector &P, unsigned n, std::size_t cap)
{
	const std::vector<unsigned> support = P.support();
	std::vector<Interval> current{{DyadicPoint::zero(), DyadicPoint::one()}};
	for (unsigned step = 0; step < n; ++step) {
		if (current.size() * support.size() > cap)
			throw ResourceError("attractor approximation at level " + std::to_string(step + 1)
			                    + " exceeds the cap of " + std::to_string(cap) + " intervals");
		std::vector<Interval> next;
		next.reserve(current.size() * support.size());
		// images under f_k land in [k/2^m, (k+1)/2^m], so this stays sorted
		for (unsigned k : support) {
			for (const auto &iv : current) {
				Interval image{iv.lo.shift_scale(k, P.m()), iv.hi.shift_scale(k, P.m())};
				if (!next.empty() && !(next.back().hi < image.lo))
					next.back().hi = std::max(next.back().hi, image.hi);
				else
					next.push_back(std::move(image));
			}
		}
		current = std::move(next);
	}
	return IntervalSet(std::move(current));
}

namespace {

// First level at which an expansion leaves K_P; 0 when it never does.
struct ExpansionCheck {
	unsigned bad_level = 0;
	bool valid() const { return bad_level == 0; }
};

ExpansionCheck check_terminating(const ProbabilityVector &P, const std::vector<unsigned> &d)
{
	for (std::size_t i = 0; i < d.size(); ++i)
		if (!P.in_support(d[i]))
			return {static_cast<unsigned>(i + 1)};
	if (!P.in_support(0))
		return {static_cast<unsigned>(d.size() + 1)};
	return {};
}

// d_1 ... d_{n-1} (d_n - 1) (base-1) (base-1) ...
ExpansionCheck check_borrowing(const ProbabilityVector &P, const std::vector<unsigned> &d)
{
	const std::size_t n = d.size();
	for (std::size_t i = 0; i + 1 < n; ++i)
		if (!P.in_support(d[i]))
			return {static_cast<unsigned>(i + 1)};
	if (!P.in_support(d[n - 1] - 1))
		return {static_cast<unsigned>(n)};
	if (!P.in_support(P.base() - 1))
		return {static_cast<unsigned>(n + 1)};
	return {};
}

MembershipResult decide(unsigned level, unsigned depth, Membership status)
{
	if (level > depth)
		return {Membership::undecided, depth};
	return {status, level};
}

} // namespace

MembershipResult membership(const ProbabilityVector &P, const Rational &x, unsigned depth)
{
	if (!in_unit_interval(x))
		throw DomainError("x outside [0,1]: " + to_string(x));
	const unsigned b = P.base();

	if (x == 1)
		return decide(1, depth, P.in_support(b - 1) ? Membership::inside : Membership::outside);
	if (x == 0)
		return decide(1, depth, P.in_support(0) ? Membership::inside : Membership::outside);

	if (DyadicPoint::is_dyadic(x)) {
		const auto d = DyadicPoint::from_rational(x).digits(P.m());
		const auto a = check_terminating(P, d);
		const auto c = check_borrowing(P, d);
		const auto n = static_cast<unsigned>(d.size());
		if (a.valid() || c.valid())
			return decide(n, depth, Membership::inside);
		return decide(std::max(a.bad_level, c.bad_level), depth, Membership::outside);
	}

	// Non-dyadic: the expansion is unique and eventually periodic; a repeated
	// remainder closes the cycle.
	std::map<Integer, unsigned> seen;
	Integer num = x.get_num();
	const Integer &den = x.get_den();
	for (unsigned i = 1; i <= depth; ++i) {
		if (!seen.emplace(num, i).second)
			return {Membership::inside, i - 1};
		num *= b;
		Integer d = num / den;
		num -= d * den;
		if (!P.in_support(static_cast<unsigned>(d.get_ui())))
			return {Membership::outside, i};
	}
	if (seen.contains(num))
		return {Membership::inside, depth};
	return {Membership::undecided, depth};
}

Rational phi_zero_threshold(const ProbabilityVector &P)
{
	if (!P.is_two_tail())
		throw DomainError("zero threshold is only known for P = (0,...,0,p,1-p)");
	const long b = static_cast<long>(P.base());
	return make_rational(b - 2, b - 1);
}

DyadicPoint zero_sequence_below(unsigned m, unsigned q)
{
	const unsigned long b = 1ul << m;
	DyadicPoint x(b - 2, m);
	for (unsigned i = 0; i < q; ++i)
		x = x.shift_scale(b - 2, m);
	return x;
}

DyadicPoint zero_sequence_above(unsigned m, unsigned q)
{
	const unsigned long b = 1ul << m;
	DyadicPoint y(b - 1, m);
	for (unsigned i = 0; i < q; ++i)
		y = y.shift_scale(b - 2, m);
	return y;
}

} // namespace mwkit
