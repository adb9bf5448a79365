// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mwkit/derham.hpp"
#include "mwkit/errors.hpp"
#include "mwkit/ifs.hpp"
#include "test_support.hpp"

using namespace mwkit;

namespace {

const ProbabilityVector cantor_like = ProbabilityVector::two_tail(2, Rational(1, 3));

DyadicPoint dp(unsigned long k, unsigned long n) { return {Integer(k), n}; }

} // namespace

TEST_CASE("probability vector validation")
{
	CHECK_THROWS_AS(ProbabilityVector(0, {Rational(1)}), DomainError);
	CHECK_THROWS_AS(ProbabilityVector(1, {Rational(1, 2)}), DomainError);
	CHECK_THROWS_AS(ProbabilityVector(1, {Rational(1, 2), Rational(1, 3)}), DomainError);
	CHECK_THROWS_AS(ProbabilityVector(1, {Rational(1), Rational(0)}), DomainError);
	CHECK_THROWS_AS(ProbabilityVector(1, {Rational(3, 2), Rational(-1, 2)}), DomainError);
	CHECK_THROWS_AS(ProbabilityVector::uniform_on(2, {3}), DomainError);
	CHECK_THROWS_AS(ProbabilityVector::uniform_on(2, {1, 4}), DomainError);

	const auto u = ProbabilityVector::uniform_on(2, {2, 3});
	CHECK(u.weights() == std::vector<Rational>{0, 0, Rational(1, 2), Rational(1, 2)});
	CHECK(u.support() == std::vector<unsigned>{2, 3});
	CHECK(u.is_two_tail());
	CHECK_FALSE(u.full_support());
	CHECK(cantor_like.prefix_sum(3) == Rational(1, 3));
	CHECK(to_string(cantor_like) == "0/1,0/1,1/3,2/3");
}

TEST_CASE("Phi_P worked values")
{
	CHECK(eval_phi(cantor_like, dp(1, 1)) == 0);
	CHECK(eval_phi(cantor_like, dp(3, 2)) == Rational(1, 3));
	CHECK(eval_phi(cantor_like, dp(15, 4)) == Rational(5, 9));
	CHECK(eval_phi(cantor_like, DyadicPoint::zero()) == 0);
	CHECK(eval_phi(cantor_like, DyadicPoint::one()) == 1);
}

TEST_CASE("Phi_P agrees with the self-similarity oracle")
{
	gen::Source g(201);
	for (int i = 0; i < 300; ++i) {
		const unsigned m = 1 + static_cast<unsigned>(g.below(3));
		const auto w = g.probability_vector(m);
		const ProbabilityVector P(m, w);
		const DyadicPoint x = g.dyadic(static_cast<unsigned>(g.below(40)));
		CHECK(eval_phi(P, x) == oracle::big_phi(w, x.value()));
	}
}

TEST_CASE("m = 1 reduces to de Rham")
{
	gen::Source g(203);
	for (int t = 0; t < 8; ++t) {
		const Rational p = g.open_unit(30);
		const ProbabilityVector P(1, {p, 1 - p});
		for (const auto &x : dyadic_grid(7))
			CHECK(eval_phi(P, x) == eval_derham(DeRhamParam(p), x));
	}
}

TEST_CASE("property: Phi_P is nondecreasing and bounded")
{
	gen::Source g(205);
	for (int t = 0; t < 10; ++t) {
		const unsigned m = 1 + static_cast<unsigned>(g.below(3));
		const ProbabilityVector P(m, g.probability_vector(m));
		Rational prev = 0;
		for (const auto &x : dyadic_grid(7)) {
			const Rational v = eval_phi(P, x);
			CHECK(v >= prev);
			CHECK(v <= 1);
			prev = v;
		}
	}
}

TEST_CASE("digit recursion Phi((x+l)/2^m) = S_l + p_l Phi(x)")
{
	gen::Source g(207);
	for (int i = 0; i < 200; ++i) {
		const unsigned m = 1 + static_cast<unsigned>(g.below(3));
		const ProbabilityVector P(m, g.probability_vector(m));
		const DyadicPoint x = g.dyadic(static_cast<unsigned>(g.below(30)));
		const unsigned l = static_cast<unsigned>(g.below(P.base()));
		CHECK(eval_phi(P, x.shift_scale(Integer(l), m)) == P.prefix_sum(l) + P[l] * eval_phi(P, x));
	}
}

TEST_CASE("self-replication residual")
{
	CHECK(self_replication_residual(cantor_like, dp(1, 1)) == 0);
	CHECK(self_replication_residual(cantor_like, DyadicPoint::zero()) == 0);
	const ProbabilityVector flat(2, std::vector<Rational>(4, Rational(1, 4)));
	CHECK(self_replication_residual(flat, dp(5, 3)) == 0);

	gen::Source g(209);
	for (int t = 0; t < 6; ++t) {
		const unsigned m = 1 + static_cast<unsigned>(g.below(3));
		const ProbabilityVector P(m, g.probability_vector(m));
		for (const auto &x : dyadic_grid(6))
			CHECK(self_replication_residual(P, x) == 0);
	}
}

TEST_CASE("enclosures of Phi_P")
{
	const Enclosure third = eval_phi_enclosed(cantor_like, Rational(1, 3), 1);
	CHECK(third == Enclosure::point(Rational(0)));
	const ProbabilityVector id(1, {Rational(1, 2), Rational(1, 2)});
	const Enclosure e = eval_phi_enclosed(id, Rational(1, 3), 20);
	CHECK(e.width() == Rational(1, 1 << 20));
	CHECK(e.contains(Rational(1, 3)));
	CHECK(eval_phi_enclosed(cantor_like, Rational(1), 3) == Enclosure::point(Rational(1)));
	CHECK_THROWS_AS(eval_phi_enclosed(cantor_like, Rational(1, 3), 0), DomainError);

	gen::Source g(211);
	for (int i = 0; i < 200; ++i) {
		const unsigned m = 1 + static_cast<unsigned>(g.below(3));
		const auto w = g.probability_vector(m);
		const ProbabilityVector P(m, w);
		const Rational x = g.closed_unit(300);
		const unsigned d = 1 + static_cast<unsigned>(g.below(8));
		const Enclosure coarse = eval_phi_enclosed(P, x, d);
		const Enclosure fine = eval_phi_enclosed(P, x, d + 4);
		CHECK(coarse.contains(fine));
		const Rational refined = DyadicPoint::is_dyadic(x) ? x : expand(x, P.base(), d + 4).reconstruct();
		CHECK(coarse.contains(oracle::big_phi(w, refined)));
	}
}

TEST_CASE("attractor approximations")
{
	const auto K = ProbabilityVector::uniform_on(2, {2, 3});
	const IntervalSet a1 = attractor_approx(K, 1);
	REQUIRE(a1.size() == 1);
	CHECK(a1.intervals()[0] == Interval{dp(1, 1), DyadicPoint::one()});

	const IntervalSet a2 = attractor_approx(K, 2);
	REQUIRE(a2.size() == 2);
	CHECK(a2.intervals()[0] == Interval{dp(5, 3), dp(3, 2)});
	CHECK(a2.intervals()[1] == Interval{dp(7, 3), DyadicPoint::one()});
	CHECK(a2.total_length() == Rational(1, 4));
	const auto gaps = a2.gaps();
	REQUIRE(gaps.size() == 2);
	CHECK(gaps[0] == std::pair{DyadicPoint::zero(), dp(5, 3)});
	CHECK(gaps[1] == std::pair{dp(3, 2), dp(7, 3)});

	const ProbabilityVector full(2, std::vector<Rational>(4, Rational(1, 4)));
	for (unsigned n = 0; n <= 6; ++n) {
		const IntervalSet a = attractor_approx(full, n);
		REQUIRE(a.size() == 1);
		CHECK(a.total_length() == 1);
	}
	CHECK_THROWS_AS(attractor_approx(ProbabilityVector::uniform_on(2, {0, 3}), 12, 100), ResourceError);
}

TEST_CASE("property: attractor approximations are nested and Phi_P is flat on gaps")
{
	gen::Source g(213);
	for (int t = 0; t < 10; ++t) {
		const unsigned m = 1 + static_cast<unsigned>(g.below(3));
		const ProbabilityVector P(m, g.probability_vector(m));
		IntervalSet prev = attractor_approx(P, 0);
		for (unsigned n = 1; n <= 4; ++n) {
			const IntervalSet a = attractor_approx(P, n);
			for (const auto &iv : a.intervals()) {
				CHECK(prev.contains(iv.lo.value()));
				CHECK(prev.contains(iv.hi.value()));
			}
			for (const auto &[lo, hi] : a.gaps())
				CHECK(eval_phi(P, lo) == eval_phi(P, hi));
			prev = a;
		}
	}
}

TEST_CASE("membership")
{
	const auto K = ProbabilityVector::uniform_on(2, {2, 3});
	const auto zero = membership(K, Rational(0), 10);
	CHECK(zero.status == Membership::outside);
	CHECK(zero.level == 1);
	CHECK(membership(K, Rational(3, 4), 10).status == Membership::inside);
	const auto third = membership(K, Rational(1, 3), 10);
	CHECK(third.status == Membership::outside);
	CHECK(third.level == 1);
	CHECK(membership(K, Rational(1), 10).status == Membership::inside);
	// 2/3 = 0.2222... in base 4
	CHECK(membership(K, Rational(2, 3), 10).status == Membership::inside);

	gen::Source g(215);
	for (int i = 0; i < 200; ++i) {
		const DyadicPoint x = g.dyadic(static_cast<unsigned>(g.below(12)));
		const IntervalSet a = attractor_approx(K, 8);
		const auto r = membership(K, x.value(), 8);
		if (r.status == Membership::inside)
			CHECK(a.contains(x.value()));
		if (r.status == Membership::outside)
			CHECK_FALSE(attractor_approx(K, r.level).contains(x.value()));
	}
}

TEST_CASE("zero thresholds and zero sequences")
{
	CHECK(phi_zero_threshold(ProbabilityVector::two_tail(2, Rational(1, 3))) == Rational(2, 3));
	CHECK(phi_zero_threshold(ProbabilityVector::two_tail(3, Rational(1, 2))) == Rational(6, 7));
	CHECK(phi_zero_threshold(ProbabilityVector(1, {Rational(1, 3), Rational(2, 3)})) == 0);
	CHECK_THROWS_AS(phi_zero_threshold(ProbabilityVector(2, std::vector<Rational>(4, Rational(1, 4)))),
	                DomainError);

	for (unsigned m : {2u, 3u}) {
		const Rational t = Rational(int(1u << m) - 2, int(1u << m) - 1);
		for (unsigned q = 0; q <= 10; ++q) {
			const DyadicPoint x = zero_sequence_below(m, q);
			const DyadicPoint y = zero_sequence_above(m, q);
			CHECK(x.value() <= t);
			CHECK(y.value() > t);
			for (const Rational &p : {Rational(1, 3), Rational(1, 2), Rational(3, 4)}) {
				const ProbabilityVector P = ProbabilityVector::two_tail(m, p);
				CHECK(eval_phi(P, x) == 0);
				CHECK(eval_phi(P, y) == pow(p, q + 1));
			}
			if (q > 0) {
				CHECK(zero_sequence_below(m, q - 1) < x);
				CHECK(y < zero_sequence_above(m, q - 1));
			}
		}
	}
	CHECK(zero_sequence_above(2, 0) == dp(3, 2));
}
