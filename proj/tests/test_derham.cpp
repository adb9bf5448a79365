// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mwkit/derham.hpp"
#include "mwkit/errors.hpp"
#include "test_support.hpp"

using namespace mwkit;

TEST_CASE("parameter range")
{
	CHECK_THROWS_AS(DeRhamParam(Rational(0)), DomainError);
	CHECK_THROWS_AS(DeRhamParam(Rational(1)), DomainError);
	CHECK_THROWS_AS(DeRhamParam(Rational(3, 2)), DomainError);
	CHECK(DeRhamParam(Rational(1, 3)).reflected().p() == Rational(2, 3));
}

TEST_CASE("powers at 1/2^n")
{
	CHECK(eval_derham(DeRhamParam(Rational(1, 3)), DyadicPoint::inverse_pow2(3)) == Rational(1, 27));
	for (const Rational &p : {Rational(1, 3), Rational(2, 5), Rational(1, 2), Rational(3, 4)})
		for (unsigned n = 0; n <= 64; ++n)
			CHECK(eval_derham(DeRhamParam(p), DyadicPoint::inverse_pow2(n)) == pow(p, n));
}

TEST_CASE("worked values")
{
	const DeRhamParam third(Rational(1, 3));
	CHECK(eval_derham(third, DyadicPoint(Integer(3), 2)) == Rational(5, 9));
	CHECK(eval_derham(third, DyadicPoint(Integer(1), 2)) == Rational(1, 9));
	CHECK(eval_derham(third, DyadicPoint::zero()) == 0);
	CHECK(eval_derham(third, DyadicPoint::one()) == 1);
}

TEST_CASE("p = 1/2 is the identity")
{
	const DeRhamParam half(Rational(1, 2));
	for (const auto &x : dyadic_grid(10))
		CHECK(eval_derham(half, x) == x.value());
}

TEST_CASE("agrees with the two-branch system oracle")
{
	gen::Source g(101);
	for (int i = 0; i < 400; ++i) {
		const Rational p = g.open_unit(50);
		const DyadicPoint x = g.dyadic(static_cast<unsigned>(g.below(70)));
		CHECK(eval_derham(DeRhamParam(p), x) == oracle::derham(p, x.value()));
	}
}

TEST_CASE("property: strictly increasing on a grid")
{
	gen::Source g(103);
	for (int t = 0; t < 10; ++t) {
		const DeRhamParam p(g.open_unit(30));
		Rational prev = -1;
		for (const auto &x : dyadic_grid(8)) {
			const Rational v = eval_derham(p, x);
			CHECK(v > prev);
			prev = v;
		}
	}
}

TEST_CASE("reflection")
{
	const auto r = reflect_check(DeRhamParam(Rational(1, 3)), DyadicPoint(Integer(1), 2));
	CHECK(r.first == Rational(1, 9));
	CHECK(r.second == Rational(1, 9));
	const auto id = reflect_check(DeRhamParam(Rational(1, 2)), DyadicPoint(Integer(3), 3));
	CHECK(id.first == Rational(3, 8));
	CHECK(id.second == Rational(3, 8));
	const auto one = reflect_check(DeRhamParam(Rational(2, 3)), DyadicPoint::one());
	CHECK(one.first == 1);
	CHECK(one.second == 1);

	gen::Source g(107);
	for (int i = 0; i < 300; ++i) {
		const DeRhamParam p(g.open_unit(40));
		const DyadicPoint x = g.dyadic(static_cast<unsigned>(g.below(50)));
		const auto [a, b] = reflect_check(p, x);
		CHECK(a == b);
	}
}

TEST_CASE("enclosures: worked examples")
{
	const DeRhamParam third(Rational(1, 3));
	CHECK(eval_derham_enclosed(third, Rational(1, 3), 2) == Enclosure(Rational(1, 9), Rational(1, 3)));
	CHECK(eval_derham_enclosed(third, Rational(0), 1) == Enclosure(Rational(0), Rational(1, 3)));
	CHECK(eval_derham_enclosed(third, Rational(0), 2) == Enclosure(Rational(0), Rational(1, 9)));
	CHECK(eval_derham_enclosed(third, Rational(1), 5) == Enclosure::point(Rational(1)));

	const Enclosure id = eval_derham_enclosed(DeRhamParam(Rational(1, 2)), Rational(1, 3), 10);
	CHECK(id.width() == Rational(1, 1024));
	CHECK(id.contains(Rational(1, 3)));

	const Enclosure e = eval_derham_enclosed(third, Rational(1, 3), 16);
	CHECK(e.width() <= pow(Rational(2, 3), 16));

	CHECK_THROWS_AS(eval_derham_enclosed(third, Rational(1, 3), 0), DomainError);
	CHECK_THROWS_AS(eval_derham_enclosed(third, Rational(4, 3), 4), DomainError);
}

TEST_CASE("property: enclosures contain the value at dyadic refinements and shrink")
{
	gen::Source g(109);
	for (int i = 0; i < 200; ++i) {
		const Rational p = g.open_unit(20);
		const Rational x = g.closed_unit(500);
		Rational prev_width = 2;
		Enclosure prev;
		for (unsigned d = 1; d <= 24; d += 1 + static_cast<unsigned>(g.below(3))) {
			const Enclosure e = eval_derham_enclosed(DeRhamParam(p), x, d);
			CHECK(e.width() <= prev_width);
			if (prev_width <= 1)
				CHECK(prev.contains(e));
			prev_width = e.width();
			prev = e;
		}
		// the truncation point is a dyadic refinement of x at level 24
		const auto digits = expand(x, 2, 24);
		const Rational v = oracle::derham(p, digits.reconstruct());
		CHECK(prev.contains(v));
	}
}
