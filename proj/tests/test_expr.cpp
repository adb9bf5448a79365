// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mwkit/errors.hpp"
#include "mwkit/expr.hpp"
#include "test_support.hpp"

using namespace mwkit;

namespace {

DyadicPoint dp(unsigned long k, unsigned long n) { return {Integer(k), n}; }

} // namespace

TEST_CASE("parse each expression form")
{
	CHECK(eval_solution(parse_solution("derham:p=1/3"), dp(1, 3)) == Rational(1, 27));
	CHECK(eval_solution(parse_solution("avg:m=2:P=0,0,1/3,2/3"), dp(1, 1)) == Rational(1, 6));
	CHECK(eval_solution(parse_solution("int:atoms=(1/4:1/2),(3/4:1/2)"), dp(1, 1)) == Rational(1, 2));
	CHECK(eval_solution(parse_solution("int:atoms=(1/2:1)"), dp(3, 3)) == Rational(3, 8));
	const Solution c = parse_solution("convex:a=1/2:derham:p=1/2:avg:m=2:P=0,0,1/3,2/3");
	CHECK(eval_solution(c, dp(1, 1)) == Rational(1, 3));
	const Solution p = parse_solution("convex:a=1/2:(derham:p=1/2):(avg:m=2:P=0,0,1/3,2/3)");
	CHECK(eval_solution(p, dp(1, 1)) == Rational(1, 3));
	const Solution s = parse_solution("series:w=1/2,1/2:derham:p=1/3:derham:p=2/3");
	CHECK(eval_solution(s, dp(1, 1)) == Rational(1, 2));
	const Solution t = parse_solution("series:w=1/2:tail=1/2:derham:p=1/3");
	CHECK(std::get<SeriesTerm>(t.node()).tail_mass == Rational(1, 2));
	const Solution d = parse_solution("int:atoms=(1/2:1/2):density=uniform:nodes=16:rule=midpoint");
	const auto &mu = std::get<IntegralTerm>(d.node()).measure;
	CHECK(mu.density_mass() == Rational(1, 2));
	CHECK(mu.density()->rule == QuadratureRule::midpoint);
	CHECK(mu.density()->nodes == 16);
}

TEST_CASE("canonical printing round-trips")
{
	for (const char *text : {"derham:p=1/3", "avg:m=2:P=0,0,1/3,2/3", "int:atoms=(1/4:1/2),(3/4:1/2)",
	                         "convex:a=1/3:derham:p=1/5:avg:m=1:P=1/2,1/2",
	                         "series:w=1/4,3/4:derham:p=1/3:int:atoms=(1/2:1)",
	                         "series:w=1/2:tail=1/2:derham:p=1/3",
	                         "int:atoms=(1/2:1/2):density=beta(2,2):nodes=32:rule=gl"}) {
		const Solution s = parse_solution(text);
		const std::string canon = to_string(s);
		CHECK(to_string(parse_solution(canon)) == canon);
	}
	CHECK(to_string(parse_solution("derham:p=2/6")) == "derham:p=1/3");
}

TEST_CASE("parse errors carry a position")
{
	try {
		parse_solution("derham:q=1/3");
		FAIL("expected ParseError");
	} catch (const ParseError &e) {
		CHECK(e.position() == 7);
	}
	CHECK_THROWS_AS(parse_solution(""), ParseError);
	CHECK_THROWS_AS(parse_solution("spline:p=1/2"), ParseError);
	CHECK_THROWS_AS(parse_solution("derham:p=1/3 trailing"), ParseError);
	CHECK_THROWS_AS(parse_solution("avg:m=2:P=0,0,1/3"), DomainError);
	CHECK_THROWS_AS(parse_solution("derham:p=3/2"), DomainError);
	CHECK_THROWS_AS(parse_solution("convex:a=1/2:derham:p=1/3"), ParseError);
	CHECK_THROWS_AS(parse_solution("int:atoms=(1/2:1):density=gamma"), DomainError);
}

TEST_CASE("probability vector specs")
{
	const ProbabilityVector a = parse_probability_vector("m=2:K=2,3");
	CHECK(a == ProbabilityVector::uniform_on(2, {2, 3}));
	const ProbabilityVector b = parse_probability_vector("m=2:P=0,0,1/3,2/3");
	CHECK(b == ProbabilityVector::two_tail(2, Rational(1, 3)));
	CHECK_THROWS_AS(parse_probability_vector("m=2:Q=1"), ParseError);
	CHECK_THROWS_AS(parse_probability_vector("m=2:K=4"), DomainError);
}
