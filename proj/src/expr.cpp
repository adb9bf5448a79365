// SPDX-License-Identifier: Apache-2.0

#include "mwkit/expr.hpp"

#include <charconv>

#include "mwkit/errors.hpp"

namespace mwkit {

namespace {

class Parser {
public:
	explicit Parser(std::string_view s)
	: s_(s)
	{}

	Solution parse_all()
	{
		Solution s = expression();
		if (i_ != s_.size())
			fail("trailing input");
		return s;
	}

	ProbabilityVector probability_vector_all()
	{
		ProbabilityVector P = probability_vector();
		if (i_ != s_.size())
			fail("trailing input");
		return P;
	}

private:
	[[noreturn]] void fail(const std::string &msg) const { throw ParseError(msg, i_); }

	bool at(std::string_view lit) const { return s_.substr(i_).starts_with(lit); }

	bool eat(std::string_view lit)
	{
		if (!at(lit))
			return false;
		i_ += lit.size();
		return true;
	}

	void expect(std::string_view lit)
	{
		if (!eat(lit))
			fail("expected '" + std::string(lit) + "'");
	}

	// Rational token: digits, '/', '.', '^', '-'.
	Rational rational()
	{
		const std::size_t b = i_;
		while (i_ < s_.size()) {
			const char c = s_[i_];
			if ((c >= '0' && c <= '9') || c == '/' || c == '.' || c == '^' || c == '-')
				++i_;
			else
				break;
		}
		if (b == i_)
			fail("expected a rational number");
		try {
			return parse_rational(s_.substr(b, i_ - b));
		} catch (const ParseError &e) {
			throw ParseError("bad rational '" + std::string(s_.substr(b, i_ - b)) + "'",
			                 b + e.position());
		}
	}

	std::vector<Rational> rational_list()
	{
		std::vector<Rational> out{rational()};
		while (eat(","))
			out.push_back(rational());
		return out;
	}

	unsigned unsigned_value()
	{
		const std::size_t b = i_;
		while (i_ < s_.size() && s_[i_] >= '0' && s_[i_] <= '9')
			++i_;
		unsigned v = 0;
		auto [p, ec] = std::from_chars(s_.data() + b, s_.data() + i_, v);
		if (b == i_ || ec != std::errc())
			fail("expected a nonnegative integer");
		return v;
	}

	template <class F>
	auto located(std::size_t at, F &&f)
	{
		try {
			return f();
		} catch (const DomainError &e) {
			throw DomainError(std::string(e.what()) + " (at offset " + std::to_string(at) + ")");
		}
	}

	Solution expression()
	{
		const std::size_t start = i_;
		if (eat("(")) {
			Solution s = expression();
			expect(")");
			return s;
		}
		if (eat("derham:")) {
			expect("p=");
			Rational p = rational();
			return located(start, [&] { return Solution::derham(p); });
		}
		if (eat("avg:")) {
			ProbabilityVector P = probability_vector();
			return Solution::averaged(std::move(P));
		}
		if (eat("int:"))
			return integral(start);
		if (eat("convex:")) {
			expect("a=");
			Rational a = rational();
			expect(":");
			Solution l = expression();
			expect(":");
			Solution r = expression();
			return located(start, [&] { return Solution::convex(a, std::move(l), std::move(r)); });
		}
		if (eat("series:")) {
			expect("w=");
			std::vector<Rational> w = rational_list();
			Rational tail = 0;
			if (eat(":tail="))
				tail = rational();
			std::vector<std::pair<Rational, Solution>> terms;
			for (auto &wi : w) {
				expect(":");
				terms.emplace_back(std::move(wi), expression());
			}
			return located(start, [&] { return Solution::series(std::move(terms), tail); });
		}
		fail("expected one of derham:, avg:, int:, convex:, series:");
	}

	Solution integral(std::size_t start)
	{
		std::vector<Atom> atoms;
		std::optional<std::string> density;
		unsigned nodes = 64;
		QuadratureRule rule = QuadratureRule::gauss_legendre;
		bool first = true;
		for (;;) {
			if (!first) {
				// a ':' not followed by a known key belongs to the enclosing expression
				if (!(at(":atoms=") || at(":density=") || at(":nodes=") || at(":rule=")))
					break;
				++i_;
			}
			first = false;
			if (eat("atoms=")) {
				do {
					expect("(");
					Rational loc = rational();
					expect(":");
					Rational mass = rational();
					expect(")");
					atoms.push_back({std::move(loc), std::move(mass)});
				} while (eat(","));
			} else if (eat("density=")) {
				const std::size_t b = i_;
				int depth = 0;
				while (i_ < s_.size() && (depth > 0 || (s_[i_] != ':' && s_[i_] != ')'))) {
					if (s_[i_] == '(')
						++depth;
					else if (s_[i_] == ')')
						--depth;
					++i_;
				}
				if (b == i_)
					fail("expected a density name");
				density = std::string(s_.substr(b, i_ - b));
			} else if (eat("nodes=")) {
				nodes = unsigned_value();
			} else if (eat("rule=")) {
				if (eat("gl"))
					rule = QuadratureRule::gauss_legendre;
				else if (eat("midpoint"))
					rule = QuadratureRule::midpoint;
				else
					fail("expected rule gl or midpoint");
			} else {
				fail("expected atoms=, density=, nodes= or rule=");
			}
		}
		return located(start, [&] {
			if (density)
				return Solution::integral(MeasureSpec::mixed(std::move(atoms),
				                                             make_density(*density, rule, nodes)));
			return Solution::integral(MeasureSpec::atomic(std::move(atoms)));
		});
	}

	ProbabilityVector probability_vector()
	{
		const std::size_t start = i_;
		expect("m=");
		const unsigned m = unsigned_value();
		if (eat(":P=")) {
			std::vector<Rational> w = rational_list();
			return located(start, [&] { return ProbabilityVector(m, std::move(w)); });
		}
		if (eat(":K=")) {
			std::vector<unsigned> k{unsigned_value()};
			while (eat(","))
				k.push_back(unsigned_value());
			return located(start, [&] { return ProbabilityVector::uniform_on(m, k); });
		}
		fail("expected ':P=' or ':K='");
	}

	std::string_view s_;
	std::size_t i_ = 0;
};

template <class... Ts>
struct overloaded : Ts... {
	using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

Solution parse_solution(std::string_view text)
{
	return Parser(text).parse_all();
}

ProbabilityVector parse_probability_vector(std::string_view text)
{
	return Parser(text).probability_vector_all();
}

std::string to_string(const Solution &s)
{
	return std::visit(
	    overloaded{
	        [](const DeRhamTerm &t) { return "derham:p=" + to_string(t.param.p()); },
	        [](const AveragedTerm &t) {
		        return "avg:m=" + std::to_string(t.P.m()) + ":P=" + to_string(t.P);
	        },
	        [](const IntegralTerm &t) {
		        std::string out = "int:";
		        const auto &mu = t.measure;
		        std::string atoms;
		        for (const auto &a : mu.atoms()) {
			        if (!atoms.empty())
				        atoms += ',';
			        atoms += "(" + to_string(a.location) + ":" + to_string(a.mass) + ")";
		        }
		        if (!atoms.empty())
			        out += "atoms=" + atoms;
		        if (const auto &d = mu.density()) {
			        if (!atoms.empty())
				        out += ':';
			        out += "density=" + d->name + ":nodes=" + std::to_string(d->nodes) + ":rule="
			               + (d->rule == QuadratureRule::midpoint ? "midpoint" : "gl");
		        }
		        return out;
	        },
	        [](const ConvexTerm &t) {
		        return "convex:a=" + to_string(t.alpha) + ":" + to_string(*t.left) + ":"
		               + to_string(*t.right);
	        },
	        [](const SeriesTerm &t) {
		        std::string w;
		        std::string children;
		        for (const auto &[a, term] : t.terms) {
			        if (!w.empty())
				        w += ',';
			        w += to_string(a);
			        children += ":" + to_string(*term);
		        }
		        std::string out = "series:w=" + w;
		        if (t.tail_mass != 0)
			        out += ":tail=" + to_string(t.tail_mass);
		        return out + children;
	        },
	    },
	    s.node());
}

} // namespace mwkit
