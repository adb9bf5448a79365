// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "mwkit/ifs.hpp"
#include "mwkit/solutions.hpp"

namespace mwkit {

/// Parses the textual solution grammar:
///
///     derham:p=<q>
///     avg:m=<m>:P=<q>,<q>,...
///     int:atoms=(<loc>:<mass>),...[:density=<name>][:nodes=<n>][:rule=gl|midpoint]
///     int:density=<name>[:nodes=<n>][:rule=gl|midpoint]
///     convex:a=<q>:<expr>:<expr>
///     series:w=<q>,<q>,...[:tail=<q>]:<expr>:<expr>...
///
/// Any <expr> may be wrapped in parentheses. Throws ParseError with the
/// offending offset, or DomainError when the parsed values violate an
/// invariant.
Solution parse_solution(std::string_view text);

/// Canonical text form; parse_solution(to_string(s)) rebuilds s.
std::string to_string(const Solution &s);

/// "m=<m>:P=<q>,..." or "m=<m>:K=<k>,..." (equal weights on K).
ProbabilityVector parse_probability_vector(std::string_view text);

} // namespace mwkit
