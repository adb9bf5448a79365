// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mwkit {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
	using std::domain_error::domain_error;
};

/// Malformed textual input. `position` is a 0-based offset into the input.
class ParseError : public std::runtime_error {
public:
	ParseError(const std::string &what, std::size_t position)
	: std::runtime_error(what + " (at offset " + std::to_string(position) + ")")
	, position_(position)
	{}

	std::size_t position() const noexcept { return position_; }

private:
	std::size_t position_;
};

/// A configured size cap would be exceeded.
class ResourceError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Exact evaluation requested for an expression that only admits enclosures.
class ModeError : public std::logic_error {
public:
	using std::logic_error::logic_error;
};

/// Moment data does not come from an r-atomic measure on (0,1).
class NotAtomicError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

} // namespace mwkit
