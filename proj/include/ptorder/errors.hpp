#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ptorder {

/// Malformed word or twist-word text; `offset` is the byte position of the
/// offending character.
struct ParseError : std::runtime_error {
	ParseError(const std::string &msg, std::size_t offset)
	    : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"),
	      offset(offset)
	{}
	std::size_t offset;
};

/// Invalid configuration: unknown keys, mixed quadratic fields, rejected
/// monodromies, bad matrices.
struct ConfigError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

/// p2 was applied to a word whose abelianization is nonzero.
struct NotInCommutatorSubgroup : std::runtime_error {
	using std::runtime_error::runtime_error;
};

/// A depth or sign query could not be resolved below the configured degree
/// cap; `at_least` is a lower bound on the lower-central-series depth.
struct ResourceLimit : std::runtime_error {
	ResourceLimit(const std::string &msg, int at_least)
	    : std::runtime_error(msg), at_least(at_least)
	{}
	int at_least;
};

} // namespace ptorder
