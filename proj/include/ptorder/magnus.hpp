#pragma once

#include <map>
#include <string>

#include "ptorder/quadfield.hpp"
#include "ptorder/word.hpp"

namespace ptorder {

/// Monomial over the noncommuting variables {x, y}; "" is the constant term.
using Monomial = std::string;

/// Length, then lexicographic. This is the dump order and the canonical
/// iteration order everywhere.
struct MonomialOrder {
	bool operator()(const Monomial &l, const Monomial &r) const
	{
		if (l.size() != r.size())
			return l.size() < r.size();
		return l < r;
	}
};

/// Integer polynomial in noncommuting x, y; zero coefficients never stored.
using Poly = std::map<Monomial, BigInt, MonomialOrder>;

/// Degree-truncated Magnus expansion: the image of a word under
/// a -> 1 + x, a^-1 -> 1 - x + x^2 - ..., b -> 1 + y, b^-1 -> 1 - y + ...,
/// with every monomial of length > cap dropped.
class MagnusSeries {
public:
	static MagnusSeries one(int cap);
	static MagnusSeries expand(const Word &w, int cap);

	int cap() const { return cap_; }
	const Poly &coefficients() const { return coeffs_; }
	BigInt coefficient(const Monomial &m) const;
	Poly homogeneous_part(int degree) const;

	/// Caps must match.
	friend MagnusSeries operator*(const MagnusSeries &l, const MagnusSeries &r);

	bool operator==(const MagnusSeries &o) const { return coeffs_ == o.coeffs_; }

	/// One line per monomial, "monomial coefficient", in length-then-lex
	/// order; the constant monomial prints as "1".
	std::string dump() const;

private:
	int cap_ = 0;
	Poly coeffs_;
};

/// Lower-central-series depth n(w) read off the expansion: the least degree
/// with a nonzero coefficient in expand(w) - 1.
struct Depth {
	enum class Kind { Finite, AtLeast, Infinite };
	Kind kind = Kind::Infinite;
	int value = 0; // Finite: n(w); AtLeast: cap + 1; Infinite: unused

	bool is_finite() const { return kind == Kind::Finite; }
	/// True when the depth is known to be >= n.
	bool at_least(int n) const
	{
		return kind == Kind::Infinite || value >= n;
	}
	bool operator==(const Depth &) const = default;
	static Depth finite(int n) { return {Kind::Finite, n}; }
	static Depth at_least_value(int n) { return {Kind::AtLeast, n}; }
	static Depth infinite() { return {Kind::Infinite, 0}; }
};

/// Requires cap >= 1. The identity word maps to the Infinite marker.
Depth depth(const Word &w, int cap);

/// The degree-n(w) homogeneous component of expand(w) - 1. Throws
/// ResourceLimit carrying at_least = cap + 1 when the depth exceeds cap, and
/// std::invalid_argument on the identity word.
Poly leading_part(const Word &w, int cap);

/// Membership test w in G_n; requires cap >= n. Identity is in every term.
bool in_lcs(const Word &w, int n, int cap);

} // namespace ptorder
