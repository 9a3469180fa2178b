#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ptorder/quadfield.hpp"
#include "ptorder/word.hpp"

namespace ptorder {

/// Key of the unit cell [m, m+1] x [n, n+1] in the grid picture of the
/// abelian cover; (m, n) is the lower-left corner. The basis loop at cell
/// (m, n) is the conjugate a^m b^n [a,b] b^-n a^-m, so the key equals the
/// H_1(T) class q(gamma) of that boundary component.
struct Cell {
	std::int64_t m = 0;
	std::int64_t n = 0;
	auto operator<=>(const Cell &) const = default;
};

/// Finitely supported integer-valued map on Z^2; zero values never stored.
class CellSum {
public:
	CellSum() = default;
	static CellSum single(Cell c, std::int64_t k);

	std::int64_t at(Cell c) const;
	void add(Cell c, std::int64_t k);
	const std::map<Cell, std::int64_t> &cells() const { return cells_; }
	bool is_zero() const { return cells_.empty(); }

	friend CellSum operator+(const CellSum &l, const CellSum &r);
	friend CellSum operator-(const CellSum &l, const CellSum &r);
	CellSum operator-() const;
	CellSum scaled(std::int64_t k) const;

	/// Every key translated by v, coefficients unchanged.
	CellSum shifted(Vec2 v) const;

	/// Keys mapped by the matrix, coefficients unchanged; the action of
	/// the lifted monodromy on the boundary-cell basis.
	CellSum transformed(const Mat2 &A) const;

	/// Sum of all coefficients: the total winding number.
	std::int64_t total() const;

	/// Lines "m n k" sorted lexicographically by (m, n).
	std::string dump() const;

	bool operator==(const CellSum &) const = default;

private:
	std::map<Cell, std::int64_t> cells_;
};

/// The lattice path traced by a word: a steps +e1, b steps +e2, inverses
/// negated. The endpoint equals the abelianization p1 of the word.
struct LatticePath {
	std::vector<Vec2> points; // starts at the origin; length + 1 vertices

	Vec2 endpoint() const { return points.empty() ? Vec2{} : points.back(); }
	static LatticePath of(const Word &w);
};

/// Cell winding numbers of the closed lattice loop of w: coefficient at
/// (m, n) is the winding number about (m + 1/2, n + 1/2), with the
/// counterclockwise unit square "abAB" winding +1 about (0, 0). Computed by
/// a suffix-sum scan over vertical edge crossings per row. Requires
/// p1(w) = 0 and throws NotInCommutatorSubgroup otherwise.
CellSum p2(const Word &w);

/// Same value as p2, computed independently by per-cell ray casting: signed
/// crossings of a rightward horizontal ray from each candidate cell center.
CellSum p2_oracle(const Word &w);

} // namespace ptorder
