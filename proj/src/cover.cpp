#include "ptorder/cover.hpp"

#include <algorithm>

#include "ptorder/errors.hpp"

namespace ptorder {

CellSum CellSum::single(Cell c, std::int64_t k)
{
	CellSum s;
	s.add(c, k);
	return s;
}

std::int64_t CellSum::at(Cell c) const
{
	auto it = cells_.find(c);
	return it == cells_.end() ? 0 : it->second;
}

void CellSum::add(Cell c, std::int64_t k)
{
	if (k == 0)
		return;
	auto [it, inserted] = cells_.try_emplace(c, k);
	if (!inserted)
	{
		it->second += k;
		if (it->second == 0)
			cells_.erase(it);
	}
}

CellSum operator+(const CellSum &l, const CellSum &r)
{
	CellSum out = l;
	for (const auto &[c, k] : r.cells_)
		out.add(c, k);
	return out;
}

CellSum operator-(const CellSum &l, const CellSum &r)
{
	CellSum out = l;
	for (const auto &[c, k] : r.cells_)
		out.add(c, -k);
	return out;
}

CellSum CellSum::operator-() const
{
	CellSum out;
	for (const auto &[c, k] : cells_)
		out.cells_[c] = -k;
	return out;
}

CellSum CellSum::scaled(std::int64_t k) const
{
	CellSum out;
	if (k == 0)
		return out;
	for (const auto &[c, v] : cells_)
		out.cells_[c] = v * k;
	return out;
}

CellSum CellSum::shifted(Vec2 v) const
{
	CellSum out;
	for (const auto &[c, k] : cells_)
		out.cells_[Cell{c.m + v.x, c.n + v.y}] = k;
	return out;
}

CellSum CellSum::transformed(const Mat2 &A) const
{
	CellSum out;
	for (const auto &[c, k] : cells_)
	{
		Vec2 img = A.apply(Vec2{c.m, c.n});
		out.add(Cell{img.x, img.y}, k);
	}
	return out;
}

std::int64_t CellSum::total() const
{
	std::int64_t t = 0;
	for (const auto &[c, k] : cells_)
		t += k;
	return t;
}

std::string CellSum::dump() const
{
	std::string out;
	for (const auto &[c, k] : cells_)
	{
		out += std::to_string(c.m);
		out += ' ';
		out += std::to_string(c.n);
		out += ' ';
		out += std::to_string(k);
		out += '\n';
	}
	return out;
}

LatticePath LatticePath::of(const Word &w)
{
	LatticePath path;
	path.points.reserve(w.length() + 1);
	Vec2 at;
	path.points.push_back(at);
	for (Letter l : w.letters())
	{
		switch (l)
		{
		case +1: at.x += 1; break;
		case -1: at.x -= 1; break;
		case +2: at.y += 1; break;
		case -2: at.y -= 1; break;
		}
		path.points.push_back(at);
	}
	return path;
}

namespace {

struct VerticalStep {
	std::int64_t x;   // the column the step runs along
	std::int64_t row; // lower y of the unit step
	int dir;          // +1 upward, -1 downward
};

std::vector<VerticalStep> vertical_steps(const Word &w)
{
	std::vector<VerticalStep> steps;
	Vec2 at;
	for (Letter l : w.letters())
	{
		switch (l)
		{
		case +1: at.x += 1; break;
		case -1: at.x -= 1; break;
		case +2:
			steps.push_back({at.x, at.y, +1});
			at.y += 1;
			break;
		case -2:
			at.y -= 1;
			steps.push_back({at.x, at.y, -1});
			break;
		}
	}
	return steps;
}

void require_closed(const Word &w)
{
	Vec2 p1 = abelianization(w);
	if (!p1.is_zero())
		throw NotInCommutatorSubgroup(
		    "word is not in the commutator subgroup: p1 = (" +
		    std::to_string(p1.x) + ", " + std::to_string(p1.y) + ")");
}

} // namespace

CellSum p2(const Word &w)
{
	require_closed(w);
	// Per row, net upward flux through each column; the winding about cell
	// (m, row) is the suffix sum of fluxes at columns > m.
	std::map<std::int64_t, std::map<std::int64_t, std::int64_t>> rows;
	for (const VerticalStep &s : vertical_steps(w))
		rows[s.row][s.x] += s.dir;

	CellSum out;
	for (const auto &[row, fluxes] : rows)
	{
		// Walk flux columns right to left. After absorbing column j the
		// suffix equals the winding of every cell m in [j', j), where
		// j' is the next flux column to the left. The total row flux is
		// zero for a closed loop, so cells left of all columns get 0.
		std::int64_t suffix = 0;
		auto it = fluxes.rbegin();
		while (it != fluxes.rend())
		{
			std::int64_t right_col = it->first;
			suffix += it->second;
			++it;
			std::int64_t left_col =
			    it == fluxes.rend() ? right_col : it->first;
			if (suffix != 0)
				for (std::int64_t m = left_col; m < right_col; ++m)
					out.add(Cell{m, row}, suffix);
		}
	}
	return out;
}

CellSum p2_oracle(const Word &w)
{
	require_closed(w);
	std::vector<VerticalStep> steps = vertical_steps(w);
	if (steps.empty())
		return {};

	std::int64_t minx = steps[0].x, maxx = steps[0].x;
	std::int64_t miny = steps[0].row, maxy = steps[0].row;
	for (const VerticalStep &s : steps)
	{
		minx = std::min(minx, s.x);
		maxx = std::max(maxx, s.x);
		miny = std::min(miny, s.row);
		maxy = std::max(maxy, s.row);
	}

	CellSum out;
	for (std::int64_t m = minx - 1; m < maxx; ++m)
	{
		for (std::int64_t n = miny; n <= maxy; ++n)
		{
			// Ray from (m + 1/2, n + 1/2) to the right: a vertical
			// step crosses it iff it runs along a column > m at row
			// n; upward crossings are counterclockwise.
			std::int64_t winding = 0;
			for (const VerticalStep &s : steps)
				if (s.x > m && s.row == n)
					winding += s.dir;
			out.add(Cell{m, n}, winding);
		}
	}
	return out;
}

} // namespace ptorder
