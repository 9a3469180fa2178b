#include "ptorder/magnus.hpp"

#include <stdexcept>

#include "ptorder/errors.hpp"

namespace ptorder {

namespace {

void require_cap(int cap)
{
	if (cap < 1)
		throw std::invalid_argument("Magnus cap must be >= 1");
}

// Series of a single letter: 1 + v for a generator, the truncated geometric
// series 1 - v + v^2 - ... for its inverse.
Poly letter_series(Letter l, int cap)
{
	char var = (l == 1 || l == -1) ? 'x' : 'y';
	Poly p;
	if (l > 0)
	{
		p[Monomial()] = 1;
		p[Monomial(1, var)] = 1;
		return p;
	}
	Monomial m;
	BigInt c = 1;
	for (int d = 0; d <= cap; ++d)
	{
		p[m] = c;
		m += var;
		c = -c;
	}
	return p;
}

} // namespace

MagnusSeries MagnusSeries::one(int cap)
{
	require_cap(cap);
	MagnusSeries s;
	s.cap_ = cap;
	s.coeffs_[Monomial()] = 1;
	return s;
}

BigInt MagnusSeries::coefficient(const Monomial &m) const
{
	auto it = coeffs_.find(m);
	return it == coeffs_.end() ? BigInt(0) : it->second;
}

Poly MagnusSeries::homogeneous_part(int degree) const
{
	Poly out;
	for (const auto &[m, c] : coeffs_)
		if (static_cast<int>(m.size()) == degree)
			out[m] = c;
	return out;
}

MagnusSeries operator*(const MagnusSeries &l, const MagnusSeries &r)
{
	if (l.cap_ != r.cap_)
		throw std::invalid_argument("multiplying Magnus series with different caps");
	MagnusSeries out;
	out.cap_ = l.cap_;
	const std::size_t cap = static_cast<std::size_t>(l.cap_);
	for (const auto &[ml, cl] : l.coeffs_)
	{
		for (const auto &[mr, cr] : r.coeffs_)
		{
			if (ml.size() + mr.size() > cap)
				continue;
			BigInt &slot = out.coeffs_[ml + mr];
			slot += cl * cr;
		}
	}
	for (auto it = out.coeffs_.begin(); it != out.coeffs_.end();)
	{
		if (it->second == 0)
			it = out.coeffs_.erase(it);
		else
			++it;
	}
	return out;
}

MagnusSeries MagnusSeries::expand(const Word &w, int cap)
{
	require_cap(cap);
	MagnusSeries acc = one(cap);
	for (Letter l : w.letters())
	{
		MagnusSeries ls;
		ls.cap_ = cap;
		ls.coeffs_ = letter_series(l, cap);
		acc = acc * ls;
	}
	return acc;
}

std::string MagnusSeries::dump() const
{
	std::string out;
	for (const auto &[m, c] : coeffs_)
	{
		out += m.empty() ? "1" : m;
		out += ' ';
		out += c.str();
		out += '\n';
	}
	return out;
}

Depth depth(const Word &w, int cap)
{
	require_cap(cap);
	if (w.is_identity())
		return Depth::infinite();
	MagnusSeries s = MagnusSeries::expand(w, cap);
	for (const auto &[m, c] : s.coefficients())
	{
		if (m.empty())
			continue;
		return Depth::finite(static_cast<int>(m.size()));
	}
	return Depth::at_least_value(cap + 1);
}

Poly leading_part(const Word &w, int cap)
{
	if (w.is_identity())
		throw std::invalid_argument("leading_part of the identity word");
	require_cap(cap);
	MagnusSeries s = MagnusSeries::expand(w, cap);
	for (const auto &[m, c] : s.coefficients())
	{
		if (m.empty())
			continue;
		return s.homogeneous_part(static_cast<int>(m.size()));
	}
	throw ResourceLimit("Magnus depth exceeds cap " + std::to_string(cap), cap + 1);
}

bool in_lcs(const Word &w, int n, int cap)
{
	if (n < 1)
		throw std::invalid_argument("lower central series index must be >= 1");
	if (cap < n)
		throw std::invalid_argument("in_lcs requires cap >= n");
	if (w.is_identity())
		return true;
	return depth(w, cap).at_least(n);
}

} // namespace ptorder
