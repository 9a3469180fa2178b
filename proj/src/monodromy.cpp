#include "ptorder/monodromy.hpp"

#include <algorithm>
#include <cctype>

#include "ptorder/errors.hpp"

namespace ptorder {

namespace {

Word word_of(std::initializer_list<Letter> ls)
{
	return Word::from_letters(std::span<const Letter>(ls.begin(), ls.size()));
}

Endo twist_of(char c, std::size_t offset)
{
	const Word a = word_of({+1});
	const Word b = word_of({+2});
	switch (c)
	{
	case 'x': return {word_of({+1, +2}), b};        // a -> ab
	case 'X': return {word_of({+1, -2}), b};        // a -> aB
	case 'y': return {a, word_of({+2, +1})};        // b -> ba
	case 'Y': return {a, word_of({+2, -1})};        // b -> bA
	default:
		throw ParseError(std::string("invalid twist letter '") + c + "'", offset);
	}
}

} // namespace

Endo Endo::identity()
{
	return {word_of({+1}), word_of({+2})};
}

Word Endo::apply(const Word &w) const
{
	const Word ia = image_a.inverse();
	const Word ib = image_b.inverse();
	std::vector<Letter> out;
	out.reserve(w.length() * std::max<std::size_t>(image_a.length(), image_b.length()));
	auto append = [&out](const Word &piece) {
		for (Letter l : piece.letters())
		{
			if (!out.empty() && out.back() == -l)
				out.pop_back();
			else
				out.push_back(l);
		}
	};
	for (Letter l : w.letters())
	{
		switch (l)
		{
		case +1: append(image_a); break;
		case -1: append(ia); break;
		case +2: append(image_b); break;
		case -2: append(ib); break;
		}
	}
	return Word::from_letters(out);
}

Endo compose(const Endo &first, const Endo &then)
{
	return {then.apply(first.image_a), then.apply(first.image_b)};
}

Endo twists_to_endo(std::string_view twists)
{
	Endo e = Endo::identity();
	for (std::size_t i = 0; i < twists.size(); ++i)
		e = compose(e, twist_of(twists[i], i));
	return e;
}

Mat2 abelianized_matrix(const Endo &e)
{
	Vec2 ca = abelianization(e.image_a);
	Vec2 cb = abelianization(e.image_b);
	return {ca.x, cb.x, ca.y, cb.y};
}

Classification classify(const Mat2 &A)
{
	if (A.det() != 1)
		throw ConfigError("matrix must have determinant 1, got " + A.det().str());
	BigInt t = A.trace();
	Classification c;
	c.hyperbolic = t > 2 || t < -2;
	c.untwisted = t > 2;
	return c;
}

Monodromy Monodromy::from_twists(std::string_view twists)
{
	Monodromy m;
	m.twists_ = std::string(twists);
	m.forward_ = twists_to_endo(twists);

	std::string inv(twists.rbegin(), twists.rend());
	for (char &c : inv)
		c = std::isupper(static_cast<unsigned char>(c))
		        ? static_cast<char>(std::tolower(static_cast<unsigned char>(c)))
		        : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
	m.inverse_ = twists_to_endo(inv);

	m.matrix_ = abelianized_matrix(m.forward_);
	m.matrix_inverse_ = abelianized_matrix(m.inverse_);
	m.cls_ = classify(m.matrix_);
	return m;
}

Word Monodromy::apply(const Word &w, std::int64_t power) const
{
	const Endo &e = power < 0 ? inverse_ : forward_;
	std::int64_t reps = power < 0 ? -power : power;
	Word out = w;
	for (std::int64_t i = 0; i < reps; ++i)
		out = e.apply(out);
	return out;
}

Vec2 Monodromy::act_h1(const Vec2 &v, std::int64_t power) const
{
	const Mat2 &m = power < 0 ? matrix_inverse_ : matrix_;
	std::int64_t reps = power < 0 ? -power : power;
	Vec2 out = v;
	for (std::int64_t i = 0; i < reps; ++i)
		out = m.apply(out);
	return out;
}

BundleElement bundle_mul(const Monodromy &h, const BundleElement &p, const BundleElement &q)
{
	return {p.g * h.apply(q.g, p.k), p.k + q.k};
}

BundleElement bundle_inv(const Monodromy &h, const BundleElement &p)
{
	return {h.apply(p.g.inverse(), -p.k), -p.k};
}

} // namespace ptorder
