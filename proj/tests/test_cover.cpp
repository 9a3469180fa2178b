#include <doctest.h>

#include "ptorder/cover.hpp"
#include "ptorder/errors.hpp"
#include "ptorder/monodromy.hpp"
#include "ptorder/rng.hpp"

using namespace ptorder;

namespace {

CellSum cells(std::initializer_list<std::pair<Cell, std::int64_t>> entries)
{
	CellSum s;
	for (const auto &[c, k] : entries)
		s.add(c, k);
	return s;
}

const Word &g0()
{
	static const Word w = parse_word("[a,b]");
	return w;
}

const Word &g1()
{
	static const Word w = parse_word("[b,A]");
	return w;
}

// Random element of the commutator subgroup: balanced letters, reduced.
Word random_g2_word(Rng &rng, int pairs)
{
	std::vector<Letter> ls;
	int na = static_cast<int>(rng.range(0, pairs));
	int nb = static_cast<int>(rng.range(na == 0 ? 1 : 0, pairs));
	for (int i = 0; i < na; ++i)
	{
		ls.push_back(+1);
		ls.push_back(-1);
	}
	for (int i = 0; i < nb; ++i)
	{
		ls.push_back(+2);
		ls.push_back(-2);
	}
	for (std::size_t i = ls.size(); i > 1; --i)
		std::swap(ls[i - 1], ls[rng.below(i)]);
	return Word::from_letters(ls);
}

} // namespace

TEST_CASE("lattice paths")
{
	LatticePath sq = LatticePath::of(g0());
	CHECK(sq.points.size() == 5);
	CHECK(sq.endpoint() == Vec2{0, 0});
	CHECK(sq.points[1] == Vec2{1, 0});
	CHECK(sq.points[2] == Vec2{1, 1});

	CHECK(LatticePath::of(parse_word("ab")).endpoint() == Vec2{1, 1});
	CHECK(LatticePath::of(Word()).endpoint() == Vec2{0, 0});
	CHECK(LatticePath::of(Word()).points.size() == 1);
}

TEST_CASE("p2 of the lemma loops")
{
	CHECK(p2(g0()) == cells({{{0, 0}, 1}}));
	CHECK(p2(g1()) == cells({{{-1, 0}, 1}}));

	Word y = g0() * g0() * g1().inverse();
	CHECK(p2(y) == cells({{{0, 0}, 2}, {{-1, 0}, -1}}));
	CHECK(p2(y) == p2(g0()).scaled(2) - p2(g1()));

	// Conjugating by a shifts by p1(a) = (1, 0).
	CHECK(p2(conjugate(parse_word("a"), g0())) == cells({{{1, 0}, 1}}));
	CHECK(p2(Word()).is_zero());
}

TEST_CASE("p2 rejects words outside the commutator subgroup")
{
	CHECK_THROWS_AS(p2(parse_word("ab")), NotInCommutatorSubgroup);
	CHECK_THROWS_AS(p2_oracle(parse_word("a")), NotInCommutatorSubgroup);
}

TEST_CASE("scanline agrees with the ray-casting oracle")
{
	CHECK(p2_oracle(g0()) == p2(g0()));
	CHECK(p2_oracle(g1()) == p2(g1()));
	Rng rng(55);
	for (int i = 0; i < 800; ++i)
	{
		Word w = random_g2_word(rng, 15);
		CHECK(p2(w) == p2_oracle(w));
	}
}

TEST_CASE("p2 is a homomorphism on the commutator subgroup")
{
	Rng rng(56);
	for (int i = 0; i < 300; ++i)
	{
		Word u = random_g2_word(rng, 8);
		Word v = random_g2_word(rng, 8);
		CHECK(p2(u * v) == p2(u) + p2(v));
		CHECK(p2(u.inverse()) == -p2(u));
	}
}

TEST_CASE("shift")
{
	CHECK(cells({{{0, 0}, 1}}).shifted(Vec2{2, 3}) == cells({{{2, 3}, 1}}));
	CHECK(CellSum().shifted(Vec2{4, -1}).is_zero());
	CHECK(cells({{{0, 0}, 2}, {{-1, 0}, -1}}).shifted(Vec2{1, 0}) ==
	      cells({{{1, 0}, 2}, {{0, 0}, -1}}));
}

TEST_CASE("shift lemma: conjugation shifts by the conjugator's homology class")
{
	Rng rng(57);
	for (int i = 0; i < 300; ++i)
	{
		Word w = random_g2_word(rng, 10);
		Word x = random_reduced_word(rng.below(10), rng);
		CHECK(p2(conjugate(x, w)) == p2(w).shifted(abelianization(x)));
	}
}

TEST_CASE("cell action of the monodromy")
{
	Mat2 A{2, 1, 1, 1};
	CHECK(cells({{{1, 0}, 1}}).transformed(A) == cells({{{2, 1}, 1}}));
	CHECK(cells({{{0, 0}, 1}}).transformed(A) == cells({{{0, 0}, 1}}));

	Rng rng(58);
	for (int i = 0; i < 100; ++i)
	{
		CellSum u = p2(random_g2_word(rng, 8));
		CellSum v = p2(random_g2_word(rng, 8));
		CHECK((u + v).transformed(A) == u.transformed(A) + v.transformed(A));
	}
}

TEST_CASE("equivariance: p2 . h = cell_action(h_+) . p2")
{
	Rng rng(59);
	for (const char *t : {"xy", "xxy", "xyy"})
	{
		Monodromy h = Monodromy::from_twists(t);
		for (int i = 0; i < 150; ++i)
		{
			Word w = random_g2_word(rng, 10);
			CHECK(p2(h.apply(w)) == p2(w).transformed(h.matrix()));
		}
	}
}

TEST_CASE("winding numbers")
{
	CHECK(p2(g0()).total() == 1);
	CHECK(p2(g1()).total() == 1);
	CHECK((p2(g0()) - p2(g1())).total() == 0);
	CHECK(CellSum().total() == 0);

	Rng rng(60);
	for (int i = 0; i < 200; ++i)
	{
		// G3 elements: commutators of a G2 word with anything.
		Word f = random_g2_word(rng, 8);
		Word g = random_reduced_word(1 + rng.below(8), rng);
		CHECK(p2(commutator(f, g)).total() == 0);
		CHECK(p2(commutator(g, f)).total() == 0);
	}
}

TEST_CASE("p2 vanishes exactly on [G2,G2] within G2")
{
	Rng rng(61);
	for (int i = 0; i < 200; ++i)
	{
		Word u = random_g2_word(rng, 6);
		Word v = random_g2_word(rng, 6);
		CHECK(p2(commutator(u, v)).is_zero());
	}
}

TEST_CASE("dump format")
{
	CHECK(cells({{{0, 0}, 2}, {{-1, 0}, -1}}).dump() == "-1 0 -1\n0 0 2\n");
	CHECK(CellSum().dump().empty());
}
