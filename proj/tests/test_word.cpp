#include <doctest.h>

#include <map>

#include "ptorder/errors.hpp"
#include "ptorder/rng.hpp"
#include "ptorder/word.hpp"

using namespace ptorder;

namespace {

// Independent reduction oracle: repeatedly delete adjacent inverse pairs
// until none remain.
std::vector<Letter> reduce_oracle(std::vector<Letter> in)
{
	bool changed = true;
	while (changed)
	{
		changed = false;
		for (std::size_t i = 0; i + 1 < in.size(); ++i)
		{
			if (in[i] == -in[i + 1])
			{
				in.erase(in.begin() + i, in.begin() + i + 2);
				changed = true;
				break;
			}
		}
	}
	return in;
}

Word from(std::initializer_list<Letter> ls)
{
	return Word::from_letters(std::span<const Letter>(ls.begin(), ls.size()));
}

} // namespace

TEST_CASE("parse basic words")
{
	CHECK(render(parse_word("abAB")) == "abAB");
	CHECK(parse_word("abAB").length() == 4);
	CHECK(parse_word("aA").is_identity());
	CHECK(parse_word("aA").length() == 0);
	CHECK(parse_word("") == Word());
	CHECK(render(parse_word(" a  b\tA\nB ")) == "abAB");
}

TEST_CASE("parse sugar against the reduction oracle")
{
	// [a,b]^2 expands to a b A B a b A B (length 8, nothing cancels).
	Word w = parse_word("[a,b]^2");
	CHECK(w.length() == 8);
	CHECK(render(w) == "abABabAB");
	std::vector<Letter> raw = {1, 2, -1, -2, 1, 2, -1, -2};
	CHECK(w.letters() == reduce_oracle(raw));

	CHECK(render(parse_word("(ab)^-1")) == "BA");
	CHECK(render(parse_word("a^3")) == "aaa");
	CHECK(render(parse_word("a^-2")) == "AA");
	CHECK(parse_word("a^0").is_identity());
	CHECK(render(parse_word("[b,A]")) == "bABa");
	// [a,b]b reduces to abA before the power is taken.
	CHECK(render(parse_word("([a,b]b)^2")) == "abbA");
}

TEST_CASE("parse errors carry byte offsets")
{
	CHECK_THROWS_AS(parse_word("ac"), ParseError);
	try
	{
		parse_word("ab$c");
		FAIL("no error");
	}
	catch (const ParseError &e)
	{
		CHECK(e.offset == 2);
	}
	CHECK_THROWS_AS(parse_word("(ab"), ParseError);
	CHECK_THROWS_AS(parse_word("[ab]"), ParseError);
	CHECK_THROWS_AS(parse_word("a^"), ParseError);
	CHECK_THROWS_AS(parse_word("a^99999999999999999999"), ParseError);
	CHECK_THROWS_AS(parse_word("(abab)^9000000"), ParseError);
}

TEST_CASE("multiply and invert")
{
	CHECK((parse_word("ab") * parse_word("BA")).is_identity());
	CHECK(render(parse_word("abA") * parse_word("aB")) == "a");
	Word w = parse_word("abbA");
	CHECK(w * Word() == w);
	CHECK(Word() * w == w);
	CHECK(render(parse_word("ab").inverse()) == "BA");
	CHECK(Word().inverse().is_identity());
	CHECK(render(parse_word("abAB").inverse()) == "baBA");
}

TEST_CASE("commutator convention [u,v] = u v u^-1 v^-1")
{
	CHECK(render(commutator(from({1}), from({2}))) == "abAB");
	CHECK(commutator(from({1}), from({1})).is_identity());
	CHECK(render(commutator(from({2}), from({-1}))) == "bABa");
}

TEST_CASE("algebra properties on sampled words")
{
	Rng rng(2024);
	for (int i = 0; i < 400; ++i)
	{
		Word u = random_reduced_word(rng.below(12), rng);
		Word v = random_reduced_word(rng.below(12), rng);
		Word w = random_reduced_word(rng.below(12), rng);
		CHECK((u * v) * w == u * (v * w));
		CHECK((u * u.inverse()).is_identity());
		CHECK((u * v).inverse() == v.inverse() * u.inverse());
		CHECK((u * v).length() <= u.length() + v.length());
		CHECK((u * v).length() % 2 == (u.length() + v.length()) % 2);
		CHECK(parse_word(render(u)) == u);
		Vec2 pu = abelianization(u), pv = abelianization(v);
		CHECK(abelianization(u * v) == pu + pv);
		CHECK(abelianization(commutator(u, v)).is_zero());
	}
}

TEST_CASE("random words: determinism, exact length, reducedness")
{
	Rng r1(99), r2(99);
	for (int i = 0; i < 50; ++i)
	{
		Word a = random_reduced_word(7, r1);
		Word b = random_reduced_word(7, r2);
		CHECK(a == b);
		CHECK(a.length() == 7);
	}
	Rng r3(5);
	CHECK(random_reduced_word(0, r3).is_identity());
}

TEST_CASE("random words of length 6 are uniform (chi-square sanity bound)")
{
	// 4 * 3^5 = 972 reduced words of length 6.
	constexpr int kClasses = 972;
	constexpr int kSamples = 10000;
	std::map<Word, int> counts;
	Rng rng(424242);
	for (int i = 0; i < kSamples; ++i)
		counts[random_reduced_word(6, rng)] += 1;
	CHECK(counts.size() <= kClasses);
	double expected = double(kSamples) / kClasses;
	double chi2 = 0;
	int seen = 0;
	for (const auto &[w, c] : counts)
	{
		chi2 += (c - expected) * (c - expected) / expected;
		seen += c;
	}
	// Classes never drawn contribute `expected` each.
	chi2 += (kClasses - static_cast<int>(counts.size())) * expected;
	CHECK(seen == kSamples);
	// Mean 971, sd ~44; this bound is ~5 sigma.
	CHECK(chi2 < 1200.0);
}
