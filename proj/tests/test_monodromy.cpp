#include <doctest.h>

#include "ptorder/errors.hpp"
#include "ptorder/monodromy.hpp"
#include "ptorder/rng.hpp"

using namespace ptorder;

TEST_CASE("twists_to_endo: figure-eight and generators")
{
	Endo fig8 = twists_to_endo("xy");
	CHECK(render(fig8.image_a) == "aba");
	CHECK(render(fig8.image_b) == "ba");

	CHECK(twists_to_endo("") == Endo::identity());

	Endo x = twists_to_endo("x");
	CHECK(render(x.image_a) == "ab");
	CHECK(render(x.image_b) == "b");

	CHECK_THROWS_AS(twists_to_endo("xz"), ParseError);
}

TEST_CASE("apply_endo examples")
{
	Endo fig8 = twists_to_endo("xy");
	CHECK(render(fig8.apply(parse_word("a"))) == "aba");
	CHECK(render(fig8.apply(parse_word("aB"))) == "a");
	CHECK(fig8.apply(Word()).is_identity());
}

TEST_CASE("apply_endo is a homomorphism on sampled pairs")
{
	Endo fig8 = twists_to_endo("xy");
	Rng rng(8);
	for (int i = 0; i < 300; ++i)
	{
		Word u = random_reduced_word(rng.below(15), rng);
		Word v = random_reduced_word(rng.below(15), rng);
		CHECK(fig8.apply(u * v) == fig8.apply(u) * fig8.apply(v));
		CHECK(fig8.apply(u.inverse()) == fig8.apply(u).inverse());
	}
}

TEST_CASE("abelianized matrices")
{
	CHECK(abelianized_matrix(twists_to_endo("xy")) == Mat2{2, 1, 1, 1});
	CHECK(abelianized_matrix(Endo::identity()) == Mat2::identity());
	CHECK(abelianized_matrix(twists_to_endo("x")) == Mat2{1, 0, 1, 1});
	CHECK(abelianized_matrix(twists_to_endo("y")) == Mat2{1, 1, 0, 1});
}

TEST_CASE("matrix of a composite matches apply-left-first order")
{
	Rng rng(13);
	const char letters[] = {'x', 'y', 'X', 'Y'};
	for (int i = 0; i < 60; ++i)
	{
		std::string t1, t2;
		for (int k = rng.range(0, 3); k > 0; --k)
			t1 += letters[rng.below(4)];
		for (int k = rng.range(0, 3); k > 0; --k)
			t2 += letters[rng.below(4)];
		Endo e1 = twists_to_endo(t1), e2 = twists_to_endo(t2);
		// "t1 t2" applies e1 first, so the matrix is M2 * M1.
		CHECK(abelianized_matrix(twists_to_endo(t1 + t2)) ==
		      abelianized_matrix(e2) * abelianized_matrix(e1));
		CHECK(abelianized_matrix(compose(e1, e2)) ==
		      abelianized_matrix(e2) * abelianized_matrix(e1));
	}
}

TEST_CASE("classification")
{
	Classification fig8 = classify(Mat2{2, 1, 1, 1});
	CHECK(fig8.hyperbolic);
	CHECK(fig8.untwisted);

	Classification parabolic = classify(Mat2{1, 1, 0, 1});
	CHECK_FALSE(parabolic.hyperbolic);

	Classification twisted = classify(Mat2{-2, -1, -1, -1});
	CHECK(twisted.hyperbolic);
	CHECK_FALSE(twisted.untwisted);

	CHECK_THROWS_AS(classify(Mat2{2, 0, 0, 2}), ConfigError);
}

TEST_CASE("inverse twist word gives a two-sided inverse endomorphism")
{
	Rng rng(21);
	for (const char *t : {"xy", "xxy", "xYy", "XxYy", "yXX"})
	{
		Monodromy m = Monodromy::from_twists(t);
		for (int i = 0; i < 40; ++i)
		{
			Word w = random_reduced_word(rng.below(12), rng);
			CHECK(m.apply(m.apply(w), -1) == w);
			CHECK(m.apply(m.apply(w, -1)) == w);
		}
	}
}

TEST_CASE("bundle group law")
{
	Monodromy h = Monodromy::from_twists("xy");
	BundleElement unit{Word(), 0};

	// ((a,1) * (b,-1)) = (a h(b), 0) = (aba, 0)
	BundleElement r = bundle_mul(h, {parse_word("a"), 1}, {parse_word("b"), -1});
	CHECK(render(r.g) == "aba");
	CHECK(r.k == 0);

	Rng rng(3);
	for (int i = 0; i < 150; ++i)
	{
		BundleElement p{random_reduced_word(rng.below(10), rng),
		                rng.range(-3, 3)};
		BundleElement q{random_reduced_word(rng.below(10), rng),
		                rng.range(-3, 3)};
		CHECK(bundle_mul(h, p, bundle_inv(h, p)) == unit);
		CHECK(bundle_mul(h, bundle_inv(h, p), p) == unit);
		CHECK(bundle_mul(h, unit, p) == p);
		CHECK(bundle_mul(h, p, unit) == p);

		// (g,k)(x,0)(g,k)^-1 = (g h^k(x) g^-1, 0)
		BundleElement x{q.g, 0};
		BundleElement conj = bundle_mul(h, bundle_mul(h, p, x), bundle_inv(h, p));
		CHECK(conj.k == 0);
		CHECK(conj.g == p.g * h.apply(x.g, p.k) * p.g.inverse());
	}
}

TEST_CASE("monodromy acts on homology consistently with words")
{
	Rng rng(17);
	for (const char *t : {"xy", "xxy", "xyy"})
	{
		Monodromy m = Monodromy::from_twists(t);
		for (int i = 0; i < 60; ++i)
		{
			Word w = random_reduced_word(rng.below(14), rng);
			CHECK(abelianization(m.apply(w)) == m.act_h1(abelianization(w)));
		}
	}
}
