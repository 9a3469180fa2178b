#include <doctest.h>

#include "ptorder/errors.hpp"
#include "ptorder/orders.hpp"
#include "ptorder/rng.hpp"

using namespace ptorder;

namespace {

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

OrderConfig fig8(OrderKind kind)
{
	OrderConfig cfg;
	cfg.kind = kind;
	return cfg;
}

Word mixed_sample(Rng &rng)
{
	switch (rng.below(4))
	{
	case 0:
		return random_reduced_word(1 + rng.below(12), rng);
	case 1:
		return conjugate(random_reduced_word(rng.below(5), rng),
		                 pow(g0(), rng.chance(1, 2) ? 1 : -1));
	case 2:
	{
		Word f = conjugate(random_reduced_word(rng.below(4), rng), g0());
		return commutator(f, random_reduced_word(1 + rng.below(4), rng));
	}
	default:
	{
		Word u = conjugate(random_reduced_word(rng.below(3), rng), g0());
		Word v = conjugate(random_reduced_word(rng.below(3), rng), g0());
		return commutator(u, v);
	}
	}
}

} // namespace

TEST_CASE("config text round-trip and errors")
{
	OrderConfig cfg = OrderConfig::from_text(
	    "kind = standard\nmonodromy = xxy\n# comment\n"
	    "e1 = -mu\ne2 = +mu\ntensor_lex = mu_first\n"
	    "magnus_cap = 6\nhard_cap = 12\ntau_positive = false\n");
	CHECK(cfg.kind == OrderKind::Standard);
	CHECK(cfg.monodromy == "xxy");
	CHECK(cfg.e1 == EigChoice::MinusMu);
	CHECK(cfg.e2 == EigChoice::PlusMu);
	CHECK(cfg.tensor_lex == TensorLex::MuFirst);
	CHECK(cfg.magnus_cap == 6);
	CHECK(cfg.hard_cap == 12);
	CHECK_FALSE(cfg.tau_positive);
	CHECK(OrderConfig::from_text(cfg.to_text()) == cfg);

	CHECK_THROWS_AS(OrderConfig::from_text("nonsense = 1"), ConfigError);
	CHECK_THROWS_AS(OrderConfig::from_text("kind standard"), ConfigError);
	CHECK_THROWS_AS(OrderConfig::from_text("e1 = lambda"), ConfigError);
}

TEST_CASE("order construction rejects unusable monodromies")
{
	OrderConfig cfg;
	cfg.monodromy = "x"; // trace 2, parabolic
	CHECK_THROWS_AS(Order::build(cfg), ConfigError);
	cfg.monodromy = "xY"; // trace 1, elliptic
	CHECK_THROWS_AS(Order::build(cfg), ConfigError);
	cfg.monodromy = "xy";
	cfg.magnus_cap = 10;
	cfg.hard_cap = 5;
	CHECK_THROWS_AS(Order::build(cfg), ConfigError);
}

TEST_CASE("standard order signs on the figure-eight bundle")
{
	Order o = Order::build(fig8(OrderKind::Standard));
	CHECK(o.sign(parse_word("a")) == Sign::Positive);
	CHECK(o.sign(Word()) == Sign::Zero);
	// The leading eigen-monomial of xy - yx is e_lambda (x) e_mu with
	// coefficient -1/sqrt(5).
	CHECK(o.sign(g0()) == Sign::Negative);
	CHECK(o.sign(g0().inverse()) == Sign::Positive);

	OrderConfig swapped = fig8(OrderKind::Standard);
	swapped.tensor_lex = TensorLex::MuFirst;
	CHECK(Order::build(swapped).sign(g0()) == Sign::Positive);
}

TEST_CASE("nonstandard order signs on the figure-eight bundle")
{
	Order o = Order::build(fig8(OrderKind::Nonstandard));
	CHECK(o.sign(parse_word("a")) == Sign::Positive);
	CHECK(o.sign(Word()) == Sign::Zero);
	CHECK(o.sign(g0()) == Sign::Positive);

	Word y = g0() * g0() * g1().inverse();
	Word z = g0().inverse() * g1() * g1();
	Branch b;
	CHECK(o.sign(y, b) == Sign::Positive);
	CHECK(b == Branch::Q2);
	CHECK(o.sign(z) == Sign::Negative);

	// Negating the e2 functional reverses the basis order; the max cell
	// moves to (-1, 0) and the signs swap.
	OrderConfig neg = fig8(OrderKind::Nonstandard);
	neg.e2 = EigChoice::MinusLambda;
	Order on = Order::build(neg);
	CHECK(on.sign(y) == Sign::Negative);
	CHECK(on.sign(z) == Sign::Positive);

	// A [G2,G2] element resolves through the Q3 branch with nonzero sign.
	Word deep = commutator(g0(), g1());
	Sign s = o.sign(deep, b);
	CHECK(b == Branch::Q3);
	CHECK(s != Sign::Zero);
	CHECK(s == Sign::Positive); // frozen from the computation
}

TEST_CASE("every e1 choice gives the stated sign of a")
{
	// For the figure-eight matrix both eigen-coordinates of (1,0) are
	// positive, so the sign of a follows the functional's sign directly.
	for (auto [choice, want] :
	     {std::pair{EigChoice::PlusLambda, Sign::Positive},
	      std::pair{EigChoice::MinusLambda, Sign::Negative},
	      std::pair{EigChoice::PlusMu, Sign::Positive},
	      std::pair{EigChoice::MinusMu, Sign::Negative}})
	{
		OrderConfig cfg = fig8(OrderKind::Nonstandard);
		cfg.e1 = choice;
		CHECK(Order::build(cfg).sign(parse_word("a")) == want);
	}
}

TEST_CASE("compare")
{
	Order o = Order::build(fig8(OrderKind::Nonstandard));
	CHECK(o.compare(Word(), parse_word("a")) == Ordering::Less);
	Word w = parse_word("bAb");
	CHECK(o.compare(w, w) == Ordering::Equal);
	Word y = g0() * g0() * g1().inverse();
	Word z = g0().inverse() * g1() * g1();
	CHECK(o.compare(z, y) == Ordering::Less);
	CHECK(o.compare(y, z) == Ordering::Greater);
}

TEST_CASE("bundle signs")
{
	Order o = Order::build(fig8(OrderKind::Nonstandard));
	CHECK(o.sign_bundle({parse_word("BaB"), 1}) == Sign::Positive);
	CHECK(o.sign_bundle({g0(), -2}) == Sign::Negative);
	CHECK(o.sign_bundle({g0(), 0}) == o.sign(g0()));
	CHECK(o.sign_bundle({Word(), 0}) == Sign::Zero);

	OrderConfig flipped = fig8(OrderKind::Nonstandard);
	flipped.tau_positive = false;
	CHECK(Order::build(flipped).sign_bundle({parse_word("a"), 3}) ==
	      Sign::Negative);
}

TEST_CASE("max cell under the e2 functional")
{
	Order o = Order::build(fig8(OrderKind::Nonstandard));
	CellSum s;
	s.add({0, 0}, 2);
	s.add({-1, 0}, -1);
	MaxCellData m = o.max_cell(s);
	CHECK(m.max_cell == Cell{0, 0});
	CHECK(m.coefficient == 2);
	CHECK_THROWS_AS(o.max_cell(CellSum()), std::invalid_argument);
}

TEST_CASE("fast paths agree with the pure-Magnus tensor route")
{
	for (OrderKind kind : {OrderKind::Standard})
	{
		for (const char *tw : {"xy", "xxy"})
		{
			OrderConfig cfg = fig8(kind);
			cfg.monodromy = tw;
			Order o = Order::build(cfg);
			Rng rng(404);
			for (int i = 0; i < 120; ++i)
			{
				Word w = mixed_sample(rng);
				if (w.is_identity())
					continue;
				CHECK(o.sign(w) ==
				      o.standard_sign_of_leading(leading_part(w, 8)));
			}
		}
	}
}

TEST_CASE("cone axioms hold on sampled words for both kinds")
{
	for (OrderKind kind : {OrderKind::Standard, OrderKind::Nonstandard})
	{
		Order o = Order::build(fig8(kind));
		Rng rng(505);
		for (int i = 0; i < 200; ++i)
		{
			Word u = mixed_sample(rng);
			Word x = random_reduced_word(rng.below(6), rng);
			CHECK(o.sign(u.inverse()) == flip(o.sign(u)));
			CHECK(o.sign(conjugate(x, u)) == o.sign(u));
			CHECK((o.sign(u) == Sign::Zero) == u.is_identity());
		}
	}
}

TEST_CASE("deep queries below the hard cap raise a resource error")
{
	OrderConfig cfg = fig8(OrderKind::Standard);
	cfg.magnus_cap = 4;
	cfg.hard_cap = 4;
	Order o = Order::build(cfg);
	// [gamma0, gamma1] has Magnus depth 5.
	CHECK_THROWS_AS(o.sign(commutator(g0(), g1())), ResourceLimit);
	// With the default caps it resolves.
	Order wide = Order::build(fig8(OrderKind::Standard));
	CHECK(wide.sign(commutator(g0(), g1())) != Sign::Zero);
}
