#include "ptorder/verify.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "ptorder/errors.hpp"
#include "ptorder/rng.hpp"

namespace ptorder {

namespace {

using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Fixed words of the lemma machinery.

const Word &gen_a()
{
	static const Word w = parse_word("a");
	return w;
}

const Word &gamma0()
{
	static const Word w = parse_word("[a,b]"); // abAB
	return w;
}

const Word &gamma1()
{
	static const Word w = parse_word("[b,A]"); // bABa
	return w;
}

const Word &witness_y()
{
	static const Word w = gamma0() * gamma0() * gamma1().inverse();
	return w;
}

const Word &witness_z()
{
	static const Word w = gamma0().inverse() * gamma1() * gamma1();
	return w;
}

// ---------------------------------------------------------------------------
// Samplers. All draw exclusively from the per-sample Rng stream.

Word sample_word(Rng &rng, int max_len)
{
	return random_reduced_word(static_cast<std::size_t>(rng.range(1, max_len)), rng);
}

// Word with prescribed abelianization: random prefix, then generator powers
// to land on the target.
Word word_with_p1(Rng &rng, Vec2 target)
{
	Word w = random_reduced_word(static_cast<std::size_t>(rng.range(0, 5)), rng);
	Vec2 at = abelianization(w);
	return w * pow(parse_word("a"), target.x - at.x) * pow(parse_word("b"), target.y - at.y);
}

// Product of conjugated powers of gamma0: a generic element of G2.
Word sample_g2(Rng &rng, int factors, int conj_len)
{
	Word out;
	int n = static_cast<int>(rng.range(1, factors));
	for (int i = 0; i < n; ++i)
	{
		Word x = random_reduced_word(static_cast<std::size_t>(rng.range(0, conj_len)), rng);
		std::int64_t k = rng.range(1, 2) * (rng.chance(1, 2) ? 1 : -1);
		out = out * conjugate(x, pow(gamma0(), k));
	}
	return out;
}

// Balanced-letter construction of a commutator-subgroup word: equal counts
// of a/A and b/B in random order, then free reduction.
Word sample_g2_balanced(Rng &rng, int half_pairs)
{
	int na = static_cast<int>(rng.range(0, half_pairs));
	int nb = static_cast<int>(rng.range(na == 0 ? 1 : 0, half_pairs));
	std::vector<Letter> letters;
	for (int i = 0; i < na; ++i)
	{
		letters.push_back(+1);
		letters.push_back(-1);
	}
	for (int i = 0; i < nb; ++i)
	{
		letters.push_back(+2);
		letters.push_back(-2);
	}
	// Fisher-Yates with the suite rng.
	for (std::size_t i = letters.size(); i > 1; --i)
		std::swap(letters[i - 1], letters[rng.below(i)]);
	return Word::from_letters(letters);
}

// Element of G3 = [G2, G]: product of conjugated commutators [g2, w].
Word sample_g3(Rng &rng)
{
	Word out;
	int n = static_cast<int>(rng.range(1, 2));
	for (int i = 0; i < n; ++i)
	{
		Word f = sample_g2(rng, 2, 4);
		Word g = sample_word(rng, 4);
		Word x = random_reduced_word(static_cast<std::size_t>(rng.range(0, 3)), rng);
		Word c = commutator(f, g);
		if (rng.chance(1, 2))
			c = c.inverse();
		out = out * conjugate(x, c);
	}
	return out;
}

// Element of G4 = [G3, G].
Word sample_g4(Rng &rng)
{
	Word f = sample_g3(rng);
	Word g = sample_word(rng, 4);
	Word x = random_reduced_word(static_cast<std::size_t>(rng.range(0, 3)), rng);
	Word c = commutator(f, g);
	if (rng.chance(1, 2))
		c = c.inverse();
	return conjugate(x, c);
}

// Element of [G2, G2].
Word sample_gg2(Rng &rng)
{
	return commutator(sample_g2(rng, 2, 3), sample_g2(rng, 2, 3));
}

// Mixed pool: mostly shallow words, with commutator-built words mixed in to
// reach the deep strata of the order.
Word sample_mixed(Rng &rng)
{
	switch (rng.below(10))
	{
	case 0: case 1: case 2: case 3: case 4:
		return sample_word(rng, 14);
	case 5: case 6:
		return sample_g2(rng, 3, 5);
	case 7:
		return sample_g2_balanced(rng, 8);
	case 8:
		return sample_g3(rng);
	default:
		return sample_gg2(rng);
	}
}

// ---------------------------------------------------------------------------
// Suite engine.

// Sign source: the real order, or a mutant masquerading as one. Samplers
// always use the reference order's geometry; only sign queries go through
// the possibly-mutated function.
struct Ctx {
	const Order *ref = nullptr;
	std::function<Sign(const Word &, Branch &)> traced;

	Sign sign(const Word &w) const
	{
		Branch b;
		return traced(w, b);
	}
	Sign sign(const Word &w, Branch &b) const { return traced(w, b); }
};

Ctx real_ctx(const Order &o)
{
	Ctx c;
	c.ref = &o;
	c.traced = [&o](const Word &w, Branch &b) { return o.sign(w, b); };
	return c;
}

void fail(std::vector<Failure> &failures, std::uint64_t index, std::string inputs,
          std::string expected, std::string got)
{
	failures.push_back({index, std::move(inputs), std::move(expected), std::move(got)});
}

using SampleFn = std::function<void(std::uint64_t, Rng &, std::vector<Failure> &)>;

SuiteReport run_samples(std::string suite_id, const OrderConfig &cfg,
                        std::string selector, std::uint64_t samples,
                        std::uint64_t seed, const SampleFn &per_sample)
{
	SuiteReport rep;
	rep.suite_id = std::move(suite_id);
	rep.config = cfg;
	rep.selector = std::move(selector);
	rep.seed = seed;
	rep.samples = samples;
	auto t0 = std::chrono::steady_clock::now();
	for (std::uint64_t i = 0; i < samples; ++i)
	{
		Rng rng = Rng::stream(seed, i);
		try
		{
			per_sample(i, rng, rep.failures);
		}
		catch (const ResourceLimit &e)
		{
			fail(rep.failures, i, "sample " + std::to_string(i),
			     "sign query resolvable below the hard cap",
			     std::string("[resource] ") + e.what());
		}
	}
	rep.passed = rep.failures.empty();
	rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
	                     std::chrono::steady_clock::now() - t0)
	                     .count();
	return rep;
}

// ---------------------------------------------------------------------------
// cone_axioms: closure, inverse antisymmetry, conjugation invariance, and
// Zero exactly on the identity.

void sample_cone_axioms(const Ctx &ctx, std::uint64_t i, Rng &rng,
                        std::vector<Failure> &failures)
{
	Word u, v, x;
	if (i == 0)
	{
		// Canonical probe: the basic commutator and a conjugate.
		u = gamma0();
		v = conjugate(gen_a(), gamma0());
		x = gen_a();
	}
	else
	{
		u = sample_mixed(rng);
		v = sample_mixed(rng);
		x = sample_word(rng, 8);
	}

	Sign su = ctx.sign(u);
	if ((su == Sign::Zero) != u.is_identity())
		fail(failures, i, "u=" + render(u), "Zero exactly on the identity",
		     to_string(su));
	Sign sinv = ctx.sign(u.inverse());
	if (sinv != flip(su))
		fail(failures, i, "u=" + render(u),
		     "sign(u^-1) = " + to_string(flip(su)), to_string(sinv));
	Sign sconj = ctx.sign(conjugate(x, u));
	if (sconj != su)
		fail(failures, i, "u=" + render(u) + " x=" + render(x),
		     "sign(x u x^-1) = " + to_string(su), to_string(sconj));

	Word up = su == Sign::Negative ? u.inverse() : u;
	Sign sv = ctx.sign(v);
	Word vp = sv == Sign::Negative ? v.inverse() : v;
	if (!up.is_identity() && !vp.is_identity())
	{
		Sign sp = ctx.sign(up * vp);
		if (sp != Sign::Positive)
			fail(failures, i, "u+=" + render(up) + " v+=" + render(vp),
			     "closure: sign(u+ v+) = Positive", to_string(sp));
	}
}

// ---------------------------------------------------------------------------
// invariance: sign(h(w)) = sign(w).

void sample_invariance(const Ctx &ctx, std::uint64_t i, Rng &rng,
                       std::vector<Failure> &failures)
{
	static const std::vector<Word> probes = {
	    parse_word("a"),    parse_word("b"),   parse_word("Ab"),
	    parse_word("Abb"),  parse_word("aBB"), gamma0(),
	    gamma1(),           witness_y(),       witness_z(),
	    gamma0() * gamma1().inverse(),         commutator(gamma0(), gamma1()),
	};
	Word w = i < probes.size() ? probes[i] : sample_mixed(rng);
	Sign sw = ctx.sign(w);
	Sign sh = ctx.sign(ctx.ref->monodromy().apply(w));
	if (sh != sw)
		fail(failures, i, "w=" + render(w),
		     "sign(h(w)) = sign(w) = " + to_string(sw), to_string(sh));
}

// ---------------------------------------------------------------------------
// convexity: every coset g C lies wholly in P or P^-1.

struct CosetSample {
	Word g, c1, c2;
};

// Cells strictly above / not above the pivot under the e2 functional, drawn
// from a box around the origin and the pivot. Both sets are nonempty: the
// functional is nonzero on (1,0) and (0,1) and doubles along rays.
std::vector<Cell> cells_relative(const Order &ref, Cell pivot, bool above)
{
	std::vector<Cell> out;
	QuadNum pv = ref.e2_functional(pivot);
	std::int64_t m0 = std::min<std::int64_t>(pivot.m, 0) - 2;
	std::int64_t m1 = std::max<std::int64_t>(pivot.m, 0) + 2;
	std::int64_t n0 = std::min<std::int64_t>(pivot.n, 0) - 2;
	std::int64_t n1 = std::max<std::int64_t>(pivot.n, 0) + 2;
	for (std::int64_t m = m0; m <= m1; ++m)
	{
		for (std::int64_t n = n0; n <= n1; ++n)
		{
			Cell c{m, n};
			int cmp = (ref.e2_functional(c) - pv).sign();
			if (above ? cmp > 0 : cmp <= 0)
				out.push_back(c);
		}
	}
	if (out.empty())
		throw std::logic_error("no cells relative to pivot");
	return out;
}

// Element of C_gamma: products of conjugates of gamma0 placed at cells <=_e
// the pivot, with an occasional [G2,G2] element.
Word sample_cgamma_member(const Order &ref, Cell pivot, Rng &rng)
{
	std::vector<Cell> allowed = cells_relative(ref, pivot, false);
	Word out;
	int n = static_cast<int>(rng.range(1, 3));
	for (int i = 0; i < n; ++i)
	{
		if (rng.chance(1, 6))
		{
			out = out * sample_gg2(rng);
			continue;
		}
		Cell c = allowed[rng.below(allowed.size())];
		Word x = word_with_p1(rng, Vec2{c.m, c.n});
		std::int64_t k = rng.range(1, 2) * (rng.chance(1, 2) ? 1 : -1);
		out = out * conjugate(x, pow(gamma0(), k));
	}
	return out;
}

CosetSample sample_coset(const Order &ref, const ConvexitySelector &sel, Rng &rng)
{
	CosetSample s;
	switch (sel.group)
	{
	case ConvexitySelector::Group::G2:
	{
		do
			s.g = sample_word(rng, 40);
		while (abelianization(s.g).is_zero());
		s.c1 = rng.chance(1, 2) ? sample_g2(rng, 3, 5) : sample_g2_balanced(rng, 8);
		s.c2 = rng.chance(1, 2) ? sample_g2(rng, 3, 5) : sample_g2_balanced(rng, 8);
		return s;
	}
	case ConvexitySelector::Group::G3:
	{
		if (rng.chance(3, 5))
		{
			do
				s.g = sample_word(rng, 40);
			while (abelianization(s.g).is_zero());
		}
		else
		{
			do
				s.g = sample_g2(rng, 3, 5);
			while (p2(s.g).total() == 0);
		}
		s.c1 = sample_g3(rng);
		s.c2 = sample_g3(rng);
		return s;
	}
	case ConvexitySelector::Group::G4:
	{
		switch (rng.below(4))
		{
		case 0:
		case 1:
			do
				s.g = sample_word(rng, 40);
			while (abelianization(s.g).is_zero());
			break;
		case 2:
			do
				s.g = sample_g2(rng, 3, 5);
			while (p2(s.g).total() == 0);
			break;
		default:
		{
			// A depth-3 representative; [gamma0, a] as fallback.
			s.g = commutator(gamma0(), gen_a());
			for (int attempt = 0; attempt < 8; ++attempt)
			{
				Word cand = sample_g3(rng);
				if (depth(cand, 4) == Depth::finite(3))
				{
					s.g = cand;
					break;
				}
			}
			break;
		}
		}
		s.c1 = sample_g4(rng);
		s.c2 = sample_g4(rng);
		return s;
	}
	case ConvexitySelector::Group::Cgamma:
	{
		std::vector<Cell> above = cells_relative(ref, sel.cell, true);
		Cell target = above[rng.below(above.size())];
		Word x = word_with_p1(rng, Vec2{target.m, target.n});
		std::int64_t k = rng.range(1, 2) * (rng.chance(1, 2) ? 1 : -1);
		s.g = conjugate(x, pow(gamma0(), k));
		if (rng.chance(1, 2))
			s.g = s.g * sample_cgamma_member(ref, sel.cell, rng);
		s.c1 = sample_cgamma_member(ref, sel.cell, rng);
		s.c2 = sample_cgamma_member(ref, sel.cell, rng);
		return s;
	}
	}
	throw std::logic_error("bad selector");
}

void check_coset(const Ctx &ctx, std::uint64_t i, const CosetSample &s,
                 std::vector<Failure> &failures)
{
	Sign sg = ctx.sign(s.g);
	Sign s1 = ctx.sign(s.g * s.c1);
	Sign s2 = ctx.sign(s.g * s.c2);
	if (sg == Sign::Zero || s1 != sg || s2 != sg)
		fail(failures, i,
		     "g=" + render(s.g) + " c=" + render(s.c1) + " c'=" + render(s.c2) +
		         " g*c=" + render(s.g * s.c1) + " g*c'=" + render(s.g * s.c2),
		     "coset g*C on one side: sign(g) = sign(g*c) = sign(g*c') != Zero",
		     to_string(sg) + " / " + to_string(s1) + " / " + to_string(s2));
}

void sample_convexity(const Ctx &ctx, const ConvexitySelector &sel, std::uint64_t i,
                      Rng &rng, std::vector<Failure> &failures)
{
	CosetSample s;
	if (sel.group == ConvexitySelector::Group::G3 && i == 0)
	{
		// The lemma witness pair: y = gamma0 * (gamma0 gamma1^-1) and
		// z = gamma0 * (gamma0^-2 gamma1^2) sit in the same coset of G3.
		s.g = gamma0();
		s.c1 = gamma0() * gamma1().inverse();
		s.c2 = gamma0().inverse() * gamma0().inverse() * gamma1() * gamma1();
	}
	else
	{
		s = sample_coset(*ctx.ref, sel, rng);
	}
	check_coset(ctx, i, s, failures);
}

// ---------------------------------------------------------------------------
// cover_laws: oracle equality, homomorphism, shift, equivariance, winding
// kernel, [G2,G2] kernel.

void sample_cover_laws(const Ctx &ctx, std::uint64_t i, Rng &rng,
                       std::vector<Failure> &failures)
{
	Word w = rng.chance(1, 2) ? sample_g2(rng, 4, 8) : sample_g2_balanced(rng, 14);
	CellSum cw = p2(w);
	if (!(cw == p2_oracle(w)))
		fail(failures, i, "w=" + render(w), "p2(w) = p2_oracle(w)",
		     "scanline {" + cw.dump() + "} ray {" + p2_oracle(w).dump() + "}");

	Word u = sample_g2(rng, 2, 4);
	Word v = sample_g2_balanced(rng, 6);
	if (!(p2(u * v) == p2(u) + p2(v)))
		fail(failures, i, "u=" + render(u) + " v=" + render(v),
		     "p2(uv) = p2(u) + p2(v)", "mismatch");

	Word x = sample_word(rng, 8);
	if (!(p2(conjugate(x, w)) == cw.shifted(abelianization(x))))
		fail(failures, i, "w=" + render(w) + " x=" + render(x),
		     "p2(x w x^-1) = shift(p2(w), p1(x))", "mismatch");

	const Monodromy &h = ctx.ref->monodromy();
	if (!(p2(h.apply(w)) == cw.transformed(h.matrix())))
		fail(failures, i, "w=" + render(w),
		     "p2(h(w)) = cell_action(h_+, p2(w))", "mismatch");

	Word g3 = commutator(sample_g2(rng, 2, 4), sample_word(rng, 6));
	if (p2(g3).total() != 0)
		fail(failures, i, "g3=" + render(g3), "winding_total(p2) = 0 on G3",
		     std::to_string(p2(g3).total()));

	Word gg = sample_gg2(rng);
	if (!p2(gg).is_zero())
		fail(failures, i, "gg=" + render(gg), "p2 = 0 on [G2,G2]",
		     p2(gg).dump());

	Word any = sample_word(rng, 20);
	if (!(LatticePath::of(any).endpoint() == abelianization(any)))
		fail(failures, i, "w=" + render(any), "path endpoint = p1(w)", "mismatch");
}

// ---------------------------------------------------------------------------
// magnus_laws: multiplicativity, inverse law, commutator depth
// superadditivity, plus pinned depths of the lemma words.

void sample_magnus_laws(const Ctx &, std::uint64_t i, Rng &rng,
                        std::vector<Failure> &failures)
{
	constexpr int cap = 6;
	if (i == 0)
	{
		if (!(depth(gamma0(), cap) == Depth::finite(2)))
			fail(failures, i, "w=abAB", "depth 2", "other");
		if (!(depth(gamma0() * gamma1().inverse(), 8) == Depth::finite(3)))
			fail(failures, i, "w=gamma0 gamma1^-1", "depth 3", "other");
		Poly deg2 = MagnusSeries::expand(gamma0(), 3).homogeneous_part(2);
		Poly want;
		want["xy"] = 1;
		want["yx"] = -1;
		if (!(deg2 == want))
			fail(failures, i, "w=abAB", "degree-2 part xy - yx", "other");
	}

	Word u = sample_word(rng, 12);
	Word v = sample_word(rng, 12);
	if (!(MagnusSeries::expand(u * v, cap) ==
	      MagnusSeries::expand(u, cap) * MagnusSeries::expand(v, cap)))
		fail(failures, i, "u=" + render(u) + " v=" + render(v),
		     "expand(uv) = expand(u) expand(v)", "mismatch");

	if (!(MagnusSeries::expand(u.inverse(), cap) * MagnusSeries::expand(u, cap) ==
	      MagnusSeries::one(cap)))
		fail(failures, i, "u=" + render(u),
		     "expand(u^-1) expand(u) = 1", "mismatch");

	Depth du = depth(u, cap), dv = depth(v, cap);
	int lower = (du.is_finite() ? du.value : cap + 1) +
	            (dv.is_finite() ? dv.value : cap + 1);
	if (lower > cap + 1)
		lower = cap + 1;
	Depth dc = depth(commutator(u, v), cap);
	if (!dc.at_least(lower))
		fail(failures, i, "u=" + render(u) + " v=" + render(v),
		     "depth([u,v]) >= depth(u) + depth(v)", "shallower");
}

// ---------------------------------------------------------------------------
// standard_stability: the standard sign is invariant under the monodromy
// composed with inner automorphisms.

void sample_standard_stability(const Ctx &ctx, std::uint64_t i, Rng &rng,
                               std::vector<Failure> &failures)
{
	static const std::vector<Word> probes = {
	    parse_word("Abb"), parse_word("aBB"), gamma0(), parse_word("ab")};
	Word w = i < probes.size() ? probes[i] : sample_mixed(rng);
	Word c = sample_word(rng, 8);
	Sign sw = ctx.sign(w);
	Sign st = ctx.sign(conjugate(c, ctx.ref->monodromy().apply(w)));
	if (st != sw)
		fail(failures, i, "w=" + render(w) + " c=" + render(c),
		     "sign((inn_c . h)(w)) = sign(w) = " + to_string(sw), to_string(st));
}

// ---------------------------------------------------------------------------
// chain_Cgamma: coset-sign convexity of C_gamma for the three pinned cells,
// plus strict-inclusion witnesses along the <_e chain.

bool cgamma_member(const Order &ref, Cell pivot, const Word &w)
{
	if (!abelianization(w).is_zero())
		return false;
	CellSum c = p2(w);
	if (c.is_zero())
		return true;
	return (ref.e2_functional(ref.max_cell(c).max_cell) - ref.e2_functional(pivot))
	           .sign() <= 0;
}

void sample_chain_cgamma(const Ctx &ctx, std::uint64_t i, Rng &rng,
                         std::vector<Failure> &failures)
{
	static const Cell kCells[3] = {{0, 0}, {-1, 0}, {1, 0}};
	const Order &ref = *ctx.ref;

	if (i == 0)
	{
		// Sort the pinned cells by the e2 functional and check strict
		// inclusion C_gamma < C_delta with explicit witnesses.
		std::vector<Cell> chain(kCells, kCells + 3);
		std::sort(chain.begin(), chain.end(), [&](Cell l, Cell r) {
			return (ref.e2_functional(l) - ref.e2_functional(r)).sign() < 0;
		});
		for (std::size_t k = 0; k + 1 < chain.size(); ++k)
		{
			Cell lo = chain[k], hi = chain[k + 1];
			Word witness = conjugate(
			    pow(parse_word("a"), hi.m) * pow(parse_word("b"), hi.n),
			    gamma0());
			bool in_hi = cgamma_member(ref, hi, witness);
			bool in_lo = cgamma_member(ref, lo, witness);
			if (!in_hi || in_lo)
				fail(failures, i,
				     "witness=" + render(witness) + " lo=(" +
				         std::to_string(lo.m) + "," + std::to_string(lo.n) +
				         ") hi=(" + std::to_string(hi.m) + "," +
				         std::to_string(hi.n) + ")",
				     "witness in C_hi - C_lo", "inclusion not strict");
			Word member = sample_cgamma_member(ref, lo, rng);
			if (!cgamma_member(ref, hi, member))
				fail(failures, i, "member=" + render(member),
				     "C_lo subset of C_hi", "violated");
		}
		return;
	}

	ConvexitySelector sel;
	sel.group = ConvexitySelector::Group::Cgamma;
	sel.cell = kCells[i % 3];
	CosetSample s = sample_coset(ref, sel, rng);
	check_coset(ctx, i, s, failures);
}

// ---------------------------------------------------------------------------
// witnesses (check_lemma_witnesses body, parameterized by sign source).

void witness_checks(const Ctx &ctx, int magnus_cap, std::vector<Failure> &failures)
{
	const Word &g0 = gamma0();
	const Word &g1 = gamma1();
	const Word &y = witness_y();
	const Word &z = witness_z();
	const int cap = std::max(4, magnus_cap);

	if (!in_lcs(g0 * g1.inverse(), 3, cap))
		fail(failures, 0, "w=" + render(g0 * g1.inverse()),
		     "gamma0 gamma1^-1 in G3", "Magnus depth < 3");

	if (!in_lcs(g0.inverse() * y, 3, cap) || !in_lcs(g0.inverse() * z, 3, cap))
		fail(failures, 1, "y=" + render(y) + " z=" + render(z),
		     "y and z in gamma0 G3", "coset test failed");

	if (!(p2(y) == p2(g0).scaled(2) - p2(g1)))
		fail(failures, 2, "y=" + render(y),
		     "p2(y) = 2 p2(gamma0) - p2(gamma1)", p2(y).dump());

	Sign sy = ctx.sign(y);
	Sign sz = ctx.sign(z);
	if (sy == Sign::Zero || sz != flip(sy))
		fail(failures, 3, "y=" + render(y) + " z=" + render(z),
		     "opposite nonzero signs",
		     to_string(sy) + " / " + to_string(sz));

	if (p2(y).total() != 1 || p2(z).total() != 1)
		fail(failures, 4, "y=" + render(y) + " z=" + render(z),
		     "winding totals 1",
		     std::to_string(p2(y).total()) + " / " + std::to_string(p2(z).total()));
}

SuiteReport run_witnesses(const Ctx &ctx, const OrderConfig &cfg)
{
	SuiteReport rep;
	rep.suite_id = "witnesses";
	rep.config = cfg;
	rep.seed = 0;
	rep.samples = 5;
	auto t0 = std::chrono::steady_clock::now();
	witness_checks(ctx, cfg.magnus_cap, rep.failures);
	rep.passed = rep.failures.empty();
	rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
	                     std::chrono::steady_clock::now() - t0)
	                     .count();
	return rep;
}

} // namespace

// ---------------------------------------------------------------------------

ConvexitySelector ConvexitySelector::parse(std::string_view text)
{
	ConvexitySelector sel;
	if (text == "G2")
	{
		sel.group = Group::G2;
		return sel;
	}
	if (text == "G3")
	{
		sel.group = Group::G3;
		return sel;
	}
	if (text == "G4")
	{
		sel.group = Group::G4;
		return sel;
	}
	if (text.rfind("Cgamma:", 0) == 0)
	{
		std::string rest(text.substr(7));
		std::size_t comma = rest.find(',');
		if (comma != std::string::npos)
		{
			try
			{
				sel.group = Group::Cgamma;
				sel.cell.m = std::stoll(rest.substr(0, comma));
				sel.cell.n = std::stoll(rest.substr(comma + 1));
				return sel;
			}
			catch (const std::exception &)
			{
			}
		}
	}
	throw ConfigError("invalid selector '" + std::string(text) +
	                  "' (want G2, G3, G4 or Cgamma:m,n)");
}

std::string ConvexitySelector::str() const
{
	switch (group)
	{
	case Group::G2: return "G2";
	case Group::G3: return "G3";
	case Group::G4: return "G4";
	case Group::Cgamma:
		return "Cgamma:" + std::to_string(cell.m) + "," + std::to_string(cell.n);
	}
	return "?";
}

std::string SuiteReport::to_json() const
{
	ordered_json j;
	j["suite_id"] = suite_id;
	ordered_json c;
	c["kind"] = to_string(config.kind);
	c["monodromy"] = config.monodromy;
	c["e1"] = to_string(config.e1);
	c["e2"] = to_string(config.e2);
	c["tensor_lex"] = to_string(config.tensor_lex);
	c["magnus_cap"] = config.magnus_cap;
	c["hard_cap"] = config.hard_cap;
	c["tau_positive"] = config.tau_positive;
	if (!selector.empty())
		c["selector"] = selector;
	j["config"] = c;
	j["seed"] = seed;
	j["samples"] = samples;
	ordered_json fs = ordered_json::array();
	for (const Failure &f : failures)
	{
		ordered_json jf;
		jf["index"] = f.index;
		jf["inputs"] = f.inputs;
		jf["expected"] = f.expected;
		jf["got"] = f.got;
		fs.push_back(jf);
	}
	j["failures"] = fs;
	j["passed"] = passed;
	j["elapsed_ms"] = elapsed_ms;
	return j.dump(2) + "\n";
}

namespace {

SuiteReport dispatch_suite(const Ctx &ctx, const std::string &suite_id,
                           const OrderConfig &cfg, std::uint64_t samples,
                           std::uint64_t seed,
                           const std::optional<ConvexitySelector> &selector)
{
	if (suite_id == "cone_axioms")
		return run_samples(suite_id, cfg, "", samples, seed,
		                   [&ctx](std::uint64_t i, Rng &rng, std::vector<Failure> &f) {
			                   sample_cone_axioms(ctx, i, rng, f);
		                   });
	if (suite_id == "invariance")
		return run_samples(suite_id, cfg, "", samples, seed,
		                   [&ctx](std::uint64_t i, Rng &rng, std::vector<Failure> &f) {
			                   sample_invariance(ctx, i, rng, f);
		                   });
	if (suite_id == "convexity")
	{
		ConvexitySelector sel = selector.value_or(ConvexitySelector{});
		return run_samples(
		    suite_id, cfg, sel.str(), samples, seed,
		    [&ctx, sel](std::uint64_t i, Rng &rng, std::vector<Failure> &f) {
			    sample_convexity(ctx, sel, i, rng, f);
		    });
	}
	if (suite_id == "cover_laws")
		return run_samples(suite_id, cfg, "", samples, seed,
		                   [&ctx](std::uint64_t i, Rng &rng, std::vector<Failure> &f) {
			                   sample_cover_laws(ctx, i, rng, f);
		                   });
	if (suite_id == "magnus_laws")
		return run_samples(suite_id, cfg, "", samples, seed,
		                   [&ctx](std::uint64_t i, Rng &rng, std::vector<Failure> &f) {
			                   sample_magnus_laws(ctx, i, rng, f);
		                   });
	if (suite_id == "chain_Cgamma")
		return run_samples(suite_id, cfg, "", samples, seed,
		                   [&ctx](std::uint64_t i, Rng &rng, std::vector<Failure> &f) {
			                   sample_chain_cgamma(ctx, i, rng, f);
		                   });
	if (suite_id == "standard_stability")
		return run_samples(suite_id, cfg, "", samples, seed,
		                   [&ctx](std::uint64_t i, Rng &rng, std::vector<Failure> &f) {
			                   sample_standard_stability(ctx, i, rng, f);
		                   });
	if (suite_id == "witnesses")
		return run_witnesses(ctx, cfg);
	throw ConfigError("unknown suite '" + suite_id + "'");
}

} // namespace

SuiteReport run_suite(const std::string &suite_id, const OrderConfig &cfg,
                      std::uint64_t samples, std::uint64_t seed,
                      std::optional<ConvexitySelector> selector)
{
	if (suite_id == "mutation_coverage")
		return run_mutation_coverage(cfg, samples, seed);
	OrderConfig effective = cfg;
	if (suite_id == "standard_stability")
		effective.kind = OrderKind::Standard;
	Order order = Order::build(effective);
	return dispatch_suite(real_ctx(order), suite_id, effective, samples, seed,
	                      selector);
}

SuiteReport check_lemma_witnesses(const OrderConfig &cfg)
{
	if (cfg.kind != OrderKind::Nonstandard)
		throw ConfigError("lemma witnesses require a nonstandard order config");
	Order order = Order::build(cfg);
	return run_witnesses(real_ctx(order), cfg);
}

// ---------------------------------------------------------------------------
// Mutants.

std::string to_string(Mutation m)
{
	switch (m)
	{
	case Mutation::FlipCellSign: return "flip_cell_sign";
	case Mutation::SwapLex: return "swap_lex";
	case Mutation::DropQ2: return "drop_Q2";
	case Mutation::E1Lex: return "e1_lex";
	case Mutation::XYLex: return "xy_lex";
	}
	return "?";
}

MutantOrder mutate_order(const OrderConfig &cfg, Mutation m, Cell flip_cell)
{
	MutantOrder out;
	out.config = cfg;
	out.name = to_string(m);
	switch (m)
	{
	case Mutation::FlipCellSign:
	{
		out.name += "(" + std::to_string(flip_cell.m) + "," +
		            std::to_string(flip_cell.n) + ")";
		auto ref = std::make_shared<Order>(Order::build(cfg));
		out.sign_traced = [ref, flip_cell](const Word &w, Branch &b) {
			Sign s = ref->sign(w, b);
			if (b == Branch::Q2 && ref->max_cell(p2(w)).max_cell == flip_cell)
				return flip(s);
			return s;
		};
		return out;
	}
	case Mutation::SwapLex:
	{
		OrderConfig swapped = cfg;
		swapped.tensor_lex = cfg.tensor_lex == TensorLex::LambdaFirst
		                         ? TensorLex::MuFirst
		                         : TensorLex::LambdaFirst;
		auto impl = std::make_shared<Order>(Order::build(swapped));
		out.sign_traced = [impl](const Word &w, Branch &b) {
			return impl->sign(w, b);
		};
		return out;
	}
	case Mutation::DropQ2:
	{
		auto ref = std::make_shared<Order>(Order::build(cfg));
		OrderConfig std_cfg = cfg;
		std_cfg.kind = OrderKind::Standard;
		auto fallback = std::make_shared<Order>(Order::build(std_cfg));
		out.sign_traced = [ref, fallback](const Word &w, Branch &b) {
			Sign s = ref->sign(w, b);
			if (b == Branch::Q2)
			{
				b = Branch::Q3;
				return fallback->sign(w);
			}
			return s;
		};
		return out;
	}
	case Mutation::E1Lex:
	{
		auto ref = std::make_shared<Order>(Order::build(cfg));
		out.sign_traced = [ref](const Word &w, Branch &b) {
			Vec2 p1 = abelianization(w);
			if (!p1.is_zero())
			{
				b = Branch::Q1;
				return p1.x != 0 ? sign_of(p1.x) : sign_of(p1.y);
			}
			return ref->sign(w, b);
		};
		return out;
	}
	case Mutation::XYLex:
	{
		auto ref = std::make_shared<Order>(Order::build(cfg));
		int magnus_cap = cfg.magnus_cap;
		int hard_cap = cfg.hard_cap;
		out.sign_traced = [ref, magnus_cap, hard_cap](const Word &w, Branch &b) {
			if (w.is_identity())
			{
				b = Branch::Identity;
				return Sign::Zero;
			}
			b = Branch::Standard;
			Vec2 p1 = abelianization(w);
			if (!p1.is_zero())
				return p1.x != 0 ? sign_of(p1.x) : sign_of(p1.y);
			std::int64_t wind = p2(w).total();
			if (wind != 0)
				return sign_of(wind); // leading monomial xy
			for (int cap : deepening_caps(magnus_cap, hard_cap))
			{
				Poly lead;
				try
				{
					lead = leading_part(w, cap);
				}
				catch (const ResourceLimit &)
				{
					continue;
				}
				// Leading monomial under plain x-before-y lex is the
				// first map entry of the leading degree.
				return lead.begin()->second > 0 ? Sign::Positive
				                                : Sign::Negative;
			}
			throw ResourceLimit("xy_lex mutant: depth exceeds hard cap",
			                    hard_cap + 1);
		};
		return out;
	}
	}
	throw std::logic_error("bad mutation");
}

// ---------------------------------------------------------------------------
// Mutation coverage.

namespace {

// Reference-conformance detector: compares (sign, branch) of the mutant
// against the unmutated order on fixed probes and random mixed words.
SuiteReport run_branch_trace(const Ctx &mutant, const Order &ref,
                             const OrderConfig &cfg, std::uint64_t samples,
                             std::uint64_t seed)
{
	return run_samples(
	    "branch_trace", cfg, "", samples, seed,
	    [&mutant, &ref](std::uint64_t i, Rng &rng, std::vector<Failure> &f) {
		    static const std::vector<Word> probes = {
		        parse_word("a"),  parse_word("b"),  parse_word("A"),
		        parse_word("Ab"), parse_word("Abb"), parse_word("aBB"),
		        gamma0(),         gamma1(),          gamma0().inverse(),
		        conjugate(parse_word("a"), gamma0()),
		        conjugate(parse_word("b"), gamma0()),
		        witness_y(),      witness_z(),
		        gamma0() * gamma1().inverse(),
		        commutator(gamma0(), gamma1()),
		    };
		    Word w = i < probes.size() ? probes[i] : sample_mixed(rng);
		    Branch bm, br;
		    Sign sm = mutant.sign(w, bm);
		    Sign sr = ref.sign(w, br);
		    if (sm != sr || bm != br)
			    fail(f, i, "w=" + render(w),
			         to_string(sr) + " via branch " +
			             std::to_string(static_cast<int>(br)),
			         to_string(sm) + " via branch " +
			             std::to_string(static_cast<int>(bm)));
	    });
}

} // namespace

SuiteReport run_mutation_coverage(const OrderConfig &cfg, std::uint64_t samples,
                                  std::uint64_t seed)
{
	SuiteReport rep;
	rep.suite_id = "mutation_coverage";
	rep.config = cfg;
	rep.seed = seed;
	rep.samples = samples;
	auto t0 = std::chrono::steady_clock::now();

	OrderConfig nonstd = cfg;
	nonstd.kind = OrderKind::Nonstandard;
	OrderConfig stdc = cfg;
	stdc.kind = OrderKind::Standard;

	struct Case {
		Mutation mutation;
		OrderConfig base;
	};
	const Case cases[] = {
	    {Mutation::FlipCellSign, nonstd}, {Mutation::DropQ2, nonstd},
	    {Mutation::E1Lex, nonstd},        {Mutation::SwapLex, stdc},
	    {Mutation::XYLex, stdc},
	};

	auto detectors_for = [](OrderKind kind) {
		return kind == OrderKind::Standard
		           ? std::vector<std::string>{"cone_axioms", "invariance",
		                                      "convexity", "standard_stability"}
		           : std::vector<std::string>{"cone_axioms", "invariance",
		                                      "convexity", "chain_Cgamma",
		                                      "witnesses"};
	};

	// A detector only counts if it passes on the unmutated order.
	std::uint64_t idx = 0;
	for (const OrderConfig &base : {nonstd, stdc})
	{
		Order ref = Order::build(base);
		Ctx ctx = real_ctx(ref);
		for (const std::string &d : detectors_for(base.kind))
		{
			SuiteReport r = dispatch_suite(ctx, d, base, samples, seed, std::nullopt);
			if (!r.passed)
				fail(rep.failures, idx, "baseline " + d + " on " + to_string(base.kind),
				     "passed", "failed (" + std::to_string(r.failures.size()) +
				                   " failures)");
		}
	}

	for (const Case &c : cases)
	{
		Order ref = Order::build(c.base);
		MutantOrder mutant = mutate_order(c.base, c.mutation);
		Ctx ctx;
		ctx.ref = &ref;
		ctx.traced = mutant.sign_traced;

		std::vector<std::string> detected;
		for (const std::string &d : detectors_for(c.base.kind))
		{
			SuiteReport r =
			    dispatch_suite(ctx, d, c.base, samples, seed, std::nullopt);
			if (!r.passed)
				detected.push_back(d);
		}
		SuiteReport bt = run_branch_trace(ctx, ref, c.base, samples, seed);
		if (!bt.passed)
			detected.push_back("branch_trace");

		if (detected.empty())
			fail(rep.failures, idx, "mutant=" + mutant.name,
			     "detected by at least one suite", "undetected");
		++idx;
	}

	rep.passed = rep.failures.empty();
	rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
	                     std::chrono::steady_clock::now() - t0)
	                     .count();
	return rep;
}

} // namespace ptorder
