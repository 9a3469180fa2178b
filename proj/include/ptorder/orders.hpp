#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptorder/cover.hpp"
#include "ptorder/magnus.hpp"
#include "ptorder/monodromy.hpp"
#include "ptorder/quadfield.hpp"
#include "ptorder/word.hpp"

namespace ptorder {

/// Three-valued sign of a group element under a bi-order; Zero only for the
/// identity.
enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

Sign flip(Sign s);
Sign sign_of(std::int64_t v);
std::string to_string(Sign s);

enum class Ordering { Less, Equal, Greater };
std::string to_string(Ordering o);

/// One of the four monodromy-invariant functionals on H_1: the
/// eigen-coordinate extractors and their negatives.
enum class EigChoice { PlusLambda, MinusLambda, PlusMu, MinusMu };

/// Priority of the eigen-letters in the lexicographic ordering of tensor
/// monomials, reading the left factor first.
enum class TensorLex { LambdaFirst, MuFirst };

enum class OrderKind { Standard, Nonstandard };

/// The cap schedule used by deep sign queries: one-step increments below
/// magnus_cap, then doubling up to hard_cap.
std::vector<int> deepening_caps(int magnus_cap, int hard_cap);

std::string to_string(EigChoice e);
std::string to_string(TensorLex t);
std::string to_string(OrderKind k);

/// A fully specified bi-order of the bundle group: the monodromy, which of
/// the two constructions to use, the eigen-functional choices, the tensor
/// lex convention, and the Magnus degree caps.
struct OrderConfig {
	OrderKind kind = OrderKind::Nonstandard;
	std::string monodromy = "xy";
	EigChoice e1 = EigChoice::PlusLambda;
	EigChoice e2 = EigChoice::PlusLambda;
	TensorLex tensor_lex = TensorLex::LambdaFirst;
	int magnus_cap = 8;
	int hard_cap = 16;
	bool tau_positive = true;

	/// Flat "key = value" text; '#' starts a comment. Unknown keys or
	/// values raise ConfigError.
	static OrderConfig from_text(std::string_view text);
	static OrderConfig from_file(const std::string &path);
	void set(std::string_view key, std::string_view value);
	std::string to_text() const;

	bool operator==(const OrderConfig &) const = default;
};

/// The cell of maximal basis element (under the e2 functional) in the
/// support of a nonzero CellSum, with its coefficient. Unique because the
/// functional has irrational slope.
struct MaxCellData {
	Cell max_cell;
	std::int64_t coefficient = 0;
};

/// Which rule of the cascade decided a sign query.
enum class Branch {
	Identity,  // the trivial element
	Q1,        // nonzero abelianization, sign of the e1 functional
	Q2,        // commutator subgroup, sign of the leading cell coefficient
	Q3,        // [G2,G2], delegated to the standard order
	Standard,  // standard order: tensor-lex sign of the Magnus leading part
};

/// A validated bi-order: decides the exact sign of any word, compares words,
/// and extends to the semidirect product. Immutable after build; all
/// queries are pure.
class Order {
public:
	/// Validates the config: the monodromy must classify as hyperbolic and
	/// untwisted, otherwise ConfigError.
	static Order build(const OrderConfig &cfg);

	const OrderConfig &config() const { return cfg_; }
	const Monodromy &monodromy() const { return mono_; }
	const EigenData &eigen() const { return eig_; }

	Sign sign(const Word &w) const;
	Sign sign(const Word &w, Branch &branch) const;

	/// Less iff sign(u^-1 v) is Positive.
	Ordering compare(const Word &u, const Word &v) const;

	/// Sign of (g, k): the lex order of the semidirect product, tau
	/// positive unless the config flips it.
	Sign sign_bundle(const BundleElement &p) const;

	/// Value of the e1 functional on a homology vector.
	QuadNum e1_functional(const Vec2 &v) const;
	/// Value of the e2 functional on a cell key.
	QuadNum e2_functional(Cell c) const;

	/// Leading cell of a nonzero CellSum under the e2 functional.
	MaxCellData max_cell(const CellSum &s) const;

	/// Tensor-lex sign of a nonzero homogeneous leading part, rewritten in
	/// eigen-coordinates. Exposed so tests can drive the pure-Magnus route
	/// against the fast paths of sign().
	Sign standard_sign_of_leading(const Poly &leading) const;

private:
	Order(OrderConfig cfg, Monodromy mono, EigenData eig);

	Sign sign_standard(const Word &w, Branch &branch) const;
	Sign sign_nonstandard(const Word &w, Branch &branch) const;
	Sign standard_deep_sign(const Word &w) const;
	QuadNum functional(EigChoice choice, std::int64_t x, std::int64_t y) const;

	OrderConfig cfg_;
	Monodromy mono_;
	EigenData eig_;
};

} // namespace ptorder
