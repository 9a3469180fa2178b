#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "ptorder/quadfield.hpp"
#include "ptorder/word.hpp"

namespace ptorder {

/// Endomorphism of the free group, given by the images of a and b.
struct Endo {
	Word image_a, image_b;

	static Endo identity();

	/// Substitutes images for letters and freely reduces; a homomorphism.
	Word apply(const Word &w) const;

	bool operator==(const Endo &) const = default;
};

/// w -> then(first(w)).
Endo compose(const Endo &first, const Endo &then);

/// Builds the composite endomorphism of a twist word over {x, y, X, Y},
/// reading APPLY-LEFT-FIRST: "xy" applies x, then y. The generating twists
/// are x: (a -> ab, b -> b) and y: (a -> a, b -> ba); capitals are their
/// inverses. For the figure-eight bundle "xy" this yields a -> aba, b -> ba.
Endo twists_to_endo(std::string_view twists);

/// Column j is the exponent-sum vector (#a, #b) of the image of the j-th
/// generator.
Mat2 abelianized_matrix(const Endo &e);

struct Classification {
	bool hyperbolic = false;
	bool untwisted = false;
	bool operator==(const Classification &) const = default;
};

/// hyperbolic iff |trace| > 2; untwisted iff additionally trace > 2
/// (positive eigenvalues). Requires det = 1.
Classification classify(const Mat2 &A);

/// A bundle monodromy specified by a twist word, with its inverse (from the
/// reversed, case-swapped twist word), abelianized matrix and classification.
class Monodromy {
public:
	static Monodromy from_twists(std::string_view twists);

	const std::string &twists() const { return twists_; }
	const Endo &endo() const { return forward_; }
	const Endo &inverse_endo() const { return inverse_; }
	const Mat2 &matrix() const { return matrix_; }
	Classification classification() const { return cls_; }

	/// h^power applied to w; power may be negative.
	Word apply(const Word &w, std::int64_t power = 1) const;

	/// h_+^power on H_1; power may be negative.
	Vec2 act_h1(const Vec2 &v, std::int64_t power = 1) const;

private:
	std::string twists_;
	Endo forward_, inverse_;
	Mat2 matrix_, matrix_inverse_;
	Classification cls_;
};

/// Element (g, k) of the semidirect product G x| Z with group law
/// (g, k) (g', k') = (g h^k(g'), k + k').
struct BundleElement {
	Word g;
	std::int64_t k = 0;
	bool operator==(const BundleElement &) const = default;
};

BundleElement bundle_mul(const Monodromy &h, const BundleElement &p, const BundleElement &q);
BundleElement bundle_inv(const Monodromy &h, const BundleElement &p);

} // namespace ptorder
