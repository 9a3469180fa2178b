#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ptorder {

class Rng;

/// Signed generator of the rank-2 free group:
/// +1 = a, -1 = a^-1, +2 = b, -2 = b^-1.
using Letter = std::int8_t;

struct Vec2 {
	std::int64_t x = 0;
	std::int64_t y = 0;

	friend Vec2 operator+(Vec2 u, Vec2 v) { return {u.x + v.x, u.y + v.y}; }
	friend Vec2 operator-(Vec2 u, Vec2 v) { return {u.x - v.x, u.y - v.y}; }
	Vec2 operator-() const { return {-x, -y}; }
	bool is_zero() const { return x == 0 && y == 0; }
	auto operator<=>(const Vec2 &) const = default;
};

/// Freely reduced word over {a, b}. The empty word is the identity.
/// Reduction happens eagerly at construction; values are immutable.
class Word {
public:
	Word() = default;

	/// Builds from an arbitrary letter sequence, cancelling adjacent
	/// inverse pairs.
	static Word from_letters(std::span<const Letter> letters);

	std::size_t length() const { return letters_.size(); }
	bool is_identity() const { return letters_.empty(); }
	const std::vector<Letter> &letters() const { return letters_; }

	Word inverse() const;
	friend Word operator*(const Word &u, const Word &v);

	bool operator==(const Word &) const = default;
	auto operator<=>(const Word &) const = default;

private:
	std::vector<Letter> letters_;
};

/// u v u^-1 v^-1.
Word commutator(const Word &u, const Word &v);

/// x w x^-1.
Word conjugate(const Word &x, const Word &w);

Word pow(const Word &w, std::int64_t k);

/// Exponent-sum vector (#a, #b); the abelianization map p1.
Vec2 abelianization(const Word &w);

/// Grammar (whitespace ignored):
///   word := term* ; term := atom exp? ;
///   atom := 'a' | 'b' | 'A' | 'B' | '(' word ')' | '[' word ',' word ']' ;
///   exp  := '^' '-'? digits ;
/// 'A' = a^-1, 'B' = b^-1, [u,v] = u v u^-1 v^-1.
Word parse_word(std::string_view text);

/// Canonical printer: only a/b/A/B, no sugar; identity renders as "".
std::string render(const Word &w);

/// Uniformly random freely reduced word of exactly the given length: the
/// first letter is uniform over the 4 generators, each following letter
/// uniform over the 3 non-cancelling choices.
Word random_reduced_word(std::size_t length, Rng &rng);

} // namespace ptorder
