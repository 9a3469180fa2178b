#include "ptorder/word.hpp"

#include <cctype>
#include <limits>

#include "ptorder/errors.hpp"
#include "ptorder/rng.hpp"

namespace ptorder {

namespace {

void push_reduced(std::vector<Letter> &out, Letter l)
{
	if (!out.empty() && out.back() == -l)
		out.pop_back();
	else
		out.push_back(l);
}

// Guards pathological exponent sugar like "(ab)^9000000".
constexpr std::size_t kMaxExpandedLength = 1u << 22;

} // namespace

Word Word::from_letters(std::span<const Letter> letters)
{
	Word w;
	w.letters_.reserve(letters.size());
	for (Letter l : letters)
		push_reduced(w.letters_, l);
	return w;
}

Word Word::inverse() const
{
	Word w;
	w.letters_.reserve(letters_.size());
	for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
		w.letters_.push_back(static_cast<Letter>(-*it));
	return w;
}

Word operator*(const Word &u, const Word &v)
{
	Word w;
	w.letters_ = u.letters_;
	w.letters_.reserve(u.length() + v.length());
	for (Letter l : v.letters_)
		push_reduced(w.letters_, l);
	return w;
}

Word commutator(const Word &u, const Word &v)
{
	return u * v * u.inverse() * v.inverse();
}

Word conjugate(const Word &x, const Word &w)
{
	return x * w * x.inverse();
}

Word pow(const Word &w, std::int64_t k)
{
	const Word base = k < 0 ? w.inverse() : w;
	std::int64_t reps = k < 0 ? -k : k;
	Word out;
	for (std::int64_t i = 0; i < reps; ++i)
		out = out * base;
	return out;
}

Vec2 abelianization(const Word &w)
{
	Vec2 v;
	for (Letter l : w.letters())
	{
		if (l == 1)
			v.x += 1;
		else if (l == -1)
			v.x -= 1;
		else if (l == 2)
			v.y += 1;
		else
			v.y -= 1;
	}
	return v;
}

namespace {

class Parser {
public:
	explicit Parser(std::string_view text) : text_(text) {}

	Word parse()
	{
		Word w = word();
		skip_ws();
		if (pos_ != text_.size())
			throw ParseError("unexpected character", pos_);
		return w;
	}

private:
	Word word()
	{
		Word w;
		for (;;)
		{
			skip_ws();
			if (pos_ == text_.size())
				break;
			char c = text_[pos_];
			if (c == ')' || c == ',' || c == ']')
				break;
			w = w * term();
		}
		return w;
	}

	Word term()
	{
		Word base = atom();
		skip_ws();
		if (pos_ < text_.size() && text_[pos_] == '^')
		{
			std::size_t caret = pos_;
			++pos_;
			std::int64_t e = exponent();
			std::size_t mag = static_cast<std::size_t>(e < 0 ? -e : e);
			if (base.length() * mag > kMaxExpandedLength)
				throw ParseError("expanded word too large", caret);
			return pow(base, e);
		}
		return base;
	}

	Word atom()
	{
		skip_ws();
		if (pos_ == text_.size())
			throw ParseError("expected a letter, '(' or '['", pos_);
		char c = text_[pos_];
		switch (c)
		{
		case 'a': ++pos_; return single(+1);
		case 'A': ++pos_; return single(-1);
		case 'b': ++pos_; return single(+2);
		case 'B': ++pos_; return single(-2);
		case '(':
		{
			std::size_t open = pos_++;
			Word w = word();
			expect(')', open);
			return w;
		}
		case '[':
		{
			std::size_t open = pos_++;
			Word u = word();
			expect(',', open);
			Word v = word();
			expect(']', open);
			return commutator(u, v);
		}
		default:
			throw ParseError(std::string("unexpected character '") + c + "'", pos_);
		}
	}

	std::int64_t exponent()
	{
		skip_ws();
		bool neg = false;
		if (pos_ < text_.size() && text_[pos_] == '-')
		{
			neg = true;
			++pos_;
		}
		skip_ws();
		std::size_t start = pos_;
		std::int64_t value = 0;
		while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
		{
			int digit = text_[pos_] - '0';
			if (value > (std::numeric_limits<std::int64_t>::max() - digit) / 10)
				throw ParseError("exponent overflow", start);
			value = value * 10 + digit;
			++pos_;
		}
		if (pos_ == start)
			throw ParseError("expected digits after '^'", pos_);
		return neg ? -value : value;
	}

	static Word single(Letter l)
	{
		return Word::from_letters(std::span<const Letter>(&l, 1));
	}

	void expect(char c, std::size_t open)
	{
		skip_ws();
		if (pos_ >= text_.size() || text_[pos_] != c)
			throw ParseError(std::string("expected '") + c + "' for group opened here", open);
		++pos_;
	}

	void skip_ws()
	{
		while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}

	std::string_view text_;
	std::size_t pos_ = 0;
};

} // namespace

Word parse_word(std::string_view text)
{
	return Parser(text).parse();
}

std::string render(const Word &w)
{
	std::string out;
	out.reserve(w.length());
	for (Letter l : w.letters())
	{
		switch (l)
		{
		case +1: out += 'a'; break;
		case -1: out += 'A'; break;
		case +2: out += 'b'; break;
		case -2: out += 'B'; break;
		}
	}
	return out;
}

Word random_reduced_word(std::size_t length, Rng &rng)
{
	static constexpr Letter kAll[4] = {+1, -1, +2, -2};
	std::vector<Letter> letters;
	letters.reserve(length);
	for (std::size_t i = 0; i < length; ++i)
	{
		if (letters.empty())
		{
			letters.push_back(kAll[rng.below(4)]);
			continue;
		}
		Letter forbidden = static_cast<Letter>(-letters.back());
		Letter pick[3];
		int n = 0;
		for (Letter l : kAll)
			if (l != forbidden)
				pick[n++] = l;
		letters.push_back(pick[rng.below(3)]);
	}
	Word w = Word::from_letters(letters);
	return w;
}

} // namespace ptorder
