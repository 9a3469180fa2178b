#include "ptorder/orders.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "ptorder/errors.hpp"

namespace ptorder {

Sign flip(Sign s)
{
	return static_cast<Sign>(-static_cast<int>(s));
}

Sign sign_of(std::int64_t v)
{
	return v == 0 ? Sign::Zero : (v > 0 ? Sign::Positive : Sign::Negative);
}

std::string to_string(Sign s)
{
	switch (s)
	{
	case Sign::Negative: return "Negative";
	case Sign::Zero: return "Zero";
	case Sign::Positive: return "Positive";
	}
	return "?";
}

std::string to_string(Ordering o)
{
	switch (o)
	{
	case Ordering::Less: return "Less";
	case Ordering::Equal: return "Equal";
	case Ordering::Greater: return "Greater";
	}
	return "?";
}

std::string to_string(EigChoice e)
{
	switch (e)
	{
	case EigChoice::PlusLambda: return "+lambda";
	case EigChoice::MinusLambda: return "-lambda";
	case EigChoice::PlusMu: return "+mu";
	case EigChoice::MinusMu: return "-mu";
	}
	return "?";
}

std::string to_string(TensorLex t)
{
	return t == TensorLex::LambdaFirst ? "lambda_first" : "mu_first";
}

std::string to_string(OrderKind k)
{
	return k == OrderKind::Standard ? "standard" : "nonstandard";
}

namespace {

std::string_view trim(std::string_view s)
{
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
		s.remove_prefix(1);
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
		s.remove_suffix(1);
	return s;
}

EigChoice parse_eig(std::string_view v)
{
	if (v == "+lambda") return EigChoice::PlusLambda;
	if (v == "-lambda") return EigChoice::MinusLambda;
	if (v == "+mu") return EigChoice::PlusMu;
	if (v == "-mu") return EigChoice::MinusMu;
	throw ConfigError("invalid eigenvector choice '" + std::string(v) +
	                  "' (want +lambda, -lambda, +mu or -mu)");
}

int parse_cap(std::string_view v, std::string_view key)
{
	int out = 0;
	for (char c : v)
	{
		if (!std::isdigit(static_cast<unsigned char>(c)) || out > 1000)
			throw ConfigError("invalid " + std::string(key) + " '" + std::string(v) + "'");
		out = out * 10 + (c - '0');
	}
	if (v.empty())
		throw ConfigError(std::string(key) + " must be a positive integer");
	return out;
}

} // namespace

void OrderConfig::set(std::string_view key, std::string_view value)
{
	if (key == "kind")
	{
		if (value == "standard") kind = OrderKind::Standard;
		else if (value == "nonstandard") kind = OrderKind::Nonstandard;
		else throw ConfigError("invalid kind '" + std::string(value) + "'");
	}
	else if (key == "monodromy")
		monodromy = std::string(value);
	else if (key == "e1")
		e1 = parse_eig(value);
	else if (key == "e2")
		e2 = parse_eig(value);
	else if (key == "tensor_lex")
	{
		if (value == "lambda_first") tensor_lex = TensorLex::LambdaFirst;
		else if (value == "mu_first") tensor_lex = TensorLex::MuFirst;
		else throw ConfigError("invalid tensor_lex '" + std::string(value) + "'");
	}
	else if (key == "magnus_cap")
		magnus_cap = parse_cap(value, key);
	else if (key == "hard_cap")
		hard_cap = parse_cap(value, key);
	else if (key == "tau_positive")
	{
		if (value == "true") tau_positive = true;
		else if (value == "false") tau_positive = false;
		else throw ConfigError("invalid tau_positive '" + std::string(value) + "'");
	}
	else
		throw ConfigError("unknown config key '" + std::string(key) + "'");
}

OrderConfig OrderConfig::from_text(std::string_view text)
{
	OrderConfig cfg;
	std::size_t pos = 0;
	while (pos <= text.size())
	{
		std::size_t end = text.find('\n', pos);
		if (end == std::string_view::npos)
			end = text.size();
		std::string_view line = text.substr(pos, end - pos);
		pos = end + 1;
		if (auto hash = line.find('#'); hash != std::string_view::npos)
			line = line.substr(0, hash);
		line = trim(line);
		if (line.empty())
			continue;
		std::size_t eq = line.find('=');
		if (eq == std::string_view::npos)
			throw ConfigError("config line is not 'key = value': " + std::string(line));
		cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
	}
	return cfg;
}

OrderConfig OrderConfig::from_file(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw ConfigError("cannot open config file '" + path + "'");
	std::ostringstream buf;
	buf << in.rdbuf();
	return from_text(buf.str());
}

std::string OrderConfig::to_text() const
{
	std::ostringstream out;
	out << "kind = " << to_string(kind) << '\n'
	    << "monodromy = " << monodromy << '\n'
	    << "e1 = " << to_string(e1) << '\n'
	    << "e2 = " << to_string(e2) << '\n'
	    << "tensor_lex = " << to_string(tensor_lex) << '\n'
	    << "magnus_cap = " << magnus_cap << '\n'
	    << "hard_cap = " << hard_cap << '\n'
	    << "tau_positive = " << (tau_positive ? "true" : "false") << '\n';
	return out.str();
}

Order::Order(OrderConfig cfg, Monodromy mono, EigenData eig)
    : cfg_(std::move(cfg)), mono_(std::move(mono)), eig_(std::move(eig))
{}

Order Order::build(const OrderConfig &cfg)
{
	if (cfg.magnus_cap < 1 || cfg.hard_cap < cfg.magnus_cap)
		throw ConfigError("caps must satisfy 1 <= magnus_cap <= hard_cap");
	if (cfg.hard_cap > 24)
		throw ConfigError("hard_cap above 24 is not supported");
	Monodromy mono = Monodromy::from_twists(cfg.monodromy);
	Classification cls = mono.classification();
	if (!cls.hyperbolic || !cls.untwisted)
		throw ConfigError(
		    "monodromy '" + cfg.monodromy +
		    "' does not give an untwisted hyperbolic bundle (trace = " +
		    mono.matrix().trace().str() + "); no bi-order is built");
	EigenData eig = EigenData::from_matrix(mono.matrix());
	return Order(std::move(cfg), std::move(mono), std::move(eig));
}

QuadNum Order::functional(EigChoice choice, std::int64_t x, std::int64_t y) const
{
	switch (choice)
	{
	case EigChoice::PlusLambda: return eig_.coord_lambda(x, y);
	case EigChoice::MinusLambda: return -eig_.coord_lambda(x, y);
	case EigChoice::PlusMu: return eig_.coord_mu(x, y);
	case EigChoice::MinusMu: return -eig_.coord_mu(x, y);
	}
	throw std::logic_error("bad EigChoice");
}

QuadNum Order::e1_functional(const Vec2 &v) const
{
	return functional(cfg_.e1, v.x, v.y);
}

QuadNum Order::e2_functional(Cell c) const
{
	return functional(cfg_.e2, c.m, c.n);
}

MaxCellData Order::max_cell(const CellSum &s) const
{
	if (s.is_zero())
		throw std::invalid_argument("max_cell of the zero class");
	bool have = false;
	Cell best{};
	std::int64_t coeff = 0;
	std::optional<QuadNum> best_val;
	for (const auto &[c, k] : s.cells())
	{
		QuadNum val = e2_functional(c);
		if (!have)
		{
			have = true;
			best = c;
			coeff = k;
			best_val = val;
			continue;
		}
		int cmp = (val - *best_val).sign();
		if (cmp == 0)
			throw std::logic_error("e2 functional not injective on cells");
		if (cmp > 0)
		{
			best = c;
			coeff = k;
			best_val = val;
		}
	}
	return {best, coeff};
}

Sign Order::standard_sign_of_leading(const Poly &leading) const
{
	if (leading.empty())
		throw std::invalid_argument("empty leading part");
	const BigInt &D = eig_.D;
	// Eigen-coordinates of the two variables.
	const QuadNum coords[2][2] = {
	    {eig_.coord_lambda(1, 0), eig_.coord_mu(1, 0)},  // x
	    {eig_.coord_lambda(0, 1), eig_.coord_mu(0, 1)},  // y
	};
	// Keys over {'0','1'} per tensor slot, '0' being the high eigen-letter,
	// so plain string order scans eigen-monomials from most to least
	// significant.
	const int high = cfg_.tensor_lex == TensorLex::LambdaFirst ? 0 : 1;
	std::map<std::string, QuadNum> acc;

	std::string key;
	QuadNum partial = QuadNum::integer(1, D);
	auto expand = [&](auto &&self, const Monomial &mono, std::size_t at,
	                  const QuadNum &prod) -> void {
		if (at == mono.size())
		{
			auto it = acc.find(key);
			if (it == acc.end())
				acc.emplace(key, prod);
			else
				it->second = it->second + prod;
			return;
		}
		int var = mono[at] == 'x' ? 0 : 1;
		for (int slot = 0; slot < 2; ++slot)
		{
			const QuadNum &factor = coords[var][slot == 0 ? high : 1 - high];
			key.push_back(static_cast<char>('0' + slot));
			self(self, mono, at + 1, prod * factor);
			key.pop_back();
		}
	};
	for (const auto &[mono, coeff] : leading)
		expand(expand, mono, 0, QuadNum::integer(coeff, D));

	for (const auto &[k, v] : acc)
	{
		int s = v.sign();
		if (s != 0)
			return s > 0 ? Sign::Positive : Sign::Negative;
	}
	throw std::logic_error("leading part vanished in eigen-coordinates");
}

std::vector<int> deepening_caps(int magnus_cap, int hard_cap)
{
	// Expansion cost grows like 2^cap, so stepping by one below the
	// configured cap costs less than a single run at the cap; past it,
	// double up to the hard cap.
	std::vector<int> caps;
	for (int c = 3; c < magnus_cap; ++c)
		caps.push_back(c);
	for (int c = magnus_cap; c < hard_cap; c *= 2)
		caps.push_back(c);
	caps.push_back(hard_cap);
	return caps;
}

Sign Order::standard_deep_sign(const Word &w) const
{
	// Depth >= 3 at this point; deepen until the leading part appears.
	for (int cap : deepening_caps(cfg_.magnus_cap, cfg_.hard_cap))
	{
		MagnusSeries s = MagnusSeries::expand(w, cap);
		for (const auto &[m, c] : s.coefficients())
		{
			if (m.empty())
				continue;
			return standard_sign_of_leading(
			    s.homogeneous_part(static_cast<int>(m.size())));
		}
	}
	throw ResourceLimit("sign query unresolved: Magnus depth exceeds hard cap " +
	                        std::to_string(cfg_.hard_cap),
	                    cfg_.hard_cap + 1);
}

Sign Order::sign_standard(const Word &w, Branch &branch) const
{
	if (w.is_identity())
	{
		branch = Branch::Identity;
		return Sign::Zero;
	}
	branch = Branch::Standard;
	Vec2 p1 = abelianization(w);
	if (!p1.is_zero())
	{
		Poly leading;
		if (p1.x != 0)
			leading["x"] = p1.x;
		if (p1.y != 0)
			leading["y"] = p1.y;
		return standard_sign_of_leading(leading);
	}
	// In G2: the degree-2 part is (total winding) * (xy - yx).
	std::int64_t wind = p2(w).total();
	if (wind != 0)
	{
		Poly leading;
		leading["xy"] = wind;
		leading["yx"] = -wind;
		return standard_sign_of_leading(leading);
	}
	return standard_deep_sign(w);
}

Sign Order::sign_nonstandard(const Word &w, Branch &branch) const
{
	if (w.is_identity())
	{
		branch = Branch::Identity;
		return Sign::Zero;
	}
	Vec2 p1 = abelianization(w);
	if (!p1.is_zero())
	{
		branch = Branch::Q1;
		int s = e1_functional(p1).sign();
		if (s == 0)
			throw std::logic_error("e1 functional vanished on a nonzero vector");
		return s > 0 ? Sign::Positive : Sign::Negative;
	}
	CellSum cls = p2(w);
	if (!cls.is_zero())
	{
		branch = Branch::Q2;
		return sign_of(max_cell(cls).coefficient);
	}
	// In [G2,G2]: Q3 is fixed as the standard order of the same config.
	branch = Branch::Q3;
	return standard_deep_sign(w);
}

Sign Order::sign(const Word &w, Branch &branch) const
{
	return cfg_.kind == OrderKind::Standard ? sign_standard(w, branch)
	                                        : sign_nonstandard(w, branch);
}

Sign Order::sign(const Word &w) const
{
	Branch b;
	return sign(w, b);
}

Ordering Order::compare(const Word &u, const Word &v) const
{
	switch (sign(u.inverse() * v))
	{
	case Sign::Positive: return Ordering::Less;
	case Sign::Zero: return Ordering::Equal;
	case Sign::Negative: return Ordering::Greater;
	}
	throw std::logic_error("bad sign");
}

Sign Order::sign_bundle(const BundleElement &p) const
{
	if (p.k != 0)
	{
		Sign s = p.k > 0 ? Sign::Positive : Sign::Negative;
		return cfg_.tau_positive ? s : flip(s);
	}
	return sign(p.g);
}

} // namespace ptorder
