#include "ptorder/quadfield.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

#include "ptorder/errors.hpp"

namespace ptorder {

namespace mp = boost::multiprecision;

namespace {

std::int64_t narrow(const BigInt &v)
{
	if (v < std::numeric_limits<std::int64_t>::min() ||
	    v > std::numeric_limits<std::int64_t>::max())
		throw std::overflow_error("value exceeds 64-bit range");
	return static_cast<std::int64_t>(v);
}

bool is_square(const BigInt &v)
{
	if (v < 0)
		return false;
	BigInt s = mp::sqrt(v);
	return s * s == v;
}

} // namespace

Vec2 Mat2::apply(const Vec2 &v) const
{
	return {narrow(a * v.x + b * v.y), narrow(c * v.x + d * v.y)};
}

std::string Mat2::str() const
{
	return "[[" + a.str() + ", " + b.str() + "], [" + c.str() + ", " + d.str() + "]]";
}

QuadNum::QuadNum(BigInt p, BigInt q, BigInt r, BigInt D)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(D))
{
	if (r_ == 0)
		throw ConfigError("QuadNum denominator must be nonzero");
	if (d_ <= 0 || is_square(d_))
		throw ConfigError("QuadNum field discriminant must be a positive non-square");
	normalize();
}

void QuadNum::normalize()
{
	if (r_ < 0)
	{
		p_ = -p_;
		q_ = -q_;
		r_ = -r_;
	}
	BigInt g = mp::gcd(mp::gcd(abs(p_), abs(q_)), r_);
	if (g > 1)
	{
		p_ /= g;
		q_ /= g;
		r_ /= g;
	}
}

void QuadNum::check_same_field(const QuadNum &x, const QuadNum &y)
{
	if (x.d_ != y.d_)
		throw ConfigError("mixed quadratic fields: sqrt(" + x.d_.str() +
		                  ") vs sqrt(" + y.d_.str() + ")");
}

int QuadNum::sign() const
{
	int sp = p_ == 0 ? 0 : (p_ > 0 ? 1 : -1);
	int sq = q_ == 0 ? 0 : (q_ > 0 ? 1 : -1);
	if (sq == 0)
		return sp;
	if (sp == 0 || sp == sq)
		return sq;
	// Opposite signs: compare p^2 against q^2 D. Equality is impossible
	// since D is not a perfect square.
	BigInt lhs = p_ * p_;
	BigInt rhs = q_ * q_ * d_;
	return lhs > rhs ? sp : sq;
}

QuadNum operator+(const QuadNum &x, const QuadNum &y)
{
	QuadNum::check_same_field(x, y);
	return {x.p_ * y.r_ + y.p_ * x.r_, x.q_ * y.r_ + y.q_ * x.r_, x.r_ * y.r_, x.d_};
}

QuadNum operator-(const QuadNum &x, const QuadNum &y)
{
	QuadNum::check_same_field(x, y);
	return {x.p_ * y.r_ - y.p_ * x.r_, x.q_ * y.r_ - y.q_ * x.r_, x.r_ * y.r_, x.d_};
}

QuadNum operator*(const QuadNum &x, const QuadNum &y)
{
	QuadNum::check_same_field(x, y);
	return {x.p_ * y.p_ + x.q_ * y.q_ * x.d_, x.p_ * y.q_ + x.q_ * y.p_,
	        x.r_ * y.r_, x.d_};
}

QuadNum operator/(const QuadNum &x, const QuadNum &y)
{
	QuadNum::check_same_field(x, y);
	if (y.is_zero())
		throw ConfigError("division by zero in Q(sqrt(" + x.d_.str() + "))");
	// 1/((p + q sqrt(D))/r) = r (p - q sqrt(D)) / (p^2 - q^2 D)
	BigInt norm = y.p_ * y.p_ - y.q_ * y.q_ * y.d_;
	QuadNum inv(y.r_ * y.p_, -(y.r_ * y.q_), norm, y.d_);
	return x * inv;
}

QuadNum QuadNum::operator-() const
{
	return {-p_, -q_, r_, d_};
}

std::string QuadNum::str() const
{
	std::string out = "(" + p_.str();
	if (q_ >= 0)
		out += " + " + q_.str();
	else
		out += " - " + BigInt(-q_).str();
	out += "*sqrt(" + d_.str() + "))/" + r_.str();
	return out;
}

EigenData EigenData::from_matrix(const Mat2 &A)
{
	if (A.det() != 1)
		throw ConfigError("matrix must have determinant 1, got " + A.det().str());
	BigInt t = A.trace();
	if (t >= -2 && t <= 2)
		throw ConfigError("matrix is not hyperbolic (|trace| <= 2), trace = " + t.str());
	if (t < -2)
		throw ConfigError("twisted monodromy (trace < -2) has no positive eigenvalues");

	BigInt D = t * t - 4;
	QuadNum lambda(t, 1, 2, D);
	QuadNum mu(t, -1, 2, D);

	QuadNum one = QuadNum::integer(1, D);
	std::array<QuadNum, 2> el{one, one}, em{one, one};
	if (A.b != 0)
	{
		// (a - lambda) v1 + b v2 = 0 with v1 = 1.
		el = {one, (lambda - QuadNum::integer(A.a, D)) / QuadNum::integer(A.b, D)};
		em = {one, (mu - QuadNum::integer(A.a, D)) / QuadNum::integer(A.b, D)};
	}
	else
	{
		// Fallback via the second row; unreachable for integer hyperbolic
		// matrices (b = 0 would force integer eigenvalues) but kept for
		// direct callers.
		el = {(lambda - QuadNum::integer(A.d, D)) / QuadNum::integer(A.c, D), one};
		em = {(mu - QuadNum::integer(A.d, D)) / QuadNum::integer(A.c, D), one};
	}

	// Invert E = [e_lambda | e_mu].
	QuadNum det = el[0] * em[1] - em[0] * el[1];
	std::array<std::array<QuadNum, 2>, 2> cob{
	    std::array<QuadNum, 2>{em[1] / det, -(em[0] / det)},
	    std::array<QuadNum, 2>{-(el[1] / det), el[0] / det}};

	EigenData e{std::move(D), lambda, mu, el, em, cob};

	// Exact self-checks: Vieta and the eigenvector equations.
	if (!((e.lambda * e.mu) == QuadNum::integer(1, e.D)))
		throw ConfigError("eigenvalue product is not 1");
	auto apply = [&](const std::array<QuadNum, 2> &v) {
		QuadNum a = QuadNum::integer(A.a, e.D), b = QuadNum::integer(A.b, e.D);
		QuadNum c = QuadNum::integer(A.c, e.D), d = QuadNum::integer(A.d, e.D);
		return std::array<QuadNum, 2>{a * v[0] + b * v[1], c * v[0] + d * v[1]};
	};
	auto avl = apply(e.e_lambda);
	if (!(avl[0] == e.lambda * e.e_lambda[0] && avl[1] == e.lambda * e.e_lambda[1]))
		throw ConfigError("eigenvector equation failed for lambda");
	auto avm = apply(e.e_mu);
	if (!(avm[0] == e.mu * e.e_mu[0] && avm[1] == e.mu * e.e_mu[1]))
		throw ConfigError("eigenvector equation failed for mu");
	return e;
}

QuadNum EigenData::coord_lambda(std::int64_t x, std::int64_t y) const
{
	return change_of_basis[0][0] * QuadNum::integer(x, D) +
	       change_of_basis[0][1] * QuadNum::integer(y, D);
}

QuadNum EigenData::coord_mu(std::int64_t x, std::int64_t y) const
{
	return change_of_basis[1][0] * QuadNum::integer(x, D) +
	       change_of_basis[1][1] * QuadNum::integer(y, D);
}

} // namespace ptorder
