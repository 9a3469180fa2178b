#pragma once

#include <array>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ptorder/word.hpp"

namespace ptorder {

using BigInt = boost::multiprecision::cpp_int;

/// Integer 2x2 matrix, row-major: [[a, b], [c, d]].
struct Mat2 {
	BigInt a, b, c, d;

	BigInt trace() const { return a + d; }
	BigInt det() const { return a * d - b * c; }

	friend Mat2 operator*(const Mat2 &l, const Mat2 &r)
	{
		return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
		        l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
	}

	/// Matrix-vector product; throws on int64 overflow.
	Vec2 apply(const Vec2 &v) const;

	static Mat2 identity() { return {1, 0, 0, 1}; }
	bool operator==(const Mat2 &) const = default;
	std::string str() const; // "[[a, b], [c, d]]"
};

/// Exact element (p + q*sqrt(D))/r of the real quadratic field Q(sqrt(D)),
/// with D a positive non-square, r > 0 and gcd(p, q, r) = 1. Normalization is
/// canonical: equal values have equal tuples.
class QuadNum {
public:
	QuadNum(BigInt p, BigInt q, BigInt r, BigInt D);

	static QuadNum integer(BigInt v, const BigInt &D) { return {std::move(v), 0, 1, D}; }
	static QuadNum rational(BigInt num, BigInt den, const BigInt &D)
	{
		return {std::move(num), 0, std::move(den), D};
	}
	static QuadNum sqrt_d(const BigInt &D) { return {0, 1, 1, D}; }

	const BigInt &p() const { return p_; }
	const BigInt &q() const { return q_; }
	const BigInt &r() const { return r_; }
	const BigInt &D() const { return d_; }

	/// Exact sign via integer comparisons only.
	int sign() const;
	bool is_zero() const { return p_ == 0 && q_ == 0; }

	friend QuadNum operator+(const QuadNum &x, const QuadNum &y);
	friend QuadNum operator-(const QuadNum &x, const QuadNum &y);
	friend QuadNum operator*(const QuadNum &x, const QuadNum &y);
	friend QuadNum operator/(const QuadNum &x, const QuadNum &y);
	QuadNum operator-() const;

	bool operator==(const QuadNum &o) const
	{
		return d_ == o.d_ && p_ == o.p_ && q_ == o.q_ && r_ == o.r_;
	}
	bool operator<(const QuadNum &o) const { return (*this - o).sign() < 0; }
	bool operator>(const QuadNum &o) const { return (*this - o).sign() > 0; }

	std::string str() const; // "(p + q*sqrt(D))/r"

private:
	void normalize();
	static void check_same_field(const QuadNum &x, const QuadNum &y);

	BigInt p_, q_, r_, d_;
};

/// Eigen-structure of a hyperbolic untwisted monodromy matrix A in SL(2, Z)
/// with trace t > 2: eigenvalues lambda = (t + sqrt(D))/2 and mu = 1/lambda
/// where D = t^2 - 4, eigenvectors normalized to first coordinate 1, and the
/// change of basis to eigen-coordinates. The rows of change_of_basis are the
/// coordinate functionals: row 0 extracts the e_lambda coordinate of a vector,
/// row 1 the e_mu coordinate. These functionals are scaled by lambda resp. mu
/// under the action of A, so their sign loci are A-invariant.
struct EigenData {
	BigInt D;
	QuadNum lambda, mu;
	std::array<QuadNum, 2> e_lambda, e_mu;
	std::array<std::array<QuadNum, 2>, 2> change_of_basis;

	/// Requires det A = 1 and trace A > 2; rejects non-hyperbolic and
	/// twisted (trace < -2) matrices.
	static EigenData from_matrix(const Mat2 &A);

	QuadNum coord_lambda(std::int64_t x, std::int64_t y) const;
	QuadNum coord_mu(std::int64_t x, std::int64_t y) const;
};

} // namespace ptorder
