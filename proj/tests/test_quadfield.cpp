#include <doctest.h>

#include "ptorder/errors.hpp"
#include "ptorder/monodromy.hpp"
#include "ptorder/quadfield.hpp"
#include "ptorder/rng.hpp"

using namespace ptorder;

namespace {

QuadNum qn(long p, long q, long r, long d)
{
	return QuadNum(p, q, r, d);
}

} // namespace

TEST_CASE("normalization is canonical")
{
	CHECK(qn(2, 4, 6, 5) == qn(1, 2, 3, 5));
	CHECK(qn(1, -1, -2, 5) == qn(-1, 1, 2, 5));
	CHECK(qn(0, 0, 7, 5) == qn(0, 0, 1, 5));
	CHECK_THROWS_AS(qn(1, 1, 0, 5), ConfigError);
	CHECK_THROWS_AS(qn(1, 1, 1, 4), ConfigError);  // perfect square
	CHECK_THROWS_AS(qn(1, 1, 1, -5), ConfigError); // negative
}

TEST_CASE("arithmetic examples")
{
	// (3+sqrt5)/2 * (3-sqrt5)/2 = 1
	CHECK(qn(3, 1, 2, 5) * qn(3, -1, 2, 5) == QuadNum::integer(1, 5));
	QuadNum x = qn(7, -3, 4, 5);
	CHECK(x + QuadNum::integer(0, 5) == x);
	CHECK((x - x).is_zero());
	CHECK(x / x == QuadNum::integer(1, 5));
	CHECK_THROWS_AS(x / QuadNum::integer(0, 5), ConfigError);
	CHECK_THROWS_AS(x + qn(1, 1, 1, 2), ConfigError); // mixed fields
}

TEST_CASE("exact sign")
{
	CHECK(qn(0, 1, 1, 5).sign() == 1);
	CHECK(qn(3, -1, 2, 5).sign() == 1);  // 9 > 5
	CHECK(qn(1, -1, 1, 2).sign() == -1); // 1 < 2
	CHECK(qn(-3, 1, 2, 5).sign() == -1);
	CHECK(qn(-1, 1, 1, 2).sign() == 1);
	CHECK(qn(0, 0, 3, 5).sign() == 0);
	CHECK(qn(-2, -1, 7, 5).sign() == -1);
}

TEST_CASE("sign is multiplicative on sampled pairs")
{
	Rng rng(31);
	for (int i = 0; i < 500; ++i)
	{
		QuadNum x(rng.range(-50, 50), rng.range(-50, 50), rng.range(1, 20), 5);
		QuadNum y(rng.range(-50, 50), rng.range(-50, 50), rng.range(1, 20), 5);
		CHECK((x * y).sign() == x.sign() * y.sign());
	}
}

TEST_CASE("rendering")
{
	CHECK(qn(3, 1, 2, 5).str() == "(3 + 1*sqrt(5))/2");
	CHECK(qn(3, -1, 2, 5).str() == "(3 - 1*sqrt(5))/2");
	CHECK(QuadNum::integer(4, 5).str() == "(4 + 0*sqrt(5))/1");
}

TEST_CASE("eigen data of the figure-eight matrix")
{
	Mat2 A{2, 1, 1, 1};
	EigenData e = EigenData::from_matrix(A);
	CHECK(e.D == 5);
	CHECK(e.lambda == qn(3, 1, 2, 5));
	CHECK(e.mu == qn(3, -1, 2, 5));
	CHECK(e.e_lambda[0] == QuadNum::integer(1, 5));
	CHECK(e.e_lambda[1] == qn(-1, 1, 2, 5));
	CHECK(e.e_mu[1] == qn(-1, -1, 2, 5));
	// Coordinates of (1,0) in the eigenbasis: ((5+sqrt5)/10, (5-sqrt5)/10).
	CHECK(e.change_of_basis[0][0] == qn(5, 1, 10, 5));
	CHECK(e.change_of_basis[1][0] == qn(5, -1, 10, 5));
	CHECK(e.coord_lambda(1, 0) == qn(5, 1, 10, 5));
	// lambda * mu = 1, lambda + mu = trace.
	CHECK(e.lambda * e.mu == QuadNum::integer(1, 5));
	CHECK(e.lambda + e.mu == QuadNum::integer(3, 5));
}

TEST_CASE("rejections")
{
	CHECK_THROWS_AS(EigenData::from_matrix(Mat2{1, 1, 0, 1}), ConfigError); // parabolic
	CHECK_THROWS_AS(EigenData::from_matrix(Mat2{-2, -1, -1, -1}), ConfigError); // twisted
	CHECK_THROWS_AS(EigenData::from_matrix(Mat2{2, 0, 0, 2}), ConfigError); // det 4
	CHECK_THROWS_AS(EigenData::from_matrix(Mat2{0, -1, 1, 0}), ConfigError); // elliptic
}

TEST_CASE("Vieta and eigenvector equations for twist-word monodromies")
{
	for (const char *t : {"xy", "xxy", "xyy", "xxyy", "xyxy", "yx", "xxxy"})
	{
		Mat2 A = Monodromy::from_twists(t).matrix();
		EigenData e = EigenData::from_matrix(A);
		CHECK(e.lambda * e.mu == QuadNum::integer(1, e.D));
		CHECK(e.lambda + e.mu == QuadNum::integer(A.trace(), e.D));
		CHECK(e.lambda.sign() == 1);
		CHECK(e.mu.sign() == 1);
		CHECK((e.lambda - QuadNum::integer(1, e.D)).sign() == 1);
		CHECK((e.mu - QuadNum::integer(1, e.D)).sign() == -1);
		// D = t^2 - 4 is never a perfect square for integer trace > 2;
		// the QuadNum constructor inside from_matrix enforces it.
	}
}

TEST_CASE("eigen functionals are injective on a lattice box")
{
	EigenData e = EigenData::from_matrix(Mat2{2, 1, 1, 1});
	Rng rng(77);
	for (int i = 0; i < 1000; ++i)
	{
		std::int64_t x = rng.range(-1000, 1000);
		std::int64_t y = rng.range(-1000, 1000);
		if (x == 0 && y == 0)
			continue;
		CHECK(e.coord_lambda(x, y).sign() != 0);
		CHECK(e.coord_mu(x, y).sign() != 0);
	}
}

TEST_CASE("matrix product and application")
{
	Mat2 A{2, 1, 1, 1}, I = Mat2::identity();
	CHECK(A * I == A);
	CHECK((A * A).trace() == 7);
	CHECK(A.apply(Vec2{1, 0}) == Vec2{2, 1});
	CHECK(A.str() == "[[2, 1], [1, 1]]");
}
