#include "gen.hpp"
#include "rank1/composition.hpp"

#include <gtest/gtest.h>

using namespace rank1;
using rank1::test::Gen;

namespace {

Octonion random_octonion(Gen &gen)
{
	Octonion x;
	for (auto &c : x.c)
		c = gen.integer(-4, 4);
	return x;
}

Octonion e(std::size_t i) { return Octonion::unit(i); }

// Index of e_i e_j = +-e_k for imaginary units, read off a hand-built table of
// the seven quaternionic triples for the doubling convention in use.
struct Triple
{
	int a, b, c;
};
constexpr Triple triples[] = {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 4, 7}, {1, 7, 6}, {2, 5, 7}, {3, 6, 5}};

} // namespace

TEST(Quaternion, MultiplicationTable)
{
	auto i = Quaternion::unit(1), j = Quaternion::unit(2), k = Quaternion::unit(3);
	EXPECT_EQ(i * j, k);
	EXPECT_EQ(j * k, i);
	EXPECT_EQ(k * i, j);
	EXPECT_EQ(j * i, -k);
	EXPECT_EQ(i * i, Quaternion::real(-1));
}

TEST(Quaternion, MultMatricesMatchProduct)
{
	Gen gen(11);
	for (int t = 0; t < 20; ++t)
	{
		Quaternion p, q;
		for (auto &c : p.c)
			c = gen.integer(-5, 5);
		for (auto &c : q.c)
			c = gen.integer(-5, 5);
		Vector qv(q.c.begin(), q.c.end());
		Quaternion pq = p * q;
		EXPECT_EQ(left_mult_matrix(p).apply(qv), Vector(pq.c.begin(), pq.c.end()));
		Vector pv(p.c.begin(), p.c.end());
		EXPECT_EQ(right_mult_matrix(q).apply(pv), Vector(pq.c.begin(), pq.c.end()));
	}
}

TEST(Octonion, UnitAndBasicProducts)
{
	Octonion x = Octonion::real(1);
	Octonion y = e(3) + Scalar(2) * e(6);
	EXPECT_EQ(x * y, y);
	EXPECT_EQ(e(1) * e(2), e(3));
	EXPECT_EQ(e(1) * e(4), e(5));
	EXPECT_EQ(e(4) * e(1), -e(5));
}

TEST(Octonion, HandTableOfTriples)
{
	for (auto [a, b, c] : triples)
	{
		EXPECT_EQ(e(a) * e(b), e(c)) << a << b;
		EXPECT_EQ(e(b) * e(c), e(a)) << b << c;
		EXPECT_EQ(e(c) * e(a), e(b)) << c << a;
		EXPECT_EQ(e(b) * e(a), -e(c));
	}
	for (std::size_t i = 1; i < 8; ++i)
		EXPECT_EQ(e(i) * e(i), Octonion::real(-1));
}

TEST(Octonion, CompositionAndAlternativityProperty)
{
	Gen gen(12);
	for (int t = 0; t < 50; ++t)
	{
		Octonion x = random_octonion(gen), y = random_octonion(gen), z = random_octonion(gen);
		EXPECT_EQ((x * y).norm(), x.norm() * y.norm());
		EXPECT_EQ((x * x) * y, x * (x * y));
		EXPECT_EQ((y * x) * x, y * (x * x));
		// Moufang
		EXPECT_EQ(z * (x * (z * y)), ((z * x) * z) * y);
		EXPECT_EQ((x * y).conj(), y.conj() * x.conj());
		EXPECT_EQ(x * x.conj(), Octonion::real(x.norm()));
		EXPECT_EQ(oct_inner(x, x), x.norm());
	}
}

TEST(Octonion, NotAssociative)
{
	EXPECT_NE((e(1) * e(2)) * e(4), e(1) * (e(2) * e(4)));
}

TEST(Octonion, BracketForm)
{
	EXPECT_TRUE(oct_bracket_form(e(5), e(5)).is_zero());
	EXPECT_EQ(oct_bracket_form(Octonion::real(1), e(1)), Scalar(-2) * e(1));
	EXPECT_EQ(oct_bracket_form(e(1), e(2)), Scalar(-2) * e(3));
	Gen gen(13);
	for (int t = 0; t < 30; ++t)
	{
		Octonion x = random_octonion(gen), y = random_octonion(gen);
		Octonion b = oct_bracket_form(x, y);
		EXPECT_EQ(b.re(), 0);
		EXPECT_EQ(b, -oct_bracket_form(y, x));
	}
}
