#include "gen.hpp"

#include <gtest/gtest.h>

using namespace rank1;
using rank1::test::Gen;

TEST(Scalar, SerializesLowestTerms)
{
	EXPECT_EQ(to_string(Scalar(3) / 2), "3/2");
	EXPECT_EQ(to_string(Scalar(-2) / 4), "-1/2");
	EXPECT_EQ(to_string(Scalar(6, 4)), "3/2");
	EXPECT_EQ(to_string(Scalar(3)), "3/1");
	EXPECT_EQ(to_string(Scalar(0)), "0/1");
	EXPECT_EQ(parse_scalar("10/-4"), Scalar(-5, 2));
	EXPECT_EQ(parse_scalar("7"), Scalar(7));
}

TEST(Scalar, RoundTripProperty)
{
	Gen gen(1);
	for (int t = 0; t < 200; ++t)
	{
		Scalar x = gen.rational();
		EXPECT_EQ(parse_scalar(to_string(x)), x);
		EXPECT_GT(x.get_den(), 0);
	}
}

TEST(Rref, SmallCases)
{
	auto [r1, k1] = rref(MatrixQ::identity(2));
	EXPECT_EQ(r1, MatrixQ::identity(2));
	EXPECT_EQ(k1, 2u);
	auto [r2, k2] = rref(MatrixQ::from_ints({{1, 2}, {2, 4}}));
	EXPECT_EQ(r2, MatrixQ::from_ints({{1, 2}, {0, 0}}));
	EXPECT_EQ(k2, 1u);
}

TEST(Rref, InvertibleMatchesCofactorDeterminant)
{
	Gen gen(2);
	int invertible = 0;
	for (int t = 0; t < 40; ++t)
	{
		MatrixQ m = gen.matrix(5, 5);
		bool const nonsingular = test::cofactor_det(m) != 0;
		auto [r, k] = rref(m);
		EXPECT_EQ(k == 5, nonsingular);
		if (nonsingular)
		{
			++invertible;
			EXPECT_EQ(r, MatrixQ::identity(5));
			auto inv = inverse(m);
			ASSERT_TRUE(inv);
			EXPECT_EQ(*inv * m, MatrixQ::identity(5));
		}
		else
			EXPECT_FALSE(inverse(m));
	}
	EXPECT_GT(invertible, 20);
}

TEST(Rref, RankOfLowRankProducts)
{
	Gen gen(3);
	for (std::size_t r = 0; r <= 4; ++r)
	{
		MatrixQ m = gen.low_rank(6, 7, r);
		EXPECT_LE(rank(m), r);
		EXPECT_EQ(rank(m), rank(m.transpose()));
	}
}

TEST(Kernel, Basics)
{
	EXPECT_EQ(kernel(MatrixQ(3, 3)).dim(), 3u);
	EXPECT_EQ(kernel(MatrixQ::identity(3)).dim(), 0u);
	Subspace k = kernel(MatrixQ::from_ints({{1, 1, 0}}));
	EXPECT_EQ(k.dim(), 2u);
	for (std::size_t i = 0; i < k.dim(); ++i)
		EXPECT_EQ(k.basis()(i, 0) + k.basis()(i, 1), 0);
}

TEST(Kernel, RankNullityProperty)
{
	Gen gen(4);
	for (int t = 0; t < 30; ++t)
	{
		std::size_t r = gen.integer(1, 5), c = gen.integer(1, 7);
		MatrixQ m = gen.low_rank(r, c, gen.integer(0, 4));
		Subspace k = kernel(m);
		EXPECT_EQ(k.dim() + rank(m), c);
		for (std::size_t i = 0; i < k.dim(); ++i)
			EXPECT_TRUE(is_zero(m.apply(k.basis().row(i))));
	}
}

TEST(Subspace, CanonicalForm)
{
	Gen gen(5);
	for (int t = 0; t < 20; ++t)
	{
		MatrixQ m = gen.matrix(3, 6);
		std::vector<Vector> rows, mixed;
		for (std::size_t i = 0; i < 3; ++i)
			rows.emplace_back(m.row(i).begin(), m.row(i).end());
		mixed.push_back(add(rows[0], rows[1]));
		mixed.push_back(sub(rows[1], scale(Scalar(3), rows[2])));
		mixed.push_back(rows[2]);
		EXPECT_EQ(Subspace(6, rows), Subspace(6, mixed));
	}
}

TEST(Subspace, GrassmannFormulaProperty)
{
	Gen gen(6);
	for (int t = 0; t < 40; ++t)
	{
		std::size_t n = gen.integer(2, 7);
		Subspace s(n, {gen.vector(n), gen.vector(n), gen.vector(n)});
		std::vector<Vector> tv;
		for (long i = gen.integer(0, 4); i > 0; --i)
			tv.push_back(gen.vector(n));
		tv.push_back(s.dim() ? s.vector(0) : gen.vector(n));
		Subspace tt(n, tv);
		Subspace const cap = intersection(s, tt), cup = sum(s, tt);
		EXPECT_EQ(cap.dim() + cup.dim(), s.dim() + tt.dim());
		EXPECT_TRUE(s.contains(cap));
		EXPECT_TRUE(tt.contains(cap));
		EXPECT_TRUE(cup.contains(s));
		EXPECT_TRUE(cup.contains(tt));
	}
}

TEST(Subspace, AnnihilatorAndComplement)
{
	Gen gen(7);
	for (int t = 0; t < 20; ++t)
	{
		Subspace s(5, {gen.vector(5), gen.vector(5)});
		Subspace a = s.annihilator();
		EXPECT_EQ(a.dim() + s.dim(), 5u);
		for (std::size_t i = 0; i < a.dim(); ++i)
			for (std::size_t j = 0; j < s.dim(); ++j)
				EXPECT_EQ(dot(a.vector(i), s.vector(j)), 0);
		MatrixQ g = MatrixQ::diagonal(Vector{-1, 1, 1, 1, 1});
		Subspace perp = orthogonal_complement(s, g);
		EXPECT_EQ(perp.dim() + s.dim(), 5u);
	}
}

TEST(Signature, SmallCases)
{
	EXPECT_EQ(signature(MatrixQ::diagonal(Vector{1, -1})), (Signature{1, 1, 0}));
	EXPECT_EQ(signature(MatrixQ::from_ints({{0, 1}, {1, 0}})), (Signature{1, 1, 0}));
	EXPECT_EQ(signature(MatrixQ(3, 3)), (Signature{0, 0, 3}));
	EXPECT_THROW(signature(MatrixQ::from_ints({{0, 1}, {2, 0}})), NonSymmetric);
}

TEST(Signature, AgreesWithCharacteristicPolynomialOracle)
{
	Gen gen(8);
	for (int t = 0; t < 40; ++t)
	{
		MatrixQ s = gen.symmetric(gen.integer(1, 6));
		EXPECT_EQ(signature(s), test::descartes_signature(s)) << t;
	}
}

TEST(Signature, CongruenceInvarianceProperty)
{
	Gen gen(9);
	for (int t = 0; t < 30; ++t)
	{
		std::size_t n = gen.integer(2, 6);
		MatrixQ s = gen.symmetric(n);
		MatrixQ a = gen.matrix(n, n);
		if (test::cofactor_det(a) == 0)
			continue;
		EXPECT_EQ(signature(a.transpose() * s * a), signature(s));
	}
}

TEST(SparseEliminator, AgreesWithDenseRank)
{
	Gen gen(10);
	for (int t = 0; t < 20; ++t)
	{
		MatrixQ m = gen.low_rank(8, 6, gen.integer(0, 5));
		SparseEliminator sys(6);
		for (std::size_t i = 0; i < m.rows(); ++i)
			sys.add_equation(m.row(i));
		EXPECT_EQ(sys.rank(), rank(m));
		EXPECT_EQ(sys.kernel(), kernel(m));
	}
}

TEST(QuadForm, RestrictionMatchesCongruence)
{
	QuadFormQ q(MatrixQ::diagonal(Vector{-1, 1, 1}));
	Subspace null_line(3, {Vector{1, 1, 0}});
	EXPECT_EQ(q.restrict_to(null_line).sig(), (Signature{0, 0, 1}));
	EXPECT_EQ(q.sig(), (Signature{2, 1, 0}));
	EXPECT_TRUE(q.nondegenerate());
}
