#include "gen.hpp"
#include "rank1/albert.hpp"
#include "rank1/lie.hpp"

#include <gtest/gtest.h>

using namespace rank1;
using rank1::test::Gen;

namespace {

AlbertElement random_element(Gen &gen)
{
	return AlbertElement::from_coords(gen.vector(AlbertElement::dim));
}

DerivationAlgebra const &derivations()
{
	static DerivationAlgebra const d = derivation_algebra();
	return d;
}

} // namespace

TEST(Albert, CoordinatesRoundTrip)
{
	Gen gen(20);
	for (int t = 0; t < 10; ++t)
	{
		Vector v = gen.vector(27);
		AlbertElement x = AlbertElement::from_coords(v);
		EXPECT_EQ(x.coords(), v);
		EXPECT_TRUE(is_p_hermitian(x.matrix()));
		EXPECT_EQ(AlbertElement::from_matrix(x.matrix()), x);
	}
	EXPECT_EQ(albert_coordinate_label(0), "xi1");
}

TEST(Albert, JordanUnitAndDiagonal)
{
	Gen gen(21);
	AlbertElement x = random_element(gen);
	EXPECT_EQ(jordan_product(AlbertElement::identity(), x), x);
	AlbertElement a, b;
	a.xi = {Scalar(2), Scalar(-3), Scalar(5)};
	b.xi = {Scalar(7), Scalar(1, 2), Scalar(-1)};
	AlbertElement ab = jordan_product(a, b);
	EXPECT_EQ(ab.xi[0], 14);
	EXPECT_EQ(ab.xi[1], Scalar(-3, 2));
	EXPECT_EQ(ab.xi[2], -5);
	for (auto const &c : ab.c)
		EXPECT_TRUE(c.is_zero());
}

TEST(Albert, JordanIdentityProperty)
{
	Gen gen(22);
	for (int t = 0; t < 15; ++t)
	{
		AlbertElement x = random_element(gen), y = random_element(gen);
		AlbertElement xx = jordan_product(x, x);
		EXPECT_EQ(jordan_product(x, y), jordan_product(y, x));
		EXPECT_EQ(jordan_product(jordan_product(x, y), xx), jordan_product(x, jordan_product(y, xx)));
	}
}

TEST(Albert, TraceForm)
{
	Gen gen(23);
	AlbertElement one = AlbertElement::identity();
	EXPECT_EQ(trace_form(one, one), 3);
	MatrixQ const gram = trace_form_gram();
	for (int t = 0; t < 10; ++t)
	{
		AlbertElement x = random_element(gen), y = random_element(gen);
		EXPECT_EQ(trace_form(one, x), x.trace());
		EXPECT_EQ(trace_form(x, y), dot(x.coords(), gram.apply(y.coords())));
		// associativity of the trace form
		AlbertElement z = random_element(gen);
		EXPECT_EQ(trace_form(jordan_product(x, y), z), trace_form(x, jordan_product(y, z)));
	}
}

TEST(Albert, TraceFormSignatures)
{
	MatrixQ const gram = trace_form_gram();
	EXPECT_EQ(signature(gram), (Signature{11, 16, 0}));
	Subspace const j0 = traceless_subspace();
	EXPECT_EQ(j0.dim(), 26u);
	EXPECT_EQ(signature(congruence(j0.basis(), gram)), (Signature{10, 16, 0}));
	EXPECT_EQ(signature(congruence(j0.basis(), gram)), test::descartes_signature(congruence(j0.basis(), gram)));
}

TEST(Albert, PConjugationIsAutomorphism)
{
	Gen gen(24);
	MatrixQ const s = p_conjugation();
	EXPECT_EQ(s * s, MatrixQ::identity(27));
	for (int t = 0; t < 10; ++t)
	{
		Vector x = gen.vector(27), y = gen.vector(27);
		Vector xy = jordan_product(AlbertElement::from_coords(x), AlbertElement::from_coords(y)).coords();
		Vector sx = s.apply(x), sy = s.apply(y);
		EXPECT_EQ(s.apply(xy), jordan_product(AlbertElement::from_coords(sx), AlbertElement::from_coords(sy)).coords());
	}
}

TEST(Derivations, DimensionAndJacobi)
{
	DerivationAlgebra const &d = derivations();
	EXPECT_EQ(d.dim, 52u);
	EXPECT_EQ(d.constraint_rank, 729u - 52u);
	EXPECT_TRUE(satisfies_jacobi(d.structure));
}

TEST(Derivations, LeibnizOnRandomElements)
{
	Gen gen(25);
	DerivationAlgebra const &d = derivations();
	for (int t = 0; t < 3; ++t)
	{
		Vector x = gen.vector(27), y = gen.vector(27);
		auto ax = AlbertElement::from_coords(x), ay = AlbertElement::from_coords(y);
		Vector xy = jordan_product(ax, ay).coords();
		for (std::size_t i = 0; i < d.dim; i += 7)
		{
			MatrixQ const &m = d.basis[i];
			Vector rhs = add(jordan_product(AlbertElement::from_coords(m.apply(x)), ay).coords(),
			                 jordan_product(ax, AlbertElement::from_coords(m.apply(y))).coords());
			EXPECT_EQ(m.apply(xy), rhs);
		}
	}
}

TEST(Derivations, J0Representation)
{
	J0Representation const r = restrict_to_J0(derivations());
	EXPECT_EQ(r.j0.dim(), 26u);
	EXPECT_TRUE(r.faithful);
	EXPECT_EQ(r.restriction_rank, 52u);
	EXPECT_EQ(r.commutant_dim, 1u);
	EXPECT_EQ(r.invariant_forms_dim, 1u);
	EXPECT_TRUE(r.forms_spanned_by_q);
	EXPECT_TRUE(r.irreducible);
	EXPECT_EQ(signature(r.gram), (Signature{10, 16, 0}));
}
