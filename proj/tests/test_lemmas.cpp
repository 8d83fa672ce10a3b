#include "gen.hpp"
#include "rank1/lemmas.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace rank1;
using rank1::test::Gen;

namespace {

struct Built
{
	LieAlgebraQ g;
	RootDecomposition rd;
};

Built const &built(std::string const &name)
{
	static std::map<std::string, Built> cache;
	auto it = cache.find(name);
	if (it == cache.end())
	{
		LieAlgebraQ g = build_algebra(parse_algebra_spec(name));
		RootDecomposition rd = root_decomposition(g);
		it = cache.emplace(name, Built{std::move(g), std::move(rd)}).first;
	}
	return it->second;
}

std::string value_of(Report const &r, std::string_view check)
{
	auto const *c = r.find(check);
	return c ? c->value : "<missing>";
}

} // namespace

TEST(Rng, SameSeedSameStream)
{
	Rng a(42), b(42), c(43);
	for (int i = 0; i < 100; ++i)
	{
		auto x = a.next();
		EXPECT_EQ(x, b.next());
		EXPECT_NE(x, c.next());
	}
	Rng d(1);
	for (int i = 0; i < 1000; ++i)
	{
		long v = d.uniform(-9, 9);
		EXPECT_GE(v, -9);
		EXPECT_LE(v, 9);
	}
}

TEST(Rng, SplitmixReferenceValue)
{
	// first output of splitmix64 seeded with 0
	EXPECT_EQ(Rng(0).next(), 0xe220a8397b1dcdafULL);
}

TEST(Rng, ElementsLieInSubspace)
{
	Subspace s(4, {Vector{1, 2, 0, 0}, Vector{0, 0, 1, -1}});
	Rng r(5);
	for (int i = 0; i < 20; ++i)
	{
		EXPECT_TRUE(s.contains(r.element(s)));
		EXPECT_FALSE(is_zero(r.nonzero_element(s)));
	}
}

TEST(Transversality, SpecialCases)
{
	for (std::string name : {"su(1,2)", "sp(1,2)"})
	{
		auto const &[g, rd] = built(name);
		Scalar const norm2 = Scalar(4) / g.B(rd.H, rd.H);
		Gen gen(40);
		Vector x = rd.g_minus_2a.combine(gen.vector(rd.g_minus_2a.dim()));
		// X = Y: both terms collapse to -|l|^2 B_theta(X,X) X
		Vector lhs = g.bracket(g.bracket(x, g.apply_theta(x)), x);
		EXPECT_EQ(lhs, scale(-norm2 * g.B_theta(x, x), x)) << name;
		if (rd.g_minus_2a.dim() > 1)
		{
			// B_theta-orthogonal pair: only the second term survives
			QuadFormQ const restricted = g.killing_theta.restrict_to(rd.g_minus_2a);
			Vector u = rd.g_minus_2a.vector(0), v = rd.g_minus_2a.vector(1);
			axpy(v, -g.B_theta(u, v) / g.B_theta(u, u), u);
			ASSERT_EQ(g.B_theta(u, v), 0);
			EXPECT_EQ(g.bracket(g.bracket(u, g.apply_theta(v)), u), scale(norm2 * g.B_theta(u, u), v));
			EXPECT_TRUE(restricted.positive_definite());
		}
	}
}

TEST(Transversality, AllFamiliesPass)
{
	for (std::string name : {"so(1,3)", "su(1,2)", "su(1,3)", "sp(1,2)", "sp(1,3)"})
	{
		auto const &[g, rd] = built(name);
		Report r = verify_transversality(g, rd, 30, 0);
		EXPECT_TRUE(r.passed()) << name;
		EXPECT_EQ(r.passes, 30u);
	}
}

TEST(Transversality, ZeroTrialsIsVacuous)
{
	auto const &[g, rd] = built("su(1,2)");
	Report r = verify_transversality(g, rd, 0, 0);
	EXPECT_TRUE(r.passed());
	EXPECT_EQ(r.trials, 0u);
}

TEST(M1Identity, PassesAndDegenerateInputs)
{
	for (std::string name : {"su(1,2)", "su(1,3)", "sp(1,2)"})
	{
		auto const &[g, rd] = built(name);
		Report r = verify_m1_identity(g, rd, 30, 3);
		EXPECT_TRUE(r.passed()) << name;
		// Z = 0 gives Y = 0; X = 0 gives zero on both sides
		Vector z = zero_vector(g.dim), x = rd.g_minus_a.vector(0);
		EXPECT_TRUE(is_zero(g.bracket(z, x)));
		EXPECT_TRUE(is_zero(g.bracket(g.bracket(g.apply_theta(x), zero_vector(g.dim)), zero_vector(g.dim))));
	}
	auto const &[g, rd] = built("so(1,3)");
	EXPECT_THROW(verify_m1_identity(g, rd, 10, 0), UnsupportedParameters);
}

TEST(AbelianBounds, SuAndF4)
{
	for (std::string name : {"su(1,2)", "su(1,3)", "su(1,4)"})
	{
		auto const &[g, rd] = built(name);
		Report r = verify_abelian_bounds(g, rd, 0);
		EXPECT_TRUE(r.passed()) << name;
	}
}

TEST(AbelianBounds, SpObstructionsHoldWitnessCapsAtKMinusOne)
{
	// The obstructions (rank of the i-component, surjectivity) hold, but an
	// abelian subspace must be simultaneously isotropic for all three
	// components, which caps it at k - 1.
	for (std::size_t k : {2u, 3u})
	{
		auto const &[g, rd] = built("sp(1," + std::to_string(k) + ")");
		Report r = verify_abelian_bounds(g, rd, 0);
		EXPECT_EQ(value_of(r, "largest abelian subspace found"), std::to_string(k - 1));
		for (auto const &c : r.checks)
			EXPECT_TRUE(c.passed || c.name.find("witness") != std::string::npos) << c.name;
	}
}

TEST(SpinFacts, So)
{
	for (std::string name : {"so(1,2)", "so(1,3)", "so(1,4)"})
	{
		auto const &[g, rd] = built(name);
		EXPECT_TRUE(verify_standard_rep_facts(g, rd, 0).passed()) << name;
	}
}

TEST(HyperbolicNormalForm, Examples)
{
	Report small = verify_hyperbolic_normal_form(1, 1, Scalar(1), 0);
	EXPECT_TRUE(small.passed());
	EXPECT_EQ(value_of(small, "middle = (V + V')^perp"), "0");
	Report big = verify_hyperbolic_normal_form(3, 5, Scalar(2), 9);
	EXPECT_TRUE(big.passed());
	EXPECT_EQ(value_of(big, "middle = (V + V')^perp"), "2");
	EXPECT_EQ(value_of(big, "middle positive definite"), "(2,0,0)");
}

TEST(HyperbolicNormalForm, RandomShapesProperty)
{
	Gen gen(41);
	for (int t = 0; t < 15; ++t)
	{
		std::size_t p = gen.integer(1, 3), q = p + gen.integer(0, 3);
		long l = gen.integer(1, 9) * (gen.integer(0, 1) ? 1 : -1);
		EXPECT_TRUE(verify_hyperbolic_normal_form(p, q, Scalar(l), gen.next()).passed()) << p << "," << q;
	}
	EXPECT_THROW(verify_hyperbolic_normal_form(2, 3, Scalar(0), 1), DegenerateInput);
}

TEST(TwoDistributions, SolutionSpaces)
{
	TwoDistributionResult a = two_distributions(1, 2);
	EXPECT_EQ(a.unknowns, 81u);
	EXPECT_EQ(a.intersection_dim, 1u);
	EXPECT_EQ(a.solution_dim, 0u);
	EXPECT_GT(a.solution_dim_without_image, 0u);
	TwoDistributionResult b = two_distributions(2, 2);
	EXPECT_EQ(b.solution_dim, 0u);
	EXPECT_GT(b.solution_dim_without_image, 0u);
	TwoDistributionResult c = two_distributions(2, 2, 1);
	EXPECT_EQ(c.intersection_dim, 2u);
	EXPECT_EQ(c.solution_dim, 0u);
	EXPECT_GT(c.solution_dim_without_image, 0u);
}

TEST(TwoDistributions, ControlIsBoundedByCurvatureTensors)
{
	// algebraic curvature tensors in dimension n: n^2 (n^2 - 1) / 12
	for (auto [p, q] : {std::pair<std::size_t, std::size_t>{1, 2}, {1, 3}})
	{
		std::size_t n = p + q;
		EXPECT_LE(two_distributions(p, q).solution_dim_without_image, n * n * (n * n - 1) / 12);
	}
}

TEST(TwoDistributions, UnsatisfiableHypotheses)
{
	EXPECT_THROW(two_distributions(3, 2), HypothesisUnsatisfiable);
	EXPECT_THROW(two_distributions(1, 2, 2), HypothesisUnsatisfiable);
	EXPECT_THROW(two_distributions(4, 5), HypothesisUnsatisfiable);
}

TEST(SignatureJ0, Passes)
{
	Report r = verify_signature_J0();
	EXPECT_TRUE(r.passed());
	EXPECT_EQ(value_of(r, "trace form on J0"), "(10,16,0)");
}

TEST(RootTable, MatrixFamilies)
{
	for (std::string name : {"so(1,2)", "so(1,4)", "su(1,2)", "su(1,4)", "sp(1,2)", "sp(1,4)"})
	{
		auto const &[g, rd] = built(name);
		EXPECT_TRUE(verify_root_table(g, rd).passed()) << name;
	}
}

TEST(AbelianBounds, SpTwoHasOnlyAbelianLines)
{
	// for k = 2, Y -> [X, Y] on g_-a has kernel span(X), so no abelian plane exists
	auto const &[g, rd] = built("sp(1,2)");
	Rng rng(8);
	for (int t = 0; t < 20; ++t)
	{
		Vector x = rng.nonzero_element(rd.g_minus_a);
		std::vector<Vector> cols;
		for (std::size_t i = 0; i < rd.g_minus_a.dim(); ++i)
			cols.push_back(g.bracket(x, rd.g_minus_a.vector(i)));
		MatrixQ m(g.dim, cols.size());
		for (std::size_t j = 0; j < cols.size(); ++j)
			for (std::size_t i = 0; i < g.dim; ++i)
				m(i, j) = cols[j][i];
		EXPECT_EQ(kernel(m).dim(), 1u);
	}
}
