#pragma once

// Real rank-one simple Lie algebras with exact structure constants.

#include "rank1/matrix_algebra.hpp"
#include "rank1/report.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace rank1 {

class UnsupportedParameters : public Error
{
  public:
	using Error::Error;
};

class NotRankOne : public Error
{
  public:
	using Error::Error;
};

class GradingViolation : public Error
{
  public:
	using Error::Error;
};

enum class Family
{
	so,
	su,
	sp,
	f4,
};

struct AlgebraSpec
{
	Family family = Family::so;
	std::size_t k = 2; ///< ignored for f4

	std::string name() const;
	friend bool operator==(AlgebraSpec const &, AlgebraSpec const &) = default;
};

/// Accepts "so(1,k)", "su(1,k)", "sp(1,k)", "f4" (also "f4^-20"). Throws
/// UnsupportedParameters on anything else.
AlgebraSpec parse_algebra_spec(std::string_view text);

/// Dimension by closed formula: k(k+1)/2, (k+1)^2 - 1, (k+1)(2k+3), 52.
std::size_t expected_dimension(AlgebraSpec const &spec);

class LieAlgebraQ
{
  public:
	AlgebraSpec spec;
	std::size_t dim = 0;
	std::vector<std::string> labels;
	StructureConstants structure;

	/// Matrices the basis was solved for (27 x 27 derivations for f4, the
	/// realified standard representation otherwise), flattened in `defining_span`.
	std::size_t defining_n = 0;
	Subspace defining_span;
	std::vector<MatrixQ> defining;

	/// Faithful representation skew for `realization_form` (J0 with q for f4).
	std::vector<MatrixQ> realization;
	MatrixQ realization_form;

	MatrixQ theta; ///< Cartan involution on coordinates (columns = images of basis)
	QuadFormQ killing;
	QuadFormQ killing_theta; ///< B_theta(X, Y) = -B(theta X, Y)
	Subspace k_part;         ///< theta = +1
	Subspace p_part;         ///< theta = -1

	Vector bracket(std::span<Scalar const> x, std::span<Scalar const> y) const
	{
		return structure.bracket(x, y);
	}
	MatrixQ ad(std::span<Scalar const> x) const { return structure.ad(x); }
	Vector apply_theta(std::span<Scalar const> x) const { return theta.apply(x); }
	Scalar B(std::span<Scalar const> x, std::span<Scalar const> y) const { return killing(x, y); }
	Scalar B_theta(std::span<Scalar const> x, std::span<Scalar const> y) const { return killing_theta(x, y); }

	/// Coordinates of a defining matrix; throws if it is not in the algebra.
	Vector coordinates_of(MatrixQ const &m) const;
	/// Image of a coordinate vector in the realization.
	MatrixQ realize(std::span<Scalar const> x) const;
	/// sum_i x_i defining_i
	MatrixQ defining_matrix(std::span<Scalar const> x) const;
	/// Cartan involution computed on a defining matrix: -X^T for the matrix
	/// families, conjugation by p on the Albert coordinates for f4.
	MatrixQ theta_of_defining(MatrixQ const &x) const;
};

LieAlgebraQ build_algebra(AlgebraSpec const &spec);

/// Gram matrix B_ij = Tr(ad b_i ad b_j).
MatrixQ killing_gram(StructureConstants const &sc);
QuadFormQ killing_form(LieAlgebraQ const &g);

/// Exact check of antisymmetry and the Jacobi identity over all basis triples.
bool satisfies_jacobi(StructureConstants const &sc);

/// theta^2 = 1 and theta [x, y] = [theta x, theta y] on all basis pairs.
bool is_involutive_automorphism(StructureConstants const &sc, MatrixQ const &theta);

/// Span of all [s, t] for s in S, t in T.
Subspace bracket_span(LieAlgebraQ const &g, Subspace const &s, Subspace const &t);

struct RootDecomposition
{
	Vector H;      ///< alpha(H) = 1
	Vector H_seed; ///< designated element before rescaling
	Scalar seed_scale; ///< alpha(H_seed)
	bool has_double_root = false; ///< false for so(1,k)

	Subspace a, m, m1, m2, g0;
	/// k cap [g_-2a, g_2a]; equals m1 for sp(1,k) and f4, while for su(1,k) it
	/// vanishes and m1 is the center of m
	Subspace m1_from_brackets;
	Subspace g_plus_a, g_minus_a, g_plus_2a, g_minus_2a;

	/// g_lambda for lambda in {-2, -1, 0, 1, 2} (multiples of alpha); zero outside.
	Subspace const &space(int lambda) const;

  private:
	Subspace zero_;
	friend RootDecomposition root_decomposition(LieAlgebraQ const &g);
};

/// Eigenspaces of ad(H) for a Cartan subspace a = span(H) of p. Throws
/// NotRankOne or GradingViolation.
RootDecomposition root_decomposition(LieAlgebraQ const &g);

/// Candidate a-generators: the designated element for matrix families, a scan
/// over p for f4. Exposed for tests.
Vector designated_cartan_element(LieAlgebraQ const &g);

/// If ad(x) has spectrum {0, +-c} or {0, +-c, +-2c} with c rational and
/// positive, returns c.
std::optional<Scalar> hyperbolic_scale(LieAlgebraQ const &g, std::span<Scalar const> x);

/// Subspace equalities and containments between brackets of root spaces,
/// theta-compatibility, Killing orthogonality and ad(m)-invariance.
Report bracket_identities(LieAlgebraQ const &g, RootDecomposition const &rd);

} // namespace rank1
