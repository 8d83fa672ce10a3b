#pragma once

// Verification of the algebraic lemmas over seeded random rational inputs and,
// where finite, exhaustive bases.

#include "rank1/lie.hpp"
#include "rank1/report.hpp"

#include <cstdint>
#include <optional>

namespace rank1 {

class DegenerateInput : public Error
{
  public:
	using Error::Error;
};

class HypothesisUnsatisfiable : public Error
{
  public:
	using Error::Error;
};

/// splitmix64; the same seed always yields the same stream.
class Rng
{
  public:
	explicit Rng(std::uint64_t seed) : state_(seed) {}

	std::uint64_t next();
	/// Uniform integer in [lo, hi].
	long uniform(long lo, long hi);
	/// Coordinates uniform over the integers in [-9, 9].
	Vector vector(std::size_t n);
	/// Random combination of the subspace's echelon basis.
	Vector element(Subspace const &s);
	/// As element(), redrawn until nonzero (s must be nonzero).
	Vector nonzero_element(Subspace const &s);

  private:
	std::uint64_t state_;
};

/// [[X, theta Y], X] for X, Y in g_-l with l = 2 alpha (alpha for so(1,k)),
/// against -2|l|^2 B_theta(X,Y) X + |l|^2 B_theta(X,X) Y, and
/// [X, theta Y] - [theta X, Y] against 2 B_theta(X,Y) H_l. The opposite-sign
/// variants are reported as informational checks.
Report verify_transversality(LieAlgebraQ const &g, RootDecomposition const &rd, std::size_t trials,
                             std::uint64_t seed);

/// [[theta Y, X], X] = -3 |alpha|^2 B_theta(X,X) Y for Y = [Z, X], X in g_-a,
/// Z in m1, and [X, [Z, X]] != 0 for nonzero X and Z. su(1,k), sp(1,k) only.
Report verify_m1_identity(LieAlgebraQ const &g, RootDecomposition const &rd, std::size_t trials,
                          std::uint64_t seed);

/// Abelian subspaces of g_-a: explicit witnesses and rank obstructions.
Report verify_abelian_bounds(LieAlgebraQ const &g, RootDecomposition const &rd, std::uint64_t seed);

/// Commutants and invariant forms of ad(m) on root spaces; generic stabilizer
/// dimensions for f4. so(1,k) and f4 only.
Report verify_standard_rep_facts(LieAlgebraQ const &g, RootDecomposition const &rd, std::uint64_t seed);

/// One random instance: X in so(p,q) with X = lambda on a maximally isotropic
/// V, conjugated by a random invertible map, then decomposed again from X and
/// the form alone. Throws DegenerateInput if the eigenspace dimensions are off.
Report verify_hyperbolic_normal_form(std::size_t p, std::size_t q, Scalar const &lambda, std::uint64_t seed);

struct TwoDistributionResult
{
	std::size_t unknowns = 0;
	std::size_t rank = 0;
	std::size_t solution_dim = 0;
	std::size_t solution_dim_without_image = 0; ///< negative control
	std::size_t intersection_dim = 0;
};

/// Solution space of (3,1)-tensors with curvature symmetries on R^{p,q} with
/// T(V_i, V_i, V_i) = 0 and Im T in V_1 cap V_2, where V_i = L_i^perp for the
/// isotropic L_1 = span(e_i + e_{p+i}), L_2 = span(e_i - e_{p+i}), i < dim.
/// `isotropic_dim` defaults to p (maximally degenerate V_i). Throws
/// HypothesisUnsatisfiable when no such pair exists.
TwoDistributionResult two_distributions(std::size_t p, std::size_t q, std::optional<std::size_t> isotropic_dim = {});
Report verify_two_distributions(std::size_t p, std::size_t q, std::optional<std::size_t> isotropic_dim = {});

/// Trace form on J(O,p) and its restriction to J0.
Report verify_signature_J0();
/// dim 52, skewness, J0-invariance, D(I) = 0, Jacobi, faithful irreducible J0.
Report verify_derivation_dim(LieAlgebraQ const &g);
/// Dimension table of the root decomposition plus Killing/B_theta signatures.
Report verify_root_table(LieAlgebraQ const &g, RootDecomposition const &rd);

} // namespace rank1
