#pragma once

// The Albert algebra of p-Hermitian 3x3 octonionic matrices, p = diag(-1, 1, 1):
//
//         (   xi1     c1    c3 )
//     x = ( -conj(c1) xi2   c2 )
//         ( -conj(c3) conj(c2) xi3 )
//
// with the Jordan product x * y = (xy + yx) / 2, its trace form, the traceless
// part J0, and the real form f4^-20 realized as its derivation algebra.
//
// Coordinate order (27): xi1, xi2, xi3, then c1, c2, c3 each as 8 octonion
// coordinates.

#include "rank1/composition.hpp"
#include "rank1/matrix_algebra.hpp"

#include <array>
#include <string>

namespace rank1 {

using OctMatrix3 = std::array<std::array<Octonion, 3>, 3>;

struct AlbertElement
{
	static constexpr std::size_t dim = 27;

	std::array<Scalar, 3> xi{};
	std::array<Octonion, 3> c{};

	static AlbertElement identity();
	static AlbertElement basis(std::size_t i);
	static AlbertElement from_coords(std::span<Scalar const> v);
	/// Reads back a p-Hermitian matrix; throws if the constraint fails.
	static AlbertElement from_matrix(OctMatrix3 const &m);

	Vector coords() const;
	OctMatrix3 matrix() const;
	Scalar trace() const { return xi[0] + xi[1] + xi[2]; }

	friend bool operator==(AlbertElement const &, AlbertElement const &) = default;
};

std::string albert_coordinate_label(std::size_t i);

bool is_p_hermitian(OctMatrix3 const &m);
OctMatrix3 oct_matmul(OctMatrix3 const &a, OctMatrix3 const &b);

AlbertElement jordan_product(AlbertElement const &x, AlbertElement const &y);
Scalar trace_form(AlbertElement const &x, AlbertElement const &y);

/// Gram matrix of the trace form on the 27 coordinates.
MatrixQ trace_form_gram();

/// J0 = {Tr x = 0} as a subspace of the 27 coordinates.
Subspace traceless_subspace();

/// The coordinate involution x -> p x p^-1 (a Jordan automorphism).
MatrixQ p_conjugation();

struct DerivationAlgebra
{
	std::size_t dim = 0;
	Subspace span;                  ///< flattened 27 x 27 derivation matrices (729 coordinates)
	std::vector<MatrixQ> basis;     ///< rows of `span` as matrices acting on coordinates
	StructureConstants structure;
	std::size_t constraint_rank = 0;
};

/// Solves D(b_i * b_j) = D(b_i) * b_j + b_i * D(b_j) over all basis pairs for the
/// 729 entries of D. Throws SolverInconsistency if the result is not a Lie algebra.
DerivationAlgebra derivation_algebra();

struct J0Representation
{
	Subspace j0;
	std::vector<MatrixQ> rep; ///< 26 x 26, in the echelon coordinates of j0
	MatrixQ gram;             ///< q restricted to j0
	std::size_t restriction_rank = 0;
	bool faithful = false;
	std::size_t commutant_dim = 0;
	std::size_t invariant_forms_dim = 0;
	bool forms_spanned_by_q = false;
	bool irreducible = false;
};

J0Representation restrict_to_J0(DerivationAlgebra const &d);

} // namespace rank1
