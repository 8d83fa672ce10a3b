#pragma once

// Structure constants of matrix Lie algebras and linear-representation
// invariants (commutants, invariant bilinear forms).

#include "rank1/exact_linear.hpp"

#include <span>
#include <vector>

namespace rank1 {

class SolverInconsistency : public Error
{
  public:
	using Error::Error;
};

/// Sparse n x n matrix stored as a SparseVector over row-major indices.
struct SparseMatrix
{
	std::size_t n = 0;
	SparseVector entries;

	static SparseMatrix from_dense(MatrixQ const &m);
	MatrixQ to_dense() const;
};

SparseMatrix sparse_product(SparseMatrix const &a, SparseMatrix const &b);
SparseMatrix sparse_commutator(SparseMatrix const &a, SparseMatrix const &b);

/// Brackets of basis vectors: [b_i, b_j] = sum_k c^k_ij b_k.
class StructureConstants
{
  public:
	StructureConstants() = default;
	explicit StructureConstants(std::size_t dim);

	std::size_t dim() const { return dim_; }
	SparseVector const &bracket(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
	void set(std::size_t i, std::size_t j, SparseVector v) { table_[i * dim_ + j] = std::move(v); }

	/// Bracket of two coordinate vectors.
	Vector bracket(std::span<Scalar const> x, std::span<Scalar const> y) const;
	/// Matrix of ad(x) acting on coordinate vectors.
	MatrixQ ad(std::span<Scalar const> x) const;
	MatrixQ ad_basis(std::size_t i) const;

	/// Coefficient c^k_ij.
	Scalar coefficient(std::size_t i, std::size_t j, std::size_t k) const;

	friend bool operator==(StructureConstants const &, StructureConstants const &);

  private:
	std::size_t dim_ = 0;
	std::vector<SparseVector> table_;
};

bool operator==(StructureConstants const &a, StructureConstants const &b);

/// Structure constants of the Lie algebra spanned by the rows of `span` (each a
/// flattened n x n matrix, rows in echelon form). Throws SolverInconsistency if
/// the span is not closed under commutator.
StructureConstants matrix_structure_constants(Subspace const &span, std::size_t n);

/// dim {A : A rho(X) = rho(X) A for all X}.
std::size_t commutant_dimension(std::span<MatrixQ const> rep);

/// Symmetric S with rho(X)^T S + S rho(X) = 0 for all X; returned as a list of
/// symmetric matrices spanning the solution space.
std::vector<MatrixQ> invariant_symmetric_forms(std::span<MatrixQ const> rep);

/// Matrix of the restriction of a linear map to an invariant subspace, in the
/// subspace's echelon coordinates. Throws if the subspace is not invariant.
MatrixQ restrict_map(MatrixQ const &map, Subspace const &invariant);

/// Restriction of a map (domain -> ambient) followed by coordinates in target.
MatrixQ restrict_map(MatrixQ const &map, Subspace const &domain, Subspace const &target);

} // namespace rank1
