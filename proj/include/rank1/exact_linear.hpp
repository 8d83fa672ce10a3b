#pragma once

// Exact rational linear algebra: scalars, dense matrices, sparse elimination,
// canonical subspaces and quadratic-form signatures.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rank1 {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

class Error : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

class NonSymmetric : public Error
{
  public:
	using Error::Error;
};

class DimensionMismatch : public Error
{
  public:
	using Error::Error;
};

/// Always "n/d" with d > 0, e.g. "3/1", "-1/2".
std::string to_string(Scalar const &x);
Scalar parse_scalar(std::string_view s);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<Scalar const> v);
Vector add(std::span<Scalar const> a, std::span<Scalar const> b);
Vector sub(std::span<Scalar const> a, std::span<Scalar const> b);
Vector scale(Scalar const &c, std::span<Scalar const> v);
/// a += c * b
void axpy(Vector &a, Scalar const &c, std::span<Scalar const> b);
Scalar dot(std::span<Scalar const> a, std::span<Scalar const> b);

class MatrixQ
{
  public:
	MatrixQ() = default;
	MatrixQ(std::size_t rows, std::size_t cols);

	static MatrixQ identity(std::size_t n);
	static MatrixQ diagonal(std::span<Scalar const> d);
	static MatrixQ from_rows(std::vector<Vector> const &rows, std::size_t cols);
	static MatrixQ from_ints(std::vector<std::vector<long>> const &rows);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }

	Scalar &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
	Scalar const &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

	std::span<Scalar const> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
	std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
	Vector column(std::size_t c) const;
	std::vector<Scalar> const &entries() const { return data_; }

	MatrixQ transpose() const;
	Vector apply(std::span<Scalar const> v) const;
	Scalar trace() const;
	bool is_zero() const;
	bool is_symmetric() const;
	/// Row-major flattening.
	Vector flatten() const { return data_; }
	static MatrixQ unflatten(std::span<Scalar const> v, std::size_t rows, std::size_t cols);

	MatrixQ &operator+=(MatrixQ const &o);
	MatrixQ &operator-=(MatrixQ const &o);
	MatrixQ &operator*=(Scalar const &c);

	friend MatrixQ operator+(MatrixQ a, MatrixQ const &b) { return a += b; }
	friend MatrixQ operator-(MatrixQ a, MatrixQ const &b) { return a -= b; }
	friend MatrixQ operator*(Scalar const &c, MatrixQ a) { return a *= c; }
	friend MatrixQ operator*(MatrixQ const &a, MatrixQ const &b);
	friend bool operator==(MatrixQ const &a, MatrixQ const &b);

  private:
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<Scalar> data_;
};

MatrixQ commutator(MatrixQ const &a, MatrixQ const &b);

/// Reduced row-echelon form and rank.
std::pair<MatrixQ, std::size_t> rref(MatrixQ m);
std::size_t rank(MatrixQ const &m);
/// Inverse of a square matrix, or nullopt if it is singular.
std::optional<MatrixQ> inverse(MatrixQ const &m);

// ---------------------------------------------------------------------------
// sparse rows

struct Term
{
	std::size_t index;
	Scalar value;
};

/// Sorted by index, no explicit zeros.
using SparseVector = std::vector<Term>;

SparseVector sparse_from_dense(std::span<Scalar const> v);
Vector dense_from_sparse(SparseVector const &v, std::size_t n);
/// a + c * b
SparseVector sparse_axpy(SparseVector const &a, Scalar const &c, SparseVector const &b);

class Subspace;

/// Incremental Gaussian elimination over sparse rows. Rows are reduced as they
/// arrive, so systems with many redundant equations stay small.
class SparseEliminator
{
  public:
	explicit SparseEliminator(std::size_t unknowns);

	/// Returns true if the equation raised the rank.
	bool add_equation(SparseVector row);
	bool add_equation(std::span<Scalar const> dense) { return add_equation(sparse_from_dense(dense)); }

	std::size_t unknowns() const { return pivots_.size(); }
	std::size_t rank() const { return rank_; }

	/// Null space of all equations added so far.
	Subspace kernel() const;

  private:
	std::vector<SparseVector> pivots_; // pivots_[c] has leading 1 at column c, or is empty
	std::size_t rank_ = 0;
};

// ---------------------------------------------------------------------------

class Subspace
{
  public:
	Subspace() = default;
	/// Span of the given vectors.
	Subspace(std::size_t ambient_dim, std::vector<Vector> const &spanning);

	static Subspace zero(std::size_t ambient_dim);
	static Subspace full(std::size_t ambient_dim);
	/// Takes a basis already in reduced row-echelon form.
	static Subspace from_rref(MatrixQ basis);

	std::size_t ambient_dim() const { return ambient_; }
	std::size_t dim() const { return basis_.rows(); }
	MatrixQ const &basis() const { return basis_; }
	Vector vector(std::size_t i) const;
	std::vector<std::size_t> const &pivots() const { return pivots_; }

	bool contains(std::span<Scalar const> v) const;
	bool contains(Subspace const &other) const;
	/// Coordinates in the echelon basis; throws if v is not in the subspace.
	Vector coordinates(std::span<Scalar const> v) const;
	/// Combination sum_i c_i * basis_i.
	Vector combine(std::span<Scalar const> c) const;

	/// Vectors y with <x, y> = 0 (Euclidean) for every x in the subspace.
	Subspace annihilator() const;

	friend bool operator==(Subspace const &a, Subspace const &b)
	{
		return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
	}

  private:
	std::size_t ambient_ = 0;
	MatrixQ basis_;
	std::vector<std::size_t> pivots_;
};

Subspace kernel(MatrixQ const &m);
Subspace image(MatrixQ const &m); ///< column space
Subspace sum(Subspace const &a, Subspace const &b);
Subspace intersection(Subspace const &a, Subspace const &b);
/// {x : s^T G x = 0 for all s in S}
Subspace orthogonal_complement(Subspace const &s, MatrixQ const &gram);

// ---------------------------------------------------------------------------

struct Signature
{
	std::size_t plus = 0;
	std::size_t minus = 0;
	std::size_t zero = 0;

	friend bool operator==(Signature const &, Signature const &) = default;
};

std::string to_string(Signature const &s);

/// Lagrange (symmetric Gauss) diagonalization; throws NonSymmetric.
Signature signature(MatrixQ const &gram);

class QuadFormQ
{
  public:
	QuadFormQ() = default;
	explicit QuadFormQ(MatrixQ gram);

	std::size_t dim() const { return gram_.rows(); }
	MatrixQ const &gram() const { return gram_; }
	Signature const &sig() const { return sig_; }
	bool nondegenerate() const { return sig_.zero == 0; }
	bool positive_definite() const { return sig_.plus == dim(); }

	Scalar operator()(std::span<Scalar const> x, std::span<Scalar const> y) const;
	/// Gram matrix of the form restricted to a subspace (in its echelon basis).
	QuadFormQ restrict_to(Subspace const &s) const;

  private:
	MatrixQ gram_;
	Signature sig_;
};

/// Gram matrix of bilinear form g on the rows of `basis`: B G B^T.
MatrixQ congruence(MatrixQ const &basis, MatrixQ const &gram);

} // namespace rank1
