#pragma once

// Quaternions and octonions with rational coordinates.
//
// Octonions are built by Cayley-Dickson doubling of the quaternions,
//   (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)),
// with e1 = i, e2 = j, e3 = k, e4 = (0, 1) and e_{4+m} = e_m e4.

#include "rank1/exact_linear.hpp"

#include <array>

namespace rank1 {

struct Quaternion
{
	std::array<Scalar, 4> c{}; // 1, i, j, k

	static Quaternion unit(std::size_t i);
	static Quaternion real(Scalar const &r);

	Quaternion conj() const;
	Scalar norm() const; ///< sum of squared coordinates
	Scalar re() const { return c[0]; }

	friend Quaternion operator+(Quaternion const &a, Quaternion const &b);
	friend Quaternion operator-(Quaternion const &a, Quaternion const &b);
	friend Quaternion operator-(Quaternion const &a);
	friend Quaternion operator*(Quaternion const &a, Quaternion const &b);
	friend Quaternion operator*(Scalar const &s, Quaternion const &a);
	friend bool operator==(Quaternion const &a, Quaternion const &b) = default;
};

/// 4x4 real matrix of x -> q x in the basis (1, i, j, k).
MatrixQ left_mult_matrix(Quaternion const &q);
/// 4x4 real matrix of x -> x q.
MatrixQ right_mult_matrix(Quaternion const &q);

struct Octonion
{
	std::array<Scalar, 8> c{}; // 1, e1, ..., e7

	static Octonion unit(std::size_t i);
	static Octonion real(Scalar const &r);
	static Octonion from_pair(Quaternion const &a, Quaternion const &b);

	Quaternion first() const;
	Quaternion second() const;

	Octonion conj() const;
	Scalar norm() const;
	Scalar re() const { return c[0]; }
	bool is_zero() const;

	friend Octonion operator+(Octonion const &a, Octonion const &b);
	friend Octonion operator-(Octonion const &a, Octonion const &b);
	friend Octonion operator-(Octonion const &a);
	friend Octonion operator*(Octonion const &a, Octonion const &b);
	friend Octonion operator*(Scalar const &s, Octonion const &a);
	friend bool operator==(Octonion const &a, Octonion const &b) = default;
};

Octonion oct_mul(Octonion const &a, Octonion const &b);

/// (x1, x2) -> x1 conj(x2) - x2 conj(x1); purely imaginary and antisymmetric.
Octonion oct_bracket_form(Octonion const &x1, Octonion const &x2);

/// Euclidean inner product of coordinates, N(x) = <x, x>.
Scalar oct_inner(Octonion const &a, Octonion const &b);

} // namespace rank1
