#pragma once

// Seeded generators for property tests. Deliberately a different PRNG from
// the library's sampler so test inputs do not share its stream.

#include "rank1/exact_linear.hpp"

#include <cstdint>

namespace rank1::test {

class Gen
{
  public:
	explicit Gen(std::uint64_t seed) : s_(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL)
	{
		if (s_ == 0)
			s_ = 1;
	}

	std::uint64_t next()
	{
		s_ ^= s_ << 13;
		s_ ^= s_ >> 7;
		s_ ^= s_ << 17;
		return s_;
	}

	long integer(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

	Scalar rational()
	{
		Scalar r(integer(-12, 12), integer(1, 6));
		r.canonicalize();
		return r;
	}

	Vector vector(std::size_t n)
	{
		Vector v(n);
		for (auto &x : v)
			x = integer(-5, 5);
		return v;
	}

	MatrixQ matrix(std::size_t r, std::size_t c, long lo = -4, long hi = 4)
	{
		MatrixQ m(r, c);
		for (std::size_t i = 0; i < r; ++i)
			for (std::size_t j = 0; j < c; ++j)
				m(i, j) = integer(lo, hi);
		return m;
	}

	/// Random matrix of rank at most r, as a product of thin factors.
	MatrixQ low_rank(std::size_t rows, std::size_t cols, std::size_t r)
	{
		return matrix(rows, r) * matrix(r, cols);
	}

	MatrixQ symmetric(std::size_t n)
	{
		MatrixQ m(n, n);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = i; j < n; ++j)
				m(i, j) = m(j, i) = integer(-4, 4);
		return m;
	}

  private:
	std::uint64_t s_;
};

/// Determinant by cofactor expansion along the first row.
inline Scalar cofactor_det(MatrixQ const &m)
{
	std::size_t const n = m.rows();
	if (n == 0)
		return 1;
	if (n == 1)
		return m(0, 0);
	Scalar det = 0;
	for (std::size_t j = 0; j < n; ++j)
	{
		if (m(0, j) == 0)
			continue;
		MatrixQ minor(n - 1, n - 1);
		for (std::size_t r = 1; r < n; ++r)
			for (std::size_t c = 0, cc = 0; c < n; ++c)
				if (c != j)
					minor(r - 1, cc++) = m(r, c);
		Scalar const term = m(0, j) * cofactor_det(minor);
		det += (j % 2 ? -term : term);
	}
	return det;
}

/// Characteristic polynomial coefficients (leading first) by Faddeev-LeVerrier.
inline Vector char_poly(MatrixQ const &a)
{
	std::size_t const n = a.rows();
	Vector c(n + 1);
	c[0] = 1;
	MatrixQ mk(n, n);
	MatrixQ const id = MatrixQ::identity(n);
	for (std::size_t k = 1; k <= n; ++k)
	{
		mk = a * mk + c[k - 1] * id;
		c[k] = -(a * mk).trace() / Scalar(static_cast<long>(k));
	}
	return c;
}

/// Signature of a symmetric matrix from its characteristic polynomial: all roots
/// are real, so Descartes' rule counts positive roots exactly.
inline Signature descartes_signature(MatrixQ const &s)
{
	Vector c = char_poly(s);
	std::size_t const n = s.rows();
	std::size_t zero = 0;
	while (zero < n && c[n - zero] == 0)
		++zero;
	auto changes = [&](bool flip) {
		std::size_t count = 0;
		int last = 0;
		for (std::size_t i = 0; i + zero <= n; ++i)
		{
			int sg = sgn(c[i]);
			if (flip && (n - i) % 2 == 1)
				sg = -sg;
			if (sg == 0)
				continue;
			if (last != 0 && sg != last)
				++count;
			last = sg;
		}
		return count;
	};
	return Signature{changes(false), changes(true), zero};
}

} // namespace rank1::test
