#include "rank1/composition.hpp"

namespace rank1 {

Quaternion Quaternion::unit(std::size_t i)
{
	Quaternion q;
	q.c.at(i) = 1;
	return q;
}

Quaternion Quaternion::real(Scalar const &r)
{
	Quaternion q;
	q.c[0] = r;
	return q;
}

Quaternion Quaternion::conj() const { return {{c[0], -c[1], -c[2], -c[3]}}; }

Scalar Quaternion::norm() const { return c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]; }

Quaternion operator+(Quaternion const &a, Quaternion const &b)
{
	return {{a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]}};
}

Quaternion operator-(Quaternion const &a, Quaternion const &b)
{
	return {{a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]}};
}

Quaternion operator-(Quaternion const &a) { return {{-a.c[0], -a.c[1], -a.c[2], -a.c[3]}}; }

Quaternion operator*(Quaternion const &a, Quaternion const &b)
{
	auto const &[a0, a1, a2, a3] = a.c;
	auto const &[b0, b1, b2, b3] = b.c;
	return {{
	    a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
	    a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
	    a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
	    a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
	}};
}

Quaternion operator*(Scalar const &s, Quaternion const &a)
{
	return {{s * a.c[0], s * a.c[1], s * a.c[2], s * a.c[3]}};
}

MatrixQ left_mult_matrix(Quaternion const &q)
{
	MatrixQ m(4, 4);
	for (std::size_t j = 0; j < 4; ++j)
	{
		Quaternion col = q * Quaternion::unit(j);
		for (std::size_t i = 0; i < 4; ++i)
			m(i, j) = col.c[i];
	}
	return m;
}

MatrixQ right_mult_matrix(Quaternion const &q)
{
	MatrixQ m(4, 4);
	for (std::size_t j = 0; j < 4; ++j)
	{
		Quaternion col = Quaternion::unit(j) * q;
		for (std::size_t i = 0; i < 4; ++i)
			m(i, j) = col.c[i];
	}
	return m;
}

// ---------------------------------------------------------------------------

Octonion Octonion::unit(std::size_t i)
{
	Octonion o;
	o.c.at(i) = 1;
	return o;
}

Octonion Octonion::real(Scalar const &r)
{
	Octonion o;
	o.c[0] = r;
	return o;
}

Octonion Octonion::from_pair(Quaternion const &a, Quaternion const &b)
{
	Octonion o;
	for (std::size_t i = 0; i < 4; ++i)
	{
		o.c[i] = a.c[i];
		o.c[i + 4] = b.c[i];
	}
	return o;
}

Quaternion Octonion::first() const { return {{c[0], c[1], c[2], c[3]}}; }
Quaternion Octonion::second() const { return {{c[4], c[5], c[6], c[7]}}; }

Octonion Octonion::conj() const
{
	Octonion o;
	o.c[0] = c[0];
	for (std::size_t i = 1; i < 8; ++i)
		o.c[i] = -c[i];
	return o;
}

Scalar Octonion::norm() const
{
	Scalar n = 0;
	for (auto const &x : c)
		n += x * x;
	return n;
}

bool Octonion::is_zero() const
{
	for (auto const &x : c)
		if (sgn(x) != 0)
			return false;
	return true;
}

Octonion operator+(Octonion const &a, Octonion const &b)
{
	Octonion o;
	for (std::size_t i = 0; i < 8; ++i)
		o.c[i] = a.c[i] + b.c[i];
	return o;
}

Octonion operator-(Octonion const &a, Octonion const &b)
{
	Octonion o;
	for (std::size_t i = 0; i < 8; ++i)
		o.c[i] = a.c[i] - b.c[i];
	return o;
}

Octonion operator-(Octonion const &a)
{
	Octonion o;
	for (std::size_t i = 0; i < 8; ++i)
		o.c[i] = -a.c[i];
	return o;
}

Octonion operator*(Octonion const &x, Octonion const &y)
{
	Quaternion a = x.first(), b = x.second(), c = y.first(), d = y.second();
	return Octonion::from_pair(a * c - d.conj() * b, d * a + b * c.conj());
}

Octonion operator*(Scalar const &s, Octonion const &a)
{
	Octonion o;
	for (std::size_t i = 0; i < 8; ++i)
		o.c[i] = s * a.c[i];
	return o;
}

Octonion oct_mul(Octonion const &a, Octonion const &b) { return a * b; }

Octonion oct_bracket_form(Octonion const &x1, Octonion const &x2)
{
	return x1 * x2.conj() - x2 * x1.conj();
}

Scalar oct_inner(Octonion const &a, Octonion const &b)
{
	Scalar s = 0;
	for (std::size_t i = 0; i < 8; ++i)
		s += a.c[i] * b.c[i];
	return s;
}

} // namespace rank1
