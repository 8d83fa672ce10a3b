#include "rank1/albert.hpp"

#include <map>

namespace rank1 {

namespace {

Octonion const &oct_zero()
{
	static Octonion const z;
	return z;
}

bool is_real(Octonion const &o)
{
	for (std::size_t i = 1; i < 8; ++i)
		if (sgn(o.c[i]) != 0)
			return false;
	return true;
}

/// C[i][j] = coords(b_i * b_j), sparse.
std::vector<SparseVector> jordan_structure_constants()
{
	constexpr std::size_t n = AlbertElement::dim;
	std::vector<SparseVector> table(n * n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i; j < n; ++j)
		{
			auto v = sparse_from_dense(jordan_product(AlbertElement::basis(i), AlbertElement::basis(j)).coords());
			table[i * n + j] = v;
			table[j * n + i] = std::move(v);
		}
	return table;
}

} // namespace

AlbertElement AlbertElement::identity()
{
	AlbertElement x;
	x.xi = {1, 1, 1};
	return x;
}

AlbertElement AlbertElement::basis(std::size_t i)
{
	AlbertElement x;
	if (i < 3)
		x.xi[i] = 1;
	else if (i < dim)
		x.c[(i - 3) / 8].c[(i - 3) % 8] = 1;
	else
		throw DimensionMismatch("Albert basis index out of range");
	return x;
}

AlbertElement AlbertElement::from_coords(std::span<Scalar const> v)
{
	if (v.size() != dim)
		throw DimensionMismatch("Albert element needs 27 coordinates");
	AlbertElement x;
	for (std::size_t i = 0; i < 3; ++i)
		x.xi[i] = v[i];
	for (std::size_t i = 0; i < 24; ++i)
		x.c[i / 8].c[i % 8] = v[3 + i];
	return x;
}

Vector AlbertElement::coords() const
{
	Vector v(dim);
	for (std::size_t i = 0; i < 3; ++i)
		v[i] = xi[i];
	for (std::size_t i = 0; i < 24; ++i)
		v[3 + i] = c[i / 8].c[i % 8];
	return v;
}

OctMatrix3 AlbertElement::matrix() const
{
	OctMatrix3 m;
	m[0][0] = Octonion::real(xi[0]);
	m[1][1] = Octonion::real(xi[1]);
	m[2][2] = Octonion::real(xi[2]);
	m[0][1] = c[0];
	m[1][0] = -c[0].conj();
	m[1][2] = c[1];
	m[2][1] = c[1].conj();
	m[0][2] = c[2];
	m[2][0] = -c[2].conj();
	return m;
}

AlbertElement AlbertElement::from_matrix(OctMatrix3 const &m)
{
	if (!is_p_hermitian(m))
		throw Error("matrix is not p-Hermitian");
	AlbertElement x;
	for (std::size_t i = 0; i < 3; ++i)
		x.xi[i] = m[i][i].re();
	x.c[0] = m[0][1];
	x.c[1] = m[1][2];
	x.c[2] = m[0][2];
	return x;
}

std::string albert_coordinate_label(std::size_t i)
{
	if (i < 3)
		return "xi" + std::to_string(i + 1);
	std::size_t block = (i - 3) / 8, k = (i - 3) % 8;
	return "c" + std::to_string(block + 1) + (k == 0 ? std::string(".1") : ".e" + std::to_string(k));
}

bool is_p_hermitian(OctMatrix3 const &m)
{
	for (std::size_t i = 0; i < 3; ++i)
		if (!is_real(m[i][i]))
			return false;
	return m[1][0] == -m[0][1].conj() && m[2][0] == -m[0][2].conj() && m[2][1] == m[1][2].conj();
}

OctMatrix3 oct_matmul(OctMatrix3 const &a, OctMatrix3 const &b)
{
	OctMatrix3 r;
	for (std::size_t i = 0; i < 3; ++i)
		for (std::size_t j = 0; j < 3; ++j)
		{
			Octonion acc = oct_zero();
			for (std::size_t k = 0; k < 3; ++k)
				acc = acc + a[i][k] * b[k][j];
			r[i][j] = acc;
		}
	return r;
}

AlbertElement jordan_product(AlbertElement const &x, AlbertElement const &y)
{
	OctMatrix3 mx = x.matrix(), my = y.matrix();
	OctMatrix3 xy = oct_matmul(mx, my), yx = oct_matmul(my, mx);
	Scalar const half(1, 2);
	OctMatrix3 s;
	for (std::size_t i = 0; i < 3; ++i)
		for (std::size_t j = 0; j < 3; ++j)
			s[i][j] = half * (xy[i][j] + yx[i][j]);
	return AlbertElement::from_matrix(s);
}

Scalar trace_form(AlbertElement const &x, AlbertElement const &y) { return jordan_product(x, y).trace(); }

MatrixQ trace_form_gram()
{
	constexpr std::size_t n = AlbertElement::dim;
	MatrixQ g(n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i; j < n; ++j)
		{
			g(i, j) = trace_form(AlbertElement::basis(i), AlbertElement::basis(j));
			g(j, i) = g(i, j);
		}
	return g;
}

Subspace traceless_subspace()
{
	MatrixQ tr(1, AlbertElement::dim);
	for (std::size_t i = 0; i < 3; ++i)
		tr(0, i) = 1;
	return kernel(tr);
}

MatrixQ p_conjugation()
{
	// p x p^-1 negates the entries c1 and c3 (those in row/column 1 off the diagonal)
	Vector d(AlbertElement::dim, Scalar(1));
	for (std::size_t k = 0; k < 8; ++k)
	{
		d[3 + k] = -1;
		d[3 + 16 + k] = -1;
	}
	return MatrixQ::diagonal(d);
}

DerivationAlgebra derivation_algebra()
{
	constexpr std::size_t n = AlbertElement::dim;
	auto const C = jordan_structure_constants();
	auto unknown = [](std::size_t row, std::size_t col) { return row * n + col; };

	// component m of D(b_i * b_j) - D(b_i) * b_j - b_i * D(b_j), with
	// D(b_i) = sum_l D_{l i} b_l
	SparseEliminator sys(n * n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i; j < n; ++j)
		{
			std::vector<std::map<std::size_t, Scalar>> eqs(n);
			for (auto const &t : C[i * n + j])
				for (std::size_t m = 0; m < n; ++m)
					eqs[m][unknown(m, t.index)] += t.value;
			for (std::size_t l = 0; l < n; ++l)
			{
				for (auto const &t : C[l * n + j])
					eqs[t.index][unknown(l, i)] -= t.value;
				for (auto const &t : C[i * n + l])
					eqs[t.index][unknown(l, j)] -= t.value;
			}
			for (auto &eq : eqs)
			{
				SparseVector row;
				for (auto &[k, v] : eq)
					if (sgn(v) != 0)
						row.push_back({k, std::move(v)});
				if (!row.empty())
					sys.add_equation(std::move(row));
			}
		}

	DerivationAlgebra d;
	d.constraint_rank = sys.rank();
	d.span = sys.kernel();
	d.dim = d.span.dim();
	for (std::size_t i = 0; i < d.dim; ++i)
		d.basis.push_back(MatrixQ::unflatten(d.span.basis().row(i), n, n));
	d.structure = matrix_structure_constants(d.span, n);
	return d;
}

J0Representation restrict_to_J0(DerivationAlgebra const &d)
{
	J0Representation r;
	r.j0 = traceless_subspace();
	r.gram = congruence(r.j0.basis(), trace_form_gram());
	for (auto const &D : d.basis)
		r.rep.push_back(restrict_map(D, r.j0));

	std::vector<Vector> flat;
	for (auto const &m : r.rep)
		flat.push_back(m.flatten());
	r.restriction_rank = rank(MatrixQ::from_rows(flat, r.j0.dim() * r.j0.dim()));
	r.faithful = r.restriction_rank == d.dim;

	r.commutant_dim = commutant_dimension(r.rep);
	auto forms = invariant_symmetric_forms(r.rep);
	r.invariant_forms_dim = forms.size();
	if (forms.size() == 1)
	{
		// q|J0 must be a multiple of the unique generator
		std::vector<Vector> rows{forms.front().flatten(), r.gram.flatten()};
		r.forms_spanned_by_q = rank(MatrixQ::from_rows(rows, r.gram.entries().size())) == 1;
	}

	bool skew = true;
	for (auto const &x : r.rep)
		skew = skew && (x.transpose() * r.gram + r.gram * x).is_zero();
	// representations of a semisimple algebra are completely reducible, so a
	// one-dimensional commutant leaves no invariant subspace
	r.irreducible = skew && signature(r.gram).zero == 0 && r.commutant_dim == 1;
	return r;
}

} // namespace rank1
