#include "rank1/exact_linear.hpp"

#include <algorithm>
#include <cassert>

namespace rank1 {

std::string to_string(Scalar const &x)
{
	Scalar r = x;
	r.canonicalize();
	return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Scalar parse_scalar(std::string_view s)
{
	Scalar r;
	if (r.set_str(std::string(s), 10) != 0)
		throw Error("invalid rational literal: " + std::string(s));
	if (r.get_den() == 0)
		throw Error("zero denominator: " + std::string(s));
	r.canonicalize();
	return r;
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i)
{
	Vector v(n);
	v[i] = 1;
	return v;
}

bool is_zero(std::span<Scalar const> v)
{
	return std::all_of(v.begin(), v.end(), [](Scalar const &x) { return sgn(x) == 0; });
}

Vector add(std::span<Scalar const> a, std::span<Scalar const> b)
{
	if (a.size() != b.size())
		throw DimensionMismatch("vector add");
	Vector r(a.begin(), a.end());
	for (std::size_t i = 0; i < r.size(); ++i)
		r[i] += b[i];
	return r;
}

Vector sub(std::span<Scalar const> a, std::span<Scalar const> b)
{
	if (a.size() != b.size())
		throw DimensionMismatch("vector sub");
	Vector r(a.begin(), a.end());
	for (std::size_t i = 0; i < r.size(); ++i)
		r[i] -= b[i];
	return r;
}

Vector scale(Scalar const &c, std::span<Scalar const> v)
{
	Vector r(v.size());
	for (std::size_t i = 0; i < v.size(); ++i)
		r[i] = c * v[i];
	return r;
}

void axpy(Vector &a, Scalar const &c, std::span<Scalar const> b)
{
	if (a.size() != b.size())
		throw DimensionMismatch("axpy");
	if (sgn(c) == 0)
		return;
	for (std::size_t i = 0; i < a.size(); ++i)
		if (sgn(b[i]) != 0)
			a[i] += c * b[i];
}

Scalar dot(std::span<Scalar const> a, std::span<Scalar const> b)
{
	if (a.size() != b.size())
		throw DimensionMismatch("dot");
	Scalar r = 0;
	for (std::size_t i = 0; i < a.size(); ++i)
		if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
			r += a[i] * b[i];
	return r;
}

// ---------------------------------------------------------------------------

MatrixQ::MatrixQ(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

MatrixQ MatrixQ::identity(std::size_t n)
{
	MatrixQ m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		m(i, i) = 1;
	return m;
}

MatrixQ MatrixQ::diagonal(std::span<Scalar const> d)
{
	MatrixQ m(d.size(), d.size());
	for (std::size_t i = 0; i < d.size(); ++i)
		m(i, i) = d[i];
	return m;
}

MatrixQ MatrixQ::from_rows(std::vector<Vector> const &rows, std::size_t cols)
{
	MatrixQ m(rows.size(), cols);
	for (std::size_t r = 0; r < rows.size(); ++r)
	{
		if (rows[r].size() != cols)
			throw DimensionMismatch("from_rows: ragged rows");
		std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
	}
	return m;
}

MatrixQ MatrixQ::from_ints(std::vector<std::vector<long>> const &rows)
{
	std::size_t cols = rows.empty() ? 0 : rows.front().size();
	MatrixQ m(rows.size(), cols);
	for (std::size_t r = 0; r < rows.size(); ++r)
	{
		if (rows[r].size() != cols)
			throw DimensionMismatch("from_ints: ragged rows");
		for (std::size_t c = 0; c < cols; ++c)
			m(r, c) = rows[r][c];
	}
	return m;
}

MatrixQ MatrixQ::unflatten(std::span<Scalar const> v, std::size_t rows, std::size_t cols)
{
	if (v.size() != rows * cols)
		throw DimensionMismatch("unflatten");
	MatrixQ m(rows, cols);
	std::copy(v.begin(), v.end(), m.data_.begin());
	return m;
}

Vector MatrixQ::column(std::size_t c) const
{
	Vector v(rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		v[r] = (*this)(r, c);
	return v;
}

MatrixQ MatrixQ::transpose() const
{
	MatrixQ t(cols_, rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		for (std::size_t c = 0; c < cols_; ++c)
			t(c, r) = (*this)(r, c);
	return t;
}

Vector MatrixQ::apply(std::span<Scalar const> v) const
{
	if (v.size() != cols_)
		throw DimensionMismatch("matrix-vector product");
	Vector out(rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		out[r] = dot(row(r), v);
	return out;
}

Scalar MatrixQ::trace() const
{
	if (rows_ != cols_)
		throw DimensionMismatch("trace of non-square matrix");
	Scalar t = 0;
	for (std::size_t i = 0; i < rows_; ++i)
		t += (*this)(i, i);
	return t;
}

bool MatrixQ::is_zero() const { return rank1::is_zero(data_); }

bool MatrixQ::is_symmetric() const
{
	if (rows_ != cols_)
		return false;
	for (std::size_t r = 0; r < rows_; ++r)
		for (std::size_t c = r + 1; c < cols_; ++c)
			if ((*this)(r, c) != (*this)(c, r))
				return false;
	return true;
}

MatrixQ &MatrixQ::operator+=(MatrixQ const &o)
{
	if (rows_ != o.rows_ || cols_ != o.cols_)
		throw DimensionMismatch("matrix add");
	for (std::size_t i = 0; i < data_.size(); ++i)
		data_[i] += o.data_[i];
	return *this;
}

MatrixQ &MatrixQ::operator-=(MatrixQ const &o)
{
	if (rows_ != o.rows_ || cols_ != o.cols_)
		throw DimensionMismatch("matrix sub");
	for (std::size_t i = 0; i < data_.size(); ++i)
		data_[i] -= o.data_[i];
	return *this;
}

MatrixQ &MatrixQ::operator*=(Scalar const &c)
{
	for (auto &x : data_)
		x *= c;
	return *this;
}

MatrixQ operator*(MatrixQ const &a, MatrixQ const &b)
{
	if (a.cols_ != b.rows_)
		throw DimensionMismatch("matrix product");
	MatrixQ p(a.rows_, b.cols_);
	for (std::size_t i = 0; i < a.rows_; ++i)
		for (std::size_t k = 0; k < a.cols_; ++k)
		{
			Scalar const &aik = a(i, k);
			if (sgn(aik) == 0)
				continue;
			for (std::size_t j = 0; j < b.cols_; ++j)
				if (sgn(b(k, j)) != 0)
					p(i, j) += aik * b(k, j);
		}
	return p;
}

bool operator==(MatrixQ const &a, MatrixQ const &b)
{
	return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

MatrixQ commutator(MatrixQ const &a, MatrixQ const &b) { return a * b - b * a; }

std::pair<MatrixQ, std::size_t> rref(MatrixQ m)
{
	std::size_t const rows = m.rows(), cols = m.cols();
	std::size_t r = 0;
	for (std::size_t c = 0; c < cols && r < rows; ++c)
	{
		std::size_t p = r;
		while (p < rows && sgn(m(p, c)) == 0)
			++p;
		if (p == rows)
			continue;
		if (p != r)
			for (std::size_t j = 0; j < cols; ++j)
				swap(m(p, j), m(r, j));
		Scalar inv = 1 / m(r, c);
		for (std::size_t j = c; j < cols; ++j)
			m(r, j) *= inv;
		for (std::size_t i = 0; i < rows; ++i)
		{
			if (i == r || sgn(m(i, c)) == 0)
				continue;
			Scalar f = m(i, c);
			for (std::size_t j = c; j < cols; ++j)
				if (sgn(m(r, j)) != 0)
					m(i, j) -= f * m(r, j);
		}
		++r;
	}
	return {std::move(m), r};
}

std::size_t rank(MatrixQ const &m) { return rref(m).second; }

std::optional<MatrixQ> inverse(MatrixQ const &m)
{
	if (m.rows() != m.cols())
		throw DimensionMismatch("inverse: matrix is not square");
	std::size_t const n = m.rows();
	MatrixQ aug(n, 2 * n);
	for (std::size_t r = 0; r < n; ++r)
	{
		for (std::size_t c = 0; c < n; ++c)
			aug(r, c) = m(r, c);
		aug(r, n + r) = 1;
	}
	auto [e, rk] = rref(std::move(aug));
	for (std::size_t r = 0; r < n; ++r)
		if (e(r, r) != 1)
			return std::nullopt;
	MatrixQ inv(n, n);
	for (std::size_t r = 0; r < n; ++r)
		for (std::size_t c = 0; c < n; ++c)
			inv(r, c) = e(r, n + c);
	return inv;
}

// ---------------------------------------------------------------------------

SparseVector sparse_from_dense(std::span<Scalar const> v)
{
	SparseVector s;
	for (std::size_t i = 0; i < v.size(); ++i)
		if (sgn(v[i]) != 0)
			s.push_back({i, v[i]});
	return s;
}

Vector dense_from_sparse(SparseVector const &v, std::size_t n)
{
	Vector d(n);
	for (auto const &t : v)
		d.at(t.index) = t.value;
	return d;
}

SparseVector sparse_axpy(SparseVector const &a, Scalar const &c, SparseVector const &b)
{
	SparseVector r;
	r.reserve(a.size() + b.size());
	auto ia = a.begin(), ib = b.begin();
	while (ia != a.end() || ib != b.end())
	{
		if (ib == b.end() || (ia != a.end() && ia->index < ib->index))
			r.push_back(*ia++);
		else if (ia == a.end() || ib->index < ia->index)
		{
			r.push_back({ib->index, c * ib->value});
			++ib;
		}
		else
		{
			Scalar v = ia->value + c * ib->value;
			if (sgn(v) != 0)
				r.push_back({ia->index, std::move(v)});
			++ia;
			++ib;
		}
	}
	return r;
}

SparseEliminator::SparseEliminator(std::size_t unknowns) : pivots_(unknowns) {}

bool SparseEliminator::add_equation(SparseVector row)
{
	while (!row.empty())
	{
		std::size_t lead = row.front().index;
		if (lead >= pivots_.size())
			throw DimensionMismatch("equation references unknown out of range");
		auto const &p = pivots_[lead];
		if (p.empty())
		{
			Scalar inv = 1 / row.front().value;
			for (auto &t : row)
				t.value *= inv;
			pivots_[lead] = std::move(row);
			++rank_;
			return true;
		}
		Scalar f = -row.front().value;
		row = sparse_axpy(row, f, p);
	}
	return false;
}

Subspace SparseEliminator::kernel() const
{
	std::size_t const n = pivots_.size();
	// back-substitute into reduced form, highest pivot first
	std::vector<SparseVector> reduced(n);
	for (std::size_t c = n; c-- > 0;)
	{
		if (pivots_[c].empty())
			continue;
		SparseVector row = pivots_[c];
		for (std::size_t k = 1; k < row.size();)
		{
			std::size_t col = row[k].index;
			if (!reduced[col].empty())
			{
				Scalar f = -row[k].value;
				row = sparse_axpy(row, f, reduced[col]);
				// entries before position k are unchanged, continue at k
			}
			else
				++k;
		}
		reduced[c] = std::move(row);
	}
	std::vector<Vector> basis;
	for (std::size_t f = 0; f < n; ++f)
	{
		if (!pivots_[f].empty())
			continue;
		Vector v(n);
		v[f] = 1;
		basis.push_back(std::move(v));
	}
	// fill pivot coordinates: x_p = -sum_f R[p][f] x_f
	std::vector<std::size_t> free_index(n, n);
	for (std::size_t f = 0, j = 0; f < n; ++f)
		if (pivots_[f].empty())
			free_index[f] = j++;
	for (std::size_t p = 0; p < n; ++p)
		for (std::size_t k = 1; k < reduced[p].size(); ++k)
		{
			auto const &t = reduced[p][k];
			basis[free_index[t.index]][p] = -t.value;
		}
	return Subspace(n, basis);
}

// ---------------------------------------------------------------------------

Subspace::Subspace(std::size_t ambient_dim, std::vector<Vector> const &spanning) : ambient_(ambient_dim)
{
	auto [r, rk] = rref(MatrixQ::from_rows(spanning, ambient_dim));
	basis_ = MatrixQ(rk, ambient_dim);
	for (std::size_t i = 0; i < rk; ++i)
		std::copy(r.row(i).begin(), r.row(i).end(), basis_.row(i).begin());
	for (std::size_t i = 0; i < rk; ++i)
		for (std::size_t c = 0; c < ambient_dim; ++c)
			if (sgn(basis_(i, c)) != 0)
			{
				pivots_.push_back(c);
				break;
			}
}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, {}); }

Subspace Subspace::full(std::size_t ambient_dim)
{
	return Subspace::from_rref(MatrixQ::identity(ambient_dim));
}

Subspace Subspace::from_rref(MatrixQ basis)
{
	Subspace s;
	s.ambient_ = basis.cols();
	s.basis_ = std::move(basis);
	for (std::size_t i = 0; i < s.basis_.rows(); ++i)
	{
		std::size_t c = 0;
		while (c < s.ambient_ && sgn(s.basis_(i, c)) == 0)
			++c;
		if (c == s.ambient_ || s.basis_(i, c) != 1 || (!s.pivots_.empty() && c <= s.pivots_.back()))
			throw Error("from_rref: basis is not in reduced row-echelon form");
		s.pivots_.push_back(c);
	}
	return s;
}

Vector Subspace::vector(std::size_t i) const
{
	auto r = basis_.row(i);
	return Vector(r.begin(), r.end());
}

Vector Subspace::combine(std::span<Scalar const> c) const
{
	if (c.size() != dim())
		throw DimensionMismatch("combine: coefficient count");
	Vector v(ambient_);
	for (std::size_t i = 0; i < c.size(); ++i)
		axpy(v, c[i], basis_.row(i));
	return v;
}

Vector Subspace::coordinates(std::span<Scalar const> v) const
{
	if (v.size() != ambient_)
		throw DimensionMismatch("coordinates: ambient dimension");
	Vector c(dim());
	for (std::size_t i = 0; i < dim(); ++i)
		c[i] = v[pivots_[i]];
	if (combine(c) != Vector(v.begin(), v.end()))
		throw Error("coordinates: vector not in subspace");
	return c;
}

bool Subspace::contains(std::span<Scalar const> v) const
{
	if (v.size() != ambient_)
		throw DimensionMismatch("contains: ambient dimension");
	Vector c(dim());
	for (std::size_t i = 0; i < dim(); ++i)
		c[i] = v[pivots_[i]];
	return combine(c) == Vector(v.begin(), v.end());
}

bool Subspace::contains(Subspace const &other) const
{
	if (other.ambient_ != ambient_)
		throw DimensionMismatch("contains: ambient dimension");
	for (std::size_t i = 0; i < other.dim(); ++i)
		if (!contains(other.basis_.row(i)))
			return false;
	return true;
}

Subspace Subspace::annihilator() const { return kernel(basis_); }

Subspace kernel(MatrixQ const &m)
{
	auto [r, rk] = rref(m);
	std::size_t const n = m.cols();
	std::vector<std::size_t> pivot_col;
	std::vector<bool> is_pivot(n, false);
	for (std::size_t i = 0; i < rk; ++i)
	{
		std::size_t c = 0;
		while (sgn(r(i, c)) == 0)
			++c;
		pivot_col.push_back(c);
		is_pivot[c] = true;
	}
	std::vector<Vector> basis;
	for (std::size_t f = 0; f < n; ++f)
	{
		if (is_pivot[f])
			continue;
		Vector v(n);
		v[f] = 1;
		for (std::size_t i = 0; i < rk; ++i)
			v[pivot_col[i]] = -r(i, f);
		basis.push_back(std::move(v));
	}
	return Subspace(n, basis);
}

Subspace image(MatrixQ const &m)
{
	MatrixQ t = m.transpose();
	std::vector<Vector> cols;
	for (std::size_t i = 0; i < t.rows(); ++i)
		cols.emplace_back(t.row(i).begin(), t.row(i).end());
	return Subspace(m.rows(), cols);
}

Subspace sum(Subspace const &a, Subspace const &b)
{
	if (a.ambient_dim() != b.ambient_dim())
		throw DimensionMismatch("subspace sum");
	std::vector<Vector> rows;
	for (std::size_t i = 0; i < a.dim(); ++i)
		rows.push_back(a.vector(i));
	for (std::size_t i = 0; i < b.dim(); ++i)
		rows.push_back(b.vector(i));
	return Subspace(a.ambient_dim(), rows);
}

Subspace intersection(Subspace const &a, Subspace const &b)
{
	if (a.ambient_dim() != b.ambient_dim())
		throw DimensionMismatch("subspace intersection");
	if (a.dim() == 0 || b.dim() == 0)
		return Subspace::zero(a.ambient_dim());
	Subspace ann = b.annihilator();
	if (ann.dim() == 0)
		return a;
	// coefficients c with ann * (A^T c) = 0
	MatrixQ constraints = ann.basis() * a.basis().transpose();
	Subspace coeffs = kernel(constraints);
	std::vector<Vector> rows;
	for (std::size_t i = 0; i < coeffs.dim(); ++i)
		rows.push_back(a.combine(coeffs.vector(i)));
	return Subspace(a.ambient_dim(), rows);
}

Subspace orthogonal_complement(Subspace const &s, MatrixQ const &gram)
{
	if (gram.rows() != s.ambient_dim() || gram.cols() != s.ambient_dim())
		throw DimensionMismatch("orthogonal complement: gram size");
	if (s.dim() == 0)
		return Subspace::full(s.ambient_dim());
	return kernel(s.basis() * gram);
}

// ---------------------------------------------------------------------------

std::string to_string(Signature const &s)
{
	return "(" + std::to_string(s.plus) + "," + std::to_string(s.minus) + "," + std::to_string(s.zero) + ")";
}

Signature signature(MatrixQ const &gram)
{
	if (!gram.is_symmetric())
		throw NonSymmetric("signature: gram matrix is not symmetric");
	MatrixQ g = gram;
	std::size_t const n = g.rows();
	auto swap_index = [&](std::size_t i, std::size_t j) {
		for (std::size_t c = 0; c < n; ++c)
			swap(g(i, c), g(j, c));
		for (std::size_t r = 0; r < n; ++r)
			swap(g(r, i), g(r, j));
	};
	// e_i <- e_i + e_j as a congruence
	auto add_index = [&](std::size_t i, std::size_t j) {
		for (std::size_t c = 0; c < n; ++c)
			g(i, c) += g(j, c);
		for (std::size_t r = 0; r < n; ++r)
			g(r, i) += g(r, j);
	};

	Signature sig;
	for (std::size_t k = 0; k < n; ++k)
	{
		if (sgn(g(k, k)) == 0)
		{
			std::size_t j = k + 1;
			while (j < n && sgn(g(k, j)) == 0)
				++j;
			if (j == n)
			{
				++sig.zero;
				continue;
			}
			if (sgn(g(j, j)) != 0)
				swap_index(k, j);
			else
				add_index(k, j);
		}
		Scalar const pivot = g(k, k);
		for (std::size_t i = k + 1; i < n; ++i)
		{
			if (sgn(g(i, k)) == 0)
				continue;
			Scalar f = g(i, k) / pivot;
			for (std::size_t c = k; c < n; ++c)
				g(i, c) -= f * g(k, c);
			for (std::size_t r = k; r < n; ++r)
				g(r, i) -= f * g(r, k);
		}
		if (sgn(pivot) > 0)
			++sig.plus;
		else
			++sig.minus;
	}
	return sig;
}

QuadFormQ::QuadFormQ(MatrixQ gram) : gram_(std::move(gram)), sig_(signature(gram_)) {}

Scalar QuadFormQ::operator()(std::span<Scalar const> x, std::span<Scalar const> y) const
{
	return dot(x, gram_.apply(y));
}

QuadFormQ QuadFormQ::restrict_to(Subspace const &s) const
{
	return QuadFormQ(congruence(s.basis(), gram_));
}

MatrixQ congruence(MatrixQ const &basis, MatrixQ const &gram)
{
	return basis * gram * basis.transpose();
}

} // namespace rank1
