#include "rank1/matrix_algebra.hpp"

#include <algorithm>
#include <map>

namespace rank1 {

namespace {

SparseVector from_map(std::map<std::size_t, Scalar> &&acc)
{
	SparseVector v;
	v.reserve(acc.size());
	for (auto &[i, x] : acc)
		if (sgn(x) != 0)
			v.push_back({i, std::move(x)});
	return v;
}

Scalar const *find_entry(SparseVector const &v, std::size_t index)
{
	auto it = std::lower_bound(v.begin(), v.end(), index,
	                           [](Term const &t, std::size_t i) { return t.index < i; });
	if (it == v.end() || it->index != index)
		return nullptr;
	return &it->value;
}

std::size_t sym_index(std::size_t a, std::size_t b, std::size_t d)
{
	if (a > b)
		std::swap(a, b);
	// row-major upper triangle
	return a * d - a * (a - 1) / 2 + (b - a);
}

} // namespace

SparseMatrix SparseMatrix::from_dense(MatrixQ const &m)
{
	if (m.rows() != m.cols())
		throw DimensionMismatch("SparseMatrix: not square");
	return {m.rows(), sparse_from_dense(m.entries())};
}

MatrixQ SparseMatrix::to_dense() const
{
	return MatrixQ::unflatten(dense_from_sparse(entries, n * n), n, n);
}

SparseMatrix sparse_product(SparseMatrix const &a, SparseMatrix const &b)
{
	if (a.n != b.n)
		throw DimensionMismatch("sparse_product");
	std::size_t const n = a.n;
	// row ranges of b
	std::vector<std::size_t> start(n + 1, b.entries.size());
	for (std::size_t k = b.entries.size(); k-- > 0;)
		start[b.entries[k].index / n] = k;
	for (std::size_t r = n; r-- > 0;)
		start[r] = std::min(start[r], start[r + 1]);
	std::map<std::size_t, Scalar> acc;
	for (auto const &ta : a.entries)
	{
		std::size_t r = ta.index / n, k = ta.index % n;
		for (std::size_t q = start[k]; q < start[k + 1]; ++q)
		{
			auto const &tb = b.entries[q];
			acc[r * n + tb.index % n] += ta.value * tb.value;
		}
	}
	return {n, from_map(std::move(acc))};
}

SparseMatrix sparse_commutator(SparseMatrix const &a, SparseMatrix const &b)
{
	SparseMatrix ab = sparse_product(a, b);
	SparseMatrix ba = sparse_product(b, a);
	return {a.n, sparse_axpy(ab.entries, Scalar(-1), ba.entries)};
}

// ---------------------------------------------------------------------------

StructureConstants::StructureConstants(std::size_t dim) : dim_(dim), table_(dim * dim) {}

Vector StructureConstants::bracket(std::span<Scalar const> x, std::span<Scalar const> y) const
{
	if (x.size() != dim_ || y.size() != dim_)
		throw DimensionMismatch("bracket: coordinate length");
	Vector r(dim_);
	Scalar xy;
	for (std::size_t i = 0; i < dim_; ++i)
	{
		if (sgn(x[i]) == 0)
			continue;
		for (std::size_t j = 0; j < dim_; ++j)
		{
			if (sgn(y[j]) == 0 || i == j)
				continue;
			auto const &b = bracket(i, j);
			if (b.empty())
				continue;
			xy = x[i] * y[j];
			for (auto const &t : b)
				r[t.index] += xy * t.value;
		}
	}
	return r;
}

MatrixQ StructureConstants::ad(std::span<Scalar const> x) const
{
	if (x.size() != dim_)
		throw DimensionMismatch("ad: coordinate length");
	MatrixQ m(dim_, dim_);
	for (std::size_t i = 0; i < dim_; ++i)
	{
		if (sgn(x[i]) == 0)
			continue;
		for (std::size_t j = 0; j < dim_; ++j)
			for (auto const &t : bracket(i, j))
				m(t.index, j) += x[i] * t.value;
	}
	return m;
}

MatrixQ StructureConstants::ad_basis(std::size_t i) const
{
	MatrixQ m(dim_, dim_);
	for (std::size_t j = 0; j < dim_; ++j)
		for (auto const &t : bracket(i, j))
			m(t.index, j) = t.value;
	return m;
}

Scalar StructureConstants::coefficient(std::size_t i, std::size_t j, std::size_t k) const
{
	Scalar const *p = find_entry(bracket(i, j), k);
	return p ? *p : Scalar(0);
}

bool operator==(StructureConstants const &a, StructureConstants const &b)
{
	if (a.dim_ != b.dim_)
		return false;
	for (std::size_t i = 0; i < a.table_.size(); ++i)
	{
		auto const &x = a.table_[i];
		auto const &y = b.table_[i];
		if (x.size() != y.size())
			return false;
		for (std::size_t k = 0; k < x.size(); ++k)
			if (x[k].index != y[k].index || x[k].value != y[k].value)
				return false;
	}
	return true;
}

StructureConstants matrix_structure_constants(Subspace const &span, std::size_t n)
{
	if (span.ambient_dim() != n * n)
		throw DimensionMismatch("matrix_structure_constants: ambient is not n*n");
	std::size_t const dim = span.dim();
	std::vector<SparseMatrix> basis;
	basis.reserve(dim);
	for (std::size_t i = 0; i < dim; ++i)
		basis.push_back({n, sparse_from_dense(span.basis().row(i))});
	auto const &pivots = span.pivots();

	StructureConstants sc(dim);
	for (std::size_t i = 0; i < dim; ++i)
		for (std::size_t j = i + 1; j < dim; ++j)
		{
			SparseMatrix c = sparse_commutator(basis[i], basis[j]);
			SparseVector coords;
			std::map<std::size_t, Scalar> rebuilt;
			for (std::size_t k = 0; k < dim; ++k)
			{
				Scalar const *v = find_entry(c.entries, pivots[k]);
				if (!v)
					continue;
				coords.push_back({k, *v});
				for (auto const &t : basis[k].entries)
					rebuilt[t.index] += *v * t.value;
			}
			SparseVector r = from_map(std::move(rebuilt));
			bool same = r.size() == c.entries.size();
			for (std::size_t q = 0; same && q < r.size(); ++q)
				same = r[q].index == c.entries[q].index && r[q].value == c.entries[q].value;
			if (!same)
				throw SolverInconsistency("span is not closed under commutator (basis pair " +
				                          std::to_string(i) + ", " + std::to_string(j) + ")");
			SparseVector neg = coords;
			for (auto &t : neg)
				t.value = -t.value;
			sc.set(i, j, std::move(coords));
			sc.set(j, i, std::move(neg));
		}
	return sc;
}

std::size_t commutant_dimension(std::span<MatrixQ const> rep)
{
	if (rep.empty())
		throw Error("commutant_dimension: empty representation");
	std::size_t const d = rep.front().rows();
	SparseEliminator sys(d * d);
	for (auto const &x : rep)
		for (std::size_t r = 0; r < d; ++r)
			for (std::size_t c = 0; c < d; ++c)
			{
				// (A X - X A)_{rc}
				std::map<std::size_t, Scalar> eq;
				for (std::size_t k = 0; k < d; ++k)
				{
					if (sgn(x(k, c)) != 0)
						eq[r * d + k] += x(k, c);
					if (sgn(x(r, k)) != 0)
						eq[k * d + c] -= x(r, k);
				}
				sys.add_equation(from_map(std::move(eq)));
			}
	return d * d - sys.rank();
}

std::vector<MatrixQ> invariant_symmetric_forms(std::span<MatrixQ const> rep)
{
	if (rep.empty())
		throw Error("invariant_symmetric_forms: empty representation");
	std::size_t const d = rep.front().rows();
	std::size_t const unknowns = d * (d + 1) / 2;
	SparseEliminator sys(unknowns);
	for (auto const &x : rep)
		for (std::size_t r = 0; r < d; ++r)
			for (std::size_t c = r; c < d; ++c)
			{
				// (X^T S + S X)_{rc} = sum_k X_kr S_kc + S_rk X_kc
				std::map<std::size_t, Scalar> eq;
				for (std::size_t k = 0; k < d; ++k)
				{
					if (sgn(x(k, r)) != 0)
						eq[sym_index(k, c, d)] += x(k, r);
					if (sgn(x(k, c)) != 0)
						eq[sym_index(r, k, d)] += x(k, c);
				}
				sys.add_equation(from_map(std::move(eq)));
			}
	Subspace sol = sys.kernel();
	std::vector<MatrixQ> forms;
	for (std::size_t i = 0; i < sol.dim(); ++i)
	{
		MatrixQ s(d, d);
		for (std::size_t a = 0; a < d; ++a)
			for (std::size_t b = a; b < d; ++b)
			{
				s(a, b) = sol.basis()(i, sym_index(a, b, d));
				s(b, a) = s(a, b);
			}
		forms.push_back(std::move(s));
	}
	return forms;
}

MatrixQ restrict_map(MatrixQ const &map, Subspace const &invariant)
{
	return restrict_map(map, invariant, invariant);
}

MatrixQ restrict_map(MatrixQ const &map, Subspace const &domain, Subspace const &target)
{
	MatrixQ r(target.dim(), domain.dim());
	for (std::size_t j = 0; j < domain.dim(); ++j)
	{
		Vector image = map.apply(domain.basis().row(j));
		Vector c = target.coordinates(image);
		for (std::size_t i = 0; i < c.size(); ++i)
			r(i, j) = c[i];
	}
	return r;
}

} // namespace rank1
