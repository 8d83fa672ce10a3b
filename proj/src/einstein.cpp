#include "rank1/einstein.hpp"

#include "rank1/matrix_algebra.hpp"

namespace rank1 {

namespace {

std::string str(std::size_t n) { return std::to_string(n); }

bool same(SparseVector const &a, SparseVector const &b)
{
	if (a.size() != b.size())
		return false;
	for (std::size_t i = 0; i < a.size(); ++i)
		if (a[i].index != b[i].index || a[i].value != b[i].value)
			return false;
	return true;
}

MatrixQ embedded(ConformalEmbedding const &e, std::span<Scalar const> x)
{
	std::size_t const n = e.images.front().rows();
	MatrixQ m(n, n);
	for (std::size_t i = 0; i < x.size(); ++i)
		if (sgn(x[i]) != 0)
			m += x[i] * e.images[i];
	return m;
}

/// Gram matrix of (X, Y) -> <X v, Y v> on the coordinates of g.
MatrixQ orbit_gram(ConformalEmbedding const &e, Vector const &v)
{
	std::size_t const d = e.images.size();
	std::vector<Vector> w;
	for (auto const &x : e.images)
		w.push_back(x.apply(v));
	MatrixQ const &q = e.ambient_form.gram();
	MatrixQ g(d, d);
	for (std::size_t i = 0; i < d; ++i)
	{
		Vector qi = q.apply(w[i]);
		for (std::size_t j = i; j < d; ++j)
		{
			g(i, j) = dot(qi, w[j]);
			g(j, i) = g(i, j);
		}
	}
	return g;
}

Subspace stabilizer_of_line(ConformalEmbedding const &e, Vector const &v)
{
	std::size_t const d = e.images.size();
	Subspace const ann = Subspace(v.size(), {v}).annihilator();
	MatrixQ m(ann.dim(), d);
	for (std::size_t i = 0; i < d; ++i)
	{
		Vector w = e.images[i].apply(v);
		for (std::size_t a = 0; a < ann.dim(); ++a)
			m(a, i) = dot(ann.basis().row(a), w);
	}
	return kernel(m);
}

/// Span of the unit vectors at the non-pivot columns: a complement of s.
Subspace echelon_complement(Subspace const &s)
{
	std::vector<bool> pivot(s.ambient_dim(), false);
	for (auto p : s.pivots())
		pivot[p] = true;
	std::vector<Vector> vs;
	for (std::size_t i = 0; i < s.ambient_dim(); ++i)
		if (!pivot[i])
			vs.push_back(unit_vector(s.ambient_dim(), i));
	return vs.empty() ? Subspace::zero(s.ambient_dim()) : Subspace(s.ambient_dim(), vs);
}

bool block_zero(MatrixQ const &gram, Subspace const &a, Subspace const &b)
{
	for (std::size_t i = 0; i < a.dim(); ++i)
	{
		Vector ga = gram.apply(a.basis().row(i));
		for (std::size_t j = 0; j < b.dim(); ++j)
			if (sgn(dot(ga, b.basis().row(j))) != 0)
				return false;
	}
	return true;
}

MatrixQ cross_block(MatrixQ const &gram, Subspace const &a, Subspace const &b)
{
	MatrixQ m(a.dim(), b.dim());
	for (std::size_t i = 0; i < a.dim(); ++i)
	{
		Vector ga = gram.apply(a.basis().row(i));
		for (std::size_t j = 0; j < b.dim(); ++j)
			m(i, j) = dot(ga, b.basis().row(j));
	}
	return m;
}

Subspace span_all(std::size_t ambient, std::initializer_list<Subspace const *> parts)
{
	Subspace s = Subspace::zero(ambient);
	for (auto const *p : parts)
		s = sum(s, *p);
	return s;
}

} // namespace

Signature expected_ambient_signature(AlgebraSpec const &spec)
{
	std::size_t const k = spec.k;
	switch (spec.family)
	{
	case Family::so:
		return {k, 1, 0};
	case Family::su:
		return {2, 2 * k, 0};
	case Family::sp:
		return {4, 4 * k, 0};
	case Family::f4:
		return {10, 16, 0};
	}
	return {};
}

std::optional<std::size_t> expected_orbit_dim(AlgebraSpec const &spec)
{
	switch (spec.family)
	{
	case Family::so:
		return spec.k - 1;
	case Family::su:
		return 2 * spec.k;
	case Family::sp:
		return 4 * spec.k + 2;
	case Family::f4:
		return std::nullopt;
	}
	return std::nullopt;
}

ConformalEmbedding build_embedding(LieAlgebraQ const &g)
{
	ConformalEmbedding e;
	e.spec = g.spec;
	e.images = g.realization;
	e.ambient_form = QuadFormQ(g.realization_form);
	std::size_t const n = e.images.front().rows();

	std::vector<SparseMatrix> sparse;
	for (auto const &x : e.images)
		sparse.push_back(SparseMatrix::from_dense(x));
	e.homomorphism = true;
	for (std::size_t i = 0; i < g.dim && e.homomorphism; ++i)
		for (std::size_t j = i + 1; j < g.dim && e.homomorphism; ++j)
		{
			SparseVector expected;
			for (auto const &t : g.structure.bracket(i, j))
				expected = sparse_axpy(expected, t.value, sparse[t.index].entries);
			e.homomorphism = same(sparse_commutator(sparse[i], sparse[j]).entries, expected);
		}

	std::vector<Vector> flat;
	for (auto const &x : e.images)
		flat.push_back(x.flatten());
	e.injective = rank(MatrixQ::from_rows(flat, n * n)) == g.dim;

	MatrixQ const &q = e.ambient_form.gram();
	e.skew = true;
	for (auto const &x : e.images)
		e.skew = e.skew && (x.transpose() * q + q * x).is_zero();
	return e;
}

IsotropyReport null_isotropy(LieAlgebraQ const &g, ConformalEmbedding const &e, RootDecomposition const &rd)
{
	std::size_t const n = e.images.front().rows();
	MatrixQ const rho_h = embedded(e, rd.H);
	MatrixQ const id = MatrixQ::identity(n);
	MatrixQ const &q = e.ambient_form.gram();

	// weights of H on the ambient space lie in (1/2)Z, |weight| <= 2
	std::vector<std::pair<Scalar, Subspace>> eigen;
	std::size_t total = 0;
	for (int twice = 4; twice >= -4; --twice)
	{
		Scalar mu(twice, 2);
		mu.canonicalize();
		Subspace s = kernel(rho_h - mu * id);
		total += s.dim();
		if (s.dim())
			eigen.push_back({mu, std::move(s)});
	}
	if (total != n)
		throw BadBasepoint("embedded H is not diagonalizable with half-integral weights");

	Subspace const s_part = span_all(g.dim, {&rd.a, &rd.g_plus_a, &rd.g_plus_2a});
	IsotropyReport iso;
	bool found = false;
	for (auto const &[mu, space] : eigen)
	{
		for (std::size_t i = 0; i < space.dim() && !found; ++i)
		{
			Vector v = space.vector(i);
			if (sgn(dot(v, q.apply(v))) != 0)
				continue;
			Subspace gx = stabilizer_of_line(e, v);
			if (!gx.contains(s_part))
				continue;
			iso.null_vector = std::move(v);
			iso.eigenvalue = mu;
			iso.stabilizer = std::move(gx);
			found = true;
		}
		if (found)
			break;
	}
	if (!found)
		throw BadBasepoint("no H-eigen null direction is fixed by a + g_a + g_2a");

	Vector const &v = iso.null_vector;
	Subspace const &gx = iso.stabilizer;
	MatrixQ const full = orbit_gram(e, v);
	iso.m_cap_stabilizer = intersection(rd.m, gx);
	iso.orbit_dim = g.dim - gx.dim();

	Signature const neg = signature(congruence(rd.g_minus_a.basis(), full));
	iso.sign = neg.minus > neg.plus ? -1 : 1;
	MatrixQ const normalized = Scalar(iso.sign) * full;

	Subspace const complement = echelon_complement(gx);
	iso.induced_form = QuadFormQ(congruence(complement.basis(), normalized));
	iso.kernel_dim = iso.induced_form.sig().zero;

	auto block = [&](std::string name, Subspace const &s) {
		BlockSignature b;
		b.block = std::move(name);
		b.image_dim = s.dim() - intersection(s, gx).dim();
		b.signature = s.dim() ? signature(congruence(s.basis(), normalized)) : Signature{};
		iso.blocks.push_back(b);
	};
	if (rd.has_double_root)
		block("g_-2a", rd.g_minus_2a);
	block("g_-a", rd.g_minus_a);
	block("m", rd.m);

	// ------------------------------------------------------------------ checks
	Report &rep = iso.checks;
	rep.lemma_id = "null-isotropy";
	rep.family = g.spec.name();
	if (g.spec.family != Family::f4)
		rep.parameters = {{"k", str(g.spec.k)}};
	rep.note("weight of H on v", true, to_string(iso.eigenvalue));

	rep.check("v is null", sgn(dot(v, q.apply(v))) == 0);
	bool tangent = true;
	Vector const qv = q.apply(v);
	for (auto const &x : e.images)
		tangent = tangent && sgn(dot(qv, x.apply(v))) == 0;
	rep.check("<Xv, v> = 0 for all X", tangent);
	rep.check("g_x contains a + g_a + g_2a", gx.contains(s_part));
	Subspace const shape = span_all(g.dim, {&s_part, &iso.m_cap_stabilizer});
	rep.check("g_x = a + (m cap g_x) + g_a + g_2a", shape == gx, str(gx.dim()));
	bool invariant = true;
	for (Subspace const *s : {&rd.a, &rd.g_plus_a, &rd.g_plus_2a})
		invariant = invariant && gx.contains(bracket_span(g, *s, gx));
	rep.check("[s, g_x] in g_x", invariant);
	rep.check("form descends to g/g_x", block_zero(full, gx, Subspace::full(g.dim)));
	bool rescale = true;
	for (int c : {2, 3})
		rescale = rescale && orbit_gram(e, scale(Scalar(c), v)) == Scalar(c * c) * full;
	rep.check("rescaling v by c multiplies the form by c^2", rescale);

	std::size_t const d = rd.g_plus_2a.dim();
	if (g.spec.family == Family::so)
	{
		Subspace const expect = span_all(g.dim, {&rd.a, &rd.m, &rd.g_plus_a});
		rep.check("g_x = a + m + g_a", gx == expect, str(gx.dim()));
		rep.check("induced form positive definite", iso.induced_form.positive_definite(),
		          to_string(iso.induced_form.sig()));
	}
	else if (g.spec.family == Family::su || g.spec.family == Family::sp)
	{
		std::size_t const codim = rd.m.dim() - iso.m_cap_stabilizer.dim();
		rep.check("codim of m cap g_x in m = dim g_2a", codim == d, str(codim));
		rep.check("g_-2a cap g_x = 0", intersection(rd.g_minus_2a, gx).dim() == 0);
		rep.check("g_-a cap g_x = 0", intersection(rd.g_minus_a, gx).dim() == 0);
		rep.check("g_-2a block isotropic", block_zero(full, rd.g_minus_2a, rd.g_minus_2a));
		Signature const euc = signature(congruence(rd.g_minus_a.basis(), normalized));
		rep.check("g_-a block Euclidean", euc == Signature{rd.g_minus_a.dim(), 0, 0}, to_string(euc));
		rep.check("m block isotropic", block_zero(full, rd.m, rd.m));
		rep.check("g_-2a orthogonal to g_-a", block_zero(full, rd.g_minus_2a, rd.g_minus_a));
		rep.check("g_-a orthogonal to m", block_zero(full, rd.g_minus_a, rd.m));
		std::size_t const pair_rank = rank(cross_block(full, rd.g_minus_2a, rd.m));
		rep.check("g_-2a pairs with m with rank dim g_2a", pair_rank == d, str(pair_rank));
		rep.check("m(x) = m1(x)", sum(rd.m1, iso.m_cap_stabilizer) == rd.m);
		rep.check("induced form nondegenerate", iso.induced_form.nondegenerate(), to_string(iso.induced_form.sig()));
		Signature const want{rd.g_minus_a.dim() + d, d, 0};
		rep.check("induced form signature", iso.induced_form.sig() == want, to_string(iso.induced_form.sig()));
		if (g.spec.k >= 3)
			rep.check("m cap g_x = m2", iso.m_cap_stabilizer == rd.m2, str(iso.m_cap_stabilizer.dim()));
		else if (g.spec.family == Family::su)
			rep.check("m cap g_x = 0", iso.m_cap_stabilizer.dim() == 0);
		else
			rep.note("m cap g_x = m2", iso.m_cap_stabilizer == rd.m2, str(iso.m_cap_stabilizer.dim()));
	}
	else
	{
		rep.note("induced form signature", iso.induced_form.nondegenerate(), to_string(iso.induced_form.sig()));
		rep.note("dim m cap g_x", true, str(iso.m_cap_stabilizer.dim()));
	}
	return iso;
}

Report verify_embedding_signature(LieAlgebraQ const &g, ConformalEmbedding const &e)
{
	Report rep;
	rep.lemma_id = "embedding-signature";
	rep.family = g.spec.name();
	if (g.spec.family != Family::f4)
		rep.parameters = {{"k", str(g.spec.k)}};
	Signature const s = e.ambient_form.sig();
	rep.check("invariant form signature", s == expected_ambient_signature(g.spec), to_string(s));
	rep.check("images skew for the form", e.skew);
	rep.check("bracket preserved", e.homomorphism);
	rep.check("injective", e.injective);
	// a one-dimensional space of invariant forms makes the signature intrinsic
	auto const forms = invariant_symmetric_forms(e.images);
	rep.check("invariant symmetric forms", forms.size() == 1, str(forms.size()));
	if (forms.size() == 1)
	{
		Signature const t = signature(forms.front());
		rep.check("solved invariant form has the same signature up to sign",
		          t == s || t == Signature{s.minus, s.plus, s.zero}, to_string(t));
	}
	return rep;
}

Report verify_null_isotropy(LieAlgebraQ const &, IsotropyReport const &iso) { return iso.checks; }

Report verify_orbit_dims(LieAlgebraQ const &g, IsotropyReport const &iso)
{
	Report rep;
	rep.lemma_id = "orbit-dims";
	rep.family = g.spec.name();
	if (g.spec.family != Family::f4)
		rep.parameters = {{"k", str(g.spec.k)}};
	rep.check("dim g - dim g_x = dim of the quotient form", iso.orbit_dim == iso.induced_form.dim(),
	          str(iso.orbit_dim));
	if (auto want = expected_orbit_dim(g.spec))
		rep.check("orbit dimension", iso.orbit_dim == *want, str(iso.orbit_dim));
	else
		rep.note("orbit dimension", true, str(iso.orbit_dim));
	return rep;
}

} // namespace rank1
