#include "rank1/lie.hpp"

#include "rank1/albert.hpp"
#include "rank1/composition.hpp"

#include <algorithm>
#include <charconv>
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

Scalar lookup(SparseVector const &v, std::size_t index)
{
	auto it = std::lower_bound(v.begin(), v.end(), index,
	                           [](Term const &t, std::size_t i) { return t.index < i; });
	if (it == v.end() || it->index != index)
		return 0;
	return it->value;
}

/// sum_t v_t [b_i, b_t]
void accumulate_bracket(StructureConstants const &sc, std::size_t i, SparseVector const &v, Scalar const &c,
                        std::map<std::size_t, Scalar> &acc)
{
	for (auto const &t : v)
		for (auto const &u : sc.bracket(i, t.index))
			acc[u.index] += c * t.value * u.value;
}

SparseVector sparse_bracket(StructureConstants const &sc, SparseVector const &x, SparseVector const &y)
{
	std::map<std::size_t, Scalar> acc;
	for (auto const &s : x)
		accumulate_bracket(sc, s.index, y, s.value, acc);
	return from_map(std::move(acc));
}

// -- defining conditions, as sparse equations on the n^2 entries of X --------

void add_skew_equations(SparseEliminator &sys, std::span<Scalar const> form, std::size_t n)
{
	// (X^T F + F X)_{rc} = X_cr F_cc + F_rr X_rc for diagonal F
	for (std::size_t r = 0; r < n; ++r)
		for (std::size_t c = r; c < n; ++c)
		{
			std::map<std::size_t, Scalar> eq;
			eq[c * n + r] += form[c];
			eq[r * n + c] += form[r];
			sys.add_equation(from_map(std::move(eq)));
		}
}

void add_commuting_equations(SparseEliminator &sys, MatrixQ const &m)
{
	std::size_t const n = m.rows();
	for (std::size_t r = 0; r < n; ++r)
		for (std::size_t c = 0; c < n; ++c)
		{
			// (X M - M X)_{rc}
			std::map<std::size_t, Scalar> eq;
			for (std::size_t k = 0; k < n; ++k)
			{
				if (sgn(m(k, c)) != 0)
					eq[r * n + k] += m(k, c);
				if (sgn(m(r, k)) != 0)
					eq[k * n + c] -= m(r, k);
			}
			sys.add_equation(from_map(std::move(eq)));
		}
}

MatrixQ block_diagonal(MatrixQ const &block, std::size_t copies)
{
	std::size_t const b = block.rows();
	MatrixQ m(b * copies, b * copies);
	for (std::size_t q = 0; q < copies; ++q)
		for (std::size_t r = 0; r < b; ++r)
			for (std::size_t c = 0; c < b; ++c)
				m(q * b + r, q * b + c) = block(r, c);
	return m;
}

/// Realified Hermitian form diag(1, -1, ..., -1) with blocks of size `block`;
/// for so(1,k) the real form diag(-1, 1, ..., 1).
Vector standard_form(Family family, std::size_t k)
{
	if (family == Family::so)
	{
		Vector d(k + 1, Scalar(1));
		d[0] = -1;
		return d;
	}
	std::size_t const block = family == Family::su ? 2 : 4;
	Vector d(block * (k + 1), Scalar(-1));
	for (std::size_t a = 0; a < block; ++a)
		d[a] = 1;
	return d;
}

std::size_t realification_block(Family family) { return family == Family::so ? 1 : family == Family::su ? 2 : 4; }

Subspace matrix_family_span(AlgebraSpec const &spec)
{
	std::size_t const block = realification_block(spec.family);
	std::size_t const n = block * (spec.k + 1);
	Vector const form = standard_form(spec.family, spec.k);
	SparseEliminator sys(n * n);
	add_skew_equations(sys, form, n);
	if (spec.family == Family::su)
	{
		add_commuting_equations(sys, block_diagonal(MatrixQ::from_ints({{0, -1}, {1, 0}}), spec.k + 1));
		// imaginary part of the complex trace
		SparseVector tr;
		for (std::size_t r = 0; r <= spec.k; ++r)
			tr.push_back({(2 * r + 1) * n + 2 * r, Scalar(1)});
		sys.add_equation(std::move(tr));
	}
	else if (spec.family == Family::sp)
	{
		add_commuting_equations(sys, block_diagonal(right_mult_matrix(Quaternion::unit(1)), spec.k + 1));
		add_commuting_equations(sys, block_diagonal(right_mult_matrix(Quaternion::unit(2)), spec.k + 1));
	}
	return sys.kernel();
}

std::string matrix_label(std::size_t pivot, std::size_t n)
{
	return "X[" + std::to_string(pivot / n) + "," + std::to_string(pivot % n) + "]";
}

std::string derivation_label(std::size_t pivot)
{
	constexpr std::size_t n = AlbertElement::dim;
	return "D[" + albert_coordinate_label(pivot / n) + "," + albert_coordinate_label(pivot % n) + "]";
}

void install_involution(LieAlgebraQ &g, MatrixQ const &theta)
{
	g.theta = theta;
	MatrixQ const bg = killing_gram(g.structure);
	g.killing = QuadFormQ(bg);
	MatrixQ bt = bg;
	// B_theta = -theta^T B
	bt = Scalar(-1) * (theta.transpose() * bg);
	g.killing_theta = QuadFormQ(bt);
	MatrixQ const id = MatrixQ::identity(g.dim);
	g.k_part = kernel(theta - id);
	g.p_part = kernel(theta + id);
}

LieAlgebraQ build_matrix_family(AlgebraSpec const &spec)
{
	LieAlgebraQ g;
	g.spec = spec;
	std::size_t const n = realification_block(spec.family) * (spec.k + 1);
	g.defining_n = n;
	g.defining_span = matrix_family_span(spec);
	g.dim = g.defining_span.dim();
	for (std::size_t i = 0; i < g.dim; ++i)
	{
		g.defining.push_back(MatrixQ::unflatten(g.defining_span.basis().row(i), n, n));
		g.labels.push_back(matrix_label(g.defining_span.pivots()[i], n));
	}
	g.structure = matrix_structure_constants(g.defining_span, n);
	g.realization = g.defining;
	Vector const form = standard_form(spec.family, spec.k);
	g.realization_form = MatrixQ::diagonal(form);

	MatrixQ theta(g.dim, g.dim);
	for (std::size_t j = 0; j < g.dim; ++j)
	{
		Vector c = g.coordinates_of(g.theta_of_defining(g.defining[j]));
		for (std::size_t i = 0; i < g.dim; ++i)
			theta(i, j) = c[i];
	}
	install_involution(g, theta);
	return g;
}

LieAlgebraQ build_f4()
{
	LieAlgebraQ g;
	g.spec = {Family::f4, 0};
	DerivationAlgebra d = derivation_algebra();
	g.dim = d.dim;
	g.defining_n = AlbertElement::dim;
	g.defining_span = d.span;
	g.defining = d.basis;
	for (std::size_t i = 0; i < g.dim; ++i)
		g.labels.push_back(derivation_label(d.span.pivots()[i]));
	g.structure = std::move(d.structure);

	J0Representation j0 = restrict_to_J0({g.dim, g.defining_span, g.defining, {}, 0});
	g.realization = std::move(j0.rep);
	g.realization_form = std::move(j0.gram);

	MatrixQ theta(g.dim, g.dim);
	for (std::size_t j = 0; j < g.dim; ++j)
	{
		Vector c = g.coordinates_of(g.theta_of_defining(g.defining[j]));
		for (std::size_t i = 0; i < g.dim; ++i)
			theta(i, j) = c[i];
	}
	install_involution(g, theta);
	return g;
}

bool is_rational_square(Scalar const &u, Scalar &root)
{
	if (sgn(u) < 0)
		return false;
	mpz_class const &num = u.get_num();
	mpz_class const &den = u.get_den();
	if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
		return false;
	mpz_class a, b;
	mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
	mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
	root = Scalar(a, b);
	root.canonicalize();
	return true;
}

/// Minimal polynomial of `a` relative to w: monic coefficients p_0..p_d.
std::vector<Scalar> krylov_polynomial(MatrixQ const &a, Vector w, std::size_t max_degree)
{
	std::vector<Vector> powers{w};
	for (std::size_t d = 1; d <= max_degree; ++d)
	{
		Vector next = a.apply(powers.back());
		// solve next = sum_i c_i powers[i]
		std::size_t const n = next.size();
		MatrixQ aug(n, d + 1);
		for (std::size_t r = 0; r < n; ++r)
		{
			for (std::size_t i = 0; i < d; ++i)
				aug(r, i) = powers[i][r];
			aug(r, d) = next[r];
		}
		auto [e, rk] = rref(aug);
		bool dependent = true;
		for (std::size_t r = 0; r < rk; ++r)
		{
			// a pivot in the last column means next is independent
			std::size_t c = 0;
			while (c <= d && sgn(e(r, c)) == 0)
				++c;
			if (c == d)
				dependent = false;
		}
		if (dependent)
		{
			std::vector<Scalar> p(d + 1);
			p[d] = 1;
			for (std::size_t r = 0; r < rk; ++r)
			{
				std::size_t c = 0;
				while (sgn(e(r, c)) == 0)
					++c;
				p[c] = -e(r, d);
			}
			return p;
		}
		powers.push_back(std::move(next));
	}
	return {};
}

Vector probe_vector(std::size_t n)
{
	Vector w(n);
	for (std::size_t i = 0; i < n; ++i)
		w[i] = static_cast<long>((i * 7 + 3) % 11) - 5 + (i % 3 == 0 ? 13 : 0);
	return w;
}

Subspace span_of(std::size_t ambient, std::vector<Vector> const &vs)
{
	if (vs.empty())
		return Subspace::zero(ambient);
	return Subspace(ambient, vs);
}

Subspace centralizer_in(LieAlgebraQ const &g, Subspace const &of, Subspace const &within)
{
	if (of.dim() == 0 || within.dim() == 0)
		return within;
	std::size_t const w = within.dim();
	MatrixQ eqs(of.dim() * g.dim, w);
	for (std::size_t i = 0; i < w; ++i)
	{
		Vector z = within.vector(i);
		for (std::size_t j = 0; j < of.dim(); ++j)
		{
			Vector br = g.bracket(z, of.basis().row(j));
			for (std::size_t r = 0; r < g.dim; ++r)
				eqs(j * g.dim + r, i) = br[r];
		}
	}
	Subspace coeffs = kernel(eqs);
	std::vector<Vector> vs;
	for (std::size_t i = 0; i < coeffs.dim(); ++i)
		vs.push_back(within.combine(coeffs.basis().row(i)));
	return span_of(g.dim, vs);
}

std::string dim_string(Subspace const &s) { return std::to_string(s.dim()); }

} // namespace

// ---------------------------------------------------------------------------

std::string AlgebraSpec::name() const
{
	switch (family)
	{
	case Family::so:
		return "so(1," + std::to_string(k) + ")";
	case Family::su:
		return "su(1," + std::to_string(k) + ")";
	case Family::sp:
		return "sp(1," + std::to_string(k) + ")";
	case Family::f4:
		return "f4";
	}
	return {};
}

AlgebraSpec parse_algebra_spec(std::string_view text)
{
	if (text == "f4" || text == "f4^-20" || text == "f4(-20)")
		return {Family::f4, 0};
	if (text.size() < 7 || text.substr(2, 3) != "(1," || text.back() != ')')
		throw UnsupportedParameters("cannot parse algebra spec '" + std::string(text) + "'");
	AlgebraSpec spec;
	auto head = text.substr(0, 2);
	if (head == "so")
		spec.family = Family::so;
	else if (head == "su")
		spec.family = Family::su;
	else if (head == "sp")
		spec.family = Family::sp;
	else
		throw UnsupportedParameters("unknown family '" + std::string(head) + "'");
	auto digits = text.substr(5, text.size() - 6);
	std::size_t k = 0;
	auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
	if (ec != std::errc() || ptr != digits.data() + digits.size())
		throw UnsupportedParameters("bad parameter in '" + std::string(text) + "'");
	if (k < 2)
		throw UnsupportedParameters(spec.name().substr(0, 2) + "(1,k) needs k >= 2");
	spec.k = k;
	return spec;
}

std::size_t expected_dimension(AlgebraSpec const &spec)
{
	std::size_t const k = spec.k;
	switch (spec.family)
	{
	case Family::so:
		return k * (k + 1) / 2;
	case Family::su:
		return (k + 1) * (k + 1) - 1;
	case Family::sp:
		return (k + 1) * (2 * k + 3);
	case Family::f4:
		return 52;
	}
	return 0;
}

Vector LieAlgebraQ::coordinates_of(MatrixQ const &m) const
{
	if (m.rows() != defining_n || m.cols() != defining_n)
		throw DimensionMismatch("coordinates_of: matrix size");
	return defining_span.coordinates(m.flatten());
}

MatrixQ LieAlgebraQ::realize(std::span<Scalar const> x) const
{
	if (x.size() != dim)
		throw DimensionMismatch("realize: coordinate length");
	std::size_t const n = realization.front().rows();
	MatrixQ m(n, n);
	for (std::size_t i = 0; i < dim; ++i)
		if (sgn(x[i]) != 0)
			m += x[i] * realization[i];
	return m;
}

MatrixQ LieAlgebraQ::defining_matrix(std::span<Scalar const> x) const
{
	if (x.size() != dim)
		throw DimensionMismatch("defining_matrix: coordinate length");
	MatrixQ m(defining_n, defining_n);
	for (std::size_t i = 0; i < dim; ++i)
		if (sgn(x[i]) != 0)
			m += x[i] * defining[i];
	return m;
}

MatrixQ LieAlgebraQ::theta_of_defining(MatrixQ const &x) const
{
	if (spec.family == Family::f4)
	{
		MatrixQ const sigma = p_conjugation();
		return sigma * x * sigma;
	}
	return Scalar(-1) * x.transpose();
}

LieAlgebraQ build_algebra(AlgebraSpec const &spec)
{
	if (spec.family != Family::f4 && spec.k < 2)
		throw UnsupportedParameters("k must be at least 2");
	LieAlgebraQ g = spec.family == Family::f4 ? build_f4() : build_matrix_family(spec);
	if (g.dim != expected_dimension(spec))
		throw SolverInconsistency(spec.name() + ": solution space has dimension " + std::to_string(g.dim));
	return g;
}

MatrixQ killing_gram(StructureConstants const &sc)
{
	std::size_t const n = sc.dim();
	MatrixQ b(n, n);
	// Tr(ad_i ad_j) = sum_{l,k} c^k_{il} c^l_{jk}
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i; j < n; ++j)
		{
			Scalar acc;
			for (std::size_t l = 0; l < n; ++l)
				for (auto const &t : sc.bracket(i, l))
				{
					Scalar c = lookup(sc.bracket(j, t.index), l);
					if (sgn(c) != 0)
						acc += t.value * c;
				}
			b(i, j) = acc;
			b(j, i) = acc;
		}
	return b;
}

QuadFormQ killing_form(LieAlgebraQ const &g) { return QuadFormQ(killing_gram(g.structure)); }

bool satisfies_jacobi(StructureConstants const &sc)
{
	std::size_t const n = sc.dim();
	for (std::size_t i = 0; i < n; ++i)
	{
		if (!sc.bracket(i, i).empty())
			return false;
		for (std::size_t j = i + 1; j < n; ++j)
		{
			SparseVector const &a = sc.bracket(i, j), &b = sc.bracket(j, i);
			if (a.size() != b.size())
				return false;
			for (std::size_t q = 0; q < a.size(); ++q)
				if (a[q].index != b[q].index || a[q].value != -b[q].value)
					return false;
		}
	}
	Scalar const one(1);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
			for (std::size_t k = j + 1; k < n; ++k)
			{
				std::map<std::size_t, Scalar> acc;
				accumulate_bracket(sc, i, sc.bracket(j, k), one, acc);
				accumulate_bracket(sc, j, sc.bracket(k, i), one, acc);
				accumulate_bracket(sc, k, sc.bracket(i, j), one, acc);
				for (auto const &[idx, v] : acc)
					if (sgn(v) != 0)
						return false;
			}
	return true;
}

bool is_involutive_automorphism(StructureConstants const &sc, MatrixQ const &theta)
{
	std::size_t const n = sc.dim();
	if (!(theta * theta == MatrixQ::identity(n)))
		return false;
	std::vector<SparseVector> cols;
	for (std::size_t j = 0; j < n; ++j)
		cols.push_back(sparse_from_dense(theta.column(j)));
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
		{
			// theta [b_i, b_j]
			std::map<std::size_t, Scalar> lhs;
			for (auto const &t : sc.bracket(i, j))
				for (auto const &u : cols[t.index])
					lhs[u.index] += t.value * u.value;
			SparseVector l = from_map(std::move(lhs));
			SparseVector r = sparse_bracket(sc, cols[i], cols[j]);
			if (l.size() != r.size())
				return false;
			for (std::size_t q = 0; q < l.size(); ++q)
				if (l[q].index != r[q].index || l[q].value != r[q].value)
					return false;
		}
	return true;
}

Subspace bracket_span(LieAlgebraQ const &g, Subspace const &s, Subspace const &t)
{
	std::vector<Vector> vs;
	for (std::size_t i = 0; i < s.dim(); ++i)
		for (std::size_t j = 0; j < t.dim(); ++j)
		{
			Vector b = g.bracket(s.basis().row(i), t.basis().row(j));
			if (!is_zero(b))
				vs.push_back(std::move(b));
		}
	return span_of(g.dim, vs);
}

// ---------------------------------------------------------------------------

std::optional<Scalar> hyperbolic_scale(LieAlgebraQ const &g, std::span<Scalar const> x)
{
	if (is_zero(x))
		return std::nullopt;
	MatrixQ const a = g.ad(x);
	std::vector<Scalar> p = krylov_polynomial(a, probe_vector(g.dim), 6);
	if (p.size() < 3)
		return std::nullopt;
	std::size_t const d = p.size() - 1;
	std::size_t const pairs = d / 2;
	if (pairs == 0 || pairs > 2)
		return std::nullopt;
	// p = t^e prod (t^2 - mu); the t^{d-2} coefficient is -(sum of mu)
	Scalar u = -p[d - 2];
	if (pairs == 2)
		u /= 5;
	Scalar c;
	if (sgn(u) <= 0 || !is_rational_square(u, c))
		return std::nullopt;
	// confirm the expected polynomial exactly
	std::vector<Scalar> expect(d + 1);
	expect[d] = 1;
	if (pairs == 1)
		expect[d - 2] = -u;
	else
	{
		expect[d - 2] = -5 * u;
		expect[d - 4] = 4 * u * u;
	}
	if (expect != p)
		return std::nullopt;
	return c;
}

Vector designated_cartan_element(LieAlgebraQ const &g)
{
	if (g.spec.family != Family::f4)
	{
		std::size_t const block = realification_block(g.spec.family);
		std::size_t const n = g.defining_n;
		std::size_t const last = g.spec.k;
		MatrixQ h(n, n);
		for (std::size_t a = 0; a < block; ++a)
		{
			h(a, block * last + a) = 1;
			h(block * last + a, a) = 1;
		}
		return g.coordinates_of(h);
	}
	// scan p: basis vectors, then sums and differences of pairs
	std::vector<Vector> candidates;
	std::size_t const np = g.p_part.dim();
	for (std::size_t i = 0; i < np; ++i)
		candidates.push_back(g.p_part.vector(i));
	for (std::size_t i = 0; i < np; ++i)
		for (std::size_t j = i + 1; j < np; ++j)
		{
			candidates.push_back(add(g.p_part.basis().row(i), g.p_part.basis().row(j)));
			candidates.push_back(sub(g.p_part.basis().row(i), g.p_part.basis().row(j)));
		}
	for (auto const &x : candidates)
	{
		auto c = hyperbolic_scale(g, x);
		if (!c)
			continue;
		Subspace zero = kernel(g.ad(x));
		if (intersection(zero, g.p_part).dim() == 1 &&
		    kernel(g.ad(scale(1 / *c, x)) - Scalar(2) * MatrixQ::identity(g.dim)).dim() > 0)
			return x;
	}
	throw NotRankOne("no hyperbolic element with five ad-eigenvalues found in p");
}

Subspace const &RootDecomposition::space(int lambda) const
{
	switch (lambda)
	{
	case -2:
		return g_minus_2a;
	case -1:
		return g_minus_a;
	case 0:
		return g0;
	case 1:
		return g_plus_a;
	case 2:
		return g_plus_2a;
	default:
		return zero_;
	}
}

RootDecomposition root_decomposition(LieAlgebraQ const &g)
{
	RootDecomposition rd;
	rd.H_seed = designated_cartan_element(g);
	if (!g.p_part.contains(rd.H_seed))
		throw NotRankOne("designated element is not in p");
	auto c = hyperbolic_scale(g, rd.H_seed);
	if (!c)
		throw NotRankOne("ad of the designated element does not have spectrum {0, +-c, +-2c}");
	rd.seed_scale = *c;
	rd.H = scale(1 / *c, rd.H_seed);

	MatrixQ const ad_h = g.ad(rd.H);
	MatrixQ const id = MatrixQ::identity(g.dim);
	std::map<int, Subspace> eig;
	std::size_t total = 0;
	for (int lambda = -2; lambda <= 2; ++lambda)
	{
		eig[lambda] = kernel(ad_h - Scalar(lambda) * id);
		total += eig[lambda].dim();
	}
	if (total != g.dim)
		throw NotRankOne("ad(H) eigenspaces for {0, +-1, +-2} do not fill the algebra");
	if (intersection(eig[0], g.p_part).dim() != 1)
		throw NotRankOne("centralizer of H meets p in more than a line");

	rd.zero_ = Subspace::zero(g.dim);
	rd.g_minus_2a = eig[-2];
	rd.g_minus_a = eig[-1];
	rd.g0 = eig[0];
	rd.g_plus_a = eig[1];
	rd.g_plus_2a = eig[2];
	rd.has_double_root = rd.g_plus_2a.dim() > 0;
	rd.a = Subspace(g.dim, {rd.H});
	rd.m = intersection(rd.g0, g.k_part);
	if (sum(rd.a, rd.m) != rd.g0)
		throw NotRankOne("g_0 is not a + m");

	for (int l = -2; l <= 2; ++l)
		for (int r = l; r <= 2; ++r)
		{
			Subspace br = bracket_span(g, rd.space(l), rd.space(r));
			if (!rd.space(l + r).contains(br))
				throw GradingViolation("[g_" + std::to_string(l) + ", g_" + std::to_string(r) +
				                       "] is not contained in g_" + std::to_string(l + r));
		}

	rd.m1_from_brackets = intersection(g.k_part, bracket_span(g, rd.g_minus_2a, rd.g_plus_2a));
	rd.m1 = rd.m1_from_brackets;
	if (rd.has_double_root)
		rd.m1 = sum(rd.m1, centralizer_in(g, rd.m, rd.m));
	if (rd.m1.dim() == 0)
		rd.m2 = rd.m;
	else
		rd.m2 = intersection(centralizer_in(g, rd.m1, rd.m), bracket_span(g, rd.m, rd.m));
	return rd;
}

// ---------------------------------------------------------------------------

Report bracket_identities(LieAlgebraQ const &g, RootDecomposition const &rd)
{
	Report rep;
	rep.lemma_id = "bracket-identities";
	rep.family = g.spec.name();

	auto br = [&](Subspace const &s, Subspace const &t) { return bracket_span(g, s, t); };
	Subspace const &ga = rd.g_plus_a, &gma = rd.g_minus_a, &g2a = rd.g_plus_2a, &gm2a = rd.g_minus_2a;

	rep.check("[a,g_a] = g_a", br(rd.a, ga) == ga, dim_string(ga));
	rep.check("[a,g_-a] = g_-a", br(rd.a, gma) == gma, dim_string(gma));
	if (rd.has_double_root)
	{
		rep.check("[a,g_2a] = g_2a", br(rd.a, g2a) == g2a, dim_string(g2a));
		Subspace top = br(g2a, gm2a);
		rep.check("a in [g_2a,g_-2a]", top.contains(rd.a), dim_string(top));
		Subspace down = br(ga, gm2a);
		rep.check("[g_a,g_-2a] = g_-a", down == gma, dim_string(down));
		if (g.spec.family == Family::su)
		{
			rep.check("[m1,g_-2a] = 0", br(rd.m1, gm2a).dim() == 0, dim_string(gm2a));
			rep.check("[m1,g_-a] = g_-a", br(rd.m1, gma) == gma, dim_string(gma));
		}
		else
			rep.check("[m1,g_-2a] = g_-2a", br(rd.m1, gm2a) == gm2a, dim_string(gm2a));
		Subspace mid = br(ga, gma);
		rep.check("m1 in [g_a,g_-a]", mid.contains(rd.m1), dim_string(rd.m1));
		if (g.spec.family == Family::f4)
		{
			rep.check("[g_2a,g_-2a] = g_0", top == rd.g0, dim_string(top));
			rep.check("[g_a,g_-a] = g_0", mid == rd.g0, dim_string(mid));
		}
		else
		{
			rep.check("[g_2a,g_-2a] = a + (k cap [g_-2a,g_2a])", top == sum(rd.a, rd.m1_from_brackets),
			          dim_string(top));
			rep.check("dim m1 = dim g_2a", rd.m1.dim() == g2a.dim(), dim_string(rd.m1));
		}
	}
	else
	{
		Subspace mid = br(ga, gma);
		rep.check("[g_a,g_-a] = g_0", mid == rd.g0, dim_string(mid));
	}

	// theta(g_l) = g_-l
	for (int l : {1, 2})
	{
		Subspace const &s = rd.space(l);
		std::vector<Vector> img;
		for (std::size_t i = 0; i < s.dim(); ++i)
			img.push_back(g.apply_theta(s.basis().row(i)));
		rep.check("theta(g_" + std::to_string(l) + "a) = g_-" + std::to_string(l) + "a",
		          span_of(g.dim, img) == rd.space(-l), dim_string(s));
	}

	// B(g_l, g_r) = 0 unless l + r = 0
	bool orth = true;
	for (int l = -2; l <= 2; ++l)
		for (int r = l; r <= 2; ++r)
		{
			if (l + r == 0)
				continue;
			auto const &s = rd.space(l), &t = rd.space(r);
			for (std::size_t i = 0; i < s.dim() && orth; ++i)
				for (std::size_t j = 0; j < t.dim() && orth; ++j)
					orth = sgn(g.B(s.basis().row(i), t.basis().row(j))) == 0;
		}
	rep.check("B(g_l,g_r) = 0 for l+r != 0", orth);

	bool preserved = true;
	for (int l = -2; l <= 2; ++l)
		preserved = preserved && rd.space(l).contains(br(rd.m, rd.space(l)));
	rep.check("ad(m) preserves each g_l", preserved);

	rep.check("[m1,m2] = 0", br(rd.m1, rd.m2).dim() == 0, dim_string(rd.m2));
	rep.check("m = m1 + m2 (direct)",
	          sum(rd.m1, rd.m2) == rd.m && rd.m1.dim() + rd.m2.dim() == rd.m.dim(), dim_string(rd.m));
	std::size_t total = rd.a.dim() + rd.m.dim();
	for (int l : {-2, -1, 1, 2})
		total += rd.space(l).dim();
	rep.check("dimensions add up", total == g.dim, std::to_string(total));
	return rep;
}

} // namespace rank1
