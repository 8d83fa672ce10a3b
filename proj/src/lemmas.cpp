#include "rank1/lemmas.hpp"

#include "rank1/albert.hpp"
#include "rank1/composition.hpp"

#include <algorithm>
#include <map>

namespace rank1 {

namespace {

std::string str(std::size_t n) { return std::to_string(n); }

std::vector<std::pair<std::string, std::string>> algebra_parameters(LieAlgebraQ const &g)
{
	if (g.spec.family == Family::f4)
		return {};
	return {{"k", str(g.spec.k)}};
}

Report start(std::string id, LieAlgebraQ const &g)
{
	Report r;
	r.lemma_id = std::move(id);
	r.family = g.spec.name();
	r.parameters = algebra_parameters(g);
	return r;
}

/// Coordinates of [s_i, s_j] in the basis of `target`, one matrix per component.
std::vector<MatrixQ> pairing_components(LieAlgebraQ const &g, Subspace const &s, Subspace const &target)
{
	std::size_t const n = s.dim();
	std::vector<MatrixQ> comps(target.dim(), MatrixQ(n, n));
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			Vector c = target.coordinates(g.bracket(s.basis().row(i), s.basis().row(j)));
			for (std::size_t t = 0; t < c.size(); ++t)
				comps[t](i, j) = c[t];
		}
	return comps;
}

/// Matrix (target coords x domain basis) of y -> [x, y].
MatrixQ bracket_map(LieAlgebraQ const &g, std::span<Scalar const> x, Subspace const &domain, Subspace const &target)
{
	MatrixQ m(target.dim(), domain.dim());
	for (std::size_t j = 0; j < domain.dim(); ++j)
	{
		Vector c = target.coordinates(g.bracket(x, domain.basis().row(j)));
		for (std::size_t i = 0; i < c.size(); ++i)
			m(i, j) = c[i];
	}
	return m;
}

/// {v in s : [v, w] = 0 for all w in ws}
Subspace commuting_part(LieAlgebraQ const &g, Subspace const &s, std::vector<Vector> const &ws)
{
	if (ws.empty())
		return s;
	MatrixQ eqs(ws.size() * g.dim, s.dim());
	for (std::size_t i = 0; i < s.dim(); ++i)
		for (std::size_t j = 0; j < ws.size(); ++j)
		{
			Vector b = g.bracket(s.basis().row(i), ws[j]);
			for (std::size_t r = 0; r < g.dim; ++r)
				eqs(j * g.dim + r, i) = b[r];
		}
	Subspace coeffs = kernel(eqs);
	std::vector<Vector> vs;
	for (std::size_t i = 0; i < coeffs.dim(); ++i)
		vs.push_back(s.combine(coeffs.basis().row(i)));
	return vs.empty() ? Subspace::zero(g.dim) : Subspace(g.dim, vs);
}

bool pairwise_abelian(LieAlgebraQ const &g, std::vector<Vector> const &vs)
{
	for (std::size_t i = 0; i < vs.size(); ++i)
		for (std::size_t j = i + 1; j < vs.size(); ++j)
			if (!is_zero(g.bracket(vs[i], vs[j])))
				return false;
	return true;
}

/// Extends an abelian family inside s one vector at a time; with an Rng the
/// new vector is a random element of the commuting part, otherwise its first
/// echelon vector outside the current span.
std::vector<Vector> greedy_abelian(LieAlgebraQ const &g, Subspace const &s, Rng *rng)
{
	std::vector<Vector> vs;
	while (true)
	{
		Subspace c = commuting_part(g, s, vs);
		Subspace current = vs.empty() ? Subspace::zero(g.dim) : Subspace(g.dim, vs);
		if (current.contains(c))
			return vs;
		Vector next;
		if (rng)
		{
			do
				next = rng->element(c);
			while (current.contains(next));
		}
		else
		{
			for (std::size_t i = 0; i < c.dim(); ++i)
				if (!current.contains(c.basis().row(i)))
				{
					next = c.vector(i);
					break;
				}
		}
		vs.push_back(std::move(next));
	}
}

std::vector<MatrixQ> restricted_action(LieAlgebraQ const &g, Subspace const &acting, Subspace const &on)
{
	std::vector<MatrixQ> rep;
	for (std::size_t i = 0; i < acting.dim(); ++i)
		rep.push_back(restrict_map(g.ad(acting.basis().row(i)), on));
	return rep;
}

struct ActionFacts
{
	std::size_t commutant = 0;
	std::size_t forms = 0;
	bool definite = false;
};

ActionFacts action_facts(std::vector<MatrixQ> const &rep, std::size_t d)
{
	ActionFacts f;
	if (rep.empty())
	{
		// trivial action: everything commutes, every symmetric form is invariant
		f.commutant = d * d;
		f.forms = d * (d + 1) / 2;
		f.definite = d == 1;
		return f;
	}
	f.commutant = commutant_dimension(rep);
	auto forms = invariant_symmetric_forms(rep);
	f.forms = forms.size();
	if (forms.size() == 1)
	{
		Signature s = signature(forms.front());
		f.definite = s.plus == d || s.minus == d;
	}
	return f;
}

std::size_t stabilizer_dim(LieAlgebraQ const &g, Subspace const &m, std::span<Scalar const> x)
{
	return commuting_part(g, m, {Vector(x.begin(), x.end())}).dim();
}

MatrixQ stack_columns(std::vector<Vector> const &cols, std::size_t n)
{
	MatrixQ m(n, cols.size());
	for (std::size_t c = 0; c < cols.size(); ++c)
		for (std::size_t r = 0; r < n; ++r)
			m(r, c) = cols[c][r];
	return m;
}

std::vector<Vector> rows_of(Subspace const &s)
{
	std::vector<Vector> v;
	for (std::size_t i = 0; i < s.dim(); ++i)
		v.push_back(s.vector(i));
	return v;
}

} // namespace

// ---------------------------------------------------------------------------

std::uint64_t Rng::next()
{
	std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
	z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
	z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
	return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi)
{
	auto span = static_cast<std::uint64_t>(hi - lo + 1);
	return lo + static_cast<long>(next() % span);
}

Vector Rng::vector(std::size_t n)
{
	Vector v(n);
	for (auto &x : v)
		x = uniform(-9, 9);
	return v;
}

Vector Rng::element(Subspace const &s) { return s.combine(vector(s.dim())); }

Vector Rng::nonzero_element(Subspace const &s)
{
	if (s.dim() == 0)
		throw DegenerateInput("nonzero_element: zero subspace");
	Vector v;
	do
		v = element(s);
	while (is_zero(v));
	return v;
}

// ---------------------------------------------------------------------------

Report verify_transversality(LieAlgebraQ const &g, RootDecomposition const &rd, std::size_t trials,
                             std::uint64_t seed)
{
	Report rep = start("transversality", g);
	int const lam = rd.has_double_root ? 2 : 1;
	rep.parameters.push_back({"root", lam == 2 ? "2a" : "a"});
	rep.parameters.push_back({"seed", std::to_string(seed)});
	Subspace const &space = rd.space(-lam);
	Scalar const bhh = g.B(rd.H, rd.H);
	Scalar const norm2 = Scalar(lam * lam) / bhh;
	Vector const h_lambda = scale(Scalar(lam) / bhh, rd.H);
	rep.note("|l|^2 = l(H)^2 / B(H,H)", true, to_string(norm2));

	Rng rng(seed);
	std::size_t flipped_main = 0, flipped_aux = 0;
	for (std::size_t t = 0; t < trials; ++t)
	{
		Vector x = rng.element(space), y = rng.element(space);
		Vector tx = g.apply_theta(x), ty = g.apply_theta(y);
		Scalar const bxy = g.B_theta(x, y), bxx = g.B_theta(x, x);

		Vector lhs = g.bracket(g.bracket(x, ty), x);
		Vector rhs = scale(-2 * norm2 * bxy, x);
		axpy(rhs, norm2 * bxx, y);
		Vector aux_lhs = sub(g.bracket(x, ty), g.bracket(tx, y));
		Vector aux_rhs = scale(2 * bxy, h_lambda);

		// same identities through matrix commutators
		MatrixQ mx = g.defining_matrix(x), my = g.defining_matrix(y);
		MatrixQ mty = g.theta_of_defining(my), mtx = g.theta_of_defining(mx);
		bool matrix_ok = commutator(commutator(mx, mty), mx) == g.defining_matrix(rhs) &&
		                 commutator(mx, mty) - commutator(mtx, my) == g.defining_matrix(aux_rhs);

		bool ok = lhs == rhs && aux_lhs == aux_rhs && matrix_ok;
		if (lhs == scale(Scalar(-1), rhs))
			++flipped_main;
		if (aux_lhs == scale(Scalar(-1), aux_rhs))
			++flipped_aux;
		if (ok)
			++rep.passes;
		else
			rep.fail_with("[[X,thY],X] = -2|l|^2 B(X,Y) X + |l|^2 B(X,X) Y", {{"X", x}, {"Y", y}});
	}
	rep.trials = trials;
	rep.note("opposite sign: [[X,thY],X] = 2|l|^2 B(X,Y) X - |l|^2 B(X,X) Y", flipped_main == trials,
	         str(flipped_main) + "/" + str(trials));
	rep.note("opposite sign: [X,thY] - [thX,Y] = -2 B(X,Y) H_l", flipped_aux == trials,
	         str(flipped_aux) + "/" + str(trials));
	return rep;
}

Report verify_m1_identity(LieAlgebraQ const &g, RootDecomposition const &rd, std::size_t trials,
                          std::uint64_t seed)
{
	if (g.spec.family != Family::su && g.spec.family != Family::sp)
		throw UnsupportedParameters("m1-identity applies to su(1,k) and sp(1,k)");
	Report rep = start("m1-identity", g);
	rep.parameters.push_back({"seed", std::to_string(seed)});
	Scalar const kappa = Scalar(-3) / g.B(rd.H, rd.H);
	rep.note("coefficient -3|a|^2", true, to_string(kappa));

	Rng rng(seed);
	std::size_t unit_holds = 0, unit_cases = 0;
	for (std::size_t t = 0; t < trials; ++t)
	{
		Vector x = rng.element(rd.g_minus_a), z = rng.element(rd.m1);
		Vector y = g.bracket(z, x);
		Scalar const bxx = g.B_theta(x, x);
		Vector lhs = g.bracket(g.bracket(g.apply_theta(y), x), x);
		Vector rhs = scale(kappa * bxx, y);

		MatrixQ mx = g.defining_matrix(x), mz = g.defining_matrix(z);
		MatrixQ my = commutator(mz, mx);
		bool matrix_ok = my == g.defining_matrix(y) &&
		                 commutator(commutator(g.theta_of_defining(my), mx), mx) == g.defining_matrix(rhs);

		bool nonvanishing = true;
		if (!is_zero(x) && !is_zero(z))
			nonvanishing = !is_zero(g.bracket(x, y)) && !commutator(mx, my).is_zero();

		if (!is_zero(y))
		{
			++unit_cases;
			if (lhs == scale(bxx, y))
				++unit_holds;
		}
		if (lhs == rhs && matrix_ok && nonvanishing)
			++rep.passes;
		else
			rep.fail_with(nonvanishing ? "[[thY,X],X] = -3|a|^2 B(X,X) Y" : "[X,[Z,X]] != 0", {{"X", x}, {"Z", z}});
	}
	rep.trials = trials;
	rep.note("unit coefficient: [[thY,X],X] = B(X,X) Y", unit_holds == unit_cases,
	         str(unit_holds) + "/" + str(unit_cases));
	return rep;
}

Report verify_abelian_bounds(LieAlgebraQ const &g, RootDecomposition const &rd, std::uint64_t seed)
{
	Family const fam = g.spec.family;
	if (fam == Family::so)
		throw UnsupportedParameters("abelian-bounds applies to su(1,k), sp(1,k) and f4");
	Report rep = start("abelian-bounds", g);
	rep.parameters.push_back({"seed", std::to_string(seed)});
	std::size_t const k = g.spec.k;
	Subspace const &s = rd.g_minus_a;

	// (a) witness: deterministic greedy first, then randomized greedy runs
	std::size_t const stated = fam == Family::su ? k - 1 : fam == Family::sp ? 2 * (k - 1) : 1;
	std::vector<Vector> best = greedy_abelian(g, s, nullptr);
	Rng rng(seed);
	for (int attempt = 0; attempt < 8; ++attempt)
	{
		auto vs = greedy_abelian(g, s, &rng);
		if (vs.size() > best.size())
			best = std::move(vs);
	}
	bool abelian = pairwise_abelian(g, best);
	rep.note("largest abelian subspace found", abelian, str(best.size()));
	rep.check("abelian witness of dim " + str(stated), abelian && best.size() >= stated, str(best.size()));

	// (b), (c) rank obstructions
	if (fam == Family::su)
	{
		auto comps = pairing_components(g, s, rd.g_minus_2a);
		std::size_t r = rank(comps.front());
		rep.check("pairing g_-a x g_-a -> g_-2a has rank 2(k-1)", r == 2 * (k - 1), str(r));
	}
	else if (fam == Family::sp)
	{
		auto comps = pairing_components(g, s, rd.g_minus_2a);
		std::string ranks;
		std::optional<std::size_t> full;
		for (std::size_t t = 0; t < comps.size(); ++t)
		{
			std::size_t r = rank(comps[t]);
			ranks += (t ? "," : "") + str(r);
			if (!full && r == 4 * (k - 1))
				full = t;
		}
		rep.check("a component of the pairing has rank 4(k-1)", full.has_value(), ranks);
		// every abelian V has V, Vi, Vj, Vk mutually orthogonal, so dim V <= k-1;
		// generic evidence: ad X : g_-a -> g_-2a is onto for random X
		std::size_t onto = 0;
		for (int t = 0; t < 50; ++t)
		{
			Vector x = rng.nonzero_element(s);
			if (rank(bracket_map(g, x, s, rd.g_minus_2a)) == 3)
				++onto;
		}
		rep.note("ad X : g_-a -> g_-2a onto for 50 random X", onto == 50, str(onto) + "/50");
	}
	else
	{
		std::size_t ok = 0, oct_ok = 0;
		for (int t = 0; t < 50; ++t)
		{
			Vector x = rng.nonzero_element(s);
			Subspace ker = kernel(bracket_map(g, x, s, rd.g_minus_2a));
			if (ker.dim() == 1 && ker.contains(s.coordinates(x)))
				++ok;
			// octonion model of the pairing: y -> x conj(y) - y conj(x)
			Octonion o;
			for (std::size_t i = 0; i < 8; ++i)
				o.c[i] = rng.uniform(-9, 9);
			if (o.is_zero())
				o = Octonion::real(1);
			MatrixQ om(8, 8);
			for (std::size_t j = 0; j < 8; ++j)
			{
				Octonion v = oct_bracket_form(o, Octonion::unit(j));
				for (std::size_t i = 0; i < 8; ++i)
					om(i, j) = v.c[i];
			}
			if (8 - rank(om) == 1)
				++oct_ok;
		}
		rep.check("ker(ad X : g_-a -> g_-2a) = span X for 50 random X", ok == 50, str(ok) + "/50");
		rep.check("octonion pairing kernel is a line for 50 random x", oct_ok == 50, str(oct_ok) + "/50");
	}
	return rep;
}

Report verify_standard_rep_facts(LieAlgebraQ const &g, RootDecomposition const &rd, std::uint64_t seed)
{
	Family const fam = g.spec.family;
	if (fam != Family::so && fam != Family::f4)
		throw UnsupportedParameters("spin-facts applies to so(1,k) and f4");
	Report rep = start("spin-facts", g);
	rep.parameters.push_back({"seed", std::to_string(seed)});

	auto record = [&](std::string const &where, Subspace const &u, std::size_t expected_commutant) {
		ActionFacts f = action_facts(restricted_action(g, rd.m, u), u.dim());
		rep.check("commutant of ad(m) on " + where, f.commutant == expected_commutant, str(f.commutant));
		rep.check("invariant forms on " + where + " (one, definite)", f.forms == 1 && f.definite, str(f.forms));
	};

	if (fam == Family::so)
	{
		// so(2) acting on R^2 has the complex numbers as commutant
		std::size_t const expected = g.spec.k == 3 ? 2 : 1;
		record("g_-a", rd.g_minus_a, expected);
		record("g_a", rd.g_plus_a, expected);
		return rep;
	}

	record("g_a", rd.g_plus_a, 1);
	record("g_-a", rd.g_minus_a, 1);
	record("g_2a", rd.g_plus_2a, 1);
	record("g_-2a", rd.g_minus_2a, 1);

	Rng rng(seed);
	std::size_t best_a = rd.m.dim(), best_2a = rd.m.dim();
	for (int attempt = 0; attempt < 8; ++attempt)
	{
		best_a = std::min(best_a, stabilizer_dim(g, rd.m, rng.nonzero_element(rd.g_plus_a)));
		best_2a = std::min(best_2a, stabilizer_dim(g, rd.m, rng.nonzero_element(rd.g_plus_2a)));
	}
	rep.check("stabilizer in m of generic X in g_a (g2)", best_a == 14, str(best_a));
	rep.check("stabilizer in m of generic X in g_2a (so(6))", best_2a == 15, str(best_2a));

	std::size_t const c = commutant_dimension(g.realization);
	rep.check("commutant on J0", c == 1, str(c));
	std::vector<Vector> flat;
	for (auto const &x : g.realization)
		flat.push_back(x.flatten());
	std::size_t const r = rank(MatrixQ::from_rows(flat, flat.front().size()));
	rep.check("J0 representation faithful", r == g.dim, str(r));
	return rep;
}

// ---------------------------------------------------------------------------

Report verify_hyperbolic_normal_form(std::size_t p, std::size_t q, Scalar const &lambda, std::uint64_t seed)
{
	if (p == 0 || p > q || sgn(lambda) == 0)
		throw DegenerateInput("hyperbolic normal form needs 1 <= p <= q and lambda != 0");
	Report rep;
	rep.lemma_id = "hyperbolic-normal-form";
	rep.family = "so(" + str(p) + "," + str(q) + ")";
	rep.parameters = {{"p", str(p)}, {"q", str(q)}, {"lambda", to_string(lambda)}, {"seed", std::to_string(seed)}};

	std::size_t const n = p + q, r = q - p;
	Rng rng(seed);

	// model: basis (V, W, V'), form [[0,0,I],[0,I,0],[I,0,0]]
	MatrixQ g0(n, n), x0(n, n);
	for (std::size_t i = 0; i < p; ++i)
	{
		g0(i, p + r + i) = 1;
		g0(p + r + i, i) = 1;
		x0(i, i) = lambda;
		x0(p + r + i, p + r + i) = -lambda;
	}
	for (std::size_t i = 0; i < r; ++i)
		g0(p + i, p + i) = 1;
	for (std::size_t i = 0; i < p; ++i)
		for (std::size_t j = 0; j < r; ++j)
		{
			Scalar b = rng.uniform(-9, 9);
			x0(i, p + j) = b;
			x0(p + j, p + r + i) = -b;
		}
	for (std::size_t i = 0; i < p; ++i)
		for (std::size_t j = i + 1; j < p; ++j)
		{
			Scalar c = rng.uniform(-9, 9);
			x0(i, p + r + j) = c;
			x0(j, p + r + i) = -c;
		}

	MatrixQ a, a_inv;
	while (true)
	{
		a = MatrixQ(n, n);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
				a(i, j) = rng.uniform(-9, 9);
		if (auto inv = inverse(a))
		{
			a_inv = *inv;
			break;
		}
	}
	MatrixQ const x = a * x0 * a_inv;
	MatrixQ const gram = a_inv.transpose() * g0 * a_inv;
	std::vector<Vector> v_cols;
	for (std::size_t i = 0; i < p; ++i)
		v_cols.push_back(a.column(i));
	Subspace const v(n, v_cols);

	MatrixQ const id = MatrixQ::identity(n);
	rep.check("input: X skew for the form", (x.transpose() * gram + gram * x).is_zero());
	rep.check("input: V isotropic", congruence(v.basis(), gram).is_zero());

	// recovery from X and the form alone
	Subspace const up = kernel(x - lambda * id);
	Subspace const down = kernel(x + lambda * id);
	Subspace const middle = kernel(x);
	if (up.dim() != p || down.dim() != p || middle.dim() != r)
		throw DegenerateInput("eigenspace dimensions " + str(up.dim()) + "," + str(middle.dim()) + "," +
		                      str(down.dim()) + " do not match (p, q-p, p)");

	rep.check("V = ker(X - lambda)", up == v);
	rep.check("V' isotropic", congruence(down.basis(), gram).is_zero());
	Subspace const hyper = sum(up, down);
	Signature const hs = signature(congruence(hyper.basis(), gram));
	rep.check("V + V' has signature (p,p)", hs == Signature{p, p, 0}, to_string(hs));
	rep.check("middle = (V + V')^perp", middle == orthogonal_complement(hyper, gram), str(middle.dim()));
	Signature const ms = r ? signature(congruence(middle.basis(), gram)) : Signature{};
	rep.check("middle positive definite", ms == Signature{r, 0, 0}, to_string(ms));

	std::vector<Vector> cols = rows_of(up);
	for (auto &c : rows_of(middle))
		cols.push_back(std::move(c));
	for (auto &c : rows_of(down))
		cols.push_back(std::move(c));
	MatrixQ const basis = stack_columns(cols, n);
	auto basis_inv = inverse(basis);
	bool block = false;
	if (basis_inv)
	{
		Vector d(n);
		for (std::size_t i = 0; i < p; ++i)
		{
			d[i] = lambda;
			d[p + r + i] = -lambda;
		}
		block = *basis_inv * x * basis == MatrixQ::diagonal(d);
	}
	rep.check("X = diag(lambda, 0, -lambda) on V + middle + V'", block);
	return rep;
}

// ---------------------------------------------------------------------------

TwoDistributionResult two_distributions(std::size_t p, std::size_t q, std::optional<std::size_t> isotropic_dim)
{
	std::size_t const n = p + q;
	std::size_t const iso = isotropic_dim.value_or(p);
	if (n == 0 || n > 8 || p > q || iso == 0 || iso > p)
		throw HypothesisUnsatisfiable("no pair of degenerate subspaces for signature (" + str(p) + "," + str(q) +
		                              ") with isotropic dimension " + str(iso));

	Vector diag(n, Scalar(1));
	for (std::size_t i = 0; i < p; ++i)
		diag[i] = -1;
	MatrixQ const gram = MatrixQ::diagonal(diag);
	std::vector<Vector> l1, l2;
	for (std::size_t i = 0; i < iso; ++i)
	{
		Vector a(n), b(n);
		a[i] = b[i] = 1;
		a[p + i] = 1;
		b[p + i] = -1;
		l1.push_back(a);
		l2.push_back(b);
	}
	Subspace const v1 = orthogonal_complement(Subspace(n, l1), gram);
	Subspace const v2 = orthogonal_complement(Subspace(n, l2), gram);
	Subspace const f = intersection(v1, v2);
	if (sum(v1, v2).dim() != n || (f.dim() && signature(congruence(f.basis(), gram)).zero != 0))
		throw HypothesisUnsatisfiable("V1 + V2 != V or V1 cap V2 degenerate");

	auto idx = [n](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
		return ((i * n + j) * n + k) * n + l;
	};
	std::size_t const unknowns = n * n * n * n;

	auto symmetries = [&](SparseEliminator &sys) {
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
				for (std::size_t k = 0; k < n; ++k)
					for (std::size_t l = 0; l < n; ++l)
					{
						std::map<std::size_t, Scalar> anti, bianchi, skew;
						anti[idx(i, j, k, l)] += 1;
						anti[idx(j, i, k, l)] += 1;
						bianchi[idx(i, j, k, l)] += 1;
						bianchi[idx(j, k, i, l)] += 1;
						bianchi[idx(k, i, j, l)] += 1;
						// <T(e_i,e_j,e_k), e_l> + <T(e_i,e_j,e_l), e_k> = 0
						skew[idx(i, j, k, l)] += diag[l];
						skew[idx(i, j, l, k)] += diag[k];
						for (auto *eq : {&anti, &bianchi, &skew})
						{
							SparseVector row;
							for (auto &[c, v] : *eq)
								if (sgn(v) != 0)
									row.push_back({c, v});
							sys.add_equation(std::move(row));
						}
					}
	};
	auto vanishing_on = [&](SparseEliminator &sys, Subspace const &s) {
		for (std::size_t a = 0; a < s.dim(); ++a)
			for (std::size_t b = 0; b < s.dim(); ++b)
				for (std::size_t c = 0; c < s.dim(); ++c)
					for (std::size_t l = 0; l < n; ++l)
					{
						std::map<std::size_t, Scalar> eq;
						for (std::size_t i = 0; i < n; ++i)
							for (std::size_t j = 0; j < n; ++j)
								for (std::size_t k = 0; k < n; ++k)
								{
									Scalar w = s.basis()(a, i) * s.basis()(b, j) * s.basis()(c, k);
									if (sgn(w) != 0)
										eq[idx(i, j, k, l)] += w;
								}
						SparseVector row;
						for (auto &[col, v] : eq)
							if (sgn(v) != 0)
								row.push_back({col, v});
						sys.add_equation(std::move(row));
					}
	};

	SparseEliminator control(unknowns);
	symmetries(control);
	vanishing_on(control, v1);
	vanishing_on(control, v2);

	TwoDistributionResult res;
	res.unknowns = unknowns;
	res.intersection_dim = f.dim();
	res.solution_dim_without_image = unknowns - control.rank();

	// Im T in F: every functional vanishing on F kills T
	SparseEliminator sys = control;
	Subspace const ann = f.annihilator();
	for (std::size_t a = 0; a < ann.dim(); ++a)
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
				for (std::size_t k = 0; k < n; ++k)
				{
					SparseVector row;
					for (std::size_t l = 0; l < n; ++l)
						if (sgn(ann.basis()(a, l)) != 0)
							row.push_back({idx(i, j, k, l), ann.basis()(a, l)});
					sys.add_equation(std::move(row));
				}
	res.rank = sys.rank();
	res.solution_dim = unknowns - res.rank;
	return res;
}

Report verify_two_distributions(std::size_t p, std::size_t q, std::optional<std::size_t> isotropic_dim)
{
	Report rep;
	rep.lemma_id = "two-distributions";
	rep.family = "R^{" + str(p) + "," + str(q) + "}";
	rep.parameters = {{"p", str(p)}, {"q", str(q)}, {"isotropic_dim", str(isotropic_dim.value_or(p))}};
	TwoDistributionResult r = two_distributions(p, q, isotropic_dim);
	rep.note("dim V1 cap V2", true, str(r.intersection_dim));
	rep.note("constraint rank", true, str(r.rank) + "/" + str(r.unknowns));
	rep.check("solution space is zero", r.solution_dim == 0, str(r.solution_dim));
	rep.check("negative control (no image hypothesis) is nonzero", r.solution_dim_without_image > 0,
	          str(r.solution_dim_without_image));
	return rep;
}

// ---------------------------------------------------------------------------

Report verify_signature_J0()
{
	Report rep;
	rep.lemma_id = "signature-J0";
	rep.family = "f4";
	MatrixQ const q = trace_form_gram();
	Signature const total = signature(q);
	rep.check("trace form on J(O,p)", total == Signature{11, 16, 0}, to_string(total));
	Subspace const j0 = traceless_subspace();
	Signature const s0 = signature(congruence(j0.basis(), q));
	rep.check("trace form on J0", s0 == Signature{10, 16, 0}, to_string(s0));
	Vector const one = AlbertElement::identity().coords();
	rep.check("q(I,I) = 3", dot(one, q.apply(one)) == 3);
	bool perp = true;
	for (std::size_t i = 0; i < j0.dim(); ++i)
		perp = perp && sgn(dot(one, q.apply(j0.basis().row(i)))) == 0;
	rep.check("J0 orthogonal to I", perp);
	return rep;
}

Report verify_derivation_dim(LieAlgebraQ const &g)
{
	if (g.spec.family != Family::f4)
		throw UnsupportedParameters("derivation-dim applies to f4");
	Report rep = start("derivation-dim", g);
	rep.check("dimension 52", g.dim == 52, str(g.dim));

	MatrixQ const q = trace_form_gram();
	Subspace const j0 = traceless_subspace();
	Vector const one = AlbertElement::identity().coords();
	bool skew = true, kills_unit = true, keeps_j0 = true;
	for (auto const &d : g.defining)
	{
		skew = skew && (d.transpose() * q + q * d).is_zero();
		kills_unit = kills_unit && is_zero(d.apply(one));
		for (std::size_t i = 0; i < j0.dim() && keeps_j0; ++i)
			keeps_j0 = j0.contains(d.apply(j0.basis().row(i)));
	}
	rep.check("every derivation is q-skew", skew);
	rep.check("every derivation kills I", kills_unit);
	rep.check("every derivation preserves J0", keeps_j0);

	// Leibniz rule on random elements, through the octonionic matrix product
	Rng rng(52);
	bool leibniz = true;
	for (int t = 0; t < 3 && leibniz; ++t)
	{
		Vector xv = rng.vector(27), yv = rng.vector(27);
		AlbertElement x = AlbertElement::from_coords(xv), y = AlbertElement::from_coords(yv);
		Vector xy = jordan_product(x, y).coords();
		for (auto const &d : g.defining)
		{
			AlbertElement dx = AlbertElement::from_coords(d.apply(xv));
			AlbertElement dy = AlbertElement::from_coords(d.apply(yv));
			Vector rhs = add(jordan_product(dx, y).coords(), jordan_product(x, dy).coords());
			if (d.apply(xy) != rhs)
			{
				leibniz = false;
				break;
			}
		}
	}
	rep.check("Leibniz rule on random elements", leibniz);
	rep.check("Jacobi identity on all basis triples", satisfies_jacobi(g.structure));

	std::vector<Vector> flat;
	for (auto const &x : g.realization)
		flat.push_back(x.flatten());
	std::size_t const r = rank(MatrixQ::from_rows(flat, flat.front().size()));
	rep.check("restriction to J0 is faithful", r == 52, str(r));
	std::size_t const c = commutant_dimension(g.realization);
	rep.check("commutant on J0", c == 1, str(c));
	auto forms = invariant_symmetric_forms(g.realization);
	bool by_q = forms.size() == 1 &&
	            rank(MatrixQ::from_rows({forms.front().flatten(), g.realization_form.flatten()},
	                                    g.realization_form.entries().size())) == 1;
	rep.check("invariant forms on J0 spanned by q", by_q, str(forms.size()));
	return rep;
}

Report verify_root_table(LieAlgebraQ const &g, RootDecomposition const &rd)
{
	Report rep = start("root-table", g);
	std::size_t const k = g.spec.k;
	struct Row
	{
		std::size_t ga, g2a, m, m1, m2, p;
	};
	Row e{};
	switch (g.spec.family)
	{
	case Family::so:
		e = {k - 1, 0, (k - 1) * (k - 2) / 2, 0, (k - 1) * (k - 2) / 2, k};
		break;
	case Family::su:
		e = {2 * (k - 1), 1, (k - 1) * (k - 1), 1, k * k - 2 * k, 2 * k};
		break;
	case Family::sp:
		e = {4 * (k - 1), 3, 3 + (k - 1) * (2 * k - 1), 3, (k - 1) * (2 * k - 1), 4 * k};
		break;
	case Family::f4:
		e = {8, 7, 21, 21, 0, 16};
		break;
	}
	auto row = [&](std::string const &name, std::size_t got, std::size_t want) {
		rep.check(name, got == want, str(got));
	};
	row("dim a", rd.a.dim(), 1);
	row("dim g_a", rd.g_plus_a.dim(), e.ga);
	row("dim g_-a", rd.g_minus_a.dim(), e.ga);
	row("dim g_2a", rd.g_plus_2a.dim(), e.g2a);
	row("dim g_-2a", rd.g_minus_2a.dim(), e.g2a);
	row("dim m", rd.m.dim(), e.m);
	row("dim m1", rd.m1.dim(), e.m1);
	row("dim m2", rd.m2.dim(), e.m2);
	rep.check("alpha(H) = 1", g.bracket(rd.H, rd.g_plus_a.basis().row(0)) == rd.g_plus_a.vector(0));

	Signature const ks = g.killing.sig();
	rep.check("Killing signature (dim p, dim k)", ks == Signature{e.p, g.dim - e.p, 0}, to_string(ks));
	rep.check("B_theta positive definite", g.killing_theta.positive_definite(), to_string(g.killing_theta.sig()));
	rep.check("dim p", g.p_part.dim() == e.p, str(g.p_part.dim()));
	rep.check("theta involutive automorphism", is_involutive_automorphism(g.structure, g.theta));
	rep.check("Jacobi identity on all basis triples", satisfies_jacobi(g.structure));
	return rep;
}

} // namespace rank1
