// One line per acceptance criterion. Every comparison is exact (tolerance 0);
// the only non-exact bound is the runtime budget of criterion 1.

#include "rank1/albert.hpp"
#include "rank1/catalog.hpp"
#include "rank1/einstein.hpp"
#include "rank1/lemmas.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>

using namespace rank1;

namespace {

constexpr double f4_budget_seconds = 120.0;

struct Line
{
	int id;
	bool ok;
	std::string what;
	std::string detail;
};

std::vector<Line> lines;

void emit(int id, bool ok, std::string what, std::string detail)
{
	std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << "  " << what << "  [" << detail << "]"
	          << std::endl;
	lines.push_back({id, ok, std::move(what), std::move(detail)});
}

struct Built
{
	LieAlgebraQ g;
	RootDecomposition rd;
};

std::map<std::string, Built> cache;

Built const &built(std::string const &name)
{
	auto it = cache.find(name);
	if (it == cache.end())
	{
		LieAlgebraQ g = build_algebra(parse_algebra_spec(name));
		RootDecomposition rd = root_decomposition(g);
		it = cache.emplace(name, Built{std::move(g), std::move(rd)}).first;
	}
	return it->second;
}

std::vector<std::string> ks(std::string const &family)
{
	return {family + "(1,2)", family + "(1,3)", family + "(1,4)"};
}

std::string failing_checks(Report const &r)
{
	std::string out;
	for (auto const &c : r.checks)
		if (!c.passed && !c.informational)
			out += (out.empty() ? "" : "; ") + r.family + " " + c.name + "=" + c.value;
	for (auto const &f : r.failures)
		if (!f.counterexample.empty())
			out += (out.empty() ? "" : "; ") + r.family + " " + f.check;
	return out;
}

void criterion_1()
{
	auto const t0 = std::chrono::steady_clock::now();
	DerivationAlgebra const d = derivation_algebra();
	double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
	MatrixQ const q = trace_form_gram();
	Subspace const j0 = traceless_subspace();
	bool skew = true, keeps = true;
	for (auto const &m : d.basis)
	{
		skew = skew && (m.transpose() * q + q * m).is_zero();
		for (std::size_t i = 0; i < j0.dim() && keeps; ++i)
			keeps = j0.contains(m.apply(j0.basis().row(i)));
	}
	bool const jacobi = satisfies_jacobi(d.structure);
	std::ostringstream s;
	s << "dim " << d.dim << ", q-skew " << skew << ", J0 " << keeps << ", Jacobi " << jacobi << ", solve " << secs
	  << " s (budget " << f4_budget_seconds << " s)";
	emit(1, d.dim == 52 && skew && keeps && jacobi && secs < f4_budget_seconds, "f4 as derivations of J(O,p)",
	     s.str());
}

void criterion_2()
{
	bool ok = true;
	std::string bad;
	Signature const j0 = signature(congruence(traceless_subspace().basis(), trace_form_gram()));
	if (!(j0 == Signature{10, 16, 0}))
		ok = false, bad += " J0=" + to_string(j0);

	std::vector<std::string> names{"so(1,2)", "so(1,3)", "so(1,4)", "f4"};
	for (auto const &f : {"su", "sp"})
		for (auto const &n : ks(f))
			names.push_back(n);
	for (auto const &name : names)
	{
		Built const &b = built(name);
		LieAlgebraQ const &g = b.g;
		std::size_t const k = g.spec.k;
		std::size_t p_dim = 0;
		switch (g.spec.family)
		{
		case Family::so: p_dim = k; break;
		case Family::su: p_dim = 2 * k; break;
		case Family::sp: p_dim = 4 * k; break;
		case Family::f4: p_dim = 16; break;
		}
		Signature const killing = g.killing.sig();
		if (!(killing == Signature{p_dim, g.dim - p_dim, 0}))
			ok = false, bad += " " + name + " Killing=" + to_string(killing);
		if (!g.killing_theta.positive_definite())
			ok = false, bad += " " + name + " B_theta";
		if (g.spec.family != Family::so)
		{
			ConformalEmbedding const e = build_embedding(g);
			Signature want = g.spec.family == Family::su   ? Signature{2, 2 * k, 0}
			                 : g.spec.family == Family::sp ? Signature{4, 4 * k, 0}
			                                               : Signature{10, 16, 0};
			Report const r = verify_embedding_signature(g, e);
			if (!(e.ambient_form.sig() == want) || !r.passed())
				ok = false, bad += " " + name + " ambient=" + to_string(e.ambient_form.sig());
		}
	}
	emit(2, ok, "signatures: q|J0, invariant forms, B_theta, Killing",
	     "J0 " + to_string(j0) + ", " + std::to_string(names.size()) + " algebras" + (bad.empty() ? "" : ";" + bad));
}

void criterion_3()
{
	bool ok = true;
	std::string bad;
	for (std::size_t k = 2; k <= 4; ++k)
	{
		RootDecomposition const &su = built("su(1," + std::to_string(k) + ")").rd;
		RootDecomposition const &sp = built("sp(1," + std::to_string(k) + ")").rd;
		if (su.g_minus_a.dim() != 2 * (k - 1) || su.g_minus_2a.dim() != 1 || su.m1.dim() != 1)
			ok = false, bad += " su k=" + std::to_string(k);
		if (sp.g_minus_a.dim() != 4 * (k - 1) || sp.g_minus_2a.dim() != 3 || sp.m1.dim() != 3)
			ok = false, bad += " sp k=" + std::to_string(k);
	}
	RootDecomposition const &f4 = built("f4").rd;
	if (f4.g_minus_a.dim() != 8 || f4.g_minus_2a.dim() != 7 || f4.m.dim() != 21)
		ok = false, bad += " f4";
	emit(3, ok, "restricted root space table",
	     "f4 (" + std::to_string(f4.g_minus_a.dim()) + "," + std::to_string(f4.g_minus_2a.dim()) + "), m " +
	         std::to_string(f4.m.dim()) + bad);
}

void criterion_4()
{
	bool ok = true;
	std::size_t runs = 0, trials = 0;
	std::string bad;
	std::vector<std::string> names{"so(1,2)", "so(1,3)", "so(1,4)", "f4"};
	for (auto const &f : {"su", "sp"})
		for (auto const &n : ks(f))
			names.push_back(n);
	for (auto const &name : names)
	{
		Built const &b = built(name);
		std::vector<Report> reports{verify_transversality(b.g, b.rd, 100, 0), bracket_identities(b.g, b.rd)};
		if (b.g.spec.family == Family::su || b.g.spec.family == Family::sp)
			reports.push_back(verify_m1_identity(b.g, b.rd, 100, 0));
		for (auto const &r : reports)
		{
			++runs;
			trials += r.trials;
			if (!r.passed())
				ok = false, bad += " " + name + ":" + r.lemma_id;
		}
	}
	emit(4, ok, "identity suites at seed 0, 100 trials, zero failures",
	     std::to_string(runs) + " suites, " + std::to_string(trials) + " trials" + bad);
}

void criterion_5()
{
	bool ok = true;
	std::string detail;
	std::vector<std::string> names{"f4"};
	for (auto const &f : {"su", "sp"})
		for (auto const &n : ks(f))
			names.push_back(n);
	for (auto const &name : names)
	{
		Built const &b = built(name);
		Report const r = verify_abelian_bounds(b.g, b.rd, 0);
		if (!r.passed())
		{
			ok = false;
			detail += (detail.empty() ? "" : "; ") + failing_checks(r);
		}
	}
	emit(5, ok, "abelian subspaces of g_-a: witnesses and rank obstructions",
	     detail.empty() ? "all witnesses and obstructions exact" : detail);
}

void criterion_6()
{
	Built const &b = built("f4");
	Report const r = verify_standard_rep_facts(b.g, b.rd, 0);
	auto value = [&](std::string_view n) {
		auto const *c = r.find(n);
		return c ? c->value : std::string("?");
	};
	emit(6, r.passed(), "f4 spin facts",
	     "stab(g_a) " + value("stabilizer in m of generic X in g_a (g2)") + ", stab(g_2a) " +
	         value("stabilizer in m of generic X in g_2a (so(6))") + ", commutant J0 " + value("commutant on J0") +
	         (r.passed() ? "" : "; " + failing_checks(r)));
}

void criterion_7()
{
	std::vector<std::pair<std::string, std::size_t>> const cases{
	    {"so(1,4)", 3}, {"su(1,2)", 4}, {"su(1,3)", 6}, {"sp(1,2)", 10}, {"sp(1,3)", 14}};
	bool ok = true;
	std::string detail;
	for (auto const &[name, dim] : cases)
	{
		Built const &b = built(name);
		IsotropyReport const iso = null_isotropy(b.g, build_embedding(b.g), b.rd);
		bool const here = iso.checks.passed() && iso.orbit_dim == dim && iso.induced_form.nondegenerate() &&
		                  verify_orbit_dims(b.g, iso).passed();
		ok = ok && here;
		detail += (detail.empty() ? "" : ", ") + name + " " + std::to_string(iso.orbit_dim) + " " +
		          to_string(iso.induced_form.sig());
		if (!here)
			detail += " (" + failing_checks(iso.checks) + ")";
	}
	emit(7, ok, "null-line isotropy and orbit dimensions", detail);
}

void criterion_8()
{
	Report const r = hyperbolic_normal_form_batch({{1, 1}, {2, 3}, {3, 5}}, 20, 0);
	emit(8, r.passed() && r.trials == 60, "hyperbolic normal form diag(l, 0, -l)",
	     std::to_string(r.passes) + "/" + std::to_string(r.trials) + " instances");
}

void criterion_9()
{
	TwoDistributionResult const a = two_distributions(1, 2), b = two_distributions(2, 2);
	bool const ok = a.solution_dim == 0 && b.solution_dim == 0 && a.solution_dim_without_image > 0 &&
	                b.solution_dim_without_image > 0;
	emit(9, ok, "two distributions: only T = 0",
	     "(1,2) " + std::to_string(a.solution_dim) + " control " + std::to_string(a.solution_dim_without_image) +
	         ", (2,2) " + std::to_string(b.solution_dim) + " control " +
	         std::to_string(b.solution_dim_without_image));
}

std::string run_capture(std::string const &command, int &status)
{
	std::string out;
	FILE *pipe = popen(command.c_str(), "r");
	if (!pipe)
	{
		status = -1;
		return out;
	}
	std::array<char, 4096> buf;
	std::size_t n;
	while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
		out.append(buf.data(), n);
	status = pclose(pipe);
	return out;
}

void criterion_10(std::string const &cli)
{
	std::string const cmd = "'" + cli + "' verify --algebra 'sp(1,2)' --lemma all --seed 7 --format json";
	int s1 = 0, s2 = 0;
	std::string const a = run_capture(cmd, s1);
	std::string const b = run_capture(cmd + " --threads 1", s2);
	bool const ok = !a.empty() && a == b && s1 == s2 && a.find("\"schema\": 1") != std::string::npos;
	emit(10, ok, "byte-identical JSON for identical runs",
	     std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "DIFFERENT"));
}

} // namespace

int main(int argc, char **argv)
{
	if (argc < 2)
	{
		std::cerr << "usage: acceptance <path to rank1 cli>\n";
		return 2;
	}
	auto guarded = [](int id, auto f) {
		try
		{
			f();
		}
		catch (std::exception const &e)
		{
			emit(id, false, "raised an exception", e.what());
		}
	};
	guarded(1, criterion_1);
	guarded(2, criterion_2);
	guarded(3, criterion_3);
	guarded(4, criterion_4);
	guarded(5, criterion_5);
	guarded(6, criterion_6);
	guarded(7, criterion_7);
	guarded(8, criterion_8);
	guarded(9, criterion_9);
	guarded(10, [&] { criterion_10(argv[1]); });

	std::size_t passed = 0;
	for (auto const &l : lines)
		passed += l.ok;
	std::cout << passed << "/" << lines.size() << " criteria passed" << std::endl;
	return passed == lines.size() ? 0 : 1;
}
