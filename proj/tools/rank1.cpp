#include "rank1/catalog.hpp"
#include "rank1/einstein.hpp"
#include "rank1/json_export.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace rank1;

namespace {

constexpr int exit_usage = 2;

struct Options
{
	std::string algebra;
	std::vector<std::string> lemmas{"all"};
	std::uint64_t seed = 0;
	std::size_t trials = 100;
	std::size_t threads = 0;
	std::string format = "text";
	std::string what = "algebra";
	bool verbose = false;
};

int construct(Options const &o)
{
	AlgebraSpec const spec = parse_algebra_spec(o.algebra);
	LieAlgebraQ const g = build_algebra(spec);
	Signature const ks = g.killing.sig();
	bool const jacobi = satisfies_jacobi(g.structure);
	bool const involution = is_involutive_automorphism(g.structure, g.theta);
	bool const definite = g.killing_theta.positive_definite();
	bool const cartan = ks == Signature{g.p_part.dim(), g.k_part.dim(), 0};
	bool const ok = jacobi && involution && definite && cartan && g.dim == expected_dimension(spec);

	if (o.format == "json")
	{
		Json doc{{"schema", json_schema_version},
		         {"algebra", spec.name()},
		         {"dim", g.dim},
		         {"killing_signature", to_json(ks)},
		         {"k_dim", g.k_part.dim()},
		         {"p_dim", g.p_part.dim()},
		         {"b_theta_positive_definite", definite},
		         {"jacobi", jacobi},
		         {"theta_automorphism", involution},
		         {"passed", ok}};
		std::cout << doc.dump(2) << '\n';
	}
	else
	{
		std::cout << "algebra            " << spec.name() << '\n'
		          << "dim                " << g.dim << '\n'
		          << "Killing signature  " << to_string(ks) << '\n'
		          << "dim k, dim p       " << g.k_part.dim() << ", " << g.p_part.dim() << '\n'
		          << "B_theta            " << (definite ? "positive definite" : "NOT positive definite") << '\n'
		          << "Jacobi             " << (jacobi ? "exact" : "FAILS") << '\n'
		          << "theta              " << (involution ? "involutive automorphism" : "NOT an automorphism")
		          << '\n';
	}
	return ok ? 0 : 1;
}

void print_vector(std::ostream &os, Vector const &v)
{
	os << '[';
	for (std::size_t i = 0; i < v.size(); ++i)
		os << (i ? " " : "") << to_string(v[i]);
	os << ']';
}

int verify(Options const &o)
{
	AlgebraSpec const spec = parse_algebra_spec(o.algebra);
	RunOptions const run{o.seed, o.trials, o.threads};
	std::vector<Report> const reports = run_lemmas(spec, o.lemmas, run);
	bool all = true;
	for (auto const &r : reports)
		all = all && r.passed();

	if (o.format == "json")
	{
		std::cout << verification_json(spec, o.seed, o.trials, reports).dump(2) << '\n';
		return all ? 0 : 1;
	}

	std::cout << spec.name() << "  seed " << o.seed << "  trials " << o.trials << "\n\n";
	for (auto const &r : reports)
	{
		std::cout << (r.passed() ? "PASS  " : "FAIL  ");
		std::cout.width(24);
		std::cout << std::left << r.lemma_id << lemma_title(r.lemma_id);
		if (r.trials)
			std::cout << "  (" << r.passes << "/" << r.trials << " trials)";
		std::cout << '\n';
		for (auto const &c : r.checks)
		{
			if (!o.verbose && c.passed && !c.informational)
				continue;
			std::cout << "      " << (c.informational ? "note " : c.passed ? "ok   " : "FAIL ") << c.name;
			if (!c.value.empty())
				std::cout << ": " << c.value;
			std::cout << '\n';
		}
		for (auto const &f : r.failures)
		{
			if (f.counterexample.empty())
				continue;
			std::cout << "      counterexample for " << f.check << '\n';
			for (auto const &[name, v] : f.counterexample)
			{
				std::cout << "        " << name << " = ";
				print_vector(std::cout, v);
				std::cout << '\n';
			}
		}
	}
	std::cout << '\n' << (all ? "all checks passed" : "verification FAILED") << '\n';
	return all ? 0 : 1;
}

int export_json(Options const &o)
{
	AlgebraSpec const spec = parse_algebra_spec(o.algebra);
	LieAlgebraQ const g = build_algebra(spec);
	Json doc{{"schema", json_schema_version}, {"algebra", spec.name()}};
	if (o.what == "algebra")
		doc["algebra_data"] = algebra_json(g);
	else
	{
		RootDecomposition const rd = root_decomposition(g);
		if (o.what == "decomposition")
			doc["decomposition"] = decomposition_json(rd);
		else
			doc["isotropy"] = isotropy_json(null_isotropy(g, build_embedding(g), rd));
	}
	std::cout << doc.dump(2) << '\n';
	return 0;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Exact verification of rank-one real simple Lie algebra facts"};
	app.require_subcommand(1);
	Options o;

	auto *construct_cmd = app.add_subcommand("construct", "build an algebra and check its invariants");
	construct_cmd->add_option("--algebra", o.algebra, "so(1,k), su(1,k), sp(1,k) or f4")->required();
	construct_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

	auto *verify_cmd = app.add_subcommand("verify", "run lemma checks");
	verify_cmd->add_option("--algebra", o.algebra, "so(1,k), su(1,k), sp(1,k) or f4")->required();
	verify_cmd->add_option("--lemma", o.lemmas, "lemma id or 'all' (repeatable)")->take_all();
	verify_cmd->add_option("--seed", o.seed);
	verify_cmd->add_option("--trials", o.trials);
	verify_cmd->add_option("--threads", o.threads, "0: RANK1_THREADS or hardware concurrency");
	verify_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
	verify_cmd->add_flag("-v,--verbose", o.verbose, "list passing checks too");

	auto *export_cmd = app.add_subcommand("export", "dump exact data as JSON");
	export_cmd->add_option("--algebra", o.algebra)->required();
	export_cmd->add_option("--what", o.what)->check(CLI::IsMember({"algebra", "decomposition", "isotropy"}));

	auto *list_cmd = app.add_subcommand("lemmas", "list lemma ids");

	try
	{
		app.parse(argc, argv);
	}
	catch (CLI::ParseError const &e)
	{
		int const code = app.exit(e);
		return code == 0 ? 0 : exit_usage;
	}

	try
	{
		if (*construct_cmd)
			return construct(o);
		if (*verify_cmd)
			return verify(o);
		if (*export_cmd)
			return export_json(o);
		if (*list_cmd)
		{
			for (auto const &id : lemma_ids())
				std::cout << id << "  " << lemma_title(id) << '\n';
			return 0;
		}
	}
	catch (UnsupportedParameters const &e)
	{
		std::cerr << "error: " << e.what() << '\n';
		return exit_usage;
	}
	catch (Error const &e)
	{
		std::cerr << "error: " << e.what() << '\n';
		return 1;
	}
	return exit_usage;
}
