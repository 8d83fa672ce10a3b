#include "rank1/catalog.hpp"

#include "rank1/einstein.hpp"
#include "rank1/lemmas.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <optional>
#include <thread>

namespace rank1 {

namespace {

struct Entry
{
	std::string id;
	std::string title;
	std::vector<Family> families;
};

std::vector<Entry> const &entries()
{
	static std::vector<Entry> const table{
	    {"derivation-dim", "derivations of the Albert algebra", {Family::f4}},
	    {"signature-J0", "trace form signature on J0", {Family::f4}},
	    {"root-table", "restricted root space table", {Family::so, Family::su, Family::sp, Family::f4}},
	    {"bracket-identities", "bracket identities between root spaces",
	     {Family::so, Family::su, Family::sp, Family::f4}},
	    {"transversality", "transversality formula", {Family::so, Family::su, Family::sp, Family::f4}},
	    {"m1-identity", "m1 bracket formula", {Family::su, Family::sp}},
	    {"abelian-bounds", "abelian subspaces of g_-a (Lagrangian bound)", {Family::su, Family::sp, Family::f4}},
	    {"spin-facts", "standard and spin representation facts", {Family::so, Family::f4}},
	    {"embedding-signature", "conformal embedding and its invariant form",
	     {Family::so, Family::su, Family::sp, Family::f4}},
	    {"null-isotropy", "null-line isotropy (optimal signature)", {Family::so, Family::su, Family::sp, Family::f4}},
	    {"orbit-dims", "orbit dimension table", {Family::so, Family::su, Family::sp, Family::f4}},
	    {"hyperbolic-normal-form", "hyperbolic isometric element normal form",
	     {Family::so, Family::su, Family::sp, Family::f4}},
	    {"two-distributions", "two distributions lemma", {Family::so, Family::su, Family::sp, Family::f4}},
	};
	return table;
}

Entry const *find_entry(std::string_view id)
{
	for (auto const &e : entries())
		if (e.id == id)
			return &e;
	return nullptr;
}

Report error_report(std::string const &id, std::string const &family, std::string const &what)
{
	Report r;
	r.lemma_id = id;
	r.family = family;
	r.check("completed without error", false, what);
	return r;
}

void merge_into(Report &batch, Report const &part, std::string const &prefix)
{
	for (auto c : part.checks)
	{
		c.name = prefix + c.name;
		batch.checks.push_back(std::move(c));
	}
	for (auto f : part.failures)
	{
		f.check = prefix + f.check;
		batch.failures.push_back(std::move(f));
	}
}

} // namespace

std::vector<std::string> const &lemma_ids()
{
	static std::vector<std::string> const ids = [] {
		std::vector<std::string> v;
		for (auto const &e : entries())
			v.push_back(e.id);
		return v;
	}();
	return ids;
}

bool is_lemma_id(std::string_view id) { return find_entry(id) != nullptr; }

std::string lemma_title(std::string_view id)
{
	auto const *e = find_entry(id);
	return e ? e->title : std::string(id);
}

bool lemma_applies(std::string_view id, Family family)
{
	auto const *e = find_entry(id);
	return e && std::find(e->families.begin(), e->families.end(), family) != e->families.end();
}

std::size_t default_thread_count()
{
	if (char const *env = std::getenv("RANK1_THREADS"))
	{
		long n = std::strtol(env, nullptr, 10);
		if (n > 0)
			return static_cast<std::size_t>(n);
	}
	return std::max(1u, std::thread::hardware_concurrency());
}

Report hyperbolic_normal_form_batch(std::vector<std::pair<std::size_t, std::size_t>> const &shapes,
                                    std::size_t instances, std::uint64_t seed)
{
	Report batch;
	batch.lemma_id = "hyperbolic-normal-form";
	batch.family = "so(p,q)";
	std::string list;
	for (auto [p, q] : shapes)
		list += (list.empty() ? "" : " ") + std::string("(") + std::to_string(p) + "," + std::to_string(q) + ")";
	batch.parameters = {{"instances", std::to_string(instances)}, {"seed", std::to_string(seed)}, {"shapes", list}};

	Rng rng(seed);
	for (auto [p, q] : shapes)
		for (std::size_t i = 0; i < instances; ++i)
		{
			long lambda = 0;
			while (lambda == 0)
				lambda = rng.uniform(-9, 9);
			std::uint64_t const instance_seed = rng.next();
			++batch.trials;
			std::string const prefix = "(" + std::to_string(p) + "," + std::to_string(q) + ") #" +
			                           std::to_string(i) + ": ";
			try
			{
				Report r = verify_hyperbolic_normal_form(p, q, Scalar(lambda), instance_seed);
				if (r.passed())
					++batch.passes;
				else
					merge_into(batch, r, prefix);
			}
			catch (Error const &e)
			{
				batch.failures.push_back({prefix + e.what(), {}});
			}
		}
	batch.check("every instance recovered", batch.passes == batch.trials,
	            std::to_string(batch.passes) + "/" + std::to_string(batch.trials));
	return batch;
}

Report two_distributions_batch()
{
	Report batch;
	batch.lemma_id = "two-distributions";
	batch.family = "R^{p,q}";
	struct Case
	{
		std::size_t p, q;
		std::optional<std::size_t> iso;
	};
	for (Case c : {Case{1, 2, {}}, Case{2, 2, {}}, Case{1, 3, {}}, Case{2, 3, {}}, Case{2, 2, 1}})
	{
		Report r = verify_two_distributions(c.p, c.q, c.iso);
		std::string prefix = "(" + std::to_string(c.p) + "," + std::to_string(c.q) + ")";
		if (c.iso)
			prefix += " isotropic dim " + std::to_string(*c.iso);
		merge_into(batch, r, prefix + ": ");
	}
	return batch;
}

std::vector<Report> run_lemmas(AlgebraSpec const &spec, std::vector<std::string> const &ids,
                               RunOptions const &options)
{
	return run_lemmas(build_algebra(spec), ids, options);
}

std::vector<Report> run_lemmas(LieAlgebraQ const &g, std::vector<std::string> const &requested,
                               RunOptions const &options)
{
	std::vector<std::string> ids;
	for (auto const &id : requested)
	{
		if (id == "all")
		{
			for (auto const &e : entries())
				if (lemma_applies(e.id, g.spec.family))
					ids.push_back(e.id);
			continue;
		}
		if (!is_lemma_id(id))
			throw UnsupportedParameters("unknown lemma '" + id + "'");
		if (!lemma_applies(id, g.spec.family))
			throw UnsupportedParameters("lemma '" + id + "' does not apply to " + g.spec.name());
		ids.push_back(id);
	}
	// catalog order, no duplicates
	std::vector<std::string> ordered;
	for (auto const &id : lemma_ids())
		if (std::find(ids.begin(), ids.end(), id) != ids.end())
			ordered.push_back(id);

	std::string const family = g.spec.name();
	auto const needs = [&](std::initializer_list<char const *> which) {
		for (auto const *w : which)
			if (std::find(ordered.begin(), ordered.end(), w) != ordered.end())
				return true;
		return false;
	};

	// shared read-only state, built before the fan-out
	std::optional<RootDecomposition> rd;
	std::string rd_error;
	if (needs({"root-table", "bracket-identities", "transversality", "m1-identity", "abelian-bounds", "spin-facts",
	           "null-isotropy", "orbit-dims"}))
	{
		try
		{
			rd = root_decomposition(g);
		}
		catch (Error const &e)
		{
			rd_error = e.what();
		}
	}
	std::optional<ConformalEmbedding> emb;
	std::optional<IsotropyReport> iso;
	std::string iso_error;
	if (needs({"embedding-signature", "null-isotropy", "orbit-dims"}))
	{
		emb = build_embedding(g);
		if (rd && needs({"null-isotropy", "orbit-dims"}))
		{
			try
			{
				iso = null_isotropy(g, *emb, *rd);
			}
			catch (Error const &e)
			{
				iso_error = e.what();
			}
		}
	}

	auto run_one = [&](std::string const &id) -> Report {
		if (id == "derivation-dim")
			return verify_derivation_dim(g);
		if (id == "signature-J0")
			return verify_signature_J0();
		if (id == "embedding-signature")
			return verify_embedding_signature(g, *emb);
		if (id == "hyperbolic-normal-form")
			return hyperbolic_normal_form_batch({{1, 1}, {2, 3}, {3, 5}}, options.trials, options.seed);
		if (id == "two-distributions")
			return two_distributions_batch();
		if (!rd)
			return error_report(id, family, rd_error);
		if (id == "root-table")
			return verify_root_table(g, *rd);
		if (id == "bracket-identities")
			return bracket_identities(g, *rd);
		if (id == "transversality")
			return verify_transversality(g, *rd, options.trials, options.seed);
		if (id == "m1-identity")
			return verify_m1_identity(g, *rd, options.trials, options.seed);
		if (id == "abelian-bounds")
			return verify_abelian_bounds(g, *rd, options.seed);
		if (id == "spin-facts")
			return verify_standard_rep_facts(g, *rd, options.seed);
		if (!iso)
			return error_report(id, family, iso_error);
		if (id == "null-isotropy")
			return verify_null_isotropy(g, *iso);
		return verify_orbit_dims(g, *iso);
	};

	std::vector<Report> out(ordered.size());
	std::atomic<std::size_t> next{0};
	auto worker = [&] {
		for (std::size_t i; (i = next.fetch_add(1)) < ordered.size();)
		{
			try
			{
				out[i] = run_one(ordered[i]);
			}
			catch (Error const &e)
			{
				out[i] = error_report(ordered[i], family, e.what());
			}
		}
	};
	std::size_t const threads = std::min(options.threads ? options.threads : default_thread_count(),
	                                      std::max<std::size_t>(ordered.size(), 1));
	std::vector<std::thread> pool;
	for (std::size_t t = 1; t < threads; ++t)
		pool.emplace_back(worker);
	worker();
	for (auto &t : pool)
		t.join();
	return out;
}

} // namespace rank1
