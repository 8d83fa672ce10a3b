#include "rank1/json_export.hpp"

namespace rank1 {

Json to_json(Scalar const &x) { return to_string(x); }

Json to_json(std::span<Scalar const> v)
{
	Json out = Json::array();
	for (auto const &x : v)
		out.push_back(to_json(x));
	return out;
}

Json to_json(MatrixQ const &m)
{
	Json out = Json::array();
	for (std::size_t i = 0; i < m.rows(); ++i)
		out.push_back(to_json(m.row(i)));
	return out;
}

Json to_json(Subspace const &s) { return to_json(s.basis()); }

Json to_json(Signature const &s) { return Json::array({s.plus, s.minus, s.zero}); }

Json to_json(Report const &r)
{
	Json params = Json::object();
	for (auto const &[k, v] : r.parameters)
		params[k] = v;
	Json checks = Json::array();
	for (auto const &c : r.checks)
	{
		Json j{{"name", c.name}, {"passed", c.passed}, {"value", c.value}};
		if (c.informational)
			j["informational"] = true;
		checks.push_back(std::move(j));
	}
	Json failures = Json::array();
	for (auto const &f : r.failures)
	{
		Json witness = Json::object();
		for (auto const &[name, v] : f.counterexample)
			witness[name] = to_json(v);
		failures.push_back({{"check", f.check}, {"counterexample", std::move(witness)}});
	}
	return Json{{"lemma_id", r.lemma_id},
	            {"family", r.family},
	            {"parameters", std::move(params)},
	            {"trials", r.trials},
	            {"passes", r.passes},
	            {"passed", r.passed()},
	            {"checks", std::move(checks)},
	            {"failures", std::move(failures)}};
}

Json algebra_json(LieAlgebraQ const &g)
{
	Json constants = Json::array();
	for (std::size_t i = 0; i < g.dim; ++i)
		for (std::size_t j = i + 1; j < g.dim; ++j)
			for (auto const &[k, c] : g.structure.bracket(i, j))
				constants.push_back(Json::array({i, j, k, to_string(c)}));
	Json defining = Json::array();
	for (auto const &d : g.defining)
		defining.push_back(to_json(d));
	Signature const ks = g.killing.sig();
	return Json{{"algebra", g.spec.name()},
	            {"dim", g.dim},
	            {"labels", g.labels},
	            {"structure_constants", std::move(constants)},
	            {"defining_dim", g.defining_n},
	            {"defining", std::move(defining)},
	            {"killing_signature", to_json(ks)},
	            {"killing", to_json(g.killing.gram())},
	            {"theta", to_json(g.theta)}};
}

Json decomposition_json(RootDecomposition const &rd)
{
	return Json{{"H", to_json(rd.H)},
	            {"has_double_root", rd.has_double_root},
	            {"a", to_json(rd.a)},
	            {"m", to_json(rd.m)},
	            {"m1", to_json(rd.m1)},
	            {"m2", to_json(rd.m2)},
	            {"g_2a", to_json(rd.g_plus_2a)},
	            {"g_a", to_json(rd.g_plus_a)},
	            {"g_-a", to_json(rd.g_minus_a)},
	            {"g_-2a", to_json(rd.g_minus_2a)}};
}

Json isotropy_json(IsotropyReport const &iso)
{
	Json blocks = Json::array();
	for (auto const &b : iso.blocks)
		blocks.push_back({{"block", b.block}, {"image_dim", b.image_dim}, {"signature", to_json(b.signature)}});
	return Json{{"null_vector", to_json(iso.null_vector)},
	            {"eigenvalue", to_json(iso.eigenvalue)},
	            {"stabilizer", to_json(iso.stabilizer)},
	            {"m_cap_stabilizer", to_json(iso.m_cap_stabilizer)},
	            {"sign", iso.sign},
	            {"induced_form", to_json(iso.induced_form.gram())},
	            {"induced_signature", to_json(iso.induced_form.sig())},
	            {"blocks", std::move(blocks)},
	            {"kernel_dim", iso.kernel_dim},
	            {"orbit_dim", iso.orbit_dim}};
}

Json verification_json(AlgebraSpec const &spec, std::uint64_t seed, std::size_t trials,
                       std::vector<Report> const &reports)
{
	Json list = Json::array();
	bool all = true;
	for (auto const &r : reports)
	{
		all = all && r.passed();
		list.push_back(to_json(r));
	}
	return Json{{"schema", json_schema_version}, {"algebra", spec.name()}, {"seed", seed},
	            {"trials", trials},              {"passed", all},           {"reports", std::move(list)}};
}

} // namespace rank1
