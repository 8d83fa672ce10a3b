#pragma once

// JSON documents for reports, algebras and decompositions. Rationals are
// written as "n/d" strings; key order is fixed so output is reproducible.

#include "rank1/einstein.hpp"
#include "rank1/lie.hpp"
#include "rank1/report.hpp"

#include <json.hpp>

namespace rank1 {

using Json = nlohmann::ordered_json;

inline constexpr int json_schema_version = 1;

Json to_json(Scalar const &x);
Json to_json(std::span<Scalar const> v);
inline Json to_json(Vector const &v) { return to_json(std::span<Scalar const>(v)); }
Json to_json(MatrixQ const &m);
Json to_json(Subspace const &s); ///< list of basis rows
Json to_json(Signature const &s);
Json to_json(Report const &r);

/// Labels, sparse structure constants [i, j, k, c] and the defining matrices.
Json algebra_json(LieAlgebraQ const &g);
Json decomposition_json(RootDecomposition const &rd);
Json isotropy_json(IsotropyReport const &iso);

/// Top-level verification document.
Json verification_json(AlgebraSpec const &spec, std::uint64_t seed, std::size_t trials,
                       std::vector<Report> const &reports);

} // namespace rank1
