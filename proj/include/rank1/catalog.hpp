#pragma once

// The verification catalog: lemma IDs, applicability per family, and a
// runner that fans lemmas out to worker threads and returns reports in
// catalog order.

#include "rank1/lie.hpp"
#include "rank1/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rank1 {

/// In fixed output order.
std::vector<std::string> const &lemma_ids();
bool is_lemma_id(std::string_view id);
std::string lemma_title(std::string_view id);
bool lemma_applies(std::string_view id, Family family);

struct RunOptions
{
	std::uint64_t seed = 0;
	std::size_t trials = 100;
	std::size_t threads = 0; ///< 0: RANK1_THREADS or hardware concurrency
};

/// Worker count: RANK1_THREADS if set and positive, else hardware concurrency.
std::size_t default_thread_count();

/// Runs the given lemmas ("all" expands to every applicable one). Throws
/// UnsupportedParameters for an unknown or inapplicable explicit lemma.
std::vector<Report> run_lemmas(AlgebraSpec const &spec, std::vector<std::string> const &ids,
                               RunOptions const &options);

/// Same, on an algebra that is already built.
std::vector<Report> run_lemmas(LieAlgebraQ const &g, std::vector<std::string> const &ids,
                               RunOptions const &options);

/// Parameter sets used by the catalog for the algebra-independent lemmas.
Report hyperbolic_normal_form_batch(std::vector<std::pair<std::size_t, std::size_t>> const &shapes,
                                    std::size_t instances, std::uint64_t seed);
Report two_distributions_batch();

} // namespace rank1
