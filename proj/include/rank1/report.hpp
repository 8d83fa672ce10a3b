#pragma once

// Verification reports shared by the lemma catalog, the bracket-identity
// checks and the isotropy computations.

#include "rank1/exact_linear.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rank1 {

struct CheckResult
{
	std::string name;
	bool passed = false;
	std::string value;
	/// Informational checks are reported but do not affect Report::passed().
	bool informational = false;
};

struct Failure
{
	std::string check;
	std::vector<std::pair<std::string, Vector>> counterexample;
};

struct Report
{
	std::string lemma_id;
	std::string family;
	std::vector<std::pair<std::string, std::string>> parameters;
	std::size_t trials = 0; ///< randomized trials run
	std::size_t passes = 0; ///< trials with every identity exact
	std::vector<CheckResult> checks;
	std::vector<Failure> failures;

	bool passed() const;

	/// Appends a named check; a failing non-informational check also lands in
	/// `failures` (without witness coordinates).
	bool check(std::string name, bool ok, std::string value = {});
	void note(std::string name, bool ok, std::string value);
	void fail_with(std::string check, std::vector<std::pair<std::string, Vector>> witness);

	CheckResult const *find(std::string_view name) const;
};

} // namespace rank1
