#include "rank1/report.hpp"

#include <algorithm>

namespace rank1 {

bool Report::passed() const
{
	if (!failures.empty() || passes != trials)
		return false;
	return std::all_of(checks.begin(), checks.end(),
	                   [](CheckResult const &c) { return c.passed || c.informational; });
}

bool Report::check(std::string name, bool ok, std::string value)
{
	if (!ok)
		failures.push_back({name, {}});
	checks.push_back({std::move(name), ok, std::move(value), false});
	return ok;
}

void Report::note(std::string name, bool ok, std::string value)
{
	checks.push_back({std::move(name), ok, std::move(value), true});
}

void Report::fail_with(std::string check, std::vector<std::pair<std::string, Vector>> witness)
{
	failures.push_back({std::move(check), std::move(witness)});
}

CheckResult const *Report::find(std::string_view name) const
{
	for (auto const &c : checks)
		if (c.name == name)
			return &c;
	return nullptr;
}

} // namespace rank1
