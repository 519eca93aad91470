#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vinberg::cli {

// Exit codes; one per verdict.
inline constexpr int kExitFiniteVolume = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitFacetBoundExceeded = 10;
inline constexpr int kExitBudgetExhausted = 11;

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_run(int argc, char** argv);

} // namespace vinberg::cli
