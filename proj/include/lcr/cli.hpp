#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lcr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. Subcommands: formula,
/// analyze, construct, lemma, search, svg.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lcr::cli
