#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace carbon::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Data directory layout.
inline constexpr const char* kGenesisFile = "chain.genesis";
inline constexpr const char* kLogFile = "ledger.txlog";
inline constexpr const char* kBlocksFile = "chain.blocks";
inline constexpr const char* kKeystoreFile = "keystore.keys";

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace carbon::cli
