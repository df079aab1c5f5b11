// CLI subcommand implementations; each writes its artifacts under out_dir and
// returns the process exit code (0 ok, 2 precondition, 3 empty result,
// 4 numerical instability).
#pragma once

#include <string>

#include "reflectal/config.hpp"

namespace reflectal {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitEmptyResult = 3;
inline constexpr int kExitUnstable = 4;

int cmd_eigen(const RunConfig& config, const std::string& out_dir);
int cmd_manifold(const RunConfig& config, const std::string& out_dir);
int cmd_scan(const RunConfig& config, const std::string& out_dir, unsigned workers);
int cmd_propagate(const RunConfig& config, const std::string& out_dir);

}  // namespace reflectal
