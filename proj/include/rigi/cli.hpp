#pragma once

#include <string>
#include <vector>

namespace rigi {

inline constexpr const char* kToolVersion = "0.1.0";

// Runs one rigiscope command. Exit codes: 0 success, 1 I/O or parse failure,
// 2 parameter contract violation, 3 internal assertion.
int cli_main(const std::vector<std::string>& args);

}  // namespace rigi
