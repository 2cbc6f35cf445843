#pragma once

// Command-line front end. Every command writes one JSON document carrying
// "schema" and a run manifest. Exit codes: 0 success, 1 a check failed,
// 2 usage error.

#include <iosfwd>

namespace dasep::cli {

inline constexpr const char* kSchema = "typed-asep/1";
inline constexpr const char* kVersion = "1.0.0";

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dasep::cli
