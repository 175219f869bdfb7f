#pragma once

#include <ostream>

namespace blockselect::cli {

// Exit codes: 0 success, 1 input error, 2 internal inconsistency.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kInvariantError = 2;

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace blockselect::cli
