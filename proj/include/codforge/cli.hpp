#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace codforge::cli {

/// Exit statuses of run().
inline constexpr int kOk = 0;
inline constexpr int kFalse = 1;  // verify: not a COD, equivalent: no, feasible: none
inline constexpr int kUsage = 2;  // bad arguments, unreadable or malformed input

/// codforge <verb> [--family G|Gw|H|Hm] [--n INT] [--w INT] [--p INT] [--k INT]
///          [--format text|json|csv|latex] [--seed INT] [FILE...]
///
/// args excludes the program name. Matrices are read from FILE, or from `in`
/// when no file (or "-") is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace codforge::cli
