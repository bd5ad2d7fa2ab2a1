#pragma once

#include <string>
#include <string_view>

#include "codforge/cod_matrix.hpp"

namespace codforge {

enum class Format { Text, Json, Csv, Latex };

/// "text" | "json" | "csv" | "latex"; throws ArgumentError otherwise.
Format parse_format(std::string_view name);
std::string_view format_name(Format f);

/// "0", "z3", "-z2*"
std::string entry_text(const Entry& e);
/// "0", "z_{3}", "-z_{2}^{*}"
std::string entry_latex(const Entry& e);

/// Text: one row per line, entries separated by single spaces.
/// JSON: {"p","n","k","cells":[[{"v","s","c"} | null]],"names":{id:"(b1,...)"}}
/// CSV: one row per line, each cell its quoted text entry.
/// LaTeX: a pmatrix environment.
/// Every format ends with a newline.
std::string serialize(const CODMatrix& m, Format f);

/// Whitespace-separated entries, one row per line. Blank lines and lines
/// starting with '#' are skipped. Variable ids are kept as written when they
/// are exactly 1..k; otherwise they are relabelled in ascending order.
CODMatrix parse_text(std::string_view text);
CODMatrix parse_json(std::string_view text);
/// JSON when the first non-blank character is '{', text otherwise.
CODMatrix parse_matrix(std::string_view text);

}  // namespace codforge
