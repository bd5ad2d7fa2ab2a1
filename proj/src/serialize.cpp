#include "codforge/serialize.hpp"

#include <cctype>
#include <json.hpp>

#include "codforge/errors.hpp"

namespace codforge {

using json = nlohmann::ordered_json;

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "latex") return Format::Latex;
  throw ArgumentError("unknown format '" + std::string(name) + "'");
}

std::string_view format_name(Format f) {
  switch (f) {
    case Format::Text:
      return "text";
    case Format::Json:
      return "json";
    case Format::Csv:
      return "csv";
    case Format::Latex:
      return "latex";
  }
  return "text";
}

std::string entry_text(const Entry& e) {
  if (e.is_zero()) return "0";
  std::string out = e.sign < 0 ? "-z" : "z";
  out += std::to_string(e.var);
  if (e.conj) out += '*';
  return out;
}

std::string entry_latex(const Entry& e) {
  if (e.is_zero()) return "0";
  std::string out = e.sign < 0 ? "-z_{" : "z_{";
  out += std::to_string(e.var) + "}";
  if (e.conj) out += "^{*}";
  return out;
}

namespace {

json to_json(const CODMatrix& m) {
  json cells = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const Entry& e : m.row(r)) {
      if (e.is_zero())
        row.push_back(nullptr);
      else
        row.push_back({{"v", e.var}, {"s", static_cast<int>(e.sign)}, {"c", e.conj}});
    }
    cells.push_back(std::move(row));
  }
  json out = {{"p", m.rows()}, {"n", m.cols()}, {"k", m.vars()}, {"cells", std::move(cells)}};
  if (!m.names().empty()) {
    json names = json::object();
    for (const auto& [id, name] : m.names()) names[std::to_string(id)] = name.to_string();
    out["names"] = std::move(names);
  }
  return out;
}

std::string rows_joined(const CODMatrix& m, std::string_view sep, std::string_view row_end,
                        std::string (*cell)(const Entry&)) {
  std::string out;
  for (int r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    for (int c = 0; c < m.cols(); ++c) {
      if (c > 0) out += sep;
      out += cell(row[static_cast<std::size_t>(c)]);
    }
    out += r + 1 < m.rows() ? row_end : std::string_view("\n");
  }
  return out;
}

std::string csv_cell(const Entry& e) { return "\"" + entry_text(e) + "\""; }

// Line and column (1-based) of a byte offset.
std::pair<int, int> locate(std::string_view text, std::size_t offset) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

bool ids_are_contiguous(const std::vector<Entry>& cells) {
  int max_id = 0;
  for (const Entry& e : cells) max_id = std::max<int>(max_id, e.var);
  std::vector<bool> seen(static_cast<std::size_t>(max_id) + 1, false);
  for (const Entry& e : cells) seen[static_cast<std::size_t>(e.var)] = true;
  for (int v = 1; v <= max_id; ++v)
    if (!seen[static_cast<std::size_t>(v)]) return false;
  return true;
}

}  // namespace

std::string serialize(const CODMatrix& m, Format f) {
  switch (f) {
    case Format::Text:
      return rows_joined(m, " ", "\n", &entry_text);
    case Format::Json:
      return to_json(m).dump() + "\n";
    case Format::Csv:
      return rows_joined(m, ",", "\n", &csv_cell);
    case Format::Latex:
      return "\\begin{pmatrix}\n" + rows_joined(m, " & ", " \\\\\n", &entry_latex) + "\\end{pmatrix}\n";
  }
  return {};
}

CODMatrix parse_text(std::string_view text) {
  std::vector<Entry> cells;
  int rows = 0;
  int cols = -1;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;

    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    };
    skip_ws();
    if (i == line.size() || line[i] == '#') continue;

    int count = 0;
    while (i < line.size()) {
      const int col = static_cast<int>(i) + 1;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      const std::string_view tok = line.substr(i, j - i);
      if (tok == "0") {
        cells.push_back(Entry::zero());
      } else {
        std::size_t t = 0;
        int sign = 1;
        if (t < tok.size() && tok[t] == '-') {
          sign = -1;
          ++t;
        }
        if (t >= tok.size() || tok[t] != 'z')
          throw ParseError(line_no, col, "expected '0' or [-]z<id>[*], got '" + std::string(tok) + "'");
        ++t;
        long id = 0;
        const std::size_t digits_start = t;
        while (t < tok.size() && std::isdigit(static_cast<unsigned char>(tok[t]))) {
          id = id * 10 + (tok[t] - '0');
          if (id > 1'000'000'000) throw ParseError(line_no, col, "variable id too large");
          ++t;
        }
        if (t == digits_start || id == 0)
          throw ParseError(line_no, col + static_cast<int>(digits_start), "expected a positive variable id");
        bool conj = false;
        if (t < tok.size() && tok[t] == '*') {
          conj = true;
          ++t;
        }
        if (t != tok.size())
          throw ParseError(line_no, col + static_cast<int>(t), "unexpected character in entry");
        cells.push_back(Entry::make(static_cast<int>(id), sign, conj));
      }
      ++count;
      i = j;
      skip_ws();
    }
    if (cols == -1) cols = count;
    if (count != cols)
      throw ParseError(line_no, 1, "row has " + std::to_string(count) + " entries, expected " +
                                       std::to_string(cols));
    ++rows;
  }
  if (rows == 0) throw ParseError(line_no, 1, "empty matrix");
  if (cols > F2Vec::kMaxLen) throw ParseError(1, 1, "at most 64 columns are supported");
  if (ids_are_contiguous(cells)) return CODMatrix(rows, cols, std::move(cells));
  return CODMatrix::relabelled(rows, cols, std::move(cells));
}

CODMatrix parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(line, col, e.what());
  }
  auto schema_error = [](const std::string& what) { return ParseError(1, 1, what); };
  try {
    if (!doc.is_object()) throw schema_error("JSON matrix must be an object");
    const auto& cells_json = doc.at("cells");
    if (!cells_json.is_array() || cells_json.empty()) throw schema_error("'cells' must be a nonempty array");
    const int rows = static_cast<int>(cells_json.size());
    const int cols = static_cast<int>(cells_json.front().size());
    std::vector<Entry> cells;
    for (const auto& row : cells_json) {
      if (!row.is_array() || static_cast<int>(row.size()) != cols)
        throw schema_error("every row of 'cells' must be an array of equal length");
      for (const auto& cell : row) {
        if (cell.is_null()) {
          cells.push_back(Entry::zero());
          continue;
        }
        const int v = cell.at("v").get<int>();
        const int s = cell.at("s").get<int>();
        if (v < 1) throw schema_error("variable ids must be positive");
        if (s != 1 && s != -1) throw schema_error("sign must be 1 or -1");
        cells.push_back(Entry::make(v, s, cell.at("c").get<bool>()));
      }
    }
    CODMatrix::NameTable names;
    if (doc.contains("names")) {
      for (const auto& [key, value] : doc.at("names").items())
        names.emplace(std::stoi(key), F2Vec::parse(value.get<std::string>()));
    }
    CODMatrix m(rows, cols, std::move(cells), std::move(names));
    if (doc.contains("p") && doc.at("p").get<int>() != rows) throw schema_error("'p' does not match cells");
    if (doc.contains("n") && doc.at("n").get<int>() != cols) throw schema_error("'n' does not match cells");
    if (doc.contains("k") && doc.at("k").get<int>() != m.vars()) throw schema_error("'k' does not match cells");
    return m;
  } catch (const json::exception& e) {
    throw schema_error(e.what());
  } catch (const ArgumentError& e) {
    throw schema_error(e.what());
  } catch (const std::invalid_argument& e) {
    throw schema_error(e.what());
  }
}

CODMatrix parse_matrix(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_json(text) : parse_text(text);
  }
  throw ParseError(1, 1, "empty input");
}

}  // namespace codforge
