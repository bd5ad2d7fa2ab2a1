#include "codforge/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <random>
#include <sstream>

#include "codforge/errors.hpp"
#include "codforge/generators.hpp"
#include "codforge/params.hpp"
#include "codforge/serialize.hpp"
#include "codforge/structure.hpp"
#include "codforge/verify.hpp"

namespace codforge::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kScrambleOps = 20;

const char* const kVerbs[] = {"generate", "verify",     "analyze",  "decompose",
                              "canonicalize", "equivalent", "feasible", "tradeoff"};

struct Options {
  std::string verb;
  std::string family;
  std::optional<int> n;
  std::optional<int> w;
  std::optional<std::int64_t> p;
  std::optional<std::int64_t> k;
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  std::vector<std::string> files;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename T>
T require(const std::optional<T>& v, const char* flag, const std::string& verb) {
  if (!v) throw UsageError(verb + " needs " + flag);
  return *v;
}

Format format_for(const Options& o, std::initializer_list<Format> allowed) {
  const Format f = parse_format(o.format);
  for (Format a : allowed)
    if (a == f) return f;
  throw UsageError(o.verb + " does not support --format " + o.format);
}

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open " + path);
  buf << file.rdbuf();
  return buf.str();
}

CODMatrix read_matrix(const std::string& path, std::istream& in) {
  const std::string text = read_source(path, in);
  try {
    return parse_matrix(text);
  } catch (const ParseError& e) {
    throw UsageError((path.empty() || path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

CODMatrix single_input(const Options& o, std::istream& in) {
  if (o.files.size() > 1) throw UsageError(o.verb + " takes at most one FILE");
  return read_matrix(o.files.empty() ? std::string() : o.files.front(), in);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string rows_one_based(const std::vector<int>& rows) {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(rows[i] + 1);
  }
  return out;
}

std::vector<int> rows_json(const std::vector<int>& rows) {
  std::vector<int> out(rows);
  for (int& r : out) ++r;
  return out;
}

ordered_json counts_json(const AtomCounts& s) { return ordered_json::parse(signature_json(s)); }

ordered_json matrix_json(const CODMatrix& m) { return ordered_json::parse(serialize(m, Format::Json)); }

ordered_json transcript_json(const Transcript& ops) {
  ordered_json arr = ordered_json::array();
  for (const EquivOp& op : ops) arr.push_back(ordered_json::parse(to_json(op)));
  return arr;
}

std::string transcript_text(const Transcript& ops) {
  if (ops.empty()) return "identity";
  std::string out;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (i > 0) out += ' ';
    out += to_string(ops[i]);
  }
  return out;
}

int cmd_generate(const Options& o, std::ostream& out) {
  const Format f = parse_format(o.format);
  const int n = require(o.n, "--n", o.verb);
  CODMatrix m;
  if (o.family == "G")
    m = gen_G(n);
  else if (o.family == "Gw")
    m = gen_Gw(n, require(o.w, "--w", o.verb));
  else if (o.family == "H")
    m = gen_H(n);
  else if (o.family == "Hm")
    m = gen_Hm(n);
  else
    throw UsageError("generate needs --family G|Gw|H|Hm");
  if (o.seed) {
    std::mt19937_64 rng(*o.seed);
    m = apply_all(m, random_ops(m, kScrambleOps, rng));
  }
  out << serialize(m, f);
  return kOk;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  const Format f = format_for(o, {Format::Text, Format::Json});
  const CODMatrix m = single_input(o, in);
  const CodVerdict v = is_cod(m);
  if (f == Format::Json) {
    ordered_json j = {{"cod", v.ok}, {"p", m.rows()}, {"n", m.cols()}, {"k", m.vars()}};
    if (!v.ok) {
      j["row"] = v.row + 1;
      j["col"] = v.col + 1;
      j["residual"] = v.residual.to_string();
    }
    out << j.dump() << '\n';
  } else {
    out << "COD: " << yes_no(v.ok) << '\n';
    if (!v.ok)
      out << "Gram cell (" << v.row + 1 << ", " << v.col + 1 << ") differs by " << v.residual.to_string() << '\n';
  }
  return v.ok ? kOk : kFalse;
}

int cmd_analyze(const Options& o, std::istream& in, std::ostream& out) {
  const Format f = format_for(o, {Format::Text, Format::Json});
  const CODMatrix m = single_input(o, in);
  const ParamTriple params{m.rows(), m.cols(), m.vars()};
  const bool cod = is_cod(m).ok;
  std::optional<bool> first_type;
  std::optional<std::size_t> parts;
  std::optional<Signature> sig;
  if (cod) {
    first_type = is_first_type(m).ok;
    parts = decompose_atomic(m).size();
    if (*first_type) sig = signature(m);
  }
  if (f == Format::Json) {
    ordered_json patterns = ordered_json::array();
    for (int r = 0; r < m.rows(); ++r) patterns.push_back(m.zero_pattern(r).to_string());
    ordered_json j = {{"p", params.p},
                      {"n", params.n},
                      {"k", params.k},
                      {"rate", params.rate().to_string()},
                      {"cod", cod},
                      {"conjugation_separated", is_conjugation_separated(m)},
                      {"zero_patterns", std::move(patterns)}};
    if (first_type) j["first_type"] = *first_type;
    if (parts) j["atomic_parts"] = *parts;
    if (sig) j["signature"] = counts_json(*sig);
    out << j.dump() << '\n';
    return kOk;
  }
  out << "parameters: " << params.to_string() << '\n';
  out << "rate: " << params.rate().to_string() << '\n';
  out << "COD: " << yes_no(cod) << '\n';
  if (first_type) out << "first type: " << yes_no(*first_type) << '\n';
  out << "conjugation separated: " << yes_no(is_conjugation_separated(m)) << '\n';
  if (parts) out << "atomic parts: " << *parts << '\n';
  if (sig) out << "signature: " << sig->to_string() << '\n';
  out << "zero patterns:\n";
  for (int r = 0; r < m.rows(); ++r) out << "  row " << r + 1 << ": " << m.zero_pattern(r).to_string() << '\n';
  return kOk;
}

int cmd_decompose(const Options& o, std::istream& in, std::ostream& out) {
  const Format f = parse_format(o.format);
  const CODMatrix m = single_input(o, in);
  const auto parts = decompose_atomic(m);
  if (f == Format::Json) {
    ordered_json arr = ordered_json::array();
    for (const AtomicPart& part : parts)
      arr.push_back({{"rows", rows_json(part.rows)},
                     {"class", part.cls.to_string()},
                     {"matrix", matrix_json(part.matrix)}});
    out << arr.dump() << '\n';
    return kOk;
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const AtomicPart& part = parts[i];
    out << "# part " << i + 1 << ": rows " << rows_one_based(part.rows) << ", class " << part.cls.to_string()
        << ", " << ParamTriple{part.matrix.rows(), m.cols(), part.matrix.vars()}.to_string() << '\n';
    out << serialize(part.matrix, f);
  }
  return kOk;
}

int cmd_canonicalize(const Options& o, std::istream& in, std::ostream& out) {
  const Format f = parse_format(o.format);
  const CODMatrix m = single_input(o, in);
  const auto parts = decompose_atomic(m);
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const AtomicPart& part = parts[i];
    const CanonicalResult res = canonicalize_atomic(part.matrix, m.cols());
    if (f == Format::Json) {
      arr.push_back({{"rows", rows_json(part.rows)},
                     {"class", res.cls.to_string()},
                     {"transcript", transcript_json(res.transcript)},
                     {"matrix", matrix_json(res.matrix)}});
      continue;
    }
    out << "# part " << i + 1 << ": rows " << rows_one_based(part.rows) << ", class " << res.cls.to_string()
        << '\n';
    out << "# transcript: " << transcript_text(res.transcript) << '\n';
    out << serialize(res.matrix, f);
  }
  if (f == Format::Json) out << arr.dump() << '\n';
  return kOk;
}

int cmd_equivalent(const Options& o, std::istream& in, std::ostream& out) {
  const Format f = format_for(o, {Format::Text, Format::Json});
  if (o.files.empty() || o.files.size() > 2) throw UsageError("equivalent takes FILE1 [FILE2]");
  if (o.files.size() == 1 && o.files.front() == "-") throw UsageError("equivalent needs at least one named FILE");
  const CODMatrix a = read_matrix(o.files[0], in);
  const CODMatrix b = read_matrix(o.files.size() == 2 ? o.files[1] : std::string(), in);
  if (a.cols() != b.cols()) throw UsageError("equivalent needs designs with equal column counts");
  const Signature sa = signature(a);
  const Signature sb = signature(b);
  const bool same = sa == sb;
  if (f == Format::Json) {
    const ordered_json j = {{"equivalent", same}, {"signature_a", counts_json(sa)}, {"signature_b", counts_json(sb)}};
    out << j.dump() << '\n';
  } else {
    out << "equivalent: " << yes_no(same) << '\n';
    out << "signature 1: " << sa.to_string() << '\n';
    out << "signature 2: " << sb.to_string() << '\n';
  }
  return same ? kOk : kFalse;
}

int cmd_feasible(const Options& o, std::ostream& out) {
  const Format f = format_for(o, {Format::Text, Format::Json});
  const std::int64_t p = require(o.p, "--p", o.verb);
  const int n = require(o.n, "--n", o.verb);
  const std::int64_t k = require(o.k, "--k", o.verb);
  const auto solutions = feasible(p, n, k);
  if (f == Format::Json) {
    ordered_json arr = ordered_json::array();
    for (const ParamSolution& s : solutions) arr.push_back(counts_json(s));
    const ordered_json j = {{"p", p}, {"n", n}, {"k", k}, {"solutions", std::move(arr)}};
    out << j.dump() << '\n';
  } else if (solutions.empty()) {
    out << "infeasible\n";
  } else {
    for (const ParamSolution& s : solutions) out << s.to_string() << '\n';
  }
  return solutions.empty() ? kFalse : kOk;
}

std::string row_label(const TradeoffRow& row) {
  return row.cls.kind == AtomicClass::Kind::Hm ? std::string("Hm") : std::to_string(row.cls.w);
}

int cmd_tradeoff(const Options& o, std::ostream& out) {
  const Format f = format_for(o, {Format::Text, Format::Json, Format::Csv});
  const int n = require(o.n, "--n", o.verb);
  const auto table = tradeoff_table(n);
  if (f == Format::Json) {
    ordered_json arr = ordered_json::array();
    for (const TradeoffRow& row : table) {
      const Rational rate = row.params.rate();
      arr.push_back({{"w", row_label(row)},
                     {"class", row.cls.to_string()},
                     {"p", row.params.p},
                     {"k", row.params.k},
                     {"rate_num", rate.num()},
                     {"rate_den", rate.den()},
                     {"rate_decimal", format_decimal(rate)}});
    }
    out << arr.dump() << '\n';
  } else if (f == Format::Csv) {
    out << "w,p,k,rate_num,rate_den,rate_decimal\n";
    for (const TradeoffRow& row : table) {
      const Rational rate = row.params.rate();
      out << row_label(row) << ',' << row.params.p << ',' << row.params.k << ',' << rate.num() << ','
          << rate.den() << ',' << format_decimal(rate) << '\n';
    }
  } else {
    out << "w p k rate decimal\n";
    for (const TradeoffRow& row : table) {
      const Rational rate = row.params.rate();
      out << row_label(row) << ' ' << row.params.p << ' ' << row.params.k << ' ' << rate.to_string() << ' '
          << format_decimal(rate) << '\n';
    }
  }
  return kOk;
}

std::string grammar() {
  return "usage: codforge <verb> [--family G|Gw|H|Hm] [--n INT] [--w INT] [--p INT] [--k INT]\n"
         "                [--format text|json|csv|latex] [--seed INT] [FILE...]\n"
         "verbs: generate verify analyze decompose canonicalize equivalent feasible tradeoff\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app("Complex orthogonal design toolkit", "codforge");
  app.add_option("verb", o.verb, "operation")->required()->check(CLI::IsMember(std::vector<std::string>(
                                                                 std::begin(kVerbs), std::end(kVerbs))));
  app.add_option("files", o.files, "input matrices (text or JSON); standard input when absent");
  app.add_option("--family", o.family, "generator family")->check(CLI::IsMember({"G", "Gw", "H", "Hm"}));
  app.add_option("--n", o.n, "number of columns");
  app.add_option("--w", o.w, "weight parameter of Gw");
  app.add_option("--p", o.p, "delay (rows)");
  app.add_option("--k", o.k, "number of variables");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "csv", "latex"}));
  app.add_option("--seed", o.seed, "scramble generated output with seeded equivalence operations");

  std::vector<const char*> argv{"codforge"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help() << grammar();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << grammar();
    return kUsage;
  }

  try {
    if (o.verb == "generate") return cmd_generate(o, out);
    if (o.verb == "verify") return cmd_verify(o, in, out);
    if (o.verb == "analyze") return cmd_analyze(o, in, out);
    if (o.verb == "decompose") return cmd_decompose(o, in, out);
    if (o.verb == "canonicalize") return cmd_canonicalize(o, in, out);
    if (o.verb == "equivalent") return cmd_equivalent(o, in, out);
    if (o.verb == "feasible") return cmd_feasible(o, out);
    return cmd_tradeoff(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << grammar();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace codforge::cli
