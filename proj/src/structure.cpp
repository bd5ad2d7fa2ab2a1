#include "codforge/structure.hpp"

#include <algorithm>
#include <json.hpp>
#include <numeric>

#include "codforge/errors.hpp"
#include "codforge/generators.hpp"
#include "codforge/parity_union_find.hpp"
#include "codforge/verify.hpp"

namespace codforge {

using ordered_json = nlohmann::ordered_json;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::size_t at_index(int i) { return static_cast<std::size_t>(i); }

std::string join_one_based(const std::vector<int>& perm) {
  std::string out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(perm[i] + 1);
  }
  return out;
}

std::vector<int> one_based(const std::vector<int>& perm) {
  std::vector<int> out(perm);
  for (int& v : out) ++v;
  return out;
}

void check_perm(const std::vector<int>& perm, int size, const char* what) {
  if (static_cast<int>(perm.size()) != size)
    throw ArgumentError(std::string(what) + " has " + std::to_string(perm.size()) + " entries, expected " +
                        std::to_string(size));
  std::vector<bool> seen(at_index(size), false);
  for (int v : perm) {
    if (v < 0 || v >= size || seen[at_index(v)]) throw ArgumentError(std::string(what) + " is not a bijection");
    seen[at_index(v)] = true;
  }
}

void check_var(const CODMatrix& m, int id) {
  if (id < 1 || id > m.vars()) throw ArgumentError("variable id " + std::to_string(id) + " out of range");
}

bool is_identity(const std::vector<int>& perm) {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i)) return false;
  return true;
}

template <typename F>
CODMatrix map_cells(const CODMatrix& m, F f) {
  std::vector<Entry> cells = m.cells();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      Entry& e = cells[at_index(r) * at_index(m.cols()) + at_index(c)];
      if (!e.is_zero()) e = f(e, r, c);
    }
  return CODMatrix(m.rows(), m.cols(), std::move(cells), m.names());
}

}  // namespace

std::string to_string(const EquivOp& op) {
  return std::visit(Overloaded{
                        [](const RowPerm& o) { return "RowPerm(" + join_one_based(o.perm) + ")"; },
                        [](const ColPerm& o) { return "ColPerm(" + join_one_based(o.perm) + ")"; },
                        [](const ConjVar& o) { return "ConjVar(" + std::to_string(o.id) + ")"; },
                        [](const NegVar& o) { return "NegVar(" + std::to_string(o.id) + ")"; },
                        [](const RenameVar& o) {
                          return "RenameVar(" + std::to_string(o.a) + "," + std::to_string(o.b) + ")";
                        },
                        [](const NegRow& o) { return "NegRow(" + std::to_string(o.row + 1) + ")"; },
                        [](const NegCol& o) { return "NegCol(" + std::to_string(o.col + 1) + ")"; },
                    },
                    op);
}

std::string to_json(const EquivOp& op) {
  const ordered_json j = std::visit(
      Overloaded{
          [](const RowPerm& o) { return ordered_json{{"op", "RowPerm"}, {"perm", one_based(o.perm)}}; },
          [](const ColPerm& o) { return ordered_json{{"op", "ColPerm"}, {"perm", one_based(o.perm)}}; },
          [](const ConjVar& o) { return ordered_json{{"op", "ConjVar"}, {"id", o.id}}; },
          [](const NegVar& o) { return ordered_json{{"op", "NegVar"}, {"id", o.id}}; },
          [](const RenameVar& o) { return ordered_json{{"op", "RenameVar"}, {"a", o.a}, {"b", o.b}}; },
          [](const NegRow& o) { return ordered_json{{"op", "NegRow"}, {"row", o.row + 1}}; },
          [](const NegCol& o) { return ordered_json{{"op", "NegCol"}, {"col", o.col + 1}}; },
      },
      op);
  return j.dump();
}

CODMatrix apply_equiv(const CODMatrix& m, const EquivOp& op) {
  return std::visit(
      Overloaded{
          [&](const RowPerm& o) {
            check_perm(o.perm, m.rows(), "row permutation");
            std::vector<Entry> cells;
            cells.reserve(m.cells().size());
            for (int src : o.perm) {
              const auto row = m.row(src);
              cells.insert(cells.end(), row.begin(), row.end());
            }
            return CODMatrix(m.rows(), m.cols(), std::move(cells), m.names());
          },
          [&](const ColPerm& o) {
            check_perm(o.perm, m.cols(), "column permutation");
            std::vector<Entry> cells;
            cells.reserve(m.cells().size());
            for (int r = 0; r < m.rows(); ++r)
              for (int src : o.perm) cells.push_back(m.at(r, src));
            return CODMatrix(m.rows(), m.cols(), std::move(cells), m.names());
          },
          [&](const ConjVar& o) {
            check_var(m, o.id);
            return map_cells(m, [&](Entry e, int, int) { return e.var == o.id ? e.conjugated() : e; });
          },
          [&](const NegVar& o) {
            check_var(m, o.id);
            return map_cells(m, [&](Entry e, int, int) { return e.var == o.id ? e.negated() : e; });
          },
          [&](const RenameVar& o) {
            check_var(m, o.a);
            check_var(m, o.b);
            if (o.a == o.b) throw ArgumentError("RenameVar needs two distinct ids");
            std::vector<Entry> cells = m.cells();
            for (Entry& e : cells) {
              if (e.var == o.a)
                e.var = o.b;
              else if (e.var == o.b)
                e.var = o.a;
            }
            CODMatrix::NameTable names;
            for (const auto& [id, name] : m.names()) names.emplace(id == o.a ? o.b : id == o.b ? o.a : id, name);
            return CODMatrix(m.rows(), m.cols(), std::move(cells), std::move(names));
          },
          [&](const NegRow& o) {
            if (o.row < 0 || o.row >= m.rows()) throw ArgumentError("row index out of range");
            return map_cells(m, [&](Entry e, int r, int) { return r == o.row ? e.negated() : e; });
          },
          [&](const NegCol& o) {
            if (o.col < 0 || o.col >= m.cols()) throw ArgumentError("column index out of range");
            return map_cells(m, [&](Entry e, int, int c) { return c == o.col ? e.negated() : e; });
          },
      },
      op);
}

CODMatrix apply_all(const CODMatrix& m, const Transcript& ops) {
  CODMatrix out = m;
  for (const EquivOp& op : ops) out = apply_equiv(out, op);
  return out;
}

Transcript random_ops(const CODMatrix& m, int count, std::mt19937_64& rng) {
  auto pick = [&](int bound) { return std::uniform_int_distribution<int>(0, bound - 1)(rng); };
  auto shuffled = [&](int size) {
    std::vector<int> perm(at_index(size));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
  };
  Transcript ops;
  for (int i = 0; i < count; ++i) {
    int kind = pick(7);
    if (m.vars() == 0 && kind >= 2 && kind <= 4) kind = 5;
    if (m.vars() < 2 && kind == 4) kind = 2;
    switch (kind) {
      case 0:
        ops.emplace_back(RowPerm{shuffled(m.rows())});
        break;
      case 1:
        ops.emplace_back(ColPerm{shuffled(m.cols())});
        break;
      case 2:
        ops.emplace_back(ConjVar{pick(m.vars()) + 1});
        break;
      case 3:
        ops.emplace_back(NegVar{pick(m.vars()) + 1});
        break;
      case 4: {
        const int a = pick(m.vars()) + 1;
        int b = pick(m.vars() - 1) + 1;
        if (b >= a) ++b;
        ops.emplace_back(RenameVar{a, b});
        break;
      }
      case 5:
        ops.emplace_back(NegRow{pick(m.rows())});
        break;
      default:
        ops.emplace_back(NegCol{pick(m.cols())});
        break;
    }
  }
  return ops;
}

std::vector<AtomicPart> decompose_atomic(const CODMatrix& m) {
  if (!is_cod(m)) throw PreconditionError("decompose_atomic needs a COD");
  std::vector<int> parent(at_index(m.rows()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[at_index(x)] != x) {
      parent[at_index(x)] = parent[at_index(parent[at_index(x)])];
      x = parent[at_index(x)];
    }
    return x;
  };
  std::vector<int> first_row(at_index(m.vars()) + 1, -1);
  for (int r = 0; r < m.rows(); ++r) {
    for (const Entry& e : m.row(r)) {
      if (e.is_zero()) continue;
      int& first = first_row[at_index(e.var)];
      if (first == -1) {
        first = r;
        continue;
      }
      const int a = find(first), b = find(r);
      if (a != b) parent[at_index(std::max(a, b))] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> groups(at_index(m.rows()));
  for (int r = 0; r < m.rows(); ++r) groups[at_index(find(r))].push_back(r);
  std::vector<AtomicPart> parts;
  for (auto& rows : groups) {
    if (rows.empty()) continue;
    AtomicPart part;
    part.matrix = m.select_rows(rows);
    part.rows = std::move(rows);
    part.cls = classify_atomic(part.matrix, m.cols());
    parts.push_back(std::move(part));
  }
  std::sort(parts.begin(), parts.end(),
            [](const AtomicPart& a, const AtomicPart& b) { return a.rows.front() < b.rows.front(); });
  return parts;
}

AtomicClass classify_atomic(const CODMatrix& part, int n) {
  if (part.cols() != n) throw ArgumentError("part has " + std::to_string(part.cols()) + " columns, expected " +
                                            std::to_string(n));
  if (part.rows() == 0) return AtomicClass::unknown();
  int min_weight = n + 1;
  for (int r = 0; r < part.rows(); ++r) min_weight = std::min(min_weight, part.row_weight(r));
  const int w = min_weight - 1;
  if (w > n / 2) return AtomicClass::unknown();
  for (int r = 0; r < part.rows(); ++r) {
    const int wt = part.row_weight(r);
    if (wt != w + 1 && wt != n - w + 1) return AtomicClass::unknown();
  }
  const ParamTriple actual{part.rows(), n, part.vars()};
  if (gw_params(n, w) == actual) return AtomicClass::gw(w);
  if (n % 4 == 0 && 2 * w == n && hm_params(n) == actual) return AtomicClass::hm();
  return AtomicClass::unknown();
}

CODMatrix canonical_target(const AtomicClass& cls, int n) {
  switch (cls.kind) {
    case AtomicClass::Kind::Gw:
      return gen_Gw(n, cls.w);
    case AtomicClass::Kind::Hm:
      return gen_Hm(n);
    case AtomicClass::Kind::Unknown:
      break;
  }
  throw ClassificationError("no canonical form for an unclassified part");
}

namespace {

// Row/variable correspondence between two designs of equal shape, built by
// propagation: fixing one row pairing forces the image of every variable in
// it, and each variable occurs once per column, which forces the rows holding
// it. Signs are solved as parities over row and variable nodes.
class Aligner {
 public:
  Aligner(const CODMatrix& from, const CODMatrix& to) : a_(from), t_(to) {
    occ_a_ = occurrences(a_);
    occ_t_ = occurrences(t_);
    for (int r = 0; r < a_.rows(); ++r) pattern_a_.push_back(a_.zero_pattern(r).value());
    for (int r = 0; r < t_.rows(); ++r) pattern_t_.push_back(t_.zero_pattern(r).value());
  }

  struct State {
    std::vector<int> sigma;      // from-row -> to-row
    std::vector<int> sigma_inv;
    std::vector<int> rho;        // from-var -> to-var
    std::vector<int> rho_inv;
    std::vector<int> flip;       // from-var conjugation flip
    ParityUnionFind signs;       // nodes: rows, then variables
  };

  std::optional<State> solve() {
    if (a_.rows() != t_.rows() || a_.cols() != t_.cols() || a_.vars() != t_.vars()) return std::nullopt;
    State s{std::vector<int>(at_index(a_.rows()), -1),
            std::vector<int>(at_index(a_.rows()), -1),
            std::vector<int>(at_index(a_.vars()) + 1, 0),
            std::vector<int>(at_index(a_.vars()) + 1, 0),
            std::vector<int>(at_index(a_.vars()) + 1, 0),
            ParityUnionFind(a_.rows() + a_.vars())};
    return extend(std::move(s));
  }

 private:
  using Occ = std::vector<std::vector<int>>;  // [var][col] -> row or -1

  static Occ occurrences(const CODMatrix& m) {
    Occ occ(at_index(m.vars()) + 1, std::vector<int>(at_index(m.cols()), -1));
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) {
        const Entry& e = m.at(r, c);
        if (!e.is_zero()) occ[at_index(e.var)][at_index(c)] = r;
      }
    return occ;
  }

  std::optional<State> extend(State s) {
    const auto next = std::find(s.sigma.begin(), s.sigma.end(), -1);
    if (next == s.sigma.end()) return s;
    const int r = static_cast<int>(next - s.sigma.begin());
    for (int t = 0; t < t_.rows(); ++t) {
      if (s.sigma_inv[at_index(t)] != -1 || pattern_t_[at_index(t)] != pattern_a_[at_index(r)]) continue;
      State trial = s;
      if (!close(trial, r, t)) continue;
      if (auto done = extend(std::move(trial))) return done;
    }
    return std::nullopt;
  }

  bool close(State& s, int r0, int t0) {
    std::vector<std::pair<int, int>> rows{{r0, t0}};
    std::vector<int> vars;
    while (!rows.empty() || !vars.empty()) {
      if (!rows.empty()) {
        const auto [r, t] = rows.back();
        rows.pop_back();
        if (s.sigma[at_index(r)] == t) continue;
        if (s.sigma[at_index(r)] != -1 || s.sigma_inv[at_index(t)] != -1) return false;
        if (pattern_a_[at_index(r)] != pattern_t_[at_index(t)]) return false;
        s.sigma[at_index(r)] = t;
        s.sigma_inv[at_index(t)] = r;
        for (int c = 0; c < a_.cols(); ++c) {
          const Entry& ea = a_.at(r, c);
          if (ea.is_zero()) continue;
          const Entry& et = t_.at(t, c);
          const int y = ea.var, x = et.var;
          const int flip = ea.conj != et.conj ? 1 : 0;
          if (s.rho[at_index(y)] == 0) {
            if (s.rho_inv[at_index(x)] != 0) return false;
            s.rho[at_index(y)] = x;
            s.rho_inv[at_index(x)] = y;
            s.flip[at_index(y)] = flip;
            vars.push_back(y);
          } else if (s.rho[at_index(y)] != x || s.flip[at_index(y)] != flip) {
            return false;
          }
          const int parity = (ea.sign < 0) != (et.sign < 0) ? 1 : 0;
          if (!s.signs.unite(r, a_.rows() + y - 1, parity)) return false;
        }
      } else {
        const int y = vars.back();
        vars.pop_back();
        const int x = s.rho[at_index(y)];
        for (int c = 0; c < a_.cols(); ++c) {
          const int ra = occ_a_[at_index(y)][at_index(c)];
          const int rt = occ_t_[at_index(x)][at_index(c)];
          if ((ra == -1) != (rt == -1)) return false;
          if (ra != -1) rows.emplace_back(ra, rt);
        }
      }
    }
    return true;
  }

  const CODMatrix& a_;
  const CODMatrix& t_;
  Occ occ_a_;
  Occ occ_t_;
  std::vector<std::uint64_t> pattern_a_;
  std::vector<std::uint64_t> pattern_t_;
};

Transcript transcript_from(const CODMatrix& from, Aligner::State& s) {
  Transcript ops;
  const int p = from.rows();
  for (int r = 0; r < p; ++r)
    if (s.signs.value(r) == 1) ops.emplace_back(NegRow{r});
  for (int y = 1; y <= from.vars(); ++y) {
    if (s.signs.value(p + y - 1) == 1) ops.emplace_back(NegVar{y});
    if (s.flip[at_index(y)] == 1) ops.emplace_back(ConjVar{y});
  }
  // label[y]: current label of original variable y; holder[x]: variable labelled x
  std::vector<int> label(at_index(from.vars()) + 1), holder(at_index(from.vars()) + 1);
  std::iota(label.begin(), label.end(), 0);
  std::iota(holder.begin(), holder.end(), 0);
  for (int x = 1; x <= from.vars(); ++x) {
    const int y = s.rho_inv[at_index(x)];
    const int cur = label[at_index(y)];
    if (cur == x) continue;
    ops.emplace_back(RenameVar{x, cur});
    const int other = holder[at_index(x)];
    label[at_index(other)] = cur;
    holder[at_index(cur)] = other;
    label[at_index(y)] = x;
    holder[at_index(x)] = y;
  }
  if (!is_identity(s.sigma_inv)) ops.emplace_back(RowPerm{s.sigma_inv});
  return ops;
}

}  // namespace

std::optional<Transcript> align_to(const CODMatrix& from, const CODMatrix& to) {
  if (from.rows() != to.rows() || from.cols() != to.cols() || from.vars() != to.vars()) return std::nullopt;
  std::vector<int> perm(at_index(from.cols()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const bool identity = is_identity(perm);
    const CODMatrix arranged = identity ? from : apply_equiv(from, ColPerm{perm});
    Aligner aligner(arranged, to);
    if (auto state = aligner.solve()) {
      Transcript ops;
      if (!identity) ops.emplace_back(ColPerm{perm});
      for (EquivOp& op : transcript_from(arranged, *state)) ops.push_back(std::move(op));
      if (!apply_all(from, ops).same_cells(to)) throw StructuralError("alignment transcript does not replay");
      return ops;
    }
    if (from.cols() > 8) break;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

CanonicalResult canonicalize_atomic(const CODMatrix& part, int n) {
  const AtomicClass cls = classify_atomic(part, n);
  if (cls.kind == AtomicClass::Kind::Unknown)
    throw ClassificationError("part " + ParamTriple{part.rows(), n, part.vars()}.to_string() +
                              " matches no atomic first-type class");
  CODMatrix target = canonical_target(cls, n);
  auto ops = align_to(part, target);
  if (!ops) throw StructuralError("not equivalent to canonical form " + cls.to_string());
  return {cls, std::move(target), std::move(*ops)};
}

Signature signature(const CODMatrix& m) {
  if (!is_first_type(m)) throw ClassificationError("signature is defined for first-type CODs only");
  const int n = m.cols();
  Signature sig = AtomCounts::zero(n);
  for (const AtomicPart& part : decompose_atomic(m)) {
    switch (part.cls.kind) {
      case AtomicClass::Kind::Gw:
        ++sig.at(part.cls.w);
        break;
      case AtomicClass::Kind::Hm:
        ++*sig.t_h;
        break;
      case AtomicClass::Kind::Unknown:
        throw ClassificationError("atomic part on rows starting at " + std::to_string(part.rows.front() + 1) +
                                  " with parameters " +
                                  ParamTriple{part.matrix.rows(), n, part.matrix.vars()}.to_string() +
                                  " matches no first-type class");
    }
  }
  return sig;
}

std::string signature_json(const Signature& s) {
  ordered_json t = ordered_json::object();
  for (int i = -1; i <= s.max_index(); ++i) t[std::to_string(i)] = s.at(i);
  ordered_json j = {{"n", s.n}, {"t", std::move(t)}};
  if (s.t_h) j["t_h"] = *s.t_h;
  return j.dump();
}

bool equivalent(const CODMatrix& a, const CODMatrix& b) {
  if (a.cols() != b.cols()) return false;
  return signature(a) == signature(b);
}

CODMatrix build_from_solution(const AtomCounts& counts) {
  std::vector<CODMatrix> blocks;
  for (int i = -1; i <= counts.max_index(); ++i)
    for (std::int64_t c = 0; c < counts.at(i); ++c) blocks.push_back(gen_Gw(counts.n, i));
  if (counts.t_h)
    for (std::int64_t c = 0; c < *counts.t_h; ++c) blocks.push_back(gen_Hm(counts.n));
  if (blocks.empty()) throw ArgumentError("empty solution has no design");
  return catenate(blocks);
}

}  // namespace codforge
