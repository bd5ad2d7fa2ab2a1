#include "codforge/generators.hpp"

#include <deque>
#include <unordered_map>

#include "codforge/errors.hpp"
#include "codforge/parity_union_find.hpp"
#include "codforge/verify.hpp"

namespace codforge {

namespace {

void check_base_args(const F2Vec& alpha, int i, int n) {
  if (n < 1 || n + 1 > F2Vec::kMaxLen) throw ArgumentError("n out of range");
  if (alpha.size() != n + 1) throw ArgumentError("row label must have n+1 bits");
  if (i < 1 || i > n) throw ArgumentError("column index outside [1, n]");
}

// Cell (alpha, i) of the basic design G_n; alpha has n+1 bits.
struct BasicCell {
  bool nonzero = false;
  int sign = 1;
  std::uint64_t name = 0;
  bool conj = false;
};

BasicCell basic_cell(const F2Vec& alpha, int i, int n) {
  BasicCell cell;
  if (alpha.bit(i) == 0) return cell;
  cell.nonzero = true;
  cell.sign = theta(alpha, i, n) == 0 ? 1 : -1;
  cell.name = phi(alpha, i, n).value();
  cell.conj = alpha.bit(n + 1) == 1;
  return cell;
}

CODMatrix::NameTable colex_names(int len, int weight) {
  CODMatrix::NameTable names;
  int id = 1;
  for (const F2Vec& v : enumerate_weight(len - 1, weight)) names.emplace(id++, F2Vec(len, v.value()));
  return names;
}

void check_H_order(int n) {
  if (n < 4 || n % 4 != 0)
    throw ArgumentError("padded designs need n = 0 mod 4 (n = 2m with m even); for m odd no padding "
                        "column exists, got n = " + std::to_string(n));
}

}  // namespace

int theta(const F2Vec& alpha, int i, int n) {
  check_base_args(alpha, i, n);
  const int wt = alpha.weight_range(i, n + 1);
  if (i % 2 == 0) return (wt + i / 2) % 2;
  return (wt + (i - 1) / 2 + alpha.bit(n + 1)) % 2;
}

F2Vec phi(const F2Vec& alpha, int i, int n) {
  check_base_args(alpha, i, n);
  if (alpha.bit(i) == 0) throw PreconditionError("phi(alpha, i) needs alpha(i) = 1 (the cell is zero)");
  F2Vec out = alpha.flipped(i);
  if (alpha.bit(n + 1) == 1) out ^= F2Vec::ones(n + 1);
  return out;
}

int psi(const F2Vec& alpha, int n) {
  if (n < 2 || n % 2 != 0) throw ArgumentError("psi needs even n");
  if (alpha.size() != n) throw ArgumentError("psi needs a vector of length n");
  int acc = 0;
  for (int i = 2; i <= n; i += 2) acc ^= alpha.bit(i);
  return acc;
}

std::vector<F2Vec> gw_row_labels(int n, int w) {
  if (n < 1 || n + 1 > F2Vec::kMaxLen) throw ArgumentError("n out of range");
  if (w < -1 || w > n + 1) throw ArgumentError("w must lie in [-1, n+1]");
  std::vector<F2Vec> rows;
  for (const F2Vec& v : enumerate_weight(n, w + 1)) rows.emplace_back(n + 1, v.value());
  const std::uint64_t top = std::uint64_t{1} << n;
  for (const F2Vec& v : enumerate_weight(n, n - w + 1)) rows.emplace_back(n + 1, v.value() | top);
  return rows;
}

CODMatrix gen_G(int n, int cap) {
  if (n < 1) throw ArgumentError("n must be positive");
  if (n > cap) throw ResourceError("gen_G(" + std::to_string(n) + ") exceeds the size cap n <= " + std::to_string(cap));
  const std::uint64_t p = std::uint64_t{1} << (n + 1);
  std::vector<Entry> cells;
  cells.reserve(p * static_cast<std::uint64_t>(n));
  for (std::uint64_t v = 0; v < p; ++v) {
    const F2Vec alpha(n + 1, v);
    for (int i = 1; i <= n; ++i) {
      const BasicCell c = basic_cell(alpha, i, n);
      cells.push_back(c.nonzero ? Entry::make(static_cast<int>(c.name) + 1, c.sign, c.conj) : Entry::zero());
    }
  }
  CODMatrix::NameTable names;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) names.emplace(static_cast<int>(v) + 1, F2Vec(n + 1, v));
  return CODMatrix(static_cast<int>(p), n, std::move(cells), std::move(names));
}

CODMatrix gen_Gw(int n, int w) {
  const std::vector<F2Vec> rows = gw_row_labels(n, w);
  std::vector<Entry> cells;
  cells.reserve(rows.size() * static_cast<std::size_t>(n));
  for (const F2Vec& alpha : rows) {
    for (int i = 1; i <= n; ++i) {
      const BasicCell c = basic_cell(alpha, i, n);
      cells.push_back(c.nonzero ? Entry::make(static_cast<int>(colex_rank(c.name)) + 1, c.sign, c.conj)
                                : Entry::zero());
    }
  }
  return CODMatrix(static_cast<int>(rows.size()), n, std::move(cells), colex_names(n + 1, w));
}

namespace {

// Row alpha (n bits) of the padded design: gen_G(n-1) cells then L_n(alpha).
template <typename IdOf>
void append_padded_row(std::vector<Entry>& cells, const F2Vec& alpha, int n, IdOf id_of) {
  for (int i = 1; i < n; ++i) {
    const BasicCell c = basic_cell(alpha, i, n - 1);
    cells.push_back(c.nonzero ? Entry::make(id_of(c.name), c.sign, c.conj) : Entry::zero());
  }
  if (alpha.bit(n) == 0) {
    cells.push_back(Entry::zero());
  } else {
    const std::uint64_t name = alpha.flipped(n).value();
    cells.push_back(Entry::make(id_of(name), psi(alpha, n) == 0 ? 1 : -1, false));
  }
}

}  // namespace

CODMatrix gen_H(int n, int cap) {
  check_H_order(n);
  if (n > cap) throw ResourceError("gen_H(" + std::to_string(n) + ") exceeds the size cap n <= " + std::to_string(cap));
  const std::uint64_t p = std::uint64_t{1} << n;
  std::vector<Entry> cells;
  cells.reserve(p * static_cast<std::uint64_t>(n));
  auto id_of = [](std::uint64_t name) { return static_cast<int>(name) + 1; };
  for (std::uint64_t v = 0; v < p; ++v) append_padded_row(cells, F2Vec(n, v), n, id_of);
  CODMatrix::NameTable names;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << (n - 1)); ++v) names.emplace(static_cast<int>(v) + 1, F2Vec(n, v));
  return CODMatrix(static_cast<int>(p), n, std::move(cells), std::move(names));
}

CODMatrix gen_Hm(int n) {
  check_H_order(n);
  if (n > F2Vec::kMaxLen) throw ArgumentError("n out of range");
  const int m = n / 2;
  const std::vector<F2Vec> rows = enumerate_weight(n, m + 1);
  std::vector<Entry> cells;
  cells.reserve(rows.size() * static_cast<std::size_t>(n));
  auto id_of = [](std::uint64_t name) { return static_cast<int>(colex_rank(name)) + 1; };
  for (const F2Vec& alpha : rows) append_padded_row(cells, alpha, n, id_of);
  return CODMatrix(static_cast<int>(rows.size()), n, std::move(cells), colex_names(n, m));
}

PadOutcome pad_column_attempt(int n) {
  if (n < 4 || n % 2 != 0) throw ArgumentError("pad_column_attempt needs n = 2m with m >= 2");
  const int m = n / 2;
  const CODMatrix base = gen_Gw(n - 1, m);
  const std::vector<F2Vec> labels = gw_row_labels(n - 1, m);
  const int p = base.rows();

  std::unordered_map<std::uint64_t, int> row_of;
  for (int r = 0; r < p; ++r) row_of.emplace(labels[static_cast<std::size_t>(r)].value(), r);
  std::unordered_map<std::uint64_t, int> id_of;
  for (const auto& [id, name] : base.names()) id_of.emplace(name.value(), id);

  auto pad_var = [&](const F2Vec& alpha) { return id_of.at(alpha.flipped(n).value()); };

  const F2Vec all = F2Vec::ones(n);
  ParityUnionFind uf(p);
  std::vector<std::vector<std::pair<int, ParityEdge>>> tree(static_cast<std::size_t>(p));

  for (int ra = 0; ra < p; ++ra) {
    const F2Vec& alpha = labels[static_cast<std::size_t>(ra)];
    if (alpha.bit(n) == 0) continue;
    for (int i = 1; i < n; ++i) {
      if (alpha.bit(i) == 0) continue;
      const F2Vec beta = alpha ^ all ^ F2Vec::unit(n, i) ^ F2Vec::unit(n, n);
      const int rb = row_of.at(beta.value());
      if (rb <= ra) continue;
      const Entry& a = base.at(ra, i - 1);
      const Entry& c = base.at(rb, i - 1);
      if (a.var != pad_var(beta) || c.var != pad_var(alpha))
        throw StructuralError("padding rows do not pair into Alamouti blocks");
      const ParityEdge edge{ra, rb, i - 1, a.sign * c.sign > 0 ? 1 : 0};
      if (uf.unite(ra, rb, edge.parity)) {
        tree[static_cast<std::size_t>(ra)].emplace_back(rb, edge);
        tree[static_cast<std::size_t>(rb)].emplace_back(ra, edge);
        continue;
      }
      // Close the cycle through the accepted-edge forest.
      std::vector<int> prev(static_cast<std::size_t>(p), -1);
      std::vector<ParityEdge> via(static_cast<std::size_t>(p));
      std::deque<int> queue{rb};
      prev[static_cast<std::size_t>(rb)] = rb;
      while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        if (u == ra) break;
        for (const auto& [v, e] : tree[static_cast<std::size_t>(u)]) {
          if (prev[static_cast<std::size_t>(v)] != -1) continue;
          prev[static_cast<std::size_t>(v)] = u;
          via[static_cast<std::size_t>(v)] = e;
          queue.push_back(v);
        }
      }
      PadContradiction out;
      out.cycle.push_back(edge);
      for (int u = ra; u != rb; u = prev[static_cast<std::size_t>(u)]) out.cycle.push_back(via[static_cast<std::size_t>(u)]);
      return out;
    }
  }

  PadSuccess out;
  std::vector<Entry> cells;
  cells.reserve(static_cast<std::size_t>(p) * n);
  for (int r = 0; r < p; ++r) {
    const F2Vec& alpha = labels[static_cast<std::size_t>(r)];
    Entry pad = Entry::zero();
    if (alpha.bit(n) == 1) {
      const int sign = uf.value(r) == 0 ? 1 : -1;
      out.assignment.emplace(r, sign);
      pad = Entry::make(pad_var(alpha), sign, false);
    }
    out.column.push_back(pad);
    const auto row = base.row(r);
    cells.insert(cells.end(), row.begin(), row.end());
    cells.push_back(pad);
  }
  out.matrix = CODMatrix(p, n, std::move(cells), base.names());
  if (!is_cod(out.matrix)) throw StructuralError("padded design failed verification");
  return out;
}

}  // namespace codforge
