#include "codforge/cod_matrix.hpp"

#include <algorithm>
#include <string>

#include "codforge/errors.hpp"

namespace codforge {

CODMatrix::CODMatrix(int rows, int cols, std::vector<Entry> cells, NameTable names)
    : rows_(rows), cols_(cols), cells_(std::move(cells)), names_(std::move(names)) {
  if (rows < 1 || cols < 1) throw ArgumentError("matrix needs at least one row and one column");
  if (cols > F2Vec::kMaxLen) throw ArgumentError("at most 64 columns are supported");
  if (cells_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
    throw ArgumentError("cell count does not match " + std::to_string(rows) + "x" +
                        std::to_string(cols));
  for (const Entry& e : cells_) {
    if (e.var < 0) throw ArgumentError("negative variable id");
    if (!e.is_zero() && e.sign != 1 && e.sign != -1) throw ArgumentError("sign must be +-1");
    vars_ = std::max<int>(vars_, e.var);
  }
  std::vector<bool> seen(static_cast<std::size_t>(vars_) + 1, false);
  for (const Entry& e : cells_) seen[static_cast<std::size_t>(e.var)] = true;
  for (int v = 1; v <= vars_; ++v)
    if (!seen[static_cast<std::size_t>(v)])
      throw ArgumentError("variable z" + std::to_string(v) + " does not occur (ids must be 1..k)");
  for (const auto& [id, name] : names_)
    if (id < 1 || id > vars_) throw ArgumentError("name table refers to unknown variable");
  // Zero cells are stored canonically so defaulted equality is structural.
  for (Entry& e : cells_)
    if (e.is_zero()) e = Entry::zero();
}

CODMatrix CODMatrix::relabelled(int rows, int cols, std::vector<Entry> cells,
                                const NameTable& names) {
  std::vector<int> labels;
  for (const Entry& e : cells)
    if (!e.is_zero()) labels.push_back(e.var);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  auto new_id = [&](int old) {
    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), old) - labels.begin()) + 1;
  };
  for (Entry& e : cells)
    if (!e.is_zero()) e.var = new_id(e.var);
  NameTable renamed;
  for (const auto& [old, name] : names)
    if (std::binary_search(labels.begin(), labels.end(), old)) renamed.emplace(new_id(old), name);
  return CODMatrix(rows, cols, std::move(cells), std::move(renamed));
}

const Entry& CODMatrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw ArgumentError("cell index out of range");
  return cells_[static_cast<std::size_t>(r) * cols_ + c];
}

std::span<const Entry> CODMatrix::row(int r) const {
  if (r < 0 || r >= rows_) throw ArgumentError("row index out of range");
  return {cells_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
}

F2Vec CODMatrix::zero_pattern(int r) const {
  std::uint64_t bits = 0;
  const auto cells = row(r);
  for (int c = 0; c < cols_; ++c)
    if (!cells[static_cast<std::size_t>(c)].is_zero()) bits |= std::uint64_t{1} << c;
  return F2Vec(cols_, bits);
}

int CODMatrix::row_weight(int r) const { return zero_pattern(r).weight(); }

CODMatrix CODMatrix::select_rows(std::span<const int> rows) const {
  std::vector<Entry> cells;
  cells.reserve(rows.size() * static_cast<std::size_t>(cols_));
  for (int r : rows) {
    const auto src = row(r);
    cells.insert(cells.end(), src.begin(), src.end());
  }
  return relabelled(static_cast<int>(rows.size()), cols_, std::move(cells), names_);
}

bool CODMatrix::same_cells(const CODMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && cells_ == other.cells_;
}

CODMatrix catenate(std::span<const CODMatrix> blocks) {
  if (blocks.empty()) throw ArgumentError("catenation of zero blocks");
  const int cols = blocks.front().cols();
  int rows = 0;
  int offset = 0;
  std::vector<Entry> cells;
  for (const CODMatrix& b : blocks) {
    if (b.cols() != cols) throw ArgumentError("catenated blocks must have equal column count");
    for (Entry e : b.cells()) {
      if (!e.is_zero()) e.var += offset;
      cells.push_back(e);
    }
    rows += b.rows();
    offset += b.vars();
  }
  return CODMatrix(rows, cols, std::move(cells));
}

}  // namespace codforge
