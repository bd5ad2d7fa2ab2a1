#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "codforge/f2vec.hpp"

namespace codforge {

/// One cell of a design: zero, or +-z_v / +-z_v^*.
struct Entry {
  std::int32_t var = 0;  // 0 encodes the zero entry, otherwise 1..k
  std::int8_t sign = 1;  // +1 or -1
  bool conj = false;

  static constexpr Entry zero() { return {}; }
  static constexpr Entry make(int var, int sign = 1, bool conj = false) {
    return {static_cast<std::int32_t>(var), static_cast<std::int8_t>(sign < 0 ? -1 : 1), conj};
  }

  constexpr bool is_zero() const { return var == 0; }
  constexpr Entry negated() const { return is_zero() ? *this : make(var, -sign, conj); }
  constexpr Entry conjugated() const { return is_zero() ? *this : make(var, sign, !conj); }

  friend constexpr bool operator==(const Entry& a, const Entry& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    return a.var == b.var && a.sign == b.sign && a.conj == b.conj;
  }
};

/// p x n grid of entries over variables 1..k, with an optional name table
/// giving each variable its F_2 index vector.
///
/// Rows and columns are 0-based. Construction checks that every variable id
/// lies in 1..k and that every id in 1..k occurs; it does NOT check the
/// orthogonality identity (see is_cod).
class CODMatrix {
 public:
  using NameTable = std::map<int, F2Vec>;

  CODMatrix() = default;
  CODMatrix(int rows, int cols, std::vector<Entry> cells, NameTable names = {});

  /// Builds a matrix from cells whose variable labels are arbitrary positive
  /// integers, relabelling them 1..k in ascending label order. Names keyed by
  /// the old labels follow their variables.
  static CODMatrix relabelled(int rows, int cols, std::vector<Entry> cells,
                              const NameTable& names = {});

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  int vars() const noexcept { return vars_; }

  const Entry& at(int r, int c) const;
  std::span<const Entry> row(int r) const;
  const std::vector<Entry>& cells() const noexcept { return cells_; }
  const NameTable& names() const noexcept { return names_; }

  /// Indicator of the nonzero cells of row r, as a vector of length n
  /// (bit c+1 is column c).
  F2Vec zero_pattern(int r) const;
  int row_weight(int r) const;

  /// Submatrix on the given rows (in the given order). Variables are
  /// relabelled 1..k' preserving their relative order.
  CODMatrix select_rows(std::span<const int> rows) const;

  bool same_cells(const CODMatrix& other) const;
  friend bool operator==(const CODMatrix&, const CODMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  int vars_ = 0;
  std::vector<Entry> cells_;
  NameTable names_;
};

inline F2Vec zero_pattern(const CODMatrix& m, int r) { return m.zero_pattern(r); }

/// Stacks designs with equal column count, renaming variables apart. Name
/// tables are dropped because names from different blocks may collide.
CODMatrix catenate(std::span<const CODMatrix> blocks);

}  // namespace codforge
