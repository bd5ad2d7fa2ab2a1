#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "codforge/cod_matrix.hpp"

namespace codforge {

/// Formal symbol z_v (conj = false) or z_v^* (conj = true), packed as
/// 2 * v + conj. z_v and z_v^* are independent commuting symbols.
struct Symbol {
  std::uint32_t code = 0;

  static Symbol of(int var, bool conj) { return {static_cast<std::uint32_t>(2 * var + (conj ? 1 : 0))}; }
  int var() const { return static_cast<int>(code / 2); }
  bool conj() const { return (code & 1U) != 0; }

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// Degree-2 monomial in canonical (sorted) order.
struct Monomial {
  Symbol lo;
  Symbol hi;

  static Monomial of(Symbol a, Symbol b) { return a <= b ? Monomial{a, b} : Monomial{b, a}; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Integer combination of degree-2 monomials, kept sorted with no zero
/// coefficients.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    std::int64_t coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial() = default;
  /// Collapses duplicate monomials and drops cancelled terms.
  static Polynomial from_terms(std::vector<Term> terms);
  /// z_1 z_1^* + ... + z_k z_k^*
  static Polynomial norm_sum(int k);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  Polynomial operator-(const Polynomial& other) const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// e.g. "z1 z1* + z2 z2*", "-2 z1 z3*", "0"
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// The n x n formal Gram matrix O^H O.
class GramMatrix {
 public:
  GramMatrix(int n, std::vector<Polynomial> cells) : n_(n), cells_(std::move(cells)) {}
  int size() const noexcept { return n_; }
  const Polynomial& at(int a, int b) const {
    return cells_.at(static_cast<std::size_t>(a) * n_ + b);
  }

 private:
  int n_;
  std::vector<Polynomial> cells_;
};

/// Exact sum_r conj(m[r,a]) * m[r,b] for one column pair.
Polynomial gram_cell(const CODMatrix& m, int a, int b);
GramMatrix symbolic_gram(const CODMatrix& m);

struct CodVerdict {
  bool ok = true;
  // First offending Gram cell in row-major order and its residual
  // (actual minus expected); -1 when ok.
  int row = -1;
  int col = -1;
  Polynomial residual;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks O^H O = (|z_1|^2 + ... + |z_k|^2) I exactly.
CodVerdict is_cod(const CODMatrix& m);

/// True iff rows r1, r2 and columns c1, c2 form an Alamouti 2x2 up to
/// negation and conjugation of each of its two variables.
bool is_alamouti(const CODMatrix& m, int r1, int r2, int c1, int c2);

/// Alternative orthogonality check for designs where every variable occurs
/// exactly once per column: every pair of nonzero cells in a row must lie
/// in an Alamouti 2x2. Throws PreconditionError if a variable misses a
/// column or repeats in one.
bool alamouti_covered(const CODMatrix& m);

struct FirstTypeVerdict {
  bool ok = true;
  // Rows r1, r2 and columns c1, c2 with m[r1,c1], m[r2,c2] the same variable
  // with opposite conjugation and m[r1,c2] = m[r2,c1] = 0.
  int r1 = -1, r2 = -1, c1 = -1, c2 = -1, var = 0;

  explicit operator bool() const noexcept { return ok; }
};

/// Throws PreconditionError when m is not a COD.
FirstTypeVerdict is_first_type(const CODMatrix& m);

bool is_conjugation_separated(const CODMatrix& m);

/// Block arrangement of the n rows holding variable j.
///
/// After reordering rows by row_order, columns by col_order, and multiplying
/// each reordered row by row_signs, the block reads
///   [ z_j I_{n1}   M_j        ]
///   [ -M_j^H       z_j^* I_n2 ]
struct BjForm {
  int var = 0;
  int n1 = 0;  // plain occurrences of z_j
  int n2 = 0;  // conjugated occurrences
  std::vector<int> row_order;
  std::vector<int> col_order;
  std::vector<int> row_signs;
  std::vector<Entry> mj;  // n1 x n2, row-major

  const Entry& m_at(int a, int b) const { return mj.at(static_cast<std::size_t>(a) * n2 + b); }
  bool mj_has_zero() const;
};

/// Throws ArgumentError for an unknown variable and StructuralError when the
/// rows holding z_j cannot be arranged into the block form (the input is
/// not a COD).
BjForm extract_bj(const CODMatrix& m, int var);

}  // namespace codforge
