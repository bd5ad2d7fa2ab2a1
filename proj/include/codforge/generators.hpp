#pragma once

#include <map>
#include <variant>
#include <vector>

#include "codforge/cod_matrix.hpp"
#include "codforge/f2vec.hpp"

namespace codforge {

/// Largest n accepted by gen_G (2^(n+1) rows) unless a larger cap is passed.
inline constexpr int kDefaultBasicCap = 16;

/// Sign exponent of cell (alpha, i) of the basic design; alpha has n+1 bits.
///   i even: wt_{i,n+1}(alpha) + i/2
///   i odd:  wt_{i,n+1}(alpha) + (i-1)/2 + alpha(n+1)        (mod 2)
int theta(const F2Vec& alpha, int i, int n);

/// Variable index of cell (alpha, i): alpha ^ alpha(n+1) e ^ e_i. Requires
/// alpha(i) = 1 (PreconditionError otherwise). Bit n+1 of the result is 0.
F2Vec phi(const F2Vec& alpha, int i, int n);

/// Parity of alpha over its even positions; n must be even.
int psi(const F2Vec& alpha, int n);

/// Basic design: rows indexed by every alpha in F_2^{n+1} in increasing
/// value order, [2^{n+1}, n, 2^n]. Variable ids follow the value order of
/// their names. Throws ResourceError when n > cap.
CODMatrix gen_G(int n, int cap = kDefaultBasicCap);

/// Row slice of gen_G(n) on the weight-(w+1) rows with bit n+1 clear followed
/// by the weight-(n-w+2) rows with bit n+1 set: [C(n,w-1)+C(n,w+1), n, C(n,w)].
/// Valid for -1 <= w <= n+1. Built directly, without the full basic design.
CODMatrix gen_Gw(int n, int w);

/// gen_G(n-1) with an extra column L(alpha) = alpha(n) (-1)^psi(alpha) z_{alpha ^ e_n};
/// [2^n, n, 2^{n-1}]. Requires n = 0 mod 4.
CODMatrix gen_H(int n, int cap = kDefaultBasicCap + 1);

/// Row slice of gen_H(n) on the weight-(m+1) rows, n = 2m with m even:
/// [C(n,m+1), n, C(n-1,m)].
CODMatrix gen_Hm(int n);

/// One sign constraint between two padded rows: phi(row_a) * phi(row_b) =
/// (-1)^parity, forced by the Alamouti block on columns `column` and n.
struct ParityEdge {
  int row_a = 0;
  int row_b = 0;
  int column = 0;  // 0-based column of the base design
  int parity = 0;  // 1: opposite signs, 0: equal signs
};

struct PadSuccess {
  std::vector<Entry> column;        // the padded last column, one entry per row
  std::map<int, int> assignment;    // row -> sign, for rows with a nonzero pad
  CODMatrix matrix;                 // base design with the column appended
};

struct PadContradiction {
  std::vector<ParityEdge> cycle;    // closed walk whose parities sum to an odd number
};

using PadOutcome = std::variant<PadSuccess, PadContradiction>;

/// Tries to append a column to gen_Gw(n-1, m), n = 2m with m >= 2, with
/// cells L(alpha) = alpha(n) s(alpha) z_{alpha ^ e_n} for unknown signs s.
/// The Alamouti requirement on every (column i, column n) pair gives a
/// parity constraint between two rows; the system is solved by union-find.
PadOutcome pad_column_attempt(int n);

/// Row labels of gen_Gw(n, w) in matrix row order (vectors of length n+1).
std::vector<F2Vec> gw_row_labels(int n, int w);

}  // namespace codforge
