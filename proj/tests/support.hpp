#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "codforge/cod_matrix.hpp"
#include "codforge/generators.hpp"
#include "codforge/serialize.hpp"

namespace codforge::testing {

// A [4,3,3] design on three variables.
inline const char* const kDesign433 =
    "z1 z2 z3\n"
    "-z2* z1* 0\n"
    "-z3* 0 z1*\n"
    "0 z3* -z2*\n";

// A sign variant of G_3^2, ids 1,2,3 standing for the
// names (1,1,0), (1,0,1), (0,1,1).
inline const char* const kSignedG23 =
    "-z3 z2 z1\n"
    "-z2* -z3* 0\n"
    "-z1* 0 -z3*\n"
    "0 z1* -z2*\n";

inline CODMatrix mat(const std::string& text) { return parse_text(text); }

// Row r of m as text.
inline std::string row_text(const CODMatrix& m, int r) {
  std::string out;
  for (int c = 0; c < m.cols(); ++c) {
    if (c > 0) out += ' ';
    out += entry_text(m.at(r, c));
  }
  return out;
}

// Independent orthogonality oracle: substitutes random Gaussian integers
// for the variables and checks O^H O = (sum |z_j|^2) I in exact integer
// complex arithmetic.
inline bool numeric_cod(const CODMatrix& m, std::uint64_t seed = 1, int trials = 4) {
  using C = std::complex<long long>;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> dist(-7, 7);
  for (int t = 0; t < trials; ++t) {
    std::vector<C> z(static_cast<std::size_t>(m.vars()) + 1);
    long long norm = 0;
    for (int j = 1; j <= m.vars(); ++j) {
      z[static_cast<std::size_t>(j)] = C(dist(rng), dist(rng));
      norm += std::norm(z[static_cast<std::size_t>(j)]);
    }
    auto value = [&](const Entry& e) {
      if (e.is_zero()) return C(0, 0);
      C v = z[static_cast<std::size_t>(e.var)];
      if (e.conj) v = std::conj(v);
      return e.sign < 0 ? -v : v;
    };
    for (int a = 0; a < m.cols(); ++a)
      for (int b = 0; b < m.cols(); ++b) {
        C sum(0, 0);
        for (int r = 0; r < m.rows(); ++r) sum += std::conj(value(m.at(r, a))) * value(m.at(r, b));
        if (sum != C(a == b ? norm : 0, 0)) return false;
      }
  }
  return true;
}

// Pascal's triangle, independent of params::binom.
inline std::int64_t pascal(int n, int r) {
  if (n < 0 || r < 0 || r > n) return 0;
  std::vector<std::int64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::int64_t> next(row.size() + 1, 1);
    for (std::size_t j = 1; j < row.size(); ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(r)];
}

inline int popcount(std::uint64_t v) {
  int c = 0;
  for (; v; v &= v - 1) ++c;
  return c;
}

// First-type designs used by the property suites: every G_n^w and H_n^m,
// plus a few basic and padded designs, for n <= max_n.
inline std::vector<CODMatrix> first_type_corpus(int max_n) {
  std::vector<CODMatrix> out;
  for (int n = 1; n <= max_n; ++n) {
    for (int w = -1; w <= n + 1; ++w) out.push_back(gen_Gw(n, w));
    if (n % 4 == 0) out.push_back(gen_Hm(n));
  }
  for (int n = 1; n <= std::min(max_n, 5); ++n) out.push_back(gen_G(n));
  if (max_n >= 4) out.push_back(gen_H(4));
  return out;
}

}  // namespace codforge::testing
