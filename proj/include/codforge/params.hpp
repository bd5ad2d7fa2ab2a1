#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace codforge {

/// Binomial coefficient with C(n, r) = 0 for r < 0 or r > n (and for n < 0).
/// Throws ResourceError on 64-bit overflow.
std::int64_t binom(int n, int r);

/// Exact nonnegative rational in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// [p, n, k]: delay, antennas, variables.
struct ParamTriple {
  std::int64_t p = 0;
  int n = 0;
  std::int64_t k = 0;

  Rational rate() const { return Rational(k, p); }
  std::string to_string() const;
  friend bool operator==(const ParamTriple&, const ParamTriple&) = default;
};

/// Kind of atomic first-type design: the binomial-weight slice G_n^w of the
/// basic design, or the padded slice H_n^m (n = 0 mod 4 only).
struct AtomicClass {
  enum class Kind { Gw, Hm, Unknown };

  Kind kind = Kind::Unknown;
  int w = 0;  // meaningful for Kind::Gw

  static AtomicClass gw(int w) { return {Kind::Gw, w}; }
  static AtomicClass hm() { return {Kind::Hm, 0}; }
  static AtomicClass unknown() { return {}; }

  /// "Gw{2}", "Hm", "Unknown"
  std::string to_string() const;
  friend bool operator==(const AtomicClass&, const AtomicClass&) = default;
};

/// Multiplicities of atomic classes in a catenation. t[i + 1] counts G_n^i
/// atoms for i = -1 .. floor(n/2); t_h counts H_n^m atoms and is present
/// exactly when n = 0 mod 4. Used both as a feasibility witness and as the
/// equivalence signature of a first-type COD.
struct AtomCounts {
  int n = 0;
  std::vector<std::int64_t> t;
  std::optional<std::int64_t> t_h;

  static AtomCounts zero(int n);

  std::int64_t& at(int i) { return t.at(static_cast<std::size_t>(i + 1)); }
  std::int64_t at(int i) const { return t.at(static_cast<std::size_t>(i + 1)); }
  int max_index() const { return n / 2; }

  /// Delay and variable count of the catenation these counts describe.
  ParamTriple params() const;
  /// The top-class count in the merged bookkeeping where a double-size
  /// G_n^{n/2} atom counts 2 and an H_n^m atom counts 1 (n = 0 mod 4).
  std::int64_t merged_top_count() const;
  /// "t_-1=0 t_0=0 t_1=1" (nonzero entries only, "empty" when all zero)
  std::string to_string() const;

  friend bool operator==(const AtomCounts&, const AtomCounts&) = default;
  friend auto operator<=>(const AtomCounts& a, const AtomCounts& b) {
    if (auto c = a.t <=> b.t; c != 0) return c;
    return a.t_h.value_or(0) <=> b.t_h.value_or(0);
  }
};

using ParamSolution = AtomCounts;
using Signature = AtomCounts;

/// Parameters of G_n^w: [C(n,w-1) + C(n,w+1), n, C(n,w)].
ParamTriple gw_params(int n, int w);
/// Parameters of H_n^m: [C(n,m+1), n, C(n-1,m)] with n = 2m.
ParamTriple hm_params(int n);

/// All atomic first-type classes for n antennas: G_n^i for i = -1..floor(n/2),
/// followed by H_n^m when n = 0 mod 4.
std::vector<std::pair<AtomicClass, ParamTriple>> atomic_params(int n);

/// Every nonnegative multiplicity vector realising [p, n, k], in
/// lexicographic order of (t_-1, t_0, ..., t_h). Empty means infeasible.
std::vector<ParamSolution> feasible(std::int64_t p, int n, std::int64_t k);

/// Maximal rate (m+1)/(2m) for n = 2m or 2m-1.
Rational max_rate(int n);
/// Minimal delay at maximal rate: C(2m, m-1), doubled when n = 2 mod 4.
std::int64_t min_delay(int n);

struct TradeoffRow {
  AtomicClass cls;
  ParamTriple params;
};

/// One row per w = 0..floor(n/2) using the G_n^w parameters, plus an H_n^m
/// row when n = 0 mod 4.
std::vector<TradeoffRow> tradeoff_table(int n);

/// Decimal rendering with 4 significant digits.
std::string format_decimal(const Rational& r);

}  // namespace codforge
