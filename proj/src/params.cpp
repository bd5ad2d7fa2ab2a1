#include "codforge/params.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "codforge/errors.hpp"

namespace codforge {

std::int64_t binom(int n, int r) {
  if (n < 0 || r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  __int128 acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > INT64_MAX) throw ResourceError("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::int64_t>(acc);
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ArgumentError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g == 0 ? 0 : num / g;
  den_ = g == 0 ? 1 : den / g;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ParamTriple::to_string() const {
  return "[" + std::to_string(p) + ", " + std::to_string(n) + ", " + std::to_string(k) + "]";
}

std::string AtomicClass::to_string() const {
  switch (kind) {
    case Kind::Gw:
      return "Gw{" + std::to_string(w) + "}";
    case Kind::Hm:
      return "Hm";
    case Kind::Unknown:
      break;
  }
  return "Unknown";
}

AtomCounts AtomCounts::zero(int n) {
  if (n < 1) throw ArgumentError("n must be positive");
  AtomCounts out;
  out.n = n;
  out.t.assign(static_cast<std::size_t>(n / 2 + 2), 0);
  if (n % 4 == 0) out.t_h = 0;
  return out;
}

ParamTriple AtomCounts::params() const {
  ParamTriple out{0, n, 0};
  for (int i = -1; i <= max_index(); ++i) {
    const ParamTriple atom = gw_params(n, i);
    out.p += at(i) * atom.p;
    out.k += at(i) * atom.k;
  }
  if (t_h) {
    const ParamTriple atom = hm_params(n);
    out.p += *t_h * atom.p;
    out.k += *t_h * atom.k;
  }
  return out;
}

std::int64_t AtomCounts::merged_top_count() const {
  return 2 * at(max_index()) + t_h.value_or(0);
}

std::string AtomCounts::to_string() const {
  std::string out;
  for (int i = -1; i <= max_index(); ++i) {
    if (at(i) == 0) continue;
    if (!out.empty()) out += ' ';
    out += "t_" + std::to_string(i) + "=" + std::to_string(at(i));
  }
  if (t_h && *t_h != 0) {
    if (!out.empty()) out += ' ';
    out += "t_h=" + std::to_string(*t_h);
  }
  return out.empty() ? "empty" : out;
}

ParamTriple gw_params(int n, int w) {
  if (n < 1) throw ArgumentError("n must be positive");
  return {binom(n, w - 1) + binom(n, w + 1), n, binom(n, w)};
}

ParamTriple hm_params(int n) {
  if (n < 2 || n % 2 != 0) throw ArgumentError("H_n^m needs even n");
  const int m = n / 2;
  return {binom(n, m + 1), n, binom(n - 1, m)};
}

std::vector<std::pair<AtomicClass, ParamTriple>> atomic_params(int n) {
  if (n < 1) throw ArgumentError("n must be positive");
  std::vector<std::pair<AtomicClass, ParamTriple>> out;
  for (int i = -1; i <= n / 2; ++i) out.emplace_back(AtomicClass::gw(i), gw_params(n, i));
  if (n % 4 == 0) out.emplace_back(AtomicClass::hm(), hm_params(n));
  return out;
}

namespace {

struct FeasibleSearch {
  std::vector<ParamTriple> atoms;  // index 0 is the zero-row atom [1, n, 0]
  std::vector<std::int64_t> counts;
  std::vector<std::vector<std::int64_t>> found;

  // Assigns atoms[idx] .. atoms[1]; the zero-row count absorbs the rest.
  void run(std::size_t idx, std::int64_t rem_p, std::int64_t rem_k) {
    if (idx == 0) {
      if (rem_k == 0) {
        counts[0] = rem_p;
        found.push_back(counts);
      }
      return;
    }
    const ParamTriple& atom = atoms[idx];
    std::int64_t limit = rem_p / atom.p;
    if (atom.k > 0) limit = std::min(limit, rem_k / atom.k);
    for (std::int64_t c = 0; c <= limit; ++c) {
      counts[idx] = c;
      run(idx - 1, rem_p - c * atom.p, rem_k - c * atom.k);
    }
    counts[idx] = 0;
  }
};

}  // namespace

std::vector<ParamSolution> feasible(std::int64_t p, int n, std::int64_t k) {
  if (p < 1 || n < 1 || k < 0) throw ArgumentError("feasible needs p >= 1, n >= 1, k >= 0");
  FeasibleSearch search;
  for (const auto& [cls, triple] : atomic_params(n)) search.atoms.push_back(triple);
  search.counts.assign(search.atoms.size(), 0);
  search.run(search.atoms.size() - 1, p, k);

  std::vector<ParamSolution> out;
  out.reserve(search.found.size());
  const std::size_t g_classes = static_cast<std::size_t>(n / 2 + 2);
  for (const auto& c : search.found) {
    ParamSolution sol = AtomCounts::zero(n);
    std::copy_n(c.begin(), g_classes, sol.t.begin());
    if (sol.t_h) sol.t_h = c[g_classes];
    out.push_back(std::move(sol));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational max_rate(int n) {
  if (n < 1) throw ArgumentError("n must be positive");
  const int m = (n + 1) / 2;
  return Rational(m + 1, 2 * m);
}

std::int64_t min_delay(int n) {
  if (n < 1) throw ArgumentError("n must be positive");
  const int m = (n + 1) / 2;
  const std::int64_t base = binom(2 * m, m - 1);
  return n % 4 == 2 ? 2 * base : base;
}

std::vector<TradeoffRow> tradeoff_table(int n) {
  if (n < 1) throw ArgumentError("n must be positive");
  std::vector<TradeoffRow> out;
  for (int w = 0; w <= n / 2; ++w) out.push_back({AtomicClass::gw(w), gw_params(n, w)});
  if (n % 4 == 0) out.push_back({AtomicClass::hm(), hm_params(n)});
  return out;
}

std::string format_decimal(const Rational& r) {
  std::ostringstream os;
  os << std::setprecision(4) << r.to_double();
  return os.str();
}

}  // namespace codforge
