#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace codforge {

/// Fixed-length bit vector over F_2 with 1 <= len <= 64.
///
/// Positions are 1-based, position i carries significance 2^(i-1), so the
/// numeric value orders vectors with position len as the most significant
/// bit. Comparison is by value; vectors of different length compare by
/// length first.
class F2Vec {
 public:
  static constexpr int kMaxLen = 64;

  /// Empty placeholder (length 0). Only useful as a default member value.
  F2Vec() = default;
  /// Throws ArgumentError if len is outside [1, 64] or bits has a set bit
  /// beyond len.
  F2Vec(int len, std::uint64_t bits);

  static F2Vec zeros(int len);
  static F2Vec ones(int len);
  static F2Vec unit(int len, int i);

  int size() const noexcept { return len_; }
  std::uint64_t value() const noexcept { return bits_; }

  bool test(int i) const;
  /// Bit i as 0/1, unchecked position (caller guarantees 1 <= i <= len).
  int bit(int i) const noexcept { return static_cast<int>((bits_ >> (i - 1)) & 1U); }

  int weight() const noexcept;
  int weight_range(int s, int t) const;

  F2Vec flipped(int i) const;
  F2Vec operator^(const F2Vec& other) const;
  F2Vec& operator^=(const F2Vec& other);

  friend bool operator==(const F2Vec&, const F2Vec&) = default;
  friend std::strong_ordering operator<=>(const F2Vec& a, const F2Vec& b) {
    if (auto c = a.len_ <=> b.len_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

  /// "(b1,b2,...,bL)"
  std::string to_string() const;
  /// Inverse of to_string; throws ArgumentError on malformed text.
  static F2Vec parse(std::string_view text);

 private:
  int len_ = 0;
  std::uint64_t bits_ = 0;
};

inline F2Vec unit(int len, int i) { return F2Vec::unit(len, i); }
inline int weight_range(const F2Vec& v, int s, int t) { return v.weight_range(s, t); }

/// All C(len, w) vectors of weight w in increasing value order. Returns an
/// empty sequence when w is outside [0, len].
std::vector<F2Vec> enumerate_weight(int len, int w);

/// Rank of a weight-w word among all weight-w words of the same length in
/// increasing value order (combinatorial number system).
std::uint64_t colex_rank(std::uint64_t bits);

}  // namespace codforge
