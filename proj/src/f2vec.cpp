#include "codforge/f2vec.hpp"

#include <bit>
#include <cctype>

#include "codforge/errors.hpp"
#include "codforge/params.hpp"

namespace codforge {

namespace {

std::uint64_t low_mask(int len) {
  return len >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << len) - 1);
}

void check_len(int len) {
  if (len < 1 || len > F2Vec::kMaxLen)
    throw ArgumentError("F2Vec length must lie in [1, 64], got " + std::to_string(len));
}

}  // namespace

F2Vec::F2Vec(int len, std::uint64_t bits) : len_(len), bits_(bits) {
  check_len(len);
  if ((bits & ~low_mask(len)) != 0)
    throw ArgumentError("F2Vec bits exceed length " + std::to_string(len));
}

F2Vec F2Vec::zeros(int len) { return F2Vec(len, 0); }

F2Vec F2Vec::ones(int len) {
  check_len(len);
  return F2Vec(len, low_mask(len));
}

F2Vec F2Vec::unit(int len, int i) {
  check_len(len);
  if (i < 1 || i > len)
    throw ArgumentError("unit vector position " + std::to_string(i) + " outside [1, " +
                        std::to_string(len) + "]");
  return F2Vec(len, std::uint64_t{1} << (i - 1));
}

bool F2Vec::test(int i) const {
  if (i < 1 || i > len_) throw ArgumentError("bit position out of range");
  return bit(i) != 0;
}

int F2Vec::weight() const noexcept { return std::popcount(bits_); }

int F2Vec::weight_range(int s, int t) const {
  if (s < 1 || t > len_ || s > t)
    throw ArgumentError("weight range [" + std::to_string(s) + ", " + std::to_string(t) +
                        "] invalid for length " + std::to_string(len_));
  const std::uint64_t mask = low_mask(t) & ~low_mask(s - 1);
  return std::popcount(bits_ & mask);
}

F2Vec F2Vec::flipped(int i) const {
  if (i < 1 || i > len_) throw ArgumentError("bit position out of range");
  return F2Vec(len_, bits_ ^ (std::uint64_t{1} << (i - 1)));
}

F2Vec F2Vec::operator^(const F2Vec& other) const {
  F2Vec out = *this;
  out ^= other;
  return out;
}

F2Vec& F2Vec::operator^=(const F2Vec& other) {
  if (len_ != other.len_) throw ArgumentError("xor of F2Vec with different lengths");
  bits_ ^= other.bits_;
  return *this;
}

std::string F2Vec::to_string() const {
  std::string out = "(";
  for (int i = 1; i <= len_; ++i) {
    if (i > 1) out += ',';
    out += static_cast<char>('0' + bit(i));
  }
  out += ')';
  return out;
}

F2Vec F2Vec::parse(std::string_view text) {
  std::uint64_t bits = 0;
  int len = 0;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '(') throw ArgumentError("F2Vec text must start with '('");
  ++pos;
  while (true) {
    skip_ws();
    if (pos >= text.size()) throw ArgumentError("unterminated F2Vec text");
    const char c = text[pos];
    if (c != '0' && c != '1') throw ArgumentError("F2Vec digit must be 0 or 1");
    if (len == kMaxLen) throw ArgumentError("F2Vec longer than 64 bits");
    if (c == '1') bits |= std::uint64_t{1} << len;
    ++len;
    ++pos;
    skip_ws();
    if (pos >= text.size()) throw ArgumentError("unterminated F2Vec text");
    if (text[pos] == ')') {
      ++pos;
      break;
    }
    if (text[pos] != ',') throw ArgumentError("expected ',' in F2Vec text");
    ++pos;
  }
  skip_ws();
  if (pos != text.size()) throw ArgumentError("trailing characters after F2Vec");
  return F2Vec(len, bits);
}

std::vector<F2Vec> enumerate_weight(int len, int w) {
  check_len(len);
  std::vector<F2Vec> out;
  if (w < 0 || w > len) return out;
  out.reserve(static_cast<std::size_t>(binom(len, w)));
  if (w == 0) {
    out.push_back(F2Vec::zeros(len));
    return out;
  }
  const std::uint64_t limit = low_mask(len);
  std::uint64_t v = low_mask(w);
  while (true) {
    out.emplace_back(len, v);
    if (v == (limit & ~low_mask(len - w))) break;
    // next word of the same weight (Gosper's hack)
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
  return out;
}

std::uint64_t colex_rank(std::uint64_t bits) {
  std::uint64_t rank = 0;
  int j = 1;
  while (bits != 0) {
    const int pos = std::countr_zero(bits);
    rank += static_cast<std::uint64_t>(binom(pos, j));
    ++j;
    bits &= bits - 1;
  }
  return rank;
}

}  // namespace codforge
