#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "codforge/errors.hpp"
#include "codforge/generators.hpp"
#include "codforge/params.hpp"
#include "codforge/structure.hpp"
#include "codforge/verify.hpp"
#include "support.hpp"

namespace codforge {
namespace {

using testing::kDesign433;
using testing::kSignedG23;
using testing::mat;
using testing::row_text;

ParamTriple params_of(const CODMatrix& m) { return {m.rows(), m.cols(), m.vars()}; }

std::multiset<std::uint64_t> patterns(const CODMatrix& m) {
  std::multiset<std::uint64_t> out;
  for (int r = 0; r < m.rows(); ++r) out.insert(m.zero_pattern(r).value());
  return out;
}

TEST(ApplyEquiv, Examples) {
  const CODMatrix m = mat(kDesign433);
  const CODMatrix neg = apply_equiv(m, NegRow{1});
  EXPECT_EQ(row_text(neg, 1), "z2* -z1* 0");
  EXPECT_TRUE(is_cod(neg));

  const CODMatrix conj = apply_equiv(m, ConjVar{1});
  EXPECT_EQ(row_text(conj, 0), "z1* z2 z3");
  EXPECT_EQ(row_text(conj, 1), "-z2* z1 0");
  EXPECT_EQ(row_text(conj, 2), "-z3* 0 z1");
  EXPECT_TRUE(is_cod(conj));

  EXPECT_EQ(apply_equiv(m, ColPerm{{0, 1, 2}}), m);
  EXPECT_EQ(row_text(apply_equiv(m, ColPerm{{2, 0, 1}}), 0), "z3 z1 z2");
  EXPECT_EQ(row_text(apply_equiv(m, RowPerm{{3, 0, 1, 2}}), 0), "0 z3* -z2*");
  EXPECT_EQ(row_text(apply_equiv(m, NegVar{2}), 3), "0 z3* z2*");
  EXPECT_EQ(row_text(apply_equiv(m, RenameVar{1, 3}), 0), "z3 z2 z1");
  EXPECT_EQ(row_text(apply_equiv(m, NegCol{2}), 0), "z1 z2 -z3");
}

TEST(ApplyEquiv, InvalidIndices) {
  const CODMatrix m = mat(kDesign433);
  EXPECT_THROW(apply_equiv(m, RowPerm{{0, 1, 2}}), ArgumentError);
  EXPECT_THROW(apply_equiv(m, RowPerm{{0, 1, 1, 2}}), ArgumentError);
  EXPECT_THROW(apply_equiv(m, ColPerm{{0, 1, 3}}), ArgumentError);
  EXPECT_THROW(apply_equiv(m, ConjVar{4}), ArgumentError);
  EXPECT_THROW(apply_equiv(m, NegVar{0}), ArgumentError);
  EXPECT_THROW(apply_equiv(m, RenameVar{2, 2}), ArgumentError);
  EXPECT_THROW(apply_equiv(m, NegRow{4}), ArgumentError);
  EXPECT_THROW(apply_equiv(m, NegCol{-1}), ArgumentError);
}

TEST(ApplyEquiv, NamesFollowRenamedVariables) {
  const CODMatrix g = gen_Gw(3, 1);
  const CODMatrix r = apply_equiv(g, RenameVar{1, 3});
  EXPECT_EQ(r.names().at(1), g.names().at(3));
  EXPECT_EQ(r.names().at(3), g.names().at(1));
}

TEST(ApplyEquiv, OpDisplay) {
  EXPECT_EQ(to_string(EquivOp{RowPerm{{1, 0}}}), "RowPerm(2,1)");
  EXPECT_EQ(to_string(EquivOp{NegRow{0}}), "NegRow(1)");
  EXPECT_EQ(to_string(EquivOp{RenameVar{1, 4}}), "RenameVar(1,4)");
  EXPECT_EQ(to_json(EquivOp{NegCol{2}}), "{\"op\":\"NegCol\",\"col\":3}");
  EXPECT_EQ(to_json(EquivOp{ColPerm{{1, 0}}}), "{\"op\":\"ColPerm\",\"perm\":[2,1]}");
}

// Every operation keeps the COD identity, first type, the signature, and
// the zero-pattern multiset up to the column permutation applied.
TEST(ApplyEquiv, PreservesInvariants) {
  std::mt19937_64 rng(3);
  for (const CODMatrix& m : testing::first_type_corpus(5)) {
    const Signature sig = signature(m);
    for (int trial = 0; trial < 10; ++trial) {
      const Transcript ops = random_ops(m, 1, rng);
      const CODMatrix out = apply_equiv(m, ops.front());
      ASSERT_TRUE(is_cod(out));
      ASSERT_TRUE(is_first_type(out));
      ASSERT_EQ(signature(out), sig);
      CODMatrix expected_patterns = m;
      if (const auto* cp = std::get_if<ColPerm>(&ops.front())) expected_patterns = apply_equiv(m, *cp);
      ASSERT_EQ(patterns(out), patterns(expected_patterns));
    }
  }
}

TEST(Decompose, TwoColumnExample) {
  const CODMatrix m = mat("z1 z2\n-z2* z1*\n-z3* 0\n0 z3*\n");
  const auto parts = decompose_atomic(m);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].rows, (std::vector<int>{0, 1}));
  EXPECT_EQ(parts[1].rows, (std::vector<int>{2, 3}));
  EXPECT_EQ(parts[0].matrix, mat("z1 z2\n-z2* z1*"));
  EXPECT_EQ(parts[1].matrix, mat("-z1* 0\n0 z1*"));
  EXPECT_EQ(parts[1].cls, AtomicClass::gw(0));
}

TEST(Decompose, CatenatedSlices) {
  const std::vector<CODMatrix> blocks{gen_Gw(4, 1), gen_Gw(4, 2)};
  const auto parts = decompose_atomic(catenate(blocks));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(params_of(parts[0].matrix), (ParamTriple{7, 4, 4}));
  EXPECT_EQ(params_of(parts[1].matrix), (ParamTriple{8, 4, 6}));
  EXPECT_EQ(parts[0].cls, AtomicClass::gw(1));
  EXPECT_EQ(parts[1].cls, AtomicClass::gw(2));
}

TEST(Decompose, ZeroRowsStandAlone) {
  const auto parts = decompose_atomic(mat("0 0\nz1 z2\n0 0\n-z2* z1*"));
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0].rows, (std::vector<int>{0}));
  EXPECT_EQ(parts[1].rows, (std::vector<int>{1, 3}));
  EXPECT_EQ(parts[2].rows, (std::vector<int>{2}));
  EXPECT_EQ(parts[0].cls, AtomicClass::gw(-1));
}

TEST(Decompose, RejectsNonCod) { EXPECT_THROW(decompose_atomic(mat("z1 z2\nz2 z1")), PreconditionError); }

// Shuffled catenations of renamed atoms: the parts are a partition of the
// rows, each part is a COD, and the classes are the catenated multiset.
TEST(Decompose, RandomCatenationsPartitionRows) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    std::vector<CODMatrix> blocks;
    std::multiset<std::string> expected;
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int b = 0; b < count; ++b) {
      const int w = static_cast<int>(rng() % (n / 2 + 2)) - 1;
      blocks.push_back(gen_Gw(n, w));
      expected.insert(AtomicClass::gw(w).to_string());
    }
    CODMatrix m = catenate(blocks);
    m = apply_all(m, random_ops(m, 10, rng));
    const auto parts = decompose_atomic(m);
    std::vector<int> seen;
    std::multiset<std::string> got;
    for (const AtomicPart& part : parts) {
      EXPECT_TRUE(std::is_sorted(part.rows.begin(), part.rows.end()));
      EXPECT_TRUE(is_cod(part.matrix));
      seen.insert(seen.end(), part.rows.begin(), part.rows.end());
      got.insert(part.cls.to_string());
    }
    std::sort(seen.begin(), seen.end());
    std::vector<int> all(static_cast<std::size_t>(m.rows()));
    std::iota(all.begin(), all.end(), 0);
    EXPECT_EQ(seen, all);
    EXPECT_EQ(got, expected);
    for (std::size_t i = 1; i < parts.size(); ++i) EXPECT_LT(parts[i - 1].rows.front(), parts[i].rows.front());

    std::vector<CODMatrix> again;
    for (const AtomicPart& part : parts) again.push_back(part.matrix);
    EXPECT_EQ(signature(catenate(again)), signature(m));
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_atomic(mat(kDesign433), 3), AtomicClass::gw(1));
  EXPECT_EQ(classify_atomic(gen_Gw(3, 2), 3), AtomicClass::gw(1));
  EXPECT_EQ(classify_atomic(mat("-z1* 0\n0 z1*"), 2), AtomicClass::gw(0));
  EXPECT_EQ(classify_atomic(gen_Hm(4), 4), AtomicClass::hm());
  EXPECT_EQ(classify_atomic(gen_Gw(4, 2), 4), AtomicClass::gw(2));
  EXPECT_EQ(classify_atomic(mat("0 0 0"), 3), AtomicClass::gw(-1));
  EXPECT_EQ(classify_atomic(mat("z1 z2\n-z2* z1*\n0 0"), 2), AtomicClass::unknown());
  EXPECT_THROW(classify_atomic(mat(kDesign433), 4), ArgumentError);
}

// Delay of an atomic part is a multiple of the slice delay for its row weight.
TEST(Classify, MultiplicityLaw) {
  for (const CODMatrix& m : testing::first_type_corpus(8)) {
    const int n = m.cols();
    for (const AtomicPart& part : decompose_atomic(m)) {
      int w = n + 1;
      for (int r = 0; r < part.matrix.rows(); ++r) w = std::min(w, part.matrix.row_weight(r) - 1);
      const std::int64_t unit =
          2 * w == n ? binom(n, w - 1) : binom(n, w - 1) + binom(n, w + 1);
      ASSERT_GT(unit, 0);
      EXPECT_EQ(part.matrix.rows() % unit, 0) << n << " " << w;
      EXPECT_NE(part.cls, AtomicClass::unknown());
    }
  }
}

TEST(Canonicalize, SignedG23ReachesSlice) {
  const CODMatrix shown = mat(kSignedG23);
  const CanonicalResult res = canonicalize_atomic(shown, 3);
  EXPECT_EQ(res.cls, AtomicClass::gw(1));
  EXPECT_EQ(res.matrix, gen_Gw(3, 1));
  EXPECT_TRUE(apply_all(shown, res.transcript).same_cells(gen_Gw(3, 1)));

  const auto ops = align_to(shown, gen_Gw(3, 2));
  ASSERT_TRUE(ops.has_value());
  EXPECT_FALSE(ops->empty());
  EXPECT_TRUE(apply_all(shown, *ops).same_cells(gen_Gw(3, 2)));
}

TEST(Canonicalize, CanonicalInputGivesIdentity) {
  for (int n = 1; n <= 6; ++n) {
    for (int w = -1; w <= n / 2; ++w) {
      const CanonicalResult res = canonicalize_atomic(gen_Gw(n, w), n);
      EXPECT_EQ(res.cls, AtomicClass::gw(w));
      EXPECT_TRUE(res.transcript.empty()) << n << " " << w;
    }
  }
  EXPECT_TRUE(canonicalize_atomic(gen_Hm(4), 4).transcript.empty());
  EXPECT_TRUE(canonicalize_atomic(gen_Hm(8), 8).transcript.empty());
}

TEST(Canonicalize, ScrambledRoundTrip) {
  std::mt19937_64 rng(2024);
  const CODMatrix g = gen_Gw(5, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const Transcript scramble = random_ops(g, 25, rng);
    const CODMatrix input = apply_all(g, scramble);
    const CanonicalResult res = canonicalize_atomic(input, 5);
    EXPECT_EQ(res.matrix, g);
    EXPECT_TRUE(apply_all(input, res.transcript).same_cells(g));
    for (const EquivOp& op : res.transcript) EXPECT_FALSE(std::holds_alternative<NegCol>(op));
  }
}

TEST(Canonicalize, FoldedSlicesReachTheirMirror) {
  std::mt19937_64 rng(8);
  for (int n = 1; n <= 6; ++n)
    for (int w = n / 2 + 1; w <= n + 1; ++w) {
      const CODMatrix g = gen_Gw(n, w);
      const CODMatrix input = apply_all(g, random_ops(g, 15, rng));
      const CanonicalResult res = canonicalize_atomic(input, n);
      EXPECT_EQ(res.cls, AtomicClass::gw(n - w));
      EXPECT_TRUE(apply_all(input, res.transcript).same_cells(gen_Gw(n, n - w)));
      const auto back = align_to(input, g);
      ASSERT_TRUE(back.has_value());
      EXPECT_TRUE(apply_all(input, *back).same_cells(g));
    }
}

TEST(Canonicalize, RejectsOtherDesigns) {
  EXPECT_THROW(canonicalize_atomic(mat("z1 z2\n-z2* z1*\n0 0"), 2), ClassificationError);
  // diag(z, z*) has the parameters of G_2^0 but is not of the first type.
  EXPECT_THROW(canonicalize_atomic(mat("z1 0\n0 z1*"), 2), StructuralError);
  EXPECT_EQ(canonicalize_atomic(mat("-z1* 0\n0 z1*"), 2).cls, AtomicClass::gw(0));
}

// Maximal-rate, minimal-delay atoms all canonicalize to one design.
TEST(Canonicalize, MaximalRateMinimalDelayIsUnique) {
  std::mt19937_64 rng(99);
  for (int n = 2; n <= 8; ++n) {
    const int m = (n + 1) / 2;
    std::vector<CODMatrix> sources;
    if (n % 4 == 0) {
      sources.push_back(gen_Hm(n));
      sources.push_back(std::get<PadSuccess>(pad_column_attempt(n)).matrix);
    } else {
      sources.push_back(gen_Gw(n, m));
      sources.push_back(gen_Gw(n, n - m));
    }
    const CODMatrix expected = n % 4 == 0 ? gen_Hm(n) : gen_Gw(n, n / 2);
    for (const CODMatrix& src : sources) {
      ASSERT_EQ(src.rows(), min_delay(n));
      ASSERT_EQ(Rational(src.vars(), src.rows()), max_rate(n));
      for (int trial = 0; trial < 5; ++trial) {
        const CODMatrix input = apply_all(src, random_ops(src, 20, rng));
        EXPECT_EQ(canonicalize_atomic(input, n).matrix, expected) << n;
      }
    }
  }
}

TEST(Signature, Examples) {
  EXPECT_EQ(signature(gen_Gw(3, 2)).to_string(), "t_1=1");
  EXPECT_EQ(signature(mat(kDesign433)).to_string(), "t_1=1");
  const std::vector<CODMatrix> two{gen_Gw(4, 1), gen_Gw(4, 1)};
  EXPECT_EQ(signature(catenate(two)).to_string(), "t_1=2");
  EXPECT_EQ(signature(mat("0 0 0")).to_string(), "t_-1=1");
  EXPECT_EQ(signature(gen_Hm(8)).to_string(), "t_h=1");
  EXPECT_EQ(signature(gen_Gw(6, 3)).to_string(), "t_3=1");
  EXPECT_THROW(signature(mat("z1 0\n0 z1*")), ClassificationError);
}

TEST(Signature, AccountsForParameters) {
  for (const CODMatrix& m : testing::first_type_corpus(8)) {
    const Signature s = signature(m);
    EXPECT_EQ(s.params(), params_of(m));
  }
}

TEST(Signature, Json) {
  EXPECT_EQ(signature_json(signature(gen_Gw(3, 2))), "{\"n\":3,\"t\":{\"-1\":0,\"0\":0,\"1\":1}}");
  EXPECT_EQ(signature_json(signature(gen_Hm(4))), "{\"n\":4,\"t\":{\"-1\":0,\"0\":0,\"1\":0,\"2\":0},\"t_h\":1}");
}

TEST(Equivalent, Examples) {
  EXPECT_TRUE(equivalent(gen_Gw(3, 2), mat(kSignedG23)));
  EXPECT_FALSE(equivalent(gen_Gw(4, 1), gen_Gw(4, 2)));
  EXPECT_FALSE(equivalent(gen_Gw(4, 1), gen_Gw(3, 1)));
  std::mt19937_64 rng(1);
  const CODMatrix g = gen_Gw(5, 2);
  for (int trial = 0; trial < 20; ++trial) EXPECT_TRUE(equivalent(g, apply_all(g, random_ops(g, 1, rng))));
  EXPECT_THROW(equivalent(mat("z1 0\n0 z1*"), gen_Gw(2, 0)), ClassificationError);
}

// Every feasible solution builds a COD with the requested parameters whose
// signature is that solution.
TEST(BuildFromSolution, SoundnessLoop) {
  for (int n = 1; n <= 8; ++n)
    for (std::int64_t p = 1; p <= 40; ++p)
      for (std::int64_t k = 0; k <= p; ++k)
        for (const ParamSolution& s : feasible(p, n, k)) {
          const CODMatrix m = build_from_solution(s);
          ASSERT_EQ(params_of(m), (ParamTriple{p, n, k}));
          ASSERT_TRUE(is_cod(m));
          ASSERT_EQ(signature(m), s) << s.to_string();
        }
  EXPECT_THROW(build_from_solution(AtomCounts::zero(3)), ArgumentError);
}

}  // namespace
}  // namespace codforge
