#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "codforge/cod_matrix.hpp"
#include "codforge/params.hpp"

namespace codforge {

/// New row i is old row perm[i] (0-based).
struct RowPerm {
  std::vector<int> perm;
  friend bool operator==(const RowPerm&, const RowPerm&) = default;
};
/// New column j is old column perm[j] (0-based).
struct ColPerm {
  std::vector<int> perm;
  friend bool operator==(const ColPerm&, const ColPerm&) = default;
};
/// Replace z_id by z_id^* (and z_id^* by z_id) everywhere.
struct ConjVar {
  int id = 0;
  friend bool operator==(const ConjVar&, const ConjVar&) = default;
};
/// Replace z_id by -z_id everywhere.
struct NegVar {
  int id = 0;
  friend bool operator==(const NegVar&, const NegVar&) = default;
};
/// Swap the labels a and b; names follow their variables.
struct RenameVar {
  int a = 0;
  int b = 0;
  friend bool operator==(const RenameVar&, const RenameVar&) = default;
};
struct NegRow {
  int row = 0;
  friend bool operator==(const NegRow&, const NegRow&) = default;
};
struct NegCol {
  int col = 0;
  friend bool operator==(const NegCol&, const NegCol&) = default;
};

using EquivOp = std::variant<RowPerm, ColPerm, ConjVar, NegVar, RenameVar, NegRow, NegCol>;
using Transcript = std::vector<EquivOp>;

/// e.g. "RowPerm(2,1,3)", "NegRow(1)", "RenameVar(1,4)". Row and column
/// indices are printed 1-based.
std::string to_string(const EquivOp& op);
/// {"op":"NegRow","row":1}, {"op":"RowPerm","perm":[2,1,3]}, ... (1-based)
std::string to_json(const EquivOp& op);

/// Throws ArgumentError on indices that do not fit m.
CODMatrix apply_equiv(const CODMatrix& m, const EquivOp& op);
CODMatrix apply_all(const CODMatrix& m, const Transcript& ops);

/// `count` uniformly chosen operations of all seven kinds.
Transcript random_ops(const CODMatrix& m, int count, std::mt19937_64& rng);

struct AtomicPart {
  std::vector<int> rows;  // sorted row indices into the source matrix
  CODMatrix matrix;       // the rows, variables relabelled 1..k'
  AtomicClass cls;
};

/// Unique partition of the rows into atomic CODs: rows sharing a variable
/// belong together, every all-zero row stands alone. Parts are ordered by
/// their smallest row. Throws PreconditionError if m is not a COD.
std::vector<AtomicPart> decompose_atomic(const CODMatrix& m);

/// Class of an atomic part from its parameters and smallest row weight
/// (w + 1, folded so that w <= n/2). Unknown when nothing matches.
AtomicClass classify_atomic(const CODMatrix& part, int n);

/// Canonical representative of a class: gen_Gw(n, w) or gen_Hm(n).
CODMatrix canonical_target(const AtomicClass& cls, int n);

/// Operations (no column negations) taking `from` exactly onto the cells of
/// `to`, or nullopt when none exists. Column permutations are searched only
/// when the identity arrangement fails and n <= 8.
std::optional<Transcript> align_to(const CODMatrix& from, const CODMatrix& to);

struct CanonicalResult {
  AtomicClass cls;
  CODMatrix matrix;  // canonical_target(cls, n)
  Transcript transcript;
};

/// Throws ClassificationError when the part matches no class and
/// StructuralError when it cannot be brought to its class representative.
CanonicalResult canonicalize_atomic(const CODMatrix& part, int n);

/// Multiplicities of the atomic classes of a first-type COD. A G_n^w atom
/// with w > n/2 counts towards t_{n-w}. Throws ClassificationError for
/// non-first-type input or an unclassifiable part.
Signature signature(const CODMatrix& m);

/// {"n":3,"t":{"-1":0,"0":0,"1":1}} with "t_h" when n = 0 mod 4.
std::string signature_json(const Signature& s);

/// Equal signatures. Both inputs must be first-type CODs.
bool equivalent(const CODMatrix& a, const CODMatrix& b);

/// Catenation of t_i copies of gen_Gw(n, i) followed by t_h copies of
/// gen_Hm(n). Throws ArgumentError for the all-zero count vector.
CODMatrix build_from_solution(const AtomCounts& counts);

}  // namespace codforge
