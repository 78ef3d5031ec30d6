#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pentaplex/core.hpp"

namespace pentaplex {

/// Decorated subdivision rule. Child 0 is the central pentagon (c_1..c_5);
/// child i (1..5) is the petal at the parent corner carrying label i, with
/// corner list (u_i, m_i, c_{i+1}, c_i, m_{i-1}). label1_pos[k] is the corner
/// position of the child that receives label 1. The mirror flag records that a
/// table is the reflected rule; its action is realized by the offsets alone.
struct RuleTable {
  std::array<int, 6> label1_pos{};
  bool mirror = false;
  friend bool operator==(const RuleTable&, const RuleTable&) = default;
  friend bool operator<(const RuleTable& a, const RuleTable& b) {
    return a.label1_pos < b.label1_pos;
  }
};

/// variant 0 = production rule; 1..3 = central child rotated by 1..3 (reject
/// these: they leave symmetric decorations); 4 = central child rotated by 4,
/// which is the reflected production rule.
RuleTable rule_table(int variant = 0);

/// True when the petal offsets copy the parent labels onto the parent corners
/// (each boundary half-decoration then doubles in place under subdivision).
bool table_inherits_petal_labels(const RuleTable& t);

struct RuleSolveResult {
  std::vector<RuleTable> stable;            // pass decoration + stability constraints
  std::vector<RuleTable> stable_inheriting; // additionally double half-decorations
  RuleTable chosen;                         // lexicographically least of the above
};
/// Exhaustive search over the 5^6 label-offset assignments.
RuleSolveResult solve_rule_table();

PentComplex subdivide_with_table(const PentComplex& c, const RuleTable& t, bool check_input);

/// The production rule; validates the input.
PentComplex subdivide(const PentComplex& c);

/// Variant rules 1..4 (variants 1..3 produce decorations with residual
/// symmetries; 4 is the reflected rule). Throws invalid_variant.
PentComplex alt_subdivide(const PentComplex& c, int variant);

/// K_n: n-fold subdivision of the seed pentagon, boundary marks included.
PentComplex build_supertile(int n, int max_n = 8);

struct Flower {
  FaceId central = kNone;
  std::array<FaceId, 5> petals{kNone, kNone, kNone, kNone, kNone};
};
/// Children of parent_face inside subdivide(c). Throws unknown_face.
Flower flower_of(const PentComplex& subdivided, FaceId parent_face);

/// The superpetal K_n^i of K_{n+1} (i = 0 gives the central supertile K_n).
Patch supertile_petal(const PentComplex& k_np1, int n, int i);

struct Pointed {
  PentComplex complex;
  VertexId anchor = kNone;
};

/// Inverse of the production rule around an anchor. Central children are the
/// all-degree-3 faces; their flowers collapse to parent faces. Flowers cut off
/// by the truncation rim are dropped, so the usable radius shrinks by a
/// constant (at most 4 edge units, plus the halving). Returns empty when the
/// anchor is an inserted vertex, when no consistent flower partition containing
/// the anchor exists, or when decorations contradict the rule table.
std::optional<Pointed> try_desubdivide(const PentComplex& c, VertexId anchor);

struct SymmetryFinding {
  enum class Kind { vertex, edge } kind;
  std::int32_t id;
  std::string what;
};

/// Builds variant^depth of the seed and reports every interior vertex/edge
/// whose decoration admits a nontrivial rotation or reflection.
std::vector<SymmetryFinding> symmetry_audit(int variant, int depth);

}  // namespace pentaplex
