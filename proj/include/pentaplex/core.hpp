#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pentaplex {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using FaceId = std::int32_t;
inline constexpr std::int32_t kNone = -1;

enum class Errc {
  boundary_vertex,
  boundary_edge,
  unknown_degree,
  invalid_face,
  invalid_input,
  invalid_variant,
  unknown_face,
  disconnected,
  rim_too_close,
  limit_exceeded,
  uncertified_radius,
  inexact_inputs,
  parse_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

/// Corner label in {1..5}; arithmetic is mod 5 with representatives in [1,5] (6 ~ 1).
class Label {
 public:
  Label() = default;
  explicit Label(int v) : v_(static_cast<std::uint8_t>(norm(v))) {}
  int value() const { return v_; }
  Label plus(int k) const { return Label(v_ + k); }
  /// Reversal relabeling: 1<->1, 2<->5, 3<->4. Conjugating by it turns the
  /// production rule into its reflected sibling.
  Label reversed() const { return Label(7 - v_); }
  friend bool operator==(Label a, Label b) { return a.v_ == b.v_; }
  friend bool operator!=(Label a, Label b) { return a.v_ != b.v_; }
  friend bool operator<(Label a, Label b) { return a.v_ < b.v_; }
  static int norm(int v) {
    int r = (v - 1) % 5;
    if (r < 0) r += 5;
    return r + 1;
  }

 private:
  std::uint8_t v_ = 1;
};

using LabelSeq = std::vector<Label>;

/// Lexicographically least rotation of a cyclic sequence.
LabelSeq canonical_rotation(LabelSeq seq);

struct Corner {
  VertexId v = kNone;
  Label label;
};

/// Encoded edge end: (edge << 1) | side, side 0 when the vertex is edge.v[0].
using EdgeEndRef = std::int32_t;
inline EdgeEndRef edge_end(EdgeId e, int side) { return (e << 1) | side; }
inline EdgeId edge_of(EdgeEndRef r) { return r >> 1; }
inline int side_of(EdgeEndRef r) { return r & 1; }

struct VertexRec {
  /// Incident edge ends in positive cyclic order. For truncations this is the
  /// restriction of the ambient rotation to the edges that are present.
  std::vector<EdgeEndRef> rot;
  bool boundary = false;
  /// Ambient data for boundary vertices; -1 / empty when unknown.
  std::int16_t mark_degree = -1;
  /// Full ambient cyclic label sequence, stored as its canonical rotation.
  LabelSeq mark_decoration;
};

struct EdgeRec {
  /// face[0] traverses v[0]->v[1] in its positive corner order, face[1] the reverse.
  std::array<VertexId, 2> v{kNone, kNone};
  std::array<FaceId, 2> face{kNone, kNone};
};

struct FaceRec {
  std::array<Corner, 5> corner;
};

/// Oriented rotation-system CW-complex with pentagonal faces and per-corner
/// decoration labels. Immutable after construction; all queries are const.
class PentComplex {
 public:
  std::vector<VertexRec> vertices;
  std::vector<EdgeRec> edges;
  std::vector<FaceRec> faces;

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t edge_count() const { return edges.size(); }
  std::size_t face_count() const { return faces.size(); }

  VertexId edge_other(EdgeId e, VertexId v) const {
    const auto& r = edges[e];
    return r.v[0] == v ? r.v[1] : r.v[0];
  }
  int edge_side(EdgeId e, VertexId v) const { return edges[e].v[0] == v ? 0 : 1; }
  /// Face whose positive traversal leaves `from` along edge e.
  FaceId face_from(EdgeId e, VertexId from) const { return edges[e].face[edge_side(e, from)]; }
  FaceId face_into(EdgeId e, VertexId from) const { return edges[e].face[1 - edge_side(e, from)]; }

  int present_degree(VertexId v) const { return static_cast<int>(vertices[v].rot.size()); }
  /// Ambient degree: present degree for interior vertices, mark for boundary ones.
  std::optional<int> full_degree(VertexId v) const;

  int corner_index(FaceId f, VertexId v) const;
  Label label_at(FaceId f, VertexId v) const { return faces[f].corner[corner_index(f, v)].label; }
  /// Index of the corner carrying label 1.
  int label1_index(FaceId f) const;
  EdgeId edge_between(FaceId f, int corner_a, int corner_b) const;
  /// Edge of face f from corner k to corner k+1.
  EdgeId face_edge(FaceId f, int k) const;

  /// Faces around v in rotation order; entry k is the face positively leaving v
  /// along rot[k] (kNone where the sector is missing).
  std::vector<FaceId> sector_faces(VertexId v) const;

  /// Full cyclic label sequence around v in rotation order, in ambient terms.
  /// Empty when v is boundary and carries no mark.
  LabelSeq full_decoration(VertexId v) const;

  bool is_boundary_edge(EdgeId e) const {
    return edges[e].face[0] == kNone || edges[e].face[1] == kNone;
  }

  /// Labels of the missing side of a boundary edge, as the ordered pair
  /// (b, b+1) read along the missing face's traversal. Derived from the
  /// endpoint vertex marks; nullopt when those are unknown.
  std::optional<std::pair<Label, Label>> missing_side_pair(EdgeId e) const;
};

struct EdgeDecoration {
  // Two ordered pairs (a,a+1),(b,b+1), canonically ordered by first element.
  std::array<std::pair<Label, Label>, 2> sides;
  friend bool operator==(const EdgeDecoration& x, const EdgeDecoration& y) {
    return x.sides == y.sides;
  }
};

struct PrototileClass {
  int undecorated_class = 0;  // 1..3
  int decorated_class = 0;    // 1..11
  friend bool operator==(const PrototileClass&, const PrototileClass&) = default;
};

/// A face-set subcomplex of a PentComplex (balls, supertiles, petals).
struct Patch {
  const PentComplex* parent = nullptr;
  std::vector<FaceId> faces;  // sorted, unique
};

struct PatchCells {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

// -- operations ---------------------------------------------------------------

/// The seed pentagon: one face, five vertices, five edges, labels 1..5 in
/// positive cyclic order, with boundary marks carrying the ambient decorations
/// so that the induced vertex decorations are 135,124,235,134,245 and the edge
/// decorations are (12,34),(12,45),(23,45),(23,51),(34,51).
PentComplex seed_pentagon();

/// Cyclic sequence of corner labels of the faces around v, canonical rotation.
/// Throws boundary_vertex when v is boundary and has no mark.
LabelSeq vertex_decoration(const PentComplex& c, VertexId v);
std::optional<LabelSeq> try_vertex_decoration(const PentComplex& c, VertexId v);

/// Throws boundary_edge when one side is missing and cannot be derived from marks.
EdgeDecoration edge_decoration(const PentComplex& c, EdgeId e);
std::optional<EdgeDecoration> try_edge_decoration(const PentComplex& c, EdgeId e);

/// Classification by degree-4 corner count {0->t1, 2->t2, 3->t3} and label
/// alignment (11 decorated classes). Throws unknown_degree / invalid_face.
PrototileClass classify_face(const PentComplex& c, FaceId f);

PatchCells patch_cells(const Patch& p);
int euler_characteristic(const Patch& p);
bool chain_connected(const Patch& p);
Patch all_faces(const PentComplex& c);

struct Violation {
  std::string code;
  std::string detail;
};
struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};
ValidationReport validate(const PentComplex& c);

/// Allowed decoration tables.
bool allowed_vertex_decoration(const LabelSeq& canonical);
bool allowed_edge_decoration(const EdgeDecoration& d);
const std::vector<LabelSeq>& allowed_triples();
const std::vector<LabelSeq>& allowed_quadruples();
const std::vector<EdgeDecoration>& allowed_edge_pairs();

/// Mirror image: orientation reversed and labels relabeled by j -> 7-j, the
/// unique relabeling that restores the increasing-label convention.
PentComplex reflected(const PentComplex& c);

/// Standalone complex for a patch; boundary cells carry marks snapshotting the
/// ambient degrees/decorations known to the parent. Vertex/edge/face ids are
/// renumbered densely in increasing parent-id order.
PentComplex extract(const Patch& p);

/// Drop all boundary marks (used by "up to marks" comparisons).
PentComplex strip_marks(PentComplex c);

}  // namespace pentaplex
