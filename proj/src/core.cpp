#include "pentaplex/core.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace pentaplex {

LabelSeq canonical_rotation(LabelSeq seq) {
  if (seq.size() <= 1) return seq;
  const std::size_t n = seq.size();
  std::size_t best = 0;
  for (std::size_t s = 1; s < n; ++s) {
    for (std::size_t k = 0; k < n; ++k) {
      int a = seq[(s + k) % n].value();
      int b = seq[(best + k) % n].value();
      if (a != b) {
        if (a < b) best = s;
        break;
      }
    }
  }
  LabelSeq out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = seq[(best + k) % n];
  return out;
}

std::optional<int> PentComplex::full_degree(VertexId v) const {
  const auto& rec = vertices[v];
  if (!rec.boundary) return present_degree(v);
  if (rec.mark_degree >= 0) return rec.mark_degree;
  return std::nullopt;
}

int PentComplex::corner_index(FaceId f, VertexId v) const {
  const auto& fc = faces[f].corner;
  for (int k = 0; k < 5; ++k)
    if (fc[k].v == v) return k;
  throw Error(Errc::unknown_face, "vertex not on face");
}

int PentComplex::label1_index(FaceId f) const {
  const auto& fc = faces[f].corner;
  for (int k = 0; k < 5; ++k)
    if (fc[k].label.value() == 1) return k;
  throw Error(Errc::invalid_face, "face has no label-1 corner");
}

EdgeId PentComplex::edge_between(FaceId f, int corner_a, int corner_b) const {
  VertexId a = faces[f].corner[corner_a].v;
  VertexId b = faces[f].corner[corner_b].v;
  for (EdgeEndRef r : vertices[a].rot) {
    EdgeId e = edge_of(r);
    if (edge_other(e, a) == b) {
      // Two vertices may share more than one edge only in degenerate inputs;
      // pick the edge actually bounded by f.
      if (edges[e].face[0] == f || edges[e].face[1] == f) return e;
    }
  }
  throw Error(Errc::invalid_input, "face corners not joined by an edge");
}

EdgeId PentComplex::face_edge(FaceId f, int k) const {
  return edge_between(f, k, (k + 1) % 5);
}

std::vector<FaceId> PentComplex::sector_faces(VertexId v) const {
  const auto& rec = vertices[v];
  std::vector<FaceId> out;
  out.reserve(rec.rot.size());
  for (EdgeEndRef r : rec.rot) out.push_back(face_from(edge_of(r), v));
  return out;
}

LabelSeq PentComplex::full_decoration(VertexId v) const {
  const auto& rec = vertices[v];
  if (rec.boundary) return rec.mark_decoration;  // possibly empty: unknown
  LabelSeq seq;
  seq.reserve(rec.rot.size());
  for (FaceId f : sector_faces(v)) seq.push_back(label_at(f, v));
  return canonical_rotation(std::move(seq));
}

std::optional<std::pair<Label, Label>> PentComplex::missing_side_pair(EdgeId e) const {
  const auto& er = edges[e];
  if (er.face[0] != kNone && er.face[1] != kNone) return std::nullopt;
  int present_side = er.face[0] != kNone ? 0 : 1;
  FaceId f = er.face[present_side];
  if (f == kNone) return std::nullopt;
  VertexId p = er.v[present_side];          // f traverses p -> q
  VertexId q = er.v[1 - present_side];
  auto locate = [&](VertexId u, int offset) -> std::optional<Label> {
    LabelSeq s = full_decoration(u);
    if (s.empty()) return std::nullopt;
    Label mine = label_at(f, u);
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] == mine) {
        std::size_t d = s.size();
        return s[(k + d + offset) % d];
      }
    }
    return std::nullopt;
  };
  // The sector before f at p shares f's outgoing edge; the one after shares the
  // incoming edge. The missing face reads (b, b+1) along q -> p.
  std::optional<Label> at_p = locate(p, -1);  // label of missing face at p = b+1
  std::optional<Label> at_q = locate(q, +1);  // label of missing face at q = b
  std::optional<std::pair<Label, Label>> out;
  if (at_q) out = std::make_pair(*at_q, at_q->plus(1));
  if (at_p) {
    std::pair<Label, Label> from_p{at_p->plus(-1), *at_p};
    if (out && *out != from_p) return std::nullopt;  // inconsistent marks
    out = from_p;
  }
  return out;
}

// -- seed ----------------------------------------------------------------------

PentComplex seed_pentagon() {
  PentComplex c;
  c.vertices.resize(5);
  c.edges.resize(5);
  c.faces.resize(1);
  for (int i = 0; i < 5; ++i) {
    c.faces[0].corner[i] = Corner{i, Label(i + 1)};
    c.edges[i].v = {i, (i + 1) % 5};
    c.edges[i].face = {0, kNone};
  }
  for (int i = 0; i < 5; ++i) {
    auto& vr = c.vertices[i];
    // Positive order: first the outgoing boundary edge, then the incoming one.
    vr.rot = {edge_end(i, 0), edge_end((i + 4) % 5, 1)};
    vr.boundary = true;
    vr.mark_degree = 3;
    // Ambient cycle at the label-(i+1) corner of the central pentagon:
    // (own i+1, petal i+2, outer petal i+4) in rotation order.
    vr.mark_decoration =
        canonical_rotation({Label(i + 4), Label(i + 1), Label(i + 2)});
  }
  return c;
}

// -- decorations ----------------------------------------------------------------

std::optional<LabelSeq> try_vertex_decoration(const PentComplex& c, VertexId v) {
  LabelSeq s = c.full_decoration(v);
  if (s.empty()) return std::nullopt;
  return canonical_rotation(std::move(s));
}

LabelSeq vertex_decoration(const PentComplex& c, VertexId v) {
  auto s = try_vertex_decoration(c, v);
  if (!s) throw Error(Errc::boundary_vertex, "vertex decoration unknown at truncation rim");
  return *s;
}

static EdgeDecoration make_edge_decoration(std::pair<Label, Label> s0,
                                           std::pair<Label, Label> s1) {
  EdgeDecoration d;
  if (s1.first < s0.first) std::swap(s0, s1);
  d.sides = {s0, s1};
  return d;
}

std::optional<EdgeDecoration> try_edge_decoration(const PentComplex& c, EdgeId e) {
  const auto& er = c.edges[e];
  auto side_pair = [&](int side) -> std::pair<Label, Label> {
    FaceId f = er.face[side];
    VertexId from = er.v[side], to = er.v[1 - side];
    return {c.label_at(f, from), c.label_at(f, to)};
  };
  if (er.face[0] != kNone && er.face[1] != kNone)
    return make_edge_decoration(side_pair(0), side_pair(1));
  int present = er.face[0] != kNone ? 0 : (er.face[1] != kNone ? 1 : -1);
  if (present < 0) return std::nullopt;
  auto missing = c.missing_side_pair(e);
  if (!missing) return std::nullopt;
  return make_edge_decoration(side_pair(present), *missing);
}

EdgeDecoration edge_decoration(const PentComplex& c, EdgeId e) {
  auto d = try_edge_decoration(c, e);
  if (!d) throw Error(Errc::boundary_edge, "edge decoration unknown at truncation rim");
  return *d;
}

PrototileClass classify_face(const PentComplex& c, FaceId f) {
  const auto& fc = c.faces[f].corner;
  std::array<int, 5> deg{};
  for (int k = 0; k < 5; ++k) {
    auto d = c.full_degree(fc[k].v);
    if (!d) throw Error(Errc::unknown_degree, "corner degree unavailable");
    deg[k] = *d;
  }
  int fours = static_cast<int>(std::count(deg.begin(), deg.end(), 4));
  PrototileClass out;
  switch (fours) {
    case 0: out.undecorated_class = 1; break;
    case 2: out.undecorated_class = 2; break;
    case 3: out.undecorated_class = 3; break;
    default: throw Error(Errc::invalid_face, "degree-4 corner count not in {0,2,3}");
  }
  if (fours == 0) {
    out.decorated_class = 1;
    return out;
  }
  // For t2 and t3 there is a unique corner whose both neighbors have degree 4;
  // its label fixes the decorated class.
  int pivot = -1;
  for (int k = 0; k < 5; ++k) {
    if (deg[(k + 4) % 5] == 4 && deg[(k + 1) % 5] == 4) {
      bool self_ok = (fours == 2) ? deg[k] == 3 : deg[k] == 4;
      if (self_ok) {
        if (pivot >= 0) throw Error(Errc::invalid_face, "ambiguous degree pattern");
        pivot = k;
      }
    }
  }
  if (pivot < 0) throw Error(Errc::invalid_face, "degree pattern not a prototile");
  int a = fc[pivot].label.value();
  out.decorated_class = (fours == 2 ? 1 : 6) + a;
  return out;
}

// -- patches ---------------------------------------------------------------------

PatchCells patch_cells(const Patch& p) {
  std::set<VertexId> vs;
  std::set<EdgeId> es;
  const PentComplex& c = *p.parent;
  for (FaceId f : p.faces) {
    for (int k = 0; k < 5; ++k) {
      vs.insert(c.faces[f].corner[k].v);
      es.insert(c.face_edge(f, k));
    }
  }
  return PatchCells{{vs.begin(), vs.end()}, {es.begin(), es.end()}};
}

int euler_characteristic(const Patch& p) {
  PatchCells cells = patch_cells(p);
  return static_cast<int>(cells.vertices.size()) - static_cast<int>(cells.edges.size()) +
         static_cast<int>(p.faces.size());
}

bool chain_connected(const Patch& p) {
  if (p.faces.empty()) return true;
  const PentComplex& c = *p.parent;
  std::unordered_set<FaceId> in(p.faces.begin(), p.faces.end());
  std::vector<FaceId> stack{p.faces.front()};
  std::unordered_set<FaceId> seen{p.faces.front()};
  while (!stack.empty()) {
    FaceId f = stack.back();
    stack.pop_back();
    for (int k = 0; k < 5; ++k) {
      EdgeId e = c.face_edge(f, k);
      for (FaceId g : c.edges[e].face) {
        if (g != kNone && g != f && in.count(g) && !seen.count(g)) {
          seen.insert(g);
          stack.push_back(g);
        }
      }
    }
  }
  return seen.size() == in.size();
}

Patch all_faces(const PentComplex& c) {
  Patch p;
  p.parent = &c;
  p.faces.resize(c.face_count());
  std::iota(p.faces.begin(), p.faces.end(), 0);
  return p;
}

// -- allowed decorations ----------------------------------------------------------

static std::vector<LabelSeq> build_triples() {
  std::vector<LabelSeq> out;
  for (int x = 1; x <= 5; ++x)
    out.push_back(canonical_rotation({Label(x), Label(x + 1), Label(x + 3)}));
  std::sort(out.begin(), out.end());
  return out;
}

static std::vector<LabelSeq> build_quadruples() {
  std::vector<LabelSeq> out;
  for (int x = 1; x <= 5; ++x)
    out.push_back(canonical_rotation({Label(x), Label(x + 1), Label(x + 2), Label(x + 3)}));
  std::sort(out.begin(), out.end());
  return out;
}

static std::vector<EdgeDecoration> build_edge_pairs() {
  std::vector<EdgeDecoration> out;
  for (int i = 1; i <= 5; ++i)
    out.push_back(make_edge_decoration({Label(i), Label(i + 1)}, {Label(i + 2), Label(i + 3)}));
  return out;
}

const std::vector<LabelSeq>& allowed_triples() {
  static const std::vector<LabelSeq> t = build_triples();
  return t;
}
const std::vector<LabelSeq>& allowed_quadruples() {
  static const std::vector<LabelSeq> q = build_quadruples();
  return q;
}
const std::vector<EdgeDecoration>& allowed_edge_pairs() {
  static const std::vector<EdgeDecoration> e = build_edge_pairs();
  return e;
}

bool allowed_vertex_decoration(const LabelSeq& canonical) {
  const auto& set = canonical.size() == 3 ? allowed_triples() : allowed_quadruples();
  if (canonical.size() != 3 && canonical.size() != 4) return false;
  return std::find(set.begin(), set.end(), canonical) != set.end();
}

bool allowed_edge_decoration(const EdgeDecoration& d) {
  const auto& set = allowed_edge_pairs();
  return std::find(set.begin(), set.end(), d) != set.end();
}

// -- validate ---------------------------------------------------------------------

static void check_rotation_consistency(const PentComplex& c, ValidationReport& rep) {
  // For every face corner (a, v, b) the rotation at v must list the outgoing
  // edge {v,b} immediately followed by the incoming edge {v,a}.
  for (FaceId f = 0; f < static_cast<FaceId>(c.face_count()); ++f) {
    for (int k = 0; k < 5; ++k) {
      VertexId a = c.faces[f].corner[(k + 4) % 5].v;
      VertexId v = c.faces[f].corner[k].v;
      VertexId b = c.faces[f].corner[(k + 1) % 5].v;
      EdgeId e_out, e_in;
      try {
        e_out = c.edge_between(f, k, (k + 1) % 5);
        e_in = c.edge_between(f, (k + 4) % 5, k);
      } catch (const Error&) {
        rep.violations.push_back({"missing-edge", "face " + std::to_string(f)});
        continue;
      }
      const auto& rot = c.vertices[v].rot;
      bool ok = false;
      for (std::size_t i = 0; i < rot.size(); ++i) {
        if (edge_of(rot[i]) == e_out && edge_of(rot[(i + 1) % rot.size()]) == e_in) {
          ok = true;
          break;
        }
      }
      if (!ok)
        rep.violations.push_back(
            {"rotation-face-mismatch", "face " + std::to_string(f) + " at vertex " +
                                           std::to_string(v) + " (" + std::to_string(a) + ")" +
                                           std::to_string(b)});
    }
  }
}

static void check_planarity(const PentComplex& c, ValidationReport& rep) {
  // Count boundary walks: orbits of darts with a missing face under
  // next = rotation-successor of the reversed dart. Components must satisfy
  // V - E + F(present) + F(gaps) = 2, i.e. genus 0.
  std::size_t ne = c.edge_count();
  std::vector<char> visited(2 * ne, 0);
  auto rot_succ = [&](VertexId v, EdgeId e) -> EdgeEndRef {
    const auto& rot = c.vertices[v].rot;
    for (std::size_t i = 0; i < rot.size(); ++i)
      if (edge_of(rot[i]) == e) return rot[(i + 1) % rot.size()];
    return -1;
  };
  // Union-find over vertices for components.
  std::vector<int> parent(c.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : c.edges) parent[find(e.v[0])] = find(e.v[1]);

  std::map<int, std::array<long, 4>> comp;  // V, E, F, gap orbits
  for (std::size_t v = 0; v < c.vertex_count(); ++v) comp[find(static_cast<int>(v))][0]++;
  for (std::size_t e = 0; e < ne; ++e) comp[find(c.edges[e].v[0])][1]++;
  for (const auto& f : c.faces) comp[find(f.corner[0].v)][2]++;

  for (std::size_t e = 0; e < ne; ++e) {
    for (int side = 0; side < 2; ++side) {
      if (c.edges[e].face[side] != kNone) continue;
      std::size_t dart = 2 * e + side;
      if (visited[dart]) continue;
      // Walk the gap orbit. Dart (e, side) points v[side] -> v[1-side].
      std::size_t cur = dart;
      bool broken = false;
      do {
        visited[cur] = 1;
        EdgeId ce = static_cast<EdgeId>(cur / 2);
        int cside = static_cast<int>(cur % 2);
        VertexId head = c.edges[ce].v[1 - cside];
        EdgeEndRef next = rot_succ(head, ce);
        if (next < 0) {
          broken = true;
          break;
        }
        EdgeId n_e = edge_of(next);
        int n_side = c.edges[n_e].v[0] == head ? 0 : 1;
        cur = 2 * static_cast<std::size_t>(n_e) + n_side;
        if (c.edges[n_e].face[n_side] != kNone) {
          broken = true;  // gap walk ran into a present face: inconsistent rotation
          break;
        }
      } while (cur != dart);
      if (broken) {
        rep.violations.push_back({"rotation-gap-walk", "edge " + std::to_string(e)});
        return;
      }
      comp[find(c.edges[e].v[0])][3]++;
    }
  }
  for (const auto& [root, counts] : comp) {
    long chi = counts[0] - counts[1] + counts[2] + counts[3];
    if (chi != 2)
      rep.violations.push_back(
          {"non-planar", "component " + std::to_string(root) + " has V-E+F+gaps = " +
                             std::to_string(chi)});
  }
}

ValidationReport validate(const PentComplex& c) {
  ValidationReport rep;
  // Faces: five distinct corners, labels a rotation of (1..5).
  for (FaceId f = 0; f < static_cast<FaceId>(c.face_count()); ++f) {
    const auto& fc = c.faces[f].corner;
    std::set<VertexId> distinct;
    for (const auto& corner : fc) distinct.insert(corner.v);
    if (distinct.size() != 5)
      rep.violations.push_back({"face-repeated-vertex", "face " + std::to_string(f)});
    bool cyc = true;
    for (int k = 0; k < 5; ++k)
      if (fc[(k + 1) % 5].label != fc[k].label.plus(1)) cyc = false;
    if (!cyc)
      rep.violations.push_back({"labels not a 5-cycle", "face " + std::to_string(f)});
  }
  // Edges.
  for (EdgeId e = 0; e < static_cast<EdgeId>(c.edge_count()); ++e) {
    const auto& er = c.edges[e];
    if (er.v[0] == er.v[1])
      rep.violations.push_back({"edge-loop", "edge " + std::to_string(e)});
    if (er.face[0] == kNone && er.face[1] == kNone)
      rep.violations.push_back({"edge-no-face", "edge " + std::to_string(e)});
    for (int side = 0; side < 2; ++side) {
      FaceId f = er.face[side];
      if (f == kNone) continue;
      int ka = -1;
      for (int k = 0; k < 5; ++k)
        if (c.faces[f].corner[k].v == er.v[side] &&
            c.faces[f].corner[(k + 1) % 5].v == er.v[1 - side])
          ka = k;
      if (ka < 0)
        rep.violations.push_back({"edge-side-mismatch", "edge " + std::to_string(e)});
    }
  }
  // Vertex boundary flags.
  for (VertexId v = 0; v < static_cast<VertexId>(c.vertex_count()); ++v) {
    bool touches_rim = false;
    for (EdgeEndRef r : c.vertices[v].rot)
      if (c.is_boundary_edge(edge_of(r))) touches_rim = true;
    if (touches_rim != c.vertices[v].boundary)
      rep.violations.push_back({"boundary-flag", "vertex " + std::to_string(v)});
  }
  check_rotation_consistency(c, rep);
  check_planarity(c, rep);
  // Degrees and decorations.
  for (VertexId v = 0; v < static_cast<VertexId>(c.vertex_count()); ++v) {
    const auto& vr = c.vertices[v];
    if (!vr.boundary) {
      int d = c.present_degree(v);
      if (d != 3 && d != 4)
        rep.violations.push_back({"degree not in {3,4}", "vertex " + std::to_string(v)});
      auto dec = try_vertex_decoration(c, v);
      if (dec && !allowed_vertex_decoration(*dec))
        rep.violations.push_back({"illegal vertex decoration", "vertex " + std::to_string(v)});
    } else {
      if (vr.mark_degree >= 0 && vr.mark_degree != 3 && vr.mark_degree != 4)
        rep.violations.push_back({"mark degree not in {3,4}", "vertex " + std::to_string(v)});
      if (!vr.mark_decoration.empty()) {
        if (vr.mark_degree >= 0 &&
            vr.mark_decoration.size() != static_cast<std::size_t>(vr.mark_degree))
          rep.violations.push_back({"mark size mismatch", "vertex " + std::to_string(v)});
        if (!allowed_vertex_decoration(canonical_rotation(vr.mark_decoration)))
          rep.violations.push_back({"illegal mark decoration", "vertex " + std::to_string(v)});
        // Present faces must occur in the mark, each by its own label.
        for (FaceId f : c.sector_faces(v)) {
          if (f == kNone) continue;
          Label mine = c.label_at(f, v);
          if (std::find(vr.mark_decoration.begin(), vr.mark_decoration.end(), mine) ==
              vr.mark_decoration.end())
            rep.violations.push_back(
                {"mark missing present label", "vertex " + std::to_string(v)});
        }
      }
    }
  }
  for (EdgeId e = 0; e < static_cast<EdgeId>(c.edge_count()); ++e) {
    auto d = try_edge_decoration(c, e);
    if (d && !allowed_edge_decoration(*d))
      rep.violations.push_back({"illegal edge decoration", "edge " + std::to_string(e)});
  }
  return rep;
}

// -- reflected --------------------------------------------------------------------

PentComplex reflected(const PentComplex& c) {
  PentComplex out = c;
  for (auto& f : out.faces) {
    std::reverse(f.corner.begin(), f.corner.end());
    for (auto& corner : f.corner) corner.label = corner.label.reversed();
  }
  for (auto& v : out.vertices) {
    std::reverse(v.rot.begin(), v.rot.end());
    for (auto& l : v.mark_decoration) l = l.reversed();
    std::reverse(v.mark_decoration.begin(), v.mark_decoration.end());
    v.mark_decoration = canonical_rotation(std::move(v.mark_decoration));
  }
  for (auto& e : out.edges) std::swap(e.face[0], e.face[1]);
  return out;
}

// -- extract ----------------------------------------------------------------------

PentComplex extract(const Patch& p) {
  const PentComplex& c = *p.parent;
  PatchCells cells = patch_cells(p);
  std::unordered_map<VertexId, VertexId> vmap;
  std::unordered_map<EdgeId, EdgeId> emap;
  std::unordered_map<FaceId, FaceId> fmap;
  for (std::size_t i = 0; i < cells.vertices.size(); ++i)
    vmap[cells.vertices[i]] = static_cast<VertexId>(i);
  for (std::size_t i = 0; i < cells.edges.size(); ++i)
    emap[cells.edges[i]] = static_cast<EdgeId>(i);
  std::vector<FaceId> sorted_faces = p.faces;
  std::sort(sorted_faces.begin(), sorted_faces.end());
  for (std::size_t i = 0; i < sorted_faces.size(); ++i)
    fmap[sorted_faces[i]] = static_cast<FaceId>(i);

  PentComplex out;
  out.vertices.resize(cells.vertices.size());
  out.edges.resize(cells.edges.size());
  out.faces.resize(sorted_faces.size());

  for (std::size_t i = 0; i < sorted_faces.size(); ++i) {
    for (int k = 0; k < 5; ++k) {
      const Corner& corner = c.faces[sorted_faces[i]].corner[k];
      out.faces[i].corner[k] = Corner{vmap.at(corner.v), corner.label};
    }
  }
  for (std::size_t i = 0; i < cells.edges.size(); ++i) {
    const auto& er = c.edges[cells.edges[i]];
    out.edges[i].v = {vmap.at(er.v[0]), vmap.at(er.v[1])};
    for (int side = 0; side < 2; ++side) {
      FaceId f = er.face[side];
      auto it = f == kNone ? fmap.end() : fmap.find(f);
      out.edges[i].face[side] = it == fmap.end() ? kNone : it->second;
    }
  }
  for (std::size_t i = 0; i < cells.vertices.size(); ++i) {
    VertexId old = cells.vertices[i];
    auto& vr = out.vertices[i];
    for (EdgeEndRef r : c.vertices[old].rot) {
      auto it = emap.find(edge_of(r));
      if (it != emap.end()) vr.rot.push_back(edge_end(it->second, side_of(r)));
    }
    bool boundary = false;
    for (EdgeEndRef r : vr.rot)
      if (out.is_boundary_edge(edge_of(r))) boundary = true;
    vr.boundary = boundary;
    if (boundary) {
      // Ambient snapshot: interior parent data wins, else the parent's own mark.
      if (!c.vertices[old].boundary) {
        vr.mark_degree = static_cast<std::int16_t>(c.present_degree(old));
        vr.mark_decoration = c.full_decoration(old);
      } else {
        vr.mark_degree = c.vertices[old].mark_degree;
        vr.mark_decoration = c.vertices[old].mark_decoration;
      }
    }
  }
  return out;
}

PentComplex strip_marks(PentComplex c) {
  for (auto& v : c.vertices) {
    v.mark_degree = -1;
    v.mark_decoration.clear();
  }
  return c;
}

}  // namespace pentaplex
