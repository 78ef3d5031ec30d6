#include "pentaplex/subdivision.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace pentaplex {

RuleTable rule_table(int variant) {
  if (variant < 0 || variant > 4) throw Error(Errc::invalid_variant, "variant must be 0..4");
  RuleTable t;
  t.label1_pos[0] = (5 - variant) % 5;  // central child rotated by `variant`
  for (int i = 1; i <= 5; ++i) t.label1_pos[i] = (1 - i + 5) % 5;
  t.mirror = variant == 4;
  return t;
}

bool table_inherits_petal_labels(const RuleTable& t) {
  for (int i = 1; i <= 5; ++i)
    if (t.label1_pos[i] != (1 - i + 5) % 5) return false;
  return true;
}

static Label child_label(const RuleTable& t, int child, int pos) {
  return Label(((pos - t.label1_pos[child] + 5) % 5) + 1);
}

PentComplex subdivide_with_table(const PentComplex& c, const RuleTable& t, bool check_input) {
  if (check_input) {
    ValidationReport rep = validate(c);
    if (!rep.ok())
      throw Error(Errc::invalid_input,
                  "subdivision input invalid: " + rep.violations.front().code);
  }
  const auto V = static_cast<std::int64_t>(c.vertex_count());
  const auto E = static_cast<std::int64_t>(c.edge_count());
  const auto F = static_cast<std::int64_t>(c.face_count());
  const bool inherit = table_inherits_petal_labels(t);

  PentComplex out;
  out.vertices.resize(V + E + 5 * F);
  out.edges.resize(2 * E + 10 * F);
  out.faces.resize(6 * F);

  // Per face: corner vertex and bounding edge at each label index 1..5.
  // u_at[f][i-1] carries label i; e_at[f][i-1] joins labels i and i+1.
  std::vector<std::array<VertexId, 5>> u_at(F);
  std::vector<std::array<EdgeId, 5>> e_at(F);
  for (FaceId f = 0; f < F; ++f) {
    int l1 = c.label1_index(f);
    for (int i = 0; i < 5; ++i) {
      int pos = (l1 + i) % 5;
      u_at[f][i] = c.faces[f].corner[pos].v;
      e_at[f][i] = c.face_edge(f, pos);
    }
  }
  auto label_idx = [&](FaceId f, VertexId v) {  // 0-based label index of v on f
    for (int i = 0; i < 5; ++i)
      if (u_at[f][i] == v) return i;
    throw Error(Errc::unknown_face, "vertex not on face");
  };
  auto midpoint = [&](EdgeId e) { return static_cast<VertexId>(V + e); };
  auto central = [&](FaceId f, int j) {  // c_j, j in 1..5
    return static_cast<VertexId>(V + E + 5 * f + (j - 1));
  };
  auto central_edge = [&](FaceId f, int j) {  // (c_j, c_{j+1})
    return static_cast<EdgeId>(2 * E + 10 * f + (j - 1));
  };
  auto spoke = [&](FaceId f, int j) {  // (m_{j-1}, c_j)
    return static_cast<EdgeId>(2 * E + 10 * f + 5 + (j - 1));
  };
  auto petal_face = [&](FaceId f, int i) { return static_cast<FaceId>(6 * f + i); };

  // Faces.
  for (FaceId f = 0; f < F; ++f) {
    auto& cen = out.faces[6 * f];
    for (int p = 0; p < 5; ++p)
      cen.corner[p] = Corner{central(f, p + 1), child_label(t, 0, p)};
    for (int i = 1; i <= 5; ++i) {
      auto& pet = out.faces[petal_face(f, i)];
      int ip1 = i % 5 + 1, im1 = (i + 3) % 5 + 1;
      pet.corner[0] = Corner{u_at[f][i - 1], child_label(t, i, 0)};
      pet.corner[1] = Corner{midpoint(e_at[f][i - 1]), child_label(t, i, 1)};
      pet.corner[2] = Corner{central(f, ip1), child_label(t, i, 2)};
      pet.corner[3] = Corner{central(f, i), child_label(t, i, 3)};
      pet.corner[4] = Corner{midpoint(e_at[f][im1 - 1]), child_label(t, i, 4)};
    }
  }

  // Edges.
  for (EdgeId e = 0; e < E; ++e) {
    const auto& er = c.edges[e];
    VertexId u = er.v[0], w = er.v[1], m = midpoint(e);
    FaceId f0 = er.face[0], f1 = er.face[1];
    auto petal_at = [&](FaceId f, VertexId v) {
      return f == kNone ? kNone : petal_face(f, label_idx(f, v) + 1);
    };
    out.edges[2 * e].v = {u, m};
    out.edges[2 * e].face = {petal_at(f0, u), petal_at(f1, u)};
    out.edges[2 * e + 1].v = {m, w};
    out.edges[2 * e + 1].face = {petal_at(f0, w), petal_at(f1, w)};
  }
  for (FaceId f = 0; f < F; ++f) {
    for (int j = 1; j <= 5; ++j) {
      int jp1 = j % 5 + 1, jm1 = (j + 3) % 5 + 1;
      auto& ce = out.edges[central_edge(f, j)];
      ce.v = {central(f, j), central(f, jp1)};
      ce.face = {static_cast<FaceId>(6 * f), petal_face(f, j)};
      auto& sp = out.edges[spoke(f, j)];
      sp.v = {midpoint(e_at[f][jm1 - 1]), central(f, j)};
      sp.face = {petal_face(f, jm1), petal_face(f, j)};
    }
  }

  // Rotations, boundary flags and marks.
  for (VertexId v = 0; v < V; ++v) {
    const auto& old = c.vertices[v];
    auto& nv = out.vertices[v];
    nv.rot.reserve(old.rot.size());
    for (EdgeEndRef r : old.rot) {
      EdgeId e = edge_of(r);
      nv.rot.push_back(side_of(r) == 0 ? edge_end(2 * e, 0) : edge_end(2 * e + 1, 1));
    }
    nv.boundary = old.boundary;
    if (inherit) {
      nv.mark_degree = old.mark_degree;
      nv.mark_decoration = old.mark_decoration;
    }
  }
  for (EdgeId e = 0; e < E; ++e) {
    const auto& er = c.edges[e];
    VertexId u = er.v[0], w = er.v[1];
    FaceId f0 = er.face[0], f1 = er.face[1];
    auto& mv = out.vertices[midpoint(e)];
    mv.rot.push_back(edge_end(2 * e, 1));  // toward u
    if (f1 != kNone) mv.rot.push_back(edge_end(spoke(f1, label_idx(f1, w) + 2 > 5
                                                         ? label_idx(f1, w) - 3
                                                         : label_idx(f1, w) + 2),
                                               0));
    mv.rot.push_back(edge_end(2 * e + 1, 0));  // toward w
    if (f0 != kNone) mv.rot.push_back(edge_end(spoke(f0, label_idx(f0, u) + 2 > 5
                                                         ? label_idx(f0, u) - 3
                                                         : label_idx(f0, u) + 2),
                                               0));
    mv.boundary = f0 == kNone || f1 == kNone;
    if (mv.boundary && inherit) {
      mv.mark_degree = 4;
      std::optional<Label> alpha, beta;
      if (f0 != kNone) alpha = c.label_at(f0, u);
      if (f1 != kNone) beta = c.label_at(f1, w);
      auto pair = c.missing_side_pair(e);
      if (pair) {
        if (f0 == kNone) alpha = pair->first;
        if (f1 == kNone) beta = pair->first;
      }
      if (alpha && beta)
        mv.mark_decoration = canonical_rotation(
            {*beta, beta->plus(1), *alpha, alpha->plus(1)});
    }
  }
  for (FaceId f = 0; f < F; ++f) {
    for (int j = 1; j <= 5; ++j) {
      int jm1 = (j + 3) % 5 + 1;
      auto& cv = out.vertices[central(f, j)];
      cv.rot = {edge_end(spoke(f, j), 1), edge_end(central_edge(f, j), 0),
                edge_end(central_edge(f, jm1), 1)};
      cv.boundary = false;
    }
  }
  return out;
}

PentComplex subdivide(const PentComplex& c) {
  return subdivide_with_table(c, rule_table(0), true);
}

PentComplex alt_subdivide(const PentComplex& c, int variant) {
  if (variant < 0 || variant > 4) throw Error(Errc::invalid_variant, "variant must be 0..4");
  // Variants 1..3 produce decorations outside the allowed sets by design, so
  // only the face-label invariant is insisted on here.
  for (FaceId f = 0; f < static_cast<FaceId>(c.face_count()); ++f) {
    const auto& fc = c.faces[f].corner;
    for (int k = 0; k < 5; ++k)
      if (fc[(k + 1) % 5].label != fc[k].label.plus(1))
        throw Error(Errc::invalid_input, "face labels are not a 5-cycle");
  }
  return subdivide_with_table(c, rule_table(variant), false);
}

PentComplex build_supertile(int n, int max_n) {
  if (n < 0 || n > max_n) throw Error(Errc::limit_exceeded, "supertile level out of range");
  PentComplex c = seed_pentagon();
  for (int k = 0; k < n; ++k) c = subdivide_with_table(c, rule_table(0), false);
  return c;
}

Flower flower_of(const PentComplex& subdivided, FaceId parent_face) {
  if (subdivided.face_count() % 6 != 0 || parent_face < 0 ||
      static_cast<std::size_t>(parent_face) >= subdivided.face_count() / 6)
    throw Error(Errc::unknown_face, "no such parent face");
  Flower fl;
  fl.central = 6 * parent_face;
  for (int i = 1; i <= 5; ++i) fl.petals[i - 1] = 6 * parent_face + i;
  return fl;
}

Patch supertile_petal(const PentComplex& k_np1, int n, int i) {
  std::int64_t block = 1;
  for (int k = 0; k < n; ++k) block *= 6;
  if (i < 0 || i > 5 || k_np1.face_count() != static_cast<std::size_t>(6 * block))
    throw Error(Errc::invalid_input, "complex is not the requested supertile level");
  Patch p;
  p.parent = &k_np1;
  p.faces.reserve(block);
  for (std::int64_t f = i * block; f < (i + 1) * block; ++f)
    p.faces.push_back(static_cast<FaceId>(f));
  return p;
}

// -- de-subdivision -----------------------------------------------------------

namespace {

struct FlowerShape {
  FaceId central = kNone;
  std::array<FaceId, 5> petal{};     // petal carrying parent label a at petal[a-1]
  std::array<VertexId, 5> corner{};  // parent corner u_a
  std::array<VertexId, 5> mid{};     // midpoint m_a between u_a and u_{a+1}
};

}  // namespace

std::optional<Pointed> try_desubdivide(const PentComplex& c, VertexId anchor) {
  const FaceId F = static_cast<FaceId>(c.face_count());
  // Central children: all five corners of known degree 3.
  std::vector<char> is_central(F, 0);
  for (FaceId f = 0; f < F; ++f) {
    bool all3 = true;
    for (const auto& corner : c.faces[f].corner) {
      auto d = c.full_degree(corner.v);
      if (!d || *d != 3) {
        all3 = false;
        break;
      }
    }
    is_central[f] = all3;
  }

  std::vector<std::int32_t> owner(F, kNone);  // flower index claiming each face
  std::vector<FlowerShape> flowers;
  for (FaceId f = 0; f < F; ++f) {
    if (!is_central[f]) continue;
    FlowerShape fl;
    fl.central = f;
    bool complete = true;
    for (int k = 0; k < 5 && complete; ++k) {
      EdgeId e = c.face_edge(f, k);
      FaceId g = c.edges[e].face[0] == f ? c.edges[e].face[1] : c.edges[e].face[0];
      if (g == kNone || is_central[g]) {
        complete = false;
        break;
      }
      // f traverses (x, y) along this side; in a petal these are (c_j, c_{j+1})
      // at positions 3 and 2 respectively.
      VertexId x = c.faces[f].corner[k].v;
      VertexId y = c.faces[f].corner[(k + 1) % 5].v;
      int qx = c.corner_index(g, x);
      if (c.faces[g].corner[(qx + 4) % 5].v != y) return std::nullopt;  // wrong orientation
      int j = c.faces[f].corner[k].label.value();  // central labels are the parent labels
      // Petal decoration must match the rule: label at the parent corner equals j.
      if (c.faces[g].corner[(qx + 2) % 5].label != Label(j)) return std::nullopt;
      if (c.faces[f].corner[(k + 1) % 5].label != Label(j + 1)) return std::nullopt;
      fl.petal[j - 1] = g;
      fl.corner[j - 1] = c.faces[g].corner[(qx + 2) % 5].v;  // position 0 of the petal
      fl.mid[j - 1] = c.faces[g].corner[(qx + 3) % 5].v;     // position 1: m_j
    }
    if (!complete) continue;
    // Petals must chain through shared midpoints: position-1 corner of petal a
    // equals position-4 corner of petal a+1.
    for (int a = 1; a <= 5 && complete; ++a) {
      FaceId nxt = fl.petal[a % 5];
      int pos0 = c.corner_index(nxt, fl.corner[a % 5]);
      VertexId m_prev = c.faces[nxt].corner[(pos0 + 4) % 5].v;
      if (m_prev != fl.mid[a - 1]) complete = false;
    }
    if (!complete) continue;
    std::int32_t idx = static_cast<std::int32_t>(flowers.size());
    if (owner[f] != kNone) return std::nullopt;
    owner[f] = idx;
    for (FaceId g : fl.petal) {
      if (owner[g] != kNone) return std::nullopt;  // claimed twice: no consistent partition
      owner[g] = idx;
    }
    flowers.push_back(fl);
  }
  if (flowers.empty()) return std::nullopt;

  // The anchor must be a parent corner of some retained flower.
  bool anchor_ok = false;
  for (EdgeEndRef r : c.vertices[anchor].rot) {
    EdgeId e = edge_of(r);
    for (FaceId g : c.edges[e].face) {
      if (g == kNone || owner[g] == kNone) continue;
      const FlowerShape& fl = flowers[owner[g]];
      for (int a = 0; a < 5; ++a)
        if (fl.petal[a] != kNone && fl.corner[a] == anchor) anchor_ok = true;
    }
  }
  if (!anchor_ok) return std::nullopt;

  // Assemble the parent complex.
  PentComplex parent;
  parent.faces.resize(flowers.size());
  std::map<VertexId, VertexId> vmap;  // child id of u -> parent vertex id (dense, sorted)
  for (const auto& fl : flowers)
    for (VertexId u : fl.corner) vmap.emplace(u, 0);
  {
    VertexId next = 0;
    for (auto& [child_id, pid] : vmap) pid = next++;
  }
  parent.vertices.resize(vmap.size());

  // Parent edges keyed by their midpoint vertex.
  std::map<VertexId, EdgeId> edge_of_mid;
  std::vector<EdgeRec> pedges;
  for (std::size_t fi = 0; fi < flowers.size(); ++fi) {
    const auto& fl = flowers[fi];
    for (int a = 1; a <= 5; ++a) {
      VertexId m = fl.mid[a - 1];
      VertexId pu = vmap.at(fl.corner[a - 1]);
      VertexId pw = vmap.at(fl.corner[a % 5]);
      auto it = edge_of_mid.find(m);
      if (it == edge_of_mid.end()) {
        EdgeId id = static_cast<EdgeId>(pedges.size());
        pedges.push_back(EdgeRec{{pu, pw}, {static_cast<FaceId>(fi), kNone}});
        edge_of_mid.emplace(m, id);
      } else {
        auto& er = pedges[it->second];
        if (er.v[0] != pw || er.v[1] != pu || er.face[1] != kNone)
          return std::nullopt;  // two flowers disagree about a shared edge
        er.face[1] = static_cast<FaceId>(fi);
      }
    }
  }
  parent.edges = std::move(pedges);

  for (std::size_t fi = 0; fi < flowers.size(); ++fi) {
    const auto& fl = flowers[fi];
    for (int a = 1; a <= 5; ++a)
      parent.faces[fi].corner[a - 1] = Corner{vmap.at(fl.corner[a - 1]), Label(a)};
  }

  // Rotations: restrict each parent vertex's child rotation to the half-edges
  // whose midpoints name retained parent edges.
  for (const auto& [child_id, pid] : vmap) {
    auto& pv = parent.vertices[pid];
    for (EdgeEndRef r : c.vertices[child_id].rot) {
      EdgeId half = edge_of(r);
      VertexId m = c.edge_other(half, child_id);
      auto it = edge_of_mid.find(m);
      if (it == edge_of_mid.end()) continue;
      const auto& er = parent.edges[it->second];
      int side = er.v[0] == pid ? 0 : 1;
      pv.rot.push_back(edge_end(it->second, side));
    }
    bool boundary = false;
    for (EdgeEndRef r : pv.rot)
      if (parent.is_boundary_edge(edge_of(r))) boundary = true;
    // A parent vertex that kept fewer edges than the child had parent-level
    // half-edges at is rim-truncated as well.
    if (pv.rot.size() < c.vertices[child_id].rot.size()) boundary = true;
    pv.boundary = boundary;
    if (boundary) {
      // The subdivision copies parent labels onto the petals, so the ambient
      // cycle at a surviving vertex is unchanged by the collapse.
      if (!c.vertices[child_id].boundary) {
        pv.mark_degree = static_cast<std::int16_t>(c.present_degree(child_id));
        pv.mark_decoration = c.full_decoration(child_id);
      } else {
        pv.mark_degree = c.vertices[child_id].mark_degree;
        pv.mark_decoration = c.vertices[child_id].mark_decoration;
      }
    }
  }
  auto it = vmap.find(anchor);
  if (it == vmap.end()) return std::nullopt;
  return Pointed{std::move(parent), it->second};
}

// -- symmetry audit ------------------------------------------------------------

static bool cyclic_symmetric(const LabelSeq& seq) {
  const std::size_t n = seq.size();
  for (std::size_t r = 1; r < n; ++r) {
    bool same = true;
    for (std::size_t k = 0; k < n && same; ++k)
      if (seq[(k + r) % n] != seq[k]) same = false;
    if (same) return true;
  }
  LabelSeq rev(seq.rbegin(), seq.rend());
  for (std::size_t r = 0; r < n; ++r) {
    bool same = true;
    for (std::size_t k = 0; k < n && same; ++k)
      if (rev[(k + r) % n] != seq[k]) same = false;
    if (same) return true;
  }
  return false;
}

std::vector<SymmetryFinding> symmetry_audit(int variant, int depth) {
  RuleTable t = rule_table(variant);
  PentComplex c = seed_pentagon();
  for (int k = 0; k < depth; ++k) c = subdivide_with_table(c, t, false);
  std::vector<SymmetryFinding> findings;
  for (VertexId v = 0; v < static_cast<VertexId>(c.vertex_count()); ++v) {
    if (c.vertices[v].boundary) continue;
    LabelSeq seq;
    for (FaceId f : c.sector_faces(v)) seq.push_back(c.label_at(f, v));
    if (cyclic_symmetric(seq)) {
      std::string what = "vertex decoration";
      for (Label l : seq) what += ' ' + std::to_string(l.value());
      findings.push_back({SymmetryFinding::Kind::vertex, v, what});
    }
  }
  for (EdgeId e = 0; e < static_cast<EdgeId>(c.edge_count()); ++e) {
    if (c.is_boundary_edge(e)) continue;
    const auto& er = c.edges[e];
    Label a = c.label_at(er.face[0], er.v[0]);
    Label b = c.label_at(er.face[1], er.v[1]);
    if (a == b)
      findings.push_back({SymmetryFinding::Kind::edge, e,
                          "edge decoration repeats pair " + std::to_string(a.value()) +
                              std::to_string(a.plus(1).value())});
  }
  return findings;
}

// -- rule solver ----------------------------------------------------------------

static bool interior_decorations_ok(const PentComplex& c, bool require_seed_list) {
  std::set<LabelSeq> central_triples;
  for (VertexId v = 0; v < static_cast<VertexId>(c.vertex_count()); ++v) {
    if (c.vertices[v].boundary) continue;
    auto dec = try_vertex_decoration(c, v);
    if (!dec || !allowed_vertex_decoration(*dec)) return false;
    if (dec->size() == 3) central_triples.insert(*dec);
  }
  for (EdgeId e = 0; e < static_cast<EdgeId>(c.edge_count()); ++e) {
    if (c.is_boundary_edge(e)) continue;
    auto dec = try_edge_decoration(c, e);
    if (!dec || !allowed_edge_decoration(*dec)) return false;
  }
  if (require_seed_list) {
    std::set<LabelSeq> want(allowed_triples().begin(), allowed_triples().end());
    if (central_triples != want) return false;
  }
  return true;
}

RuleSolveResult solve_rule_table() {
  RuleSolveResult result;
  PentComplex k0 = strip_marks(seed_pentagon());
  RuleTable t;
  for (int oc = 0; oc < 5; ++oc) {
    for (int o1 = 0; o1 < 5; ++o1)
      for (int o2 = 0; o2 < 5; ++o2)
        for (int o3 = 0; o3 < 5; ++o3)
          for (int o4 = 0; o4 < 5; ++o4)
            for (int o5 = 0; o5 < 5; ++o5) {
              t.label1_pos = {oc, o1, o2, o3, o4, o5};
              t.mirror = false;
              PentComplex k1 = subdivide_with_table(k0, t, false);
              // Interior of one subdivided pentagon: exactly the five central
              // corners; their decorations must be the seed list.
              if (!interior_decorations_ok(k1, true)) continue;
              PentComplex k2 = subdivide_with_table(k1, t, false);
              if (!interior_decorations_ok(k2, false)) continue;
              PentComplex k3 = subdivide_with_table(k2, t, false);
              if (!interior_decorations_ok(k3, false)) continue;
              result.stable.push_back(t);
              if (table_inherits_petal_labels(t)) result.stable_inheriting.push_back(t);
            }
  }
  std::sort(result.stable.begin(), result.stable.end());
  std::sort(result.stable_inheriting.begin(), result.stable_inheriting.end());
  if (!result.stable_inheriting.empty()) result.chosen = result.stable_inheriting.front();
  return result;
}

}  // namespace pentaplex
