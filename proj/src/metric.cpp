#include "pentaplex/metric.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace pentaplex {

DistanceField distance_field(const PentComplex& c, VertexId origin, int max_depth) {
  DistanceField df;
  df.origin = origin;
  df.dist.assign(c.vertex_count(), -1);
  std::vector<VertexId> frontier{origin}, next;
  df.dist[origin] = 0;
  int d = 0;
  while (!frontier.empty() && (max_depth < 0 || d < max_depth)) {
    next.clear();
    for (VertexId v : frontier) {
      for (EdgeEndRef r : c.vertices[v].rot) {
        VertexId w = c.edge_other(edge_of(r), v);
        if (df.dist[w] < 0) {
          df.dist[w] = d + 1;
          next.push_back(w);
        }
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier.swap(next);
    ++d;
  }
  return df;
}

DistanceField rim_distance_field(const PentComplex& c) {
  DistanceField df;
  df.origin = kNone;
  df.dist.assign(c.vertex_count(), -1);
  std::vector<VertexId> frontier, next;
  for (VertexId v = 0; v < static_cast<VertexId>(c.vertex_count()); ++v)
    if (c.vertices[v].boundary) {
      df.dist[v] = 0;
      frontier.push_back(v);
    }
  int d = 0;
  while (!frontier.empty()) {
    next.clear();
    for (VertexId v : frontier) {
      for (EdgeEndRef r : c.vertices[v].rot) {
        VertexId w = c.edge_other(edge_of(r), v);
        if (df.dist[w] < 0) {
          df.dist[w] = d + 1;
          next.push_back(w);
        }
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier.swap(next);
    ++d;
  }
  return df;
}

static int rim_distance_from(const PentComplex& c, VertexId u) {
  if (c.vertices[u].boundary) return 0;
  DistanceField df = distance_field(c, u);
  int best = -1;
  for (VertexId v = 0; v < static_cast<VertexId>(c.vertex_count()); ++v)
    if (c.vertices[v].boundary && df.dist[v] >= 0 && (best < 0 || df.dist[v] < best))
      best = df.dist[v];
  return best;
}

VertexDistance vertex_distance(const PentComplex& c, VertexId u, VertexId v) {
  DistanceField df = distance_field(c, u);
  if (df.dist[v] < 0) throw Error(Errc::disconnected, "vertices in different components");
  VertexDistance out;
  out.dist = df.dist[v];
  int ru = -1;
  for (VertexId w = 0; w < static_cast<VertexId>(c.vertex_count()); ++w)
    if (c.vertices[w].boundary && df.dist[w] >= 0 && (ru < 0 || df.dist[w] < ru))
      ru = df.dist[w];
  int rv = rim_distance_from(c, v);
  // An ambient shortcut would have to reach the rim from both endpoints.
  out.rim_limited = ru >= 0 && rv >= 0 && out.dist > ru + rv;
  return out;
}

// -- BallScanner ---------------------------------------------------------------

BallScanner::BallScanner(const PentComplex& c)
    : c_(c),
      dist_(c.vertex_count(), 0),
      vstamp_(c.vertex_count(), 0),
      fstamp_(c.face_count(), 0) {}

void BallScanner::bfs(VertexId center, int depth_cap) {
  ++stamp_;
  rim_seen_ = -1;
  touched_.clear();
  frontier_.clear();
  frontier_.push_back(center);
  touched_.push_back(center);
  dist_[center] = 0;
  vstamp_[center] = stamp_;
  if (c_.vertices[center].boundary) rim_seen_ = 0;
  int d = 0;
  while (!frontier_.empty() && d < depth_cap) {
    next_.clear();
    for (VertexId v : frontier_) {
      for (EdgeEndRef r : c_.vertices[v].rot) {
        VertexId w = c_.edge_other(edge_of(r), v);
        if (vstamp_[w] != stamp_) {
          vstamp_[w] = stamp_;
          dist_[w] = d + 1;
          next_.push_back(w);
          if (c_.vertices[w].boundary && rim_seen_ < 0) rim_seen_ = d + 1;
        }
      }
    }
    std::sort(next_.begin(), next_.end());
    next_.erase(std::unique(next_.begin(), next_.end()), next_.end());
    touched_.insert(touched_.end(), next_.begin(), next_.end());
    frontier_.swap(next_);
    ++d;
  }
}

int BallScanner::rim_within(VertexId center, int n) {
  bfs(center, n + 1);
  return rim_seen_;
}

const std::vector<FaceId>& BallScanner::collect(VertexId center, int n) {
  bfs(center, n);
  faces_.clear();
  // Every face of the ball is seen from any of its corners.
  for (VertexId v : touched_) {
    if (dist_[v] > n) continue;
    for (EdgeEndRef r : c_.vertices[v].rot) {
      FaceId f = c_.face_from(edge_of(r), v);
      if (f == kNone || fstamp_[f] == stamp_) continue;
      fstamp_[f] = stamp_;
      bool in = true;
      for (const auto& corner : c_.faces[f].corner) {
        if (vstamp_[corner.v] != stamp_ || dist_[corner.v] > n) {
          in = false;
          break;
        }
      }
      if (in) faces_.push_back(f);
    }
  }
  std::sort(faces_.begin(), faces_.end());
  return faces_;
}

// -- balls ----------------------------------------------------------------------

std::optional<Ball> try_ball(const PentComplex& c, VertexId v, int n, BallScanner* scan) {
  std::optional<BallScanner> own;
  if (!scan) {
    own.emplace(c);
    scan = &*own;
  }
  if (scan->rim_within(v, n) >= 0) return std::nullopt;
  Ball b;
  b.center = v;
  b.radius = n;
  b.patch.parent = &c;
  b.patch.faces = scan->collect(v, n);
  std::unordered_set<FaceId> in(b.patch.faces.begin(), b.patch.faces.end());
  std::set<EdgeId> bedges;
  std::set<VertexId> bverts;
  for (FaceId f : b.patch.faces) {
    for (int k = 0; k < 5; ++k) {
      EdgeId e = c.face_edge(f, k);
      FaceId g = c.edges[e].face[0] == f ? c.edges[e].face[1] : c.edges[e].face[0];
      if (g == kNone || !in.count(g)) {
        bedges.insert(e);
        bverts.insert(c.edges[e].v[0]);
        bverts.insert(c.edges[e].v[1]);
      }
    }
  }
  b.boundary_edges.assign(bedges.begin(), bedges.end());
  b.boundary_vertices.assign(bverts.begin(), bverts.end());
  return b;
}

Ball ball(const PentComplex& c, VertexId v, int n) {
  auto b = try_ball(c, v, n);
  if (!b) throw Error(Errc::rim_too_close, "truncation cannot certify the ball");
  return std::move(*b);
}

std::vector<int> boundary_profile(const Ball& b) {
  DistanceField df = distance_field(*b.patch.parent, b.center, b.radius + 1);
  std::vector<int> out;
  out.reserve(b.boundary_vertices.size());
  for (VertexId v : b.boundary_vertices) out.push_back(df.dist[v]);
  std::sort(out.begin(), out.end());
  return out;
}

int hole_count(const Ball& b) { return 1 - euler_characteristic(b.patch); }

BoundaryGrowth boundary_growth(const PentComplex& c, VertexId v, int n) {
  Ball bn = ball(c, v, n);
  Ball bn1 = ball(c, v, n + 1);
  BoundaryGrowth g;
  g.boundary_len = static_cast<int>(bn.boundary_edges.size());
  g.boundary_len_next = static_cast<int>(bn1.boundary_edges.size());
  g.faces = static_cast<std::int64_t>(bn.patch.faces.size());
  return g;
}

bool sandwich_check(const PentComplex& c, const PentComplex& sub, VertexId v, int n) {
  Ball inner = ball(c, v, n);
  Ball lo = ball(sub, v, 2 * n - 2);
  Ball hi = ball(sub, v, 2 * n + 2);
  std::unordered_set<FaceId> image;
  image.reserve(inner.patch.faces.size() * 6);
  for (FaceId f : inner.patch.faces)
    for (int k = 0; k < 6; ++k) image.insert(6 * f + k);
  for (FaceId f : lo.patch.faces)
    if (!image.count(f)) return false;
  std::unordered_set<FaceId> hi_set(hi.patch.faces.begin(), hi.patch.faces.end());
  for (FaceId f : image)
    if (!hi_set.count(f)) return false;
  return true;
}

std::vector<VertexId> shortest_path(const PentComplex& c, VertexId u, VertexId v) {
  DistanceField df = distance_field(c, u);
  if (df.dist[v] < 0) throw Error(Errc::disconnected, "vertices in different components");
  std::vector<VertexId> path{v};
  VertexId cur = v;
  while (cur != u) {
    VertexId best = kNone;
    for (EdgeEndRef r : c.vertices[cur].rot) {
      VertexId w = c.edge_other(edge_of(r), cur);
      if (df.dist[w] == df.dist[cur] - 1 && (best == kNone || w < best)) best = w;
    }
    cur = best;
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

int faces_along_path(const PentComplex& c, const std::vector<VertexId>& path) {
  std::set<FaceId> fs;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    for (EdgeEndRef r : c.vertices[path[k]].rot) {
      EdgeId e = edge_of(r);
      if (c.edge_other(e, path[k]) != path[k + 1]) continue;
      for (FaceId f : c.edges[e].face)
        if (f != kNone) fs.insert(f);
    }
  }
  return static_cast<int>(fs.size());
}

}  // namespace pentaplex
