#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pentaplex/core.hpp"

namespace pentaplex {

struct DistanceField {
  VertexId origin = kNone;
  std::vector<std::int32_t> dist;  // -1: unreachable or beyond the cap
};

/// BFS over the 1-skeleton, lowest-id-first within each layer.
DistanceField distance_field(const PentComplex& c, VertexId origin, int max_depth = -1);

/// Multi-source BFS from all boundary vertices (their distance is 0).
/// Vertices of a complex without boundary get -1.
DistanceField rim_distance_field(const PentComplex& c);

struct VertexDistance {
  int dist = -1;
  /// Set when a shorter path through the ambient complex cannot be ruled out.
  bool rim_limited = false;
};
VertexDistance vertex_distance(const PentComplex& c, VertexId u, VertexId v);

struct Ball {
  VertexId center = kNone;
  int radius = 0;
  Patch patch;
  std::vector<EdgeId> boundary_edges;
  std::vector<VertexId> boundary_vertices;
};

/// B(v,n): faces all of whose corners lie within distance n of v. Requires the
/// center to be at least n+2 from the truncation rim (throws rim_too_close).
class BallScanner;
Ball ball(const PentComplex& c, VertexId v, int n);
/// Pass a scanner to reuse its workspace across many centers.
std::optional<Ball> try_ball(const PentComplex& c, VertexId v, int n,
                             BallScanner* scan = nullptr);

/// Distances of the boundary vertices from the center, sorted ascending.
std::vector<int> boundary_profile(const Ball& b);

/// 1 - euler characteristic of the ball patch.
int hole_count(const Ball& b);

struct BoundaryGrowth {
  int boundary_len = 0;       // |boundary edges| of B(v,n)
  int boundary_len_next = 0;  // |boundary edges| of B(v,n+1)
  std::int64_t faces = 0;     // |B(v,n)|
};
BoundaryGrowth boundary_growth(const PentComplex& c, VertexId v, int n);

/// Checks B(v,2n-2,sub) subset of sub(B(v,n,c)) subset of B(v,2n+2,sub), where
/// sub must be the subdivision of c (old vertex ids persist).
bool sandwich_check(const PentComplex& c, const PentComplex& sub, VertexId v, int n);

/// One shortest path from u to v (lowest-id tie-break), as its vertex list.
std::vector<VertexId> shortest_path(const PentComplex& c, VertexId u, VertexId v);

/// Distinct faces incident to the edges of a path.
int faces_along_path(const PentComplex& c, const std::vector<VertexId>& path);

/// Reusable workspace so sweeps over many centers avoid per-call allocation.
class BallScanner {
 public:
  explicit BallScanner(const PentComplex& c);

  /// Distance from the center to the nearest rim vertex found while scanning
  /// to depth n+1; -1 when none was seen (i.e. the ball is certified).
  int rim_within(VertexId center, int n);

  /// Collects B(center, n) face set without certification checks; the caller
  /// is responsible for the rim margin. Returns faces sorted.
  const std::vector<FaceId>& collect(VertexId center, int n);

  int dist_of(VertexId v) const {
    return vstamp_[v] == stamp_ ? dist_[v] : -1;
  }

 private:
  void bfs(VertexId center, int depth_cap);

  const PentComplex& c_;
  std::vector<std::int32_t> dist_, vstamp_, fstamp_;
  std::vector<VertexId> frontier_, next_, touched_;
  std::vector<FaceId> faces_;
  std::int32_t stamp_ = 0;
  int rim_seen_ = -1;
};

}  // namespace pentaplex
