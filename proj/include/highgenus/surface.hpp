#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace highgenus {

using Face = std::vector<int>;

struct FVector {
  std::int64_t f0 = 0;
  std::int64_t f1 = 0;
  std::int64_t f2 = 0;

  bool operator==(const FVector&) const = default;
};

/// Undirected edge with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// A closed combinatorial surface given by its 2-cells as vertex cycles.
///
/// Instances only come out of validate_surface(), so every CellSurface is
/// regular (faces have >= 3 distinct vertices), every edge lies in exactly
/// two faces, every vertex link is one cycle and the edge graph is connected.
/// Edges and links are derived from the faces on demand.
class CellSurface {
 public:
  int vertex_count() const { return n_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::vector<Edge> edges() const;
  FVector f_vector() const;
  std::vector<int> vertex_degrees() const;

 private:
  friend CellSurface validate_surface(int, std::vector<Face>, std::vector<std::string>);
  CellSurface(int n, std::vector<Face> faces, std::vector<std::string> labels)
      : n_(n), faces_(std::move(faces)), labels_(std::move(labels)) {}

  int n_ = 0;
  std::vector<Face> faces_;
  std::vector<std::string> labels_;
};

/// Validates a face list on vertices 0..n-1. Throws Error with one of
/// IrregularFace, EdgeDegree, BrokenLink, Disconnected (or DomainError for
/// an empty list / out-of-range index).
CellSurface validate_surface(int n, std::vector<Face> faces, std::vector<std::string> labels = {});

struct SurfaceReport {
  FVector f_vector;
  std::int64_t euler_characteristic = 0;
  std::optional<std::int64_t> genus;  // empty for non-orientable input
  bool orientable = false;
  bool simplicial = false;
  bool neighborly = false;
  bool intersection_condition = false;
};

SurfaceReport analyze(const CellSurface& surface);

/// Face orientation signs (+1 keep, -1 reverse) making every edge appear once
/// in each direction, or empty when the surface is not orientable.
std::optional<std::vector<int>> orientation_signs(const CellSurface& surface);

/// True when the faces as listed already induce opposite directions on every edge.
bool is_consistently_oriented(const CellSurface& surface);

/// Returns a copy with faces reoriented by orientation_signs (first face kept).
std::optional<CellSurface> oriented_copy(const CellSurface& surface);

struct IntersectionCheck {
  bool holds = true;
  std::optional<std::pair<int, int>> witness_faces;
  std::vector<int> shared_vertices;
};

/// Any two 2-cells must meet in nothing, a single vertex, or an edge of both.
IntersectionCheck check_intersection_condition(const CellSurface& surface);

struct GenusBound {
  std::int64_t genus = 0;
  /// (n-3)(n-4)/12 is an integer, i.e. n = 0,3,4,7 mod 12; the bound can
  /// then only be attained by a neighborly triangulation.
  bool equality_requires_neighborly = false;
};

GenusBound max_genus_bound(std::int64_t n);

/// Vertex map a -> b realizing a cell isomorphism (orientation preserving or
/// reversing), or empty. Both surfaces must be orientable.
std::optional<std::vector<int>> find_isomorphism(const CellSurface& a, const CellSurface& b);

CellSurface relabel(const CellSurface& surface, const std::vector<int>& permutation);

}  // namespace highgenus
