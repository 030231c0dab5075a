#pragma once

#include <cstdint>
#include <vector>

#include "highgenus/rational.hpp"

namespace highgenus {

struct Facet {
  Vec normal;  // primitive integer vector; normal . x <= offset on the polytope
  Rational offset;
  std::vector<int> vertices;  // indices of all input points on the facet, increasing
};

/// Full-dimensional convex polytope in R^4 with facets sorted
/// lexicographically by vertex list.
struct Polytope4 {
  std::vector<Vec> points;
  std::vector<Facet> facets;
};

/// Beneath-beyond hull with exact predicates; coplanar simplices are merged.
/// Throws DegenerateSpan if the points do not span R^4.
Polytope4 hull4(const std::vector<Vec>& points, std::uint32_t seed = 0x5eed2005U);

/// Input points that are vertices of the hull, increasing.
std::vector<int> hull_vertices(const Polytope4& p);

/// Facets containing all given points.
std::vector<int> facets_containing(const Polytope4& p, const std::vector<int>& points);

/// Dimension of the smallest face containing the given points (-1 when they
/// lie on no common facet and span the interior: returns 4).
int face_dimension(const Polytope4& p, const std::vector<int>& points);

/// u and w span an edge of the polytope.
bool is_edge(const Polytope4& p, int u, int w);

/// Primitive integer multiple of a nonzero rational vector (same direction).
Vec primitive_integer(const Vec& v);

/// Normal of the hyperplane through four points of R^4 (not normalized).
Vec hyperplane_normal(const Vec& p0, const Vec& p1, const Vec& p2, const Vec& p3);

}  // namespace highgenus
