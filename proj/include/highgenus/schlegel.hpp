#pragma once

#include <string>
#include <utility>
#include <vector>

#include "highgenus/deformed_cube.hpp"
#include "highgenus/hull.hpp"
#include "highgenus/rational.hpp"
#include "highgenus/surface.hpp"

namespace highgenus {

/// Rational affine frame of a 3-flat in R^4.
struct AffineFrame {
  Vec origin;
  std::vector<Vec> basis;  // three vectors
  std::array<int, 3> basis_vertices{};  // basis[i] = point[basis_vertices[i]] - origin
  int origin_vertex = -1;
};

struct SchlegelScene {
  int base_facet = 0;
  Rational t;  // viewpoint = c + t (y0 - c)
  Vec viewpoint;
  AffineFrame frame;
  std::vector<Vec> mapped;  // per input point, frame coordinates in R^3
};

/// c + t (y0 - c) with c the vertex barycenter and y0 the barycenter of F0;
/// t is the midpoint between 1 and the first crossing of another facet
/// hyperplane (t = 2 when the ray never crosses one).
std::pair<Rational, Vec> choose_viewpoint(const Polytope4& p, int f0);

/// Origin: smallest vertex id of F0; basis: edges of F0 from the origin to
/// its neighbors, smallest ids first, skipping dependent directions.
AffineFrame facet_frame(const Polytope4& p, int f0);

SchlegelScene make_scene(const Polytope4& p, int f0);

/// Central projection from the viewpoint onto aff(F0), in frame coordinates.
Vec schlegel_map(const Polytope4& p, const SchlegelScene& scene, const Vec& v);

struct EmbeddedMesh {
  std::vector<Vec> vertices;            // R^3
  std::vector<Face> faces;
  std::vector<std::string> provenance;  // cube face code per face, or empty
  std::vector<std::pair<std::string, std::string>> metadata;
};

struct Realization {
  EmbeddedMesh mesh;
  Polytope4 polytope;
  SchlegelScene scene;
  std::vector<PreservationCertificate> certificates;
};

/// Projects D_m^eps to its last four coordinates, takes the Schlegel diagram
/// with respect to facet f0 (index in the sorted facet list) and keeps the
/// Q_m quads. Throws MissingCertificate if some quad is not strictly
/// preserved, VertexLost if a cube vertex is not a hull vertex.
Realization realize_surface(int m, const Rational& eps, int f0 = 0);

/// Splits each quad with the equivelar diagonal of its provenance code.
EmbeddedMesh triangulate_mesh(const EmbeddedMesh& mesh);

}  // namespace highgenus
