#include "highgenus/schlegel.hpp"

#include <algorithm>

#include "highgenus/errors.hpp"
#include "highgenus/linalg.hpp"
#include "highgenus/mirror.hpp"

namespace highgenus {
namespace {

Vec barycenter(const std::vector<Vec>& points, const std::vector<int>& ids) {
  Vec c(4, Rational(0));
  for (int i : ids)
    for (int k = 0; k < 4; ++k) c[k] += points[i][k];
  for (auto& x : c) x /= static_cast<int>(ids.size());
  return c;
}

void check_facet(const Polytope4& p, int f0) {
  if (f0 < 0 || f0 >= static_cast<int>(p.facets.size()))
    throw Error(ErrorCode::DomainError, "facet " + std::to_string(f0) + " out of range (polytope has " +
                                            std::to_string(p.facets.size()) + " facets)");
}

}  // namespace

std::pair<Rational, Vec> choose_viewpoint(const Polytope4& p, int f0) {
  check_facet(p, f0);
  std::vector<int> all;
  for (int i = 0; i < static_cast<int>(p.points.size()); ++i) all.push_back(i);
  const Vec c = barycenter(p.points, all);
  const Vec y0 = barycenter(p.points, p.facets[f0].vertices);
  const Vec dir = sub(y0, c);

  bool found = false;
  Rational first;
  for (int f = 0; f < static_cast<int>(p.facets.size()); ++f) {
    if (f == f0) continue;
    const auto& facet = p.facets[f];
    const Rational slope = dot(facet.normal, dir);
    if (slope <= 0) continue;
    const Rational crossing = (facet.offset - dot(facet.normal, c)) / slope;
    if (!found || crossing < first) {
      first = crossing;
      found = true;
    }
  }
  if (found && first <= 1) throw Error(ErrorCode::InternalAssertion, "facet barycenter is not interior to its facet");
  const Rational t = found ? Rational((1 + first) / 2) : Rational(2);
  Vec view(4);
  for (int k = 0; k < 4; ++k) view[k] = c[k] + t * dir[k];
  return {t, view};
}

AffineFrame facet_frame(const Polytope4& p, int f0) {
  check_facet(p, f0);
  const auto& vs = p.facets[f0].vertices;
  AffineFrame frame;
  frame.origin_vertex = vs.front();
  frame.origin = p.points[frame.origin_vertex];
  Mat basis;
  int found = 0;
  for (std::size_t i = 1; i < vs.size() && found < 3; ++i) {
    if (!is_edge(p, frame.origin_vertex, vs[i])) continue;
    basis.push_back(sub(p.points[vs[i]], frame.origin));
    if (rank(basis) < static_cast<int>(basis.size())) {
      basis.pop_back();
      continue;
    }
    frame.basis_vertices[found++] = vs[i];
  }
  if (found < 3) throw Error(ErrorCode::InternalAssertion, "facet has fewer than three independent edges at its first vertex");
  frame.basis = std::move(basis);
  return frame;
}

SchlegelScene make_scene(const Polytope4& p, int f0) {
  SchlegelScene scene;
  scene.base_facet = f0;
  std::tie(scene.t, scene.viewpoint) = choose_viewpoint(p, f0);
  scene.frame = facet_frame(p, f0);
  for (const auto& v : p.points) scene.mapped.push_back(schlegel_map(p, scene, v));
  return scene;
}

Vec schlegel_map(const Polytope4& p, const SchlegelScene& scene, const Vec& v) {
  const auto& facet = p.facets.at(scene.base_facet);
  const Vec& e = scene.viewpoint;
  const Vec dir = sub(v, e);
  const Rational denom = dot(facet.normal, dir);
  if (denom == 0) throw Error(ErrorCode::InternalAssertion, "ray parallel to the base facet");
  const Rational s = (facet.offset - dot(facet.normal, e)) / denom;
  Vec y(4);
  for (int k = 0; k < 4; ++k) y[k] = e[k] + s * dir[k] - scene.frame.origin[k];

  // solve basis * a = y using three independent coordinate rows
  const auto& b = scene.frame.basis;
  for (int skip = 0; skip < 4; ++skip) {
    Mat a(3, Vec(3));
    Vec rhs(3);
    for (int r = 0, row = 0; r < 4; ++r) {
      if (r == skip) continue;
      for (int c = 0; c < 3; ++c) a[row][c] = b[c][r];
      rhs[row++] = y[r];
    }
    const Rational det = determinant(a);
    if (det == 0) continue;
    Vec out(3);
    for (int c = 0; c < 3; ++c) {
      Mat ac = a;
      for (int r = 0; r < 3; ++r) ac[r][c] = rhs[r];
      out[c] = determinant(ac) / det;
    }
    return out;
  }
  throw Error(ErrorCode::InternalAssertion, "degenerate facet frame");
}

Realization realize_surface(int m, const Rational& eps, int f0) {
  if (m < 4) throw Error(ErrorCode::DomainError, "realization needs m >= 4");
  if (m > 10) throw Error(ErrorCode::DomainError, "realization supports m <= 10");
  const DeformedCube cube = build_deformed_cube(m, eps);
  const auto qm = build_qm(m);

  Realization out;
  for (const auto& quad : qm.complex.quads) {
    auto attempt = try_preservation_certificate(cube, quad);
    if (!attempt.certificate) throw Error(ErrorCode::MissingCertificate, quad.code + ": " + attempt.failure);
    out.certificates.push_back(std::move(*attempt.certificate));
  }

  std::vector<Vec> points;
  const std::uint64_t count = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < count; ++mask) points.push_back(project_to_R4(cube_vertex(cube, mask)));
  out.polytope = hull4(points);
  const auto vertices = hull_vertices(out.polytope);
  if (vertices.size() != points.size())
    throw Error(ErrorCode::VertexLost, std::to_string(points.size() - vertices.size()) + " cube vertices are not hull vertices");

  out.scene = make_scene(out.polytope, f0);
  out.mesh.vertices = out.scene.mapped;
  for (const auto& quad : qm.complex.quads) {
    const auto c = oriented_quad(quad);
    out.mesh.faces.push_back({static_cast<int>(c[0]), static_cast<int>(c[1]), static_cast<int>(c[2]), static_cast<int>(c[3])});
    out.mesh.provenance.push_back(quad.code);
  }
  out.mesh.metadata = {{"m", std::to_string(m)}, {"eps", to_string(eps)}, {"f0", std::to_string(f0)}};
  return out;
}

EmbeddedMesh triangulate_mesh(const EmbeddedMesh& mesh) {
  EmbeddedMesh out;
  out.vertices = mesh.vertices;
  out.metadata = mesh.metadata;
  out.metadata.emplace_back("triangulated", "true");
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    if (f >= mesh.provenance.size() || mesh.provenance[f].empty())
      throw Error(ErrorCode::DomainError, "face " + std::to_string(f) + " has no provenance code");
    const auto code = CubeFaceCode::parse(mesh.provenance[f]);
    const auto oriented = oriented_quad(code);
    Face expected(oriented.begin(), oriented.end());
    if (mesh.faces[f] != Face(expected.begin(), expected.end()))
      throw Error(ErrorCode::DomainError, "face " + std::to_string(f) + " does not match its code " + code.code);
    for (const auto& t : split_quad(code)) {
      out.faces.push_back({static_cast<int>(t[0]), static_cast<int>(t[1]), static_cast<int>(t[2])});
      out.provenance.push_back(code.code);
    }
  }
  return out;
}

}  // namespace highgenus
