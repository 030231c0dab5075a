#include <doctest.h>

#include <algorithm>

#include "highgenus/embed.hpp"
#include "highgenus/linalg.hpp"

using namespace highgenus;

namespace {

// LP oracle: the two polygons share a point outside the convex hull of their
// common vertices iff some convex combination of each, equal as points, puts
// positive weight on non-shared vertices of the first.
bool oracle_bad_pair(const EmbeddedMesh& mesh, const Face& a, const Face& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  Mat rows(5, Vec(na + nb, Rational(0)));
  Vec rhs(5, Rational(0));
  for (std::size_t i = 0; i < na; ++i) {
    for (int c = 0; c < 3; ++c) rows[c][i] = mesh.vertices[a[i]][c];
    rows[3][i] = 1;
    if (std::find(b.begin(), b.end(), a[i]) == b.end()) rows[4][i] = 1;
  }
  for (std::size_t j = 0; j < nb; ++j) {
    for (int c = 0; c < 3; ++c) rows[c][na + j] = -mesh.vertices[b[j]][c];
    rows[3][na + j] = -1;
  }
  rhs[4] = 1;
  return solve_nonnegative(rows, rhs).has_value();
}

EmbeddedMesh cube_mesh() {
  EmbeddedMesh mesh;
  for (int mask = 0; mask < 8; ++mask) mesh.vertices.push_back(Vec{mask & 1, mask >> 1 & 1, mask >> 2 & 1});
  mesh.faces = {{0, 2, 3, 1}, {4, 5, 7, 6}, {0, 1, 5, 4}, {2, 6, 7, 3}, {0, 4, 6, 2}, {1, 3, 7, 5}};
  return mesh;
}

}  // namespace

TEST_CASE("cube mesh certifies with genus 0") {
  const auto cert = certify(cube_mesh());
  CHECK(cert.planar_ok);
  CHECK(cert.convex_ok);
  CHECK(cert.pairwise_ok);
  CHECK(cert.combinatorics_ok);
  CHECK(cert.genus_from_mesh == 0);
  CHECK(cert.accepted());
}

TEST_CASE("pipeline meshes certify and agree with the LP oracle") {
  for (int m : {4, 5}) {
    CAPTURE(m);
    const auto mesh = realize_surface(m, Rational(1, 4)).mesh;
    const auto cert = certify(mesh);
    CHECK(cert.accepted());
    CHECK(cert.genus_from_mesh == qm_genus(m));
    for (std::size_t a = 0; a < mesh.faces.size(); ++a)
      for (std::size_t b = a + 1; b < mesh.faces.size(); ++b) CHECK_FALSE(oracle_bad_pair(mesh, mesh.faces[a], mesh.faces[b]));
  }
}

TEST_CASE("off-plane vertex") {
  auto mesh = realize_surface(4, Rational(1, 4)).mesh;
  const int v = mesh.faces[3][2];
  mesh.vertices[v][0] += Rational(1, 1000);
  const auto check = check_planarity_convexity(mesh);
  CHECK_FALSE(check.planar_ok);
  REQUIRE_FALSE(check.failures.empty());
  for (const auto& f : check.failures) {
    CHECK(f.kind == "nonplanar");
    const auto& face = mesh.faces[f.face];
    CHECK(std::find(face.begin(), face.end(), v) != face.end());
  }
  CHECK_FALSE(certify(mesh).accepted());
}

TEST_CASE("bowtie quad") {
  auto mesh = cube_mesh();
  std::swap(mesh.faces[0][1], mesh.faces[0][2]);
  const auto check = check_planarity_convexity(mesh);
  CHECK(check.planar_ok);
  CHECK_FALSE(check.convex_ok);
  REQUIRE(check.failures.size() == 1);
  CHECK(check.failures[0].face == 0);
  CHECK(check.failures[0].kind == "nonconvex");
}

TEST_CASE("collinear face is degenerate") {
  EmbeddedMesh mesh;
  mesh.vertices = {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}};
  mesh.faces = {{0, 1, 2}};
  const auto check = check_planarity_convexity(mesh);
  CHECK_FALSE(check.convex_ok);
  CHECK(check.failures[0].kind == "degenerate");
}

TEST_CASE("coplanar overlap") {
  EmbeddedMesh mesh;
  mesh.vertices = {{0, 0, 0}, {2, 0, 0}, {2, 2, 0}, {0, 2, 0}, {1, 1, 0}, {3, 1, 0}, {3, 3, 0}, {1, 3, 0}};
  mesh.faces = {{0, 1, 2, 3}, {4, 5, 6, 7}};
  const auto failures = check_pairwise(mesh);
  REQUIRE(failures.size() == 1);
  CHECK(failures[0].kind == "overlap");
  CHECK(failures[0].face_a == 0);
  CHECK(failures[0].face_b == 1);
  // the overlap is the unit square [1,2]^2
  std::vector<Vec> w = failures[0].witness;
  std::sort(w.begin(), w.end());
  CHECK(w == std::vector<Vec>{{1, 1, 0}, {1, 2, 0}, {2, 1, 0}, {2, 2, 0}});
  CHECK(oracle_bad_pair(mesh, mesh.faces[0], mesh.faces[1]));
}

TEST_CASE("coplanar faces meeting in their shared edge are legal") {
  EmbeddedMesh mesh;
  mesh.vertices = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}, {2, 0, 0}, {2, 1, 0}};
  mesh.faces = {{0, 1, 2, 3}, {1, 4, 5, 2}};
  CHECK(check_pairwise(mesh).empty());
}

TEST_CASE("crossing triangles") {
  EmbeddedMesh mesh;
  mesh.vertices = {{0, 0, 0}, {4, 0, 0}, {0, 4, 0}, {1, 1, -1}, {1, 1, 1}, {5, 5, 0}};
  mesh.faces = {{0, 1, 2}, {3, 4, 5}};
  const auto failures = check_pairwise(mesh);
  REQUIRE(failures.size() == 1);
  CHECK(failures[0].kind == "crossing");
  CHECK(oracle_bad_pair(mesh, mesh.faces[0], mesh.faces[1]));
}

TEST_CASE("shared vertex touching along an extra segment") {
  EmbeddedMesh mesh;
  // second triangle shares vertex 0 and lies partly inside the first one's plane region
  mesh.vertices = {{0, 0, 0}, {4, 0, 0}, {0, 4, 0}, {2, 1, 0}, {1, 2, 1}};
  mesh.faces = {{0, 1, 2}, {0, 3, 4}};
  const auto failures = check_pairwise(mesh);
  REQUIRE(failures.size() == 1);
  CHECK(oracle_bad_pair(mesh, mesh.faces[0], mesh.faces[1]));
}

TEST_CASE("duplicate positions") {
  auto mesh = cube_mesh();
  mesh.vertices.push_back(mesh.vertices[0]);
  mesh.faces.push_back({8, 1, 3});
  const auto failures = check_pairwise(mesh);
  CHECK_FALSE(failures.empty());
  CHECK(failures[0].kind == "duplicate-vertex");
}

TEST_CASE("thread count does not change the verdict") {
  auto mesh = realize_surface(5, Rational(1, 4)).mesh;
  mesh.vertices[mesh.faces[0][0]][1] += 100;
  PairwiseOptions one{1, std::nullopt};
  PairwiseOptions four{4, true};
  const auto a = check_pairwise(mesh, one);
  const auto b = check_pairwise(mesh, four);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].face_a == b[i].face_a);
    CHECK(a[i].face_b == b[i].face_b);
  }
}

TEST_CASE("combinatorics must match Q_m") {
  auto mesh = realize_surface(4, Rational(1, 4)).mesh;
  std::reverse(mesh.faces[0].begin(), mesh.faces[0].end());
  const auto cert = certify(mesh);
  CHECK_FALSE(cert.combinatorics_ok);
  CHECK_FALSE(cert.accepted());
}
