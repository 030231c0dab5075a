#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "highgenus/errors.hpp"
#include "highgenus/hull.hpp"
#include "highgenus/linalg.hpp"
#include "highgenus/schlegel.hpp"

using namespace highgenus;

namespace {

std::vector<Vec> cube4(int scale) {
  std::vector<Vec> pts;
  for (int mask = 0; mask < 16; ++mask) {
    Vec p(4);
    for (int k = 0; k < 4; ++k) p[k] = (mask >> k & 1) ? scale : -scale;
    pts.push_back(p);
  }
  return pts;
}

std::vector<Vec> simplex4() {
  std::vector<Vec> pts{Vec(4, Rational(0))};
  for (int k = 0; k < 4; ++k) {
    Vec e(4, Rational(0));
    e[k] = 1;
    pts.push_back(e);
  }
  return pts;
}

// Brute-force oracle: every supporting hyperplane through 4 points whose tight
// set has affine rank 3, keyed by tight set.
std::set<std::vector<int>> brute_force_facets(const std::vector<Vec>& pts) {
  const int n = static_cast<int>(pts.size());
  std::set<std::vector<int>> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const Vec u = sub(pts[b], pts[a]);
          const Vec v = sub(pts[c], pts[a]);
          const Vec w = sub(pts[d], pts[a]);
          // normal by cofactors, written out independently of the library
          auto m3 = [&](int i, int j, int k) {
            return u[i] * (v[j] * w[k] - v[k] * w[j]) - u[j] * (v[i] * w[k] - v[k] * w[i]) +
                   u[k] * (v[i] * w[j] - v[j] * w[i]);
          };
          const Vec nrm{m3(1, 2, 3), -m3(0, 2, 3), m3(0, 1, 3), -m3(0, 1, 2)};
          if (std::all_of(nrm.begin(), nrm.end(), [](const Rational& x) { return x == 0; })) continue;
          const Rational off = dot(nrm, pts[a]);
          int above = 0, below = 0;
          std::vector<int> tight;
          for (int i = 0; i < n; ++i) {
            const Rational s = dot(nrm, pts[i]) - off;
            if (s > 0) ++above;
            if (s < 0) ++below;
            if (s == 0) tight.push_back(i);
          }
          if (above == 0 || below == 0) out.insert(tight);
        }
  return out;
}

std::vector<Vec> pipeline_points(int m) {
  const auto cube = build_deformed_cube(m, Rational(1, 4));
  std::vector<Vec> pts;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) pts.push_back(project_to_R4(cube_vertex(cube, mask)));
  return pts;
}

void check_against_oracle(const std::vector<Vec>& pts) {
  const auto hull = hull4(pts);
  std::set<std::vector<int>> ours;
  for (const auto& f : hull.facets) {
    ours.insert(f.vertices);
    for (const auto& p : pts) CHECK(dot(f.normal, p) <= f.offset);
    Mat diffs;
    for (int v : f.vertices) diffs.push_back(sub(pts[v], pts[f.vertices[0]]));
    CHECK(rank(diffs) == 3);
  }
  CHECK(ours == brute_force_facets(pts));
}

}  // namespace

TEST_CASE("hull of the 4-cube and the 4-simplex") {
  const auto cube = hull4(cube4(1));
  CHECK(cube.facets.size() == 8);
  for (const auto& f : cube.facets) CHECK(f.vertices.size() == 8);
  CHECK(hull_vertices(cube).size() == 16);
  const auto simplex = hull4(simplex4());
  CHECK(simplex.facets.size() == 5);
  check_against_oracle(cube4(3));
  check_against_oracle(simplex4());
}

TEST_CASE("interior and boundary points are not vertices") {
  auto pts = cube4(2);
  pts.push_back(Vec(4, Rational(0)));           // interior
  pts.push_back(Vec{2, 0, 0, 0});               // facet center
  pts.push_back(Vec{2, 2, 0, 0});               // ridge point
  const auto hull = hull4(pts);
  CHECK(hull.facets.size() == 8);
  CHECK(hull_vertices(hull).size() == 16);
  check_against_oracle(pts);
}

TEST_CASE("hull is independent of the insertion order") {
  const auto pts = pipeline_points(5);
  const auto a = hull4(pts, 1);
  const auto b = hull4(pts, 99);
  REQUIRE(a.facets.size() == b.facets.size());
  for (std::size_t i = 0; i < a.facets.size(); ++i) CHECK(a.facets[i].vertices == b.facets[i].vertices);
}

TEST_CASE("degenerate input") {
  std::vector<Vec> flat;
  for (int i = 0; i < 8; ++i) flat.push_back(Vec{i, i * i, 1 + i, 0});
  try {
    hull4(flat);
    FAIL("flat input accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateSpan);
  }
}

TEST_CASE("pipeline hulls keep every vertex") {
  for (int m = 4; m <= 6; ++m) {
    CAPTURE(m);
    const auto pts = pipeline_points(m);
    const auto hull = hull4(pts);
    CHECK(hull_vertices(hull).size() == pts.size());
    // golden facet counts, cross-checked below for m <= 5
    const std::map<int, std::size_t> golden{{4, 8}, {5, 24}, {6, 64}};
    CHECK(hull.facets.size() == golden.at(m));
    for (const auto& f : hull.facets) CHECK(f.vertices.size() == 8);
    if (m <= 5) check_against_oracle(pts);
  }
}

TEST_CASE("primitive normals") {
  CHECK(primitive_integer(Vec{Rational(2, 3), Rational(-4, 9), 0, 2}) == Vec{3, -2, 0, 9});
}

TEST_CASE("viewpoints are beyond F0 only") {
  auto check_scene = [](const Polytope4& p) {
    for (int f0 = 0; f0 < static_cast<int>(p.facets.size()); ++f0) {
      const auto [t, view] = choose_viewpoint(p, f0);
      CHECK(t > 1);
      for (int f = 0; f < static_cast<int>(p.facets.size()); ++f) {
        const Rational s = dot(p.facets[f].normal, view) - p.facets[f].offset;
        if (f == f0) CHECK(s > 0);
        else CHECK(s < 0);
      }
    }
  };
  check_scene(hull4(cube4(1)));
  check_scene(hull4(simplex4()));
  check_scene(hull4(pipeline_points(4)));
  check_scene(hull4(pipeline_points(5)));
  // for the corner simplex no other facet is ever crossed
  const auto simplex = hull4(simplex4());
  for (int f0 = 0; f0 < 5; ++f0) CHECK(choose_viewpoint(simplex, f0).first == 2);
}

TEST_CASE("Schlegel map of the 4-cube") {
  const auto cube = hull4(cube4(1));
  // facet x_4 = 1 : the vertices with bit 3 set
  int top = -1;
  for (int f = 0; f < 8; ++f)
    if (cube.facets[f].normal == Vec{0, 0, 0, 1}) top = f;
  REQUIRE(top >= 0);
  const auto scene = make_scene(cube, top);
  // the frame uses edges, so the top facet maps onto the unit cube
  for (int v : cube.facets[top].vertices) {
    const Vec& x = scene.mapped[v];
    Vec back = scene.frame.origin;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 4; ++k) back[k] += x[i] * scene.frame.basis[i][k];
    CHECK(back == cube.points[v]);
    for (const auto& c : x) CHECK((c == 0 || c == 1));
  }
  for (int v = 0; v < 8; ++v) {
    for (const auto& c : scene.mapped[v]) {
      CHECK(c > 0);
      CHECK(c < 1);
    }
  }
}

TEST_CASE("pipeline images are distinct") {
  const auto r = realize_surface(5, Rational(1, 4));
  std::set<Vec> images(r.mesh.vertices.begin(), r.mesh.vertices.end());
  CHECK(images.size() == 32);
  CHECK(r.mesh.faces.size() == 40);
  const auto& f0 = r.polytope.facets[r.scene.base_facet];
  for (int v : f0.vertices) {
    Vec back = r.scene.frame.origin;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 4; ++k) back[k] += r.scene.mapped[v][i] * r.scene.frame.basis[i][k];
    CHECK(back == r.polytope.points[v]);
  }
}

TEST_CASE("realization errors") {
  CHECK_THROWS_AS(realize_surface(3, Rational(1, 4)), Error);
  CHECK_THROWS_AS(realize_surface(5, Rational(1, 4), 999), Error);
  try {
    realize_surface(5, Rational(9, 10));
    FAIL("eps = 9/10 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EpsilonOutOfRange);
  }
}

TEST_CASE("triangulated mesh") {
  const auto r = realize_surface(4, Rational(1, 4));
  const auto t = triangulate_mesh(r.mesh);
  CHECK(t.faces.size() == 32);
  const auto s = validate_surface(16, t.faces);
  for (int d : s.vertex_degrees()) CHECK(d == 6);
  CHECK(analyze(s).genus == 1);
}
