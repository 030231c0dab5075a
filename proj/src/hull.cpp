#include "highgenus/hull.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>

#include "highgenus/errors.hpp"
#include "highgenus/linalg.hpp"

namespace highgenus {
namespace {

struct Simplex {
  std::array<int, 4> v;
  Vec normal;
  Rational offset;
  bool alive = true;
};

Rational det3(const Vec& a, const Vec& b, const Vec& c, int i, int j, int k) {
  return a[i] * (b[j] * c[k] - b[k] * c[j]) - a[j] * (b[i] * c[k] - b[k] * c[i]) + a[k] * (b[i] * c[j] - b[j] * c[i]);
}

}  // namespace

Vec hyperplane_normal(const Vec& p0, const Vec& p1, const Vec& p2, const Vec& p3) {
  const Vec a = sub(p1, p0);
  const Vec b = sub(p2, p0);
  const Vec c = sub(p3, p0);
  return {det3(a, b, c, 1, 2, 3), -det3(a, b, c, 0, 2, 3), det3(a, b, c, 0, 1, 3), -det3(a, b, c, 0, 1, 2)};
}

Vec primitive_integer(const Vec& v) {
  Integer lcm_den = 1;
  for (const auto& x : v) lcm_den = boost::multiprecision::lcm(lcm_den, Integer(denominator(x)));
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& x : v) {
    ints.push_back(numerator(x) * (lcm_den / denominator(x)));
    g = boost::multiprecision::gcd(g, ints.back());
  }
  if (g == 0) throw Error(ErrorCode::InternalAssertion, "zero normal");
  Vec out;
  for (const auto& x : ints) out.emplace_back(Integer(x / g));
  return out;
}

Polytope4 hull4(const std::vector<Vec>& points, std::uint32_t seed) {
  const int n = static_cast<int>(points.size());
  for (const auto& p : points)
    if (p.size() != 4) throw Error(ErrorCode::DomainError, "hull4 expects points in R^4");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937 rng(seed);
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng() % static_cast<std::uint32_t>(i + 1)]);

  // initial simplex: greedy affine independence in insertion order
  std::vector<int> simplex;
  Mat diffs;
  for (int idx : order) {
    if (simplex.empty()) {
      simplex.push_back(idx);
      continue;
    }
    diffs.push_back(sub(points[idx], points[simplex[0]]));
    if (rank(diffs) == static_cast<int>(diffs.size())) {
      simplex.push_back(idx);
      if (simplex.size() == 5) break;
    } else {
      diffs.pop_back();
    }
  }
  if (simplex.size() < 5) throw Error(ErrorCode::DegenerateSpan, "points span a space of dimension " + std::to_string(simplex.size() - 1));

  Vec interior(4, Rational(0));
  for (int i : simplex)
    for (int c = 0; c < 4; ++c) interior[c] += points[i][c] / 5;

  std::vector<Simplex> facets;
  auto add_facet = [&](std::array<int, 4> v) {
    Vec normal = hyperplane_normal(points[v[0]], points[v[1]], points[v[2]], points[v[3]]);
    Rational offset = dot(normal, points[v[0]]);
    if (dot(normal, interior) > offset) {
      for (auto& x : normal) x = -x;
      offset = -offset;
    }
    std::sort(v.begin(), v.end());
    facets.push_back({v, std::move(normal), std::move(offset), true});
  };
  for (int skip = 0; skip < 5; ++skip) {
    std::array<int, 4> v{};
    for (int i = 0, j = 0; i < 5; ++i)
      if (i != skip) v[j++] = simplex[i];
    add_facet(v);
  }

  for (int idx : order) {
    if (std::find(simplex.begin(), simplex.end(), idx) != simplex.end()) continue;
    const Vec& p = points[idx];
    std::vector<std::size_t> visible;
    bool outside = false;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (!facets[f].alive) continue;
      const Rational s = dot(facets[f].normal, p) - facets[f].offset;
      if (s >= 0) visible.push_back(f);
      if (s > 0) outside = true;
    }
    // on the boundary but not beyond any facet: already in the hull
    if (!outside) continue;
    std::map<std::array<int, 3>, int> ridges;
    for (std::size_t f : visible) {
      const auto& v = facets[f].v;
      for (int skip = 0; skip < 4; ++skip) {
        std::array<int, 3> r{};
        for (int i = 0, j = 0; i < 4; ++i)
          if (i != skip) r[j++] = v[i];
        ++ridges[r];
      }
      facets[f].alive = false;
    }
    for (const auto& [r, count] : ridges)
      if (count == 1) add_facet({r[0], r[1], r[2], idx});
  }

  // merge coplanar simplices into facets
  std::map<std::pair<Vec, Rational>, bool> planes;
  for (const auto& f : facets) {
    if (!f.alive) continue;
    Vec normal = primitive_integer(f.normal);
    Rational offset = dot(normal, points[f.v[0]]);
    planes.emplace(std::pair{std::move(normal), std::move(offset)}, true);
  }
  Polytope4 hull{points, {}};
  for (const auto& [plane, unused] : planes) {
    Facet facet{plane.first, plane.second, {}};
    for (int i = 0; i < n; ++i)
      if (dot(facet.normal, points[i]) == facet.offset) facet.vertices.push_back(i);
    hull.facets.push_back(std::move(facet));
  }
  std::sort(hull.facets.begin(), hull.facets.end(),
            [](const Facet& a, const Facet& b) { return a.vertices < b.vertices; });
  return hull;
}

std::vector<int> facets_containing(const Polytope4& p, const std::vector<int>& points) {
  std::vector<int> out;
  for (std::size_t f = 0; f < p.facets.size(); ++f) {
    const auto& vs = p.facets[f].vertices;
    if (std::all_of(points.begin(), points.end(), [&](int x) { return std::binary_search(vs.begin(), vs.end(), x); }))
      out.push_back(static_cast<int>(f));
  }
  return out;
}

int face_dimension(const Polytope4& p, const std::vector<int>& points) {
  Mat normals;
  for (int f : facets_containing(p, points)) normals.push_back(p.facets[f].normal);
  return 4 - rank(normals);
}

std::vector<int> hull_vertices(const Polytope4& p) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(p.points.size()); ++i)
    if (face_dimension(p, {i}) == 0) out.push_back(i);
  return out;
}

bool is_edge(const Polytope4& p, int u, int w) {
  if (u == w) return false;
  return face_dimension(p, {u, w}) == 1;
}

}  // namespace highgenus
