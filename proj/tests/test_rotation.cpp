#include <doctest.h>

#include <algorithm>
#include <set>

#include "highgenus/current_graph.hpp"
#include "highgenus/errors.hpp"
#include "highgenus/rotation.hpp"

using namespace highgenus;

namespace {

std::vector<int> reference_prefix(int s) {
  return {1, -(5 * s + 3), -(3 * s + 2), -(3 * s + 3), -(3 * s + 1), -(3 * s + 4), -3 * s, -(3 * s + 5)};
}

ErrorCode failure_of(const CurrentGraph& g) {
  const auto check = validate_current_graph(g);
  REQUIRE_FALSE(check.ok);
  return *check.failure;
}

// Independent oracle: rows of a Δ*-scheme give each triangle {i,j,k} once per corner.
std::set<std::array<int, 3>> corner_triangles(const RotationScheme& s) {
  std::set<std::array<int, 3>> out;
  for (int i = 0; i < s.n; ++i)
    for (std::size_t p = 0; p < s.rows[i].size(); ++p) {
      std::array<int, 3> t{i, s.rows[i][p], s.rows[i][(p + 1) % s.rows[i].size()]};
      std::sort(t.begin(), t.end());
      out.insert(t);
    }
  return out;
}

}  // namespace

TEST_CASE("tetrahedron scheme") {
  const RotationScheme tet{4, {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}};
  CHECK(check_delta_star(tet).holds);
  const auto r = analyze(scheme_to_surface(tet));
  CHECK(r.f_vector == FVector{4, 6, 4});
  CHECK(r.genus == 0);
}

TEST_CASE("Möbius torus listing") {
  const auto scheme = mobius_torus_scheme();
  CHECK(check_delta_star(scheme).holds);
  const auto surface = scheme_to_surface(scheme);
  const auto r = analyze(surface);
  CHECK(r.f_vector == FVector{7, 21, 14});
  CHECK(r.euler_characteristic == 0);
  CHECK(r.genus == 1);
  CHECK(r.orientable);
  CHECK(r.simplicial);
  CHECK(r.neighborly);
  CHECK(r.intersection_condition);
  CHECK(is_consistently_oriented(surface));
  CHECK(corner_triangles(scheme).size() == 14);
}

TEST_CASE("square pyramid breaks the triangle rule") {
  const auto scheme = square_pyramid_scheme();
  const auto check = check_delta_star(scheme);
  CHECK_FALSE(check.holds);
  REQUIRE(check.witness);
  const auto [i, j, k] = *check.witness;
  // the witness must be a genuine violation
  auto follows = [&](int row, int a, int b) {
    const auto& r = scheme.rows[row];
    const auto it = std::find(r.begin(), r.end(), a);
    return it != r.end() && r[(it - r.begin() + 1) % r.size()] == b;
  };
  CHECK(follows(i, j, k));
  const bool both = follows(j, k, i) && follows(k, i, j);
  CHECK_FALSE(both);
}

TEST_CASE("invalid schemes") {
  CHECK_THROWS_AS(validate_scheme({3, {{1, 1}, {0}, {}}}), Error);
  CHECK_THROWS_AS(validate_scheme({3, {{1, 2}, {0}, {}}}), Error);
  CHECK_THROWS_AS(validate_scheme({2, {{1}}}), Error);
}

TEST_CASE("expression evaluator") {
  CHECK(evaluate_expression("12*s+7", {{"s", 2}}) == 31);
  CHECK(evaluate_expression("-(3*s+5)", {{"s", 3}}) == -14);
  CHECK(evaluate_expression(" 2 * (j - 1) ", {{"j", 4}}) == 6);
  CHECK_THROWS_AS(evaluate_expression("s+", {{"s", 1}}), Error);
  CHECK_THROWS_AS(evaluate_expression("t", {{"s", 1}}), Error);
}

TEST_CASE("theta graph mod 7") {
  const auto g = ringel_network(0);
  CHECK(g.modulus == 7);
  CHECK(validate_current_graph(g).ok);
  const auto log = trace_current_graph(g);
  CHECK(log.closed);
  CHECK(log.labels == std::vector<int>{1, 3, 2, -1, -3, -2});
  CHECK(log_to_row(log, 7) == mobius_torus_scheme().rows[0]);
}

TEST_CASE("theta graph with a white vertex closes early") {
  auto g = ringel_network(0);
  g.vertices[1].color = VertexColor::White;
  const auto log = walk_current_graph(g);
  CHECK_FALSE(log.closed);
  CHECK_THROWS_AS(trace_current_graph(g), Error);
}

TEST_CASE("network instances") {
  for (int s = 1; s <= 10; ++s) {
    CAPTURE(s);
    const auto g = ringel_network(s);
    CHECK(g.modulus == 12 * s + 7);
    CHECK(g.arcs.size() == static_cast<std::size_t>(6 * s + 3));
    CHECK(g.vertices.size() == static_cast<std::size_t>(4 * s + 2));
    CHECK(validate_current_graph(g).ok);
    const auto log = trace_current_graph(g);
    CHECK(log.labels.size() == static_cast<std::size_t>(12 * s + 6));
    std::set<int> seen(log.labels.begin(), log.labels.end());
    CHECK(seen.size() == log.labels.size());
    if (s >= 2) {
      const auto prefix = reference_prefix(s);
      CHECK(std::equal(prefix.begin(), prefix.end(), log.labels.begin()));
    }
  }
}

TEST_CASE("reference prefixes") {
  auto prefix = [](int s) {
    const auto log = trace_current_graph(ringel_network(s));
    return std::vector<int>(log.labels.begin(), log.labels.begin() + 8);
  };
  CHECK(prefix(2) == std::vector<int>{1, -13, -8, -9, -7, -10, -6, -11});
  CHECK(prefix(3) == std::vector<int>{1, -18, -11, -12, -10, -13, -9, -14});
}

TEST_CASE("current graph defects") {
  auto reversed = ringel_network(2);
  std::swap(reversed.arcs[0].tail, reversed.arcs[0].head);
  CHECK(failure_of(reversed) == ErrorCode::FlowViolation);

  auto reused = ringel_network(2);
  reused.arcs[1].current = reused.arcs[0].current;
  CHECK(failure_of(reused) == ErrorCode::LabelReuse);

  auto dropped = ringel_network(2);
  // detach one end and hang it on another vertex: degrees 2 and 4
  const int end = dropped.vertices[0].rotation.back();
  dropped.vertices[0].rotation.pop_back();
  dropped.vertices[1].rotation.push_back(end);
  CHECK(failure_of(dropped) == ErrorCode::NotCubic);
}

TEST_CASE("ringel schemes") {
  for (int s = 0; s <= 4; ++s) {
    CAPTURE(s);
    const int n = 12 * s + 7;
    const auto scheme = ringel_scheme(s);
    CHECK(scheme.n == n);
    CHECK(check_delta_star(scheme).holds);
    for (int v = 0; v + 1 < n; ++v) {
      auto shifted = scheme.rows[v];
      for (int& x : shifted) x = (x + 1) % n;
      CHECK(shifted == scheme.rows[v + 1]);
    }
    const auto surface = scheme_to_surface(scheme);
    const auto r = analyze(surface);
    CHECK(r.simplicial);
    CHECK(r.neighborly);
    CHECK(r.orientable);
    CHECK(r.genus == static_cast<std::int64_t>((n - 3) * (n - 4) / 12));
    CHECK(static_cast<std::int64_t>(corner_triangles(scheme).size()) == r.f_vector.f2);
  }
  CHECK(analyze(scheme_to_surface(ringel_scheme(1))).genus == 20);
  CHECK(analyze(scheme_to_surface(ringel_scheme(2))).genus == 63);
}

TEST_CASE("s = 0 matches the Möbius listing up to relabeling") {
  const auto a = scheme_to_surface(ringel_scheme(0));
  const auto b = scheme_to_surface(mobius_torus_scheme());
  CHECK(find_isomorphism(a, b));
}

TEST_CASE("canonicalize") {
  const RotationScheme s{3, {{2, 1}, {2, 0}, {1, 0}}};
  CHECK(canonicalize(s).rows == std::vector<std::vector<int>>{{1, 2}, {0, 2}, {0, 1}});
}
