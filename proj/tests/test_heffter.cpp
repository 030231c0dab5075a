#include <doctest.h>

#include <algorithm>
#include <set>

#include "highgenus/errors.hpp"
#include "highgenus/heffter.hpp"

using namespace highgenus;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InternalAssertion;
}

// naive polynomial product mod p, constant term first
std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
  std::vector<int> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return out;
}

// Independent irreducibility oracle: no monic factor of degree 1..k/2.
bool irreducible(const std::vector<int>& f, int p) {
  const int k = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= k; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      std::vector<int> g(d + 1);
      for (int i = 0, c = code; i < d; ++i, c /= p) g[i] = c % p;
      g[d] = 1;
      // divide f by g
      std::vector<int> r = f;
      for (int top = k; top >= d; --top) {
        const int c = r[top];
        for (int i = 0; i <= d; ++i) r[top - d + i] = ((r[top - d + i] - c * g[i]) % p + p) % p;
      }
      if (std::all_of(r.begin(), r.begin() + d, [](int x) { return x == 0; })) return false;
    }
  }
  return true;
}

std::int64_t binom2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace

TEST_CASE("prime power detection") {
  CHECK(prime_power(125) == std::pair{5, 3});
  CHECK(prime_power(13) == std::pair{13, 1});
  CHECK_FALSE(prime_power(45));
}

TEST_CASE("field q=13 and q=5") {
  const auto f13 = make_field(13);
  CHECK(f13.generator() == 2);
  CHECK(f13.powers() == std::vector<int>{1, 2, 4, 8, 3, 6, 12, 11, 9, 5, 10, 7});
  const auto f5 = make_field(5);
  CHECK(f5.generator() == 2);
  CHECK(f5.powers() == std::vector<int>{1, 2, 4, 3});
}

TEST_CASE("field domain errors") {
  CHECK(code_of([] { make_field(7); }) == ErrorCode::NotFourGPlusOne);
  CHECK(code_of([] { make_field(1); }) == ErrorCode::NotFourGPlusOne);
  CHECK(code_of([] { make_field(45); }) == ErrorCode::UnsupportedPrimePower);
  CHECK(code_of([] { make_field(169); }) == ErrorCode::UnsupportedPrimePower);
}

TEST_CASE("built-in moduli are irreducible and fields are fields") {
  for (int q : {9, 25, 49, 81, 121, 125}) {
    CAPTURE(q);
    const auto field = make_field(q);
    CHECK(irreducible(field.modulus(), field.characteristic()));
    const int alpha = field.generator();
    CHECK(field.multiplicative_order(alpha) == q - 1);
    std::set<int> seen(field.powers().begin(), field.powers().end());
    CHECK(seen.size() == static_cast<std::size_t>(q - 1));
    // generator is minimal: nothing smaller generates
    for (int a = 1; a < alpha; ++a) CHECK(field.multiplicative_order(a) < q - 1);
    // alpha^(2g) = -1
    CHECK(field.pow(alpha, (q - 1) / 2) == field.neg(1));
    // multiplication agrees with naive polynomial product
    for (int a = 0; a < q; a += 3)
      for (int b = 0; b < q; b += 5) {
        auto prod = poly_mul(field.coefficients(a), field.coefficients(b), field.characteristic());
        const auto& m = field.modulus();
        const int k = field.degree();
        const int p = field.characteristic();
        for (int top = static_cast<int>(prod.size()) - 1; top >= k; --top) {
          const int c = prod[top];
          for (int i = 0; i <= k; ++i) prod[top - k + i] = ((prod[top - k + i] - c * m[i]) % p + p) % p;
        }
        prod.resize(k);
        CHECK(field.coefficients(field.mul(a, b)) == prod);
      }
    for (int a = 1; a < q; ++a) CHECK(field.mul(a, field.inv(a)) == 1);
  }
}

TEST_CASE("prime fields agree with modular arithmetic") {
  for (int q : {5, 13, 17, 29, 37, 41}) {
    const auto field = make_field(q);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        CHECK(field.add(a, b) == (a + b) % q);
        CHECK(field.mul(a, b) == a * b % q);
      }
  }
}

TEST_CASE("Heffter q=5 faces") {
  const auto [h, s] = heffter_surface(make_field(5));
  CHECK(h.faces[0] == Face{0, 1, 3, 2});
  CHECK(h.genus == 1);
  const auto r = analyze(s);
  CHECK(r.genus == 1);
  CHECK(r.f_vector == FVector{5, 10, 5});
  // every face omits s + (-1)/(a-1)
  const auto& field = h.field;
  const int miss = field.mul(field.neg(1), field.inv(field.sub(field.generator(), 1)));
  for (int x = 0; x < 5; ++x) {
    const auto& f = h.faces[x];
    CHECK(std::find(f.begin(), f.end(), field.add(x, miss)) == f.end());
  }
}

TEST_CASE("Heffter surfaces and triangulations") {
  for (int q : {5, 9, 13, 17, 25, 29, 37, 49}) {
    CAPTURE(q);
    const auto [h, s] = heffter_surface(make_field(q));
    const auto r = analyze(s);
    CHECK(r.f_vector == FVector{q, binom2(q), q});
    CHECK(r.genus == binom2(q) / 2 - q + 1);
    CHECK(r.genus == h.genus);
    CHECK(r.orientable);
    const auto ic = check_intersection_condition(s);
    if (q >= 7) {
      CHECK_FALSE(ic.holds);
      CHECK(ic.shared_vertices.size() == static_cast<std::size_t>(q - 2));
    }
    CHECK(check_self_dual_and_actions(h).holds());

    const auto t = stellar_triangulation(h);
    const auto tr = analyze(t);
    const std::int64_t n = 2 * q;
    CHECK(tr.f_vector == FVector{n, 3 * binom2(q), 2 * binom2(q)});
    CHECK(tr.simplicial);
    CHECK(tr.intersection_condition);
    CHECK(tr.genus == (n * n - 10 * n + 16) / 16);
    CHECK(tr.genus == r.genus);
    const auto deg = t.vertex_degrees();
    CHECK(std::count(deg.begin(), deg.end(), 2 * q - 2) == q);
    CHECK(std::count(deg.begin(), deg.end(), q - 1) == q);
  }
}

TEST_CASE("q=5 intersection status is computed") {
  const auto [h, s] = heffter_surface(make_field(5));
  const auto ic = check_intersection_condition(s);
  // any two faces share q-2 = 3 vertices
  CHECK_FALSE(ic.holds);
  CHECK(ic.shared_vertices.size() == 3);
}

TEST_CASE("broken symmetry is detected") {
  auto [h, s] = heffter_surface(make_field(5));
  std::reverse(h.faces[2].begin(), h.faces[2].end());
  const auto check = check_self_dual_and_actions(h);
  CHECK_FALSE(check.holds());
  CHECK(check.witness);
}

TEST_CASE("generator choice and isomorphism type") {
  const auto field = make_field(13);
  const auto [h, s] = heffter_surface(field);
  auto rebuild = [&](int beta) {
    std::vector<Face> faces(13);
    const int scale = field.inv(field.sub(beta, 1));
    for (int x = 0; x < 13; ++x)
      for (int k = 0, pw = 1; k < 12; ++k, pw = field.mul(pw, beta))
        faces[x].push_back(field.add(x, field.mul(field.sub(pw, 1), scale)));
    return validate_surface(13, faces);
  };
  // the inverse generator gives the mirror image
  CHECK(find_isomorphism(s, rebuild(7)));
  // a^5 = 6 does not: the surface depends on the generator up to inversion
  CHECK_FALSE(find_isomorphism(s, rebuild(6)));
  CHECK(analyze(rebuild(6)).genus == 27);
}
