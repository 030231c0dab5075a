#include "highgenus/heffter.hpp"

#include <algorithm>
#include <map>

#include "highgenus/errors.hpp"

namespace highgenus {
namespace {

struct BuiltinModulus {
  int q;
  std::vector<int> coefficients;  // monic, constant term first
};

// Conway polynomials
const std::vector<BuiltinModulus>& builtin_moduli() {
  static const std::vector<BuiltinModulus> table{
      {9, {2, 2, 1}},        // x^2 + 2x + 2
      {25, {2, 4, 1}},       // x^2 + 4x + 2
      {49, {3, 6, 1}},       // x^2 + 6x + 3
      {81, {2, 0, 0, 2, 1}}, // x^4 + 2x^3 + 2
      {121, {2, 7, 1}},      // x^2 + 7x + 2
      {125, {3, 3, 0, 1}},   // x^3 + 3x + 3
  };
  return table;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// cyclic rotation of b starting at b's copy of a[0], compared to a
bool same_cycle(const Face& a, const Face& b) {
  if (a.size() != b.size() || a.empty()) return false;
  const auto it = std::find(b.begin(), b.end(), a[0]);
  if (it == b.end()) return false;
  const std::size_t off = it - b.begin();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[(off + i) % b.size()]) return false;
  return true;
}

}  // namespace

std::optional<std::pair<int, int>> prime_power(int q) {
  if (q < 2) return std::nullopt;
  const auto factors = prime_factors(q);
  if (factors.size() != 1) return std::nullopt;
  int k = 0;
  for (int r = q; r > 1; r /= factors[0]) ++k;
  return std::pair{factors[0], k};
}

int FiniteField::add(int a, int b) const {
  if (k_ == 1) return (a + b) % p_;
  int out = 0;
  for (int place = 1; a > 0 || b > 0; place *= p_, a /= p_, b /= p_) out += ((a % p_ + b % p_) % p_) * place;
  return out;
}

int FiniteField::neg(int a) const {
  if (k_ == 1) return (p_ - a) % p_;
  int out = 0;
  for (int place = 1; a > 0; place *= p_, a /= p_) out += ((p_ - a % p_) % p_) * place;
  return out;
}

int FiniteField::mul(int a, int b) const {
  if (a == 0 || b == 0) return 0;
  if (!log_.empty()) return powers_[(log_[a] + log_[b]) % (q_ - 1)];
  if (k_ == 1) return static_cast<int>(static_cast<std::int64_t>(a) * b % p_);
  const auto x = coefficients(a);
  const auto y = coefficients(b);
  std::vector<int> prod(2 * k_ - 1, 0);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
  for (int d = 2 * k_ - 2; d >= k_; --d) {
    const int c = prod[d];
    if (c == 0) continue;
    for (int i = 0; i <= k_; ++i) prod[d - k_ + i] = ((prod[d - k_ + i] - c * modulus_[i]) % p_ + p_) % p_;
  }
  int out = 0;
  for (int i = k_ - 1; i >= 0; --i) out = out * p_ + prod[i];
  return out;
}

int FiniteField::pow(int a, std::int64_t e) const {
  int result = 1;
  int base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

int FiniteField::inv(int a) const {
  if (a == 0) throw Error(ErrorCode::DomainError, "zero has no inverse");
  return pow(a, q_ - 2);
}

int FiniteField::multiplicative_order(int a) const {
  if (a == 0) throw Error(ErrorCode::DomainError, "zero has no multiplicative order");
  int order = q_ - 1;
  for (int f : prime_factors(q_ - 1))
    while (order % f == 0 && pow(a, order / f) == 1) order /= f;
  return order;
}

std::vector<int> FiniteField::coefficients(int a) const {
  std::vector<int> out(k_);
  for (int i = 0; i < k_; ++i, a /= p_) out[i] = a % p_;
  return out;
}

std::string FiniteField::describe(int a) const {
  if (k_ == 1) return std::to_string(a);
  const auto c = coefficients(a);
  std::string out;
  for (int i = 0; i < k_; ++i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

FiniteField make_field(int q) {
  if (q < 5 || q % 4 != 1) throw Error(ErrorCode::NotFourGPlusOne, "q = " + std::to_string(q) + " is not 4g+1 with g >= 1");
  const auto pk = prime_power(q);
  if (!pk) throw Error(ErrorCode::UnsupportedPrimePower, std::to_string(q) + " is not a prime power");

  FiniteField field;
  field.q_ = q;
  field.p_ = pk->first;
  field.k_ = pk->second;
  if (field.k_ == 1) {
    field.modulus_ = {0, 1};
  } else {
    const auto& table = builtin_moduli();
    const auto it = std::find_if(table.begin(), table.end(), [q](const auto& m) { return m.q == q; });
    if (it == table.end()) throw Error(ErrorCode::UnsupportedPrimePower, "no built-in modulus for q = " + std::to_string(q));
    field.modulus_ = it->coefficients;
  }

  for (int a = 1; a < q; ++a)
    if (field.multiplicative_order(a) == q - 1) {
      field.alpha_ = a;
      break;
    }
  if (field.alpha_ == 0) throw Error(ErrorCode::InternalAssertion, "no generator found; modulus not irreducible?");

  field.powers_.resize(q - 1);
  field.powers_[0] = 1;
  for (int e = 1; e < q - 1; ++e) field.powers_[e] = field.mul(field.powers_[e - 1], field.alpha_);
  field.log_.assign(q, -1);
  for (int e = 0; e < q - 1; ++e) field.log_[field.powers_[e]] = e;
  return field;
}

HeffterConstruction heffter_surface(const FiniteField& field) {
  const int q = field.order();
  const int alpha = field.generator();
  const int scale = field.inv(field.sub(alpha, 1));
  // offsets (a^k - 1)/(a - 1) shared by all faces
  std::vector<int> offsets(q - 1);
  for (int k = 0; k < q - 1; ++k) offsets[k] = field.mul(field.sub(field.powers()[k], 1), scale);

  HeffterSurface heffter{field, {}, 0};
  heffter.faces.resize(q);
  for (int s = 0; s < q; ++s) {
    heffter.faces[s].reserve(q - 1);
    for (int off : offsets) heffter.faces[s].push_back(field.add(s, off));
  }
  const std::int64_t qq = q;
  heffter.genus = qq * (qq - 1) / 4 - qq + 1;

  std::vector<std::string> labels;
  labels.reserve(q);
  for (int x = 0; x < q; ++x) labels.push_back(field.describe(x));
  CellSurface surface = validate_surface(q, heffter.faces, std::move(labels));
  return {std::move(heffter), std::move(surface)};
}

HeffterSymmetryCheck check_self_dual_and_actions(const HeffterSurface& surface) {
  const auto& field = surface.field;
  const int q = field.order();
  const auto& faces = surface.faces;
  HeffterSymmetryCheck result;
  if (static_cast<int>(faces.size()) != q) {
    result.detail = "expected one face per field element";
    return result;
  }
  auto note = [&](int a, int b, std::string why) {
    if (!result.witness) {
      result.witness = std::pair{a, b};
      result.detail = std::move(why);
    }
  };

  result.additive = true;
  for (int t = 1; t < q && result.additive; ++t)
    for (int s = 0; s < q; ++s) {
      Face image;
      for (int v : faces[s]) image.push_back(field.add(v, t));
      if (!same_cycle(image, faces[field.add(s, t)])) {
        result.additive = false;
        note(s, field.add(s, t), "translation by " + field.describe(t) + " does not map F_s to F_{s+t}");
        break;
      }
    }

  result.multiplicative = true;
  const int alpha = field.generator();
  for (int s = 0; s < q; ++s) {
    Face image;
    for (int v : faces[s]) image.push_back(field.mul(alpha, v));
    const int target = field.sub(field.mul(alpha, s), 1);
    if (!same_cycle(image, faces[target])) {
      result.multiplicative = false;
      note(s, target, "multiplication by the generator does not map F_s to F_{as-1}");
      break;
    }
  }

  std::map<Edge, std::vector<int>> edge_faces;
  for (int s = 0; s < q; ++s)
    for (std::size_t i = 0; i < faces[s].size(); ++i) {
      const int a = faces[s][i];
      const int b = faces[s][(i + 1) % faces[s].size()];
      edge_faces[{std::min(a, b), std::max(a, b)}].push_back(s);
    }
  std::vector<std::vector<bool>> adjacent(q, std::vector<bool>(q, false));
  for (const auto& [edge, incident] : edge_faces)
    if (incident.size() == 2) {
      adjacent[incident[0]][incident[1]] = true;
      adjacent[incident[1]][incident[0]] = true;
    }
  result.dual_complete = true;
  for (int a = 0; a < q && result.dual_complete; ++a)
    for (int b = a + 1; b < q; ++b)
      if (!adjacent[a][b]) {
        result.dual_complete = false;
        note(a, b, "faces share no edge");
        break;
      }
  return result;
}

CellSurface stellar_triangulation(const HeffterSurface& surface) {
  const int q = surface.field.order();
  std::vector<Face> triangles;
  triangles.reserve(static_cast<std::size_t>(q) * (q - 1));
  for (int s = 0; s < q; ++s) {
    const auto& f = surface.faces[s];
    for (std::size_t k = 0; k < f.size(); ++k) triangles.push_back({f[k], f[(k + 1) % f.size()], q + s});
  }
  std::vector<std::string> labels;
  for (int x = 0; x < q; ++x) labels.push_back(surface.field.describe(x));
  for (int s = 0; s < q; ++s) labels.push_back("F_" + surface.field.describe(s));
  return validate_surface(2 * q, std::move(triangles), std::move(labels));
}

}  // namespace highgenus
