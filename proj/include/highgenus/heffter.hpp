#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "highgenus/surface.hpp"

namespace highgenus {

/// GF(q) for q = p^k. Elements are the integers 0..q-1; for k > 1 the
/// base-p digits of an element are its polynomial coefficients, constant
/// term first, reduced modulo a fixed monic irreducible polynomial.
class FiniteField {
 public:
  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return k_; }
  /// Monic modulus, constant term first; {0, 1} for prime fields.
  const std::vector<int>& modulus() const { return modulus_; }
  int generator() const { return alpha_; }
  /// generator^0 .. generator^(q-2)
  const std::vector<int>& powers() const { return powers_; }

  int add(int a, int b) const;
  int neg(int a) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const;
  int inv(int a) const;
  int pow(int a, std::int64_t e) const;
  /// Multiplicative order of a nonzero element.
  int multiplicative_order(int a) const;

  /// Polynomial coefficients of an element, constant term first.
  std::vector<int> coefficients(int a) const;
  /// "7" for prime fields, "2+x" style for extensions.
  std::string describe(int a) const;

 private:
  friend FiniteField make_field(int q);
  FiniteField() = default;

  int q_ = 0;
  int p_ = 0;
  int k_ = 1;
  std::vector<int> modulus_;
  int alpha_ = 0;
  std::vector<int> powers_;
  std::vector<int> log_;
};

/// Throws NotFourGPlusOne unless q = 1 mod 4, q >= 5; UnsupportedPrimePower
/// for composite q outside {9, 25, 49, 81, 121, 125}. The generator is the
/// smallest element of order q-1.
FiniteField make_field(int q);

/// Primes p with q = p^k, or empty if q is not a prime power.
std::optional<std::pair<int, int>> prime_power(int q);

struct HeffterSurface {
  FiniteField field;
  /// faces[s] = F_s, vertex k is s + (a^k - 1)/(a - 1), k = 0..q-2
  std::vector<Face> faces;
  std::int64_t genus = 0;
};

struct HeffterConstruction {
  HeffterSurface heffter;
  CellSurface surface;
};

HeffterConstruction heffter_surface(const FiniteField& field);

struct HeffterSymmetryCheck {
  bool additive = false;        // x -> x+t maps F_s onto F_{s+t}
  bool multiplicative = false;  // x -> a*x maps F_s onto F_{a*s-1}
  bool dual_complete = false;   // every two faces share an edge
  /// first failing face (and partner face for the dual graph check)
  std::optional<std::pair<int, int>> witness;
  std::string detail;

  bool holds() const { return additive && multiplicative && dual_complete; }
};

HeffterSymmetryCheck check_self_dual_and_actions(const HeffterSurface& surface);

/// Cones every F_s to a new apex q+s.
CellSurface stellar_triangulation(const HeffterSurface& surface);

}  // namespace highgenus
