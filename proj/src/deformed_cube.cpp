#include "highgenus/deformed_cube.hpp"

#include <algorithm>
#include <set>

#include "highgenus/errors.hpp"
#include "highgenus/linalg.hpp"

namespace highgenus {
namespace {

constexpr int kTail[4] = {2, -7, 7, -2};

}  // namespace

DeformedCube DeformedCube::unchecked(int m, const Rational& eps) {
  DeformedCube cube;
  cube.m = m;
  cube.eps = eps;
  const Rational ratio = eps == 0 ? Rational(0) : Rational(6 / eps);
  Rational bk = 1;
  for (int k = 1; k <= m; ++k) {
    cube.b.push_back(bk);
    bk *= ratio;
    for (bool upper : {false, true}) {
      Vec row(m, Rational(0));
      row[k - 1] = upper ? eps : Rational(-eps);
      for (int d = 1; d <= 4; ++d)
        if (k - 1 - d >= 0) row[k - 1 - d] = kTail[d - 1];
      cube.rows.push_back(std::move(row));
      cube.rhs.push_back(cube.b.back());
    }
  }
  return cube;
}

DeformedCube build_deformed_cube(int m, const Rational& eps) {
  if (m < 4) throw Error(ErrorCode::DomainError, "deformed cube needs m >= 4");
  if (m > 62) throw Error(ErrorCode::DomainError, "m > 62 is not supported");
  if (eps <= 0 || eps >= Rational(1, 2))
    throw Error(ErrorCode::EpsilonOutOfRange, "eps = " + to_string(eps) + " is outside (0, 1/2)");
  return DeformedCube::unchecked(m, eps);
}

std::vector<int> SignedVertex::signs() const {
  std::vector<int> out(coords.size());
  for (std::size_t p = 0; p < coords.size(); ++p) out[p] = (mask >> p & 1U) ? 1 : -1;
  return out;
}

SignedVertex cube_vertex(const DeformedCube& cube, std::uint64_t mask) {
  SignedVertex v{mask, Vec(cube.m, Rational(0))};
  for (int k = 0; k < cube.m; ++k) {
    Rational rhs = cube.b[k];
    for (int d = 1; d <= 4 && k - d >= 0; ++d) rhs -= kTail[d - 1] * v.coords[k - d];
    v.coords[k] = rhs / cube.eps;
    if (!(mask >> k & 1U)) v.coords[k] = -v.coords[k];
  }
  return v;
}

CubeCheck verify_cube_combinatorics(const DeformedCube& cube) {
  const int m = cube.m;
  if (m > 20) return {false, std::nullopt, "m too large for exhaustive enumeration"};
  const std::uint64_t count = std::uint64_t{1} << m;
  std::set<Vec> seen;
  std::vector<std::uint64_t> row_tight(2 * m, 0);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const auto v = cube_vertex(cube, mask);
    if (!seen.insert(v.coords).second) return {false, mask, "vertex coincides with an earlier one"};
    for (int k = 0; k < m; ++k) {
      bool tight[2];
      for (int side = 0; side < 2; ++side) {
        const int r = 2 * k + side;
        const Rational lhs = dot(cube.rows[r], v.coords);
        if (lhs > cube.rhs[r]) return {false, mask, "violates row " + std::to_string(r)};
        tight[side] = lhs == cube.rhs[r];
        if (tight[side]) ++row_tight[r];
      }
      if (tight[0] && tight[1]) return {false, mask, "both rows of pair " + std::to_string(k + 1) + " tight"};
      const bool want_upper = mask >> k & 1U;
      if (!tight[want_upper ? 1 : 0]) return {false, mask, "selected row of pair " + std::to_string(k + 1) + " not tight"};
      if (tight[want_upper ? 0 : 1]) return {false, mask, "unselected row of pair " + std::to_string(k + 1) + " tight"};
    }
  }
  for (int r = 0; r < 2 * m; ++r)
    if (row_tight[r] != count / 2) return {false, std::nullopt, "row " + std::to_string(r) + " is not a facet"};
  return {};
}

CubeCheck verify_vertex_bounds(const DeformedCube& cube) {
  const std::uint64_t count = std::uint64_t{1} << cube.m;
  const Rational ratio = 6 / cube.eps;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const auto v = cube_vertex(cube, mask);
    Rational bound = Rational(1, 3);
    for (int k = 0; k < cube.m; ++k) {
      bound *= ratio;
      if (!(abs(v.coords[k]) < bound))
        return {false, mask, "|x_" + std::to_string(k + 1) + "| reaches (1/3)(6/eps)^" + std::to_string(k + 1)};
    }
  }
  return {};
}

Mat matrix_a_prime(int m) {
  if (m < 4) throw Error(ErrorCode::DomainError, "A'_m needs m >= 4");
  Mat a(m, Vec(m - 4, Rational(0)));
  for (int k = 0; k < m; ++k)
    for (int d = 1; d <= 4; ++d)
      if (k - d >= 0 && k - d < m - 4) a[k][k - d] = kTail[d - 1];
  return a;
}

bool kernel_check_Am(int m) {
  if (m < 5) throw Error(ErrorCode::DomainError, "kernel check needs m >= 5");
  const Mat a = matrix_a_prime(m);
  std::vector<Vec> kernel(4, Vec(m, Rational(0)));
  kernel[0][0] = 1;
  for (int i = 0; i < m; ++i) {
    kernel[1][i] = 1;
    kernel[2][i] = rpow(Rational(2), i);
    kernel[3][i] = rpow(Rational(1, 2), i);
  }
  for (const auto& y : kernel)
    for (int col = 0; col < m - 4; ++col) {
      Rational s = 0;
      for (int i = 0; i < m; ++i) s += y[i] * a[i][col];
      if (s != 0) return false;
    }
  return true;
}

Mat restricted_normals(const DeformedCube& cube, const CubeFaceCode& face, std::vector<int>* rows) {
  if (face.m() != cube.m) throw Error(ErrorCode::DomainError, "face code length differs from m");
  Mat out;
  for (int p = 0; p < cube.m; ++p) {
    if (face.code[p] == '*') continue;
    const int r = DeformedCube::row_index(p, face.code[p] == '1');
    out.emplace_back(cube.rows[r].begin(), cube.rows[r].begin() + (cube.m - 4));
    if (rows) rows->push_back(r);
  }
  return out;
}

PreservationAttempt try_preservation_certificate(const DeformedCube& cube, const CubeFaceCode& face) {
  const int dim = cube.m - 4;
  if (dim < 0) throw Error(ErrorCode::DomainError, "m < 4");
  if (face.dimension() == cube.m) return {std::nullopt, "the whole cube is not a proper face"};
  PreservationCertificate cert{face, {}, {}, {}};
  const Mat normals = restricted_normals(cube, face, &cert.tight_rows);
  if (dim == 0) {
    cert.lambda.assign(normals.size(), Rational(1));
    return {cert, ""};
  }
  const auto basis = independent_rows(normals);
  if (static_cast<int>(basis.size()) < dim)
    return {std::nullopt, "restricted normals have rank " + std::to_string(basis.size()) + " < " + std::to_string(dim)};
  auto lambda = positive_dependency(normals);
  if (!lambda) return {std::nullopt, "restricted normals are not positively dependent"};
  cert.lambda = std::move(*lambda);
  for (int i : basis) cert.rank_witness.push_back(cert.tight_rows[i]);
  return {cert, ""};
}

PreservationCertificate preservation_certificate(const DeformedCube& cube, const CubeFaceCode& face) {
  auto attempt = try_preservation_certificate(cube, face);
  if (!attempt.certificate) throw Error(ErrorCode::NotPreserved, face.code + ": " + attempt.failure);
  return std::move(*attempt.certificate);
}

bool verify_certificate(const DeformedCube& cube, const PreservationCertificate& cert) {
  const int dim = cube.m - 4;
  std::vector<int> rows;
  const Mat normals = restricted_normals(cube, cert.face, &rows);
  if (rows != cert.tight_rows || cert.lambda.size() != rows.size()) return false;
  if (std::any_of(cert.lambda.begin(), cert.lambda.end(), [](const Rational& x) { return x <= 0; })) return false;
  Vec sum(dim, Rational(0));
  for (std::size_t i = 0; i < normals.size(); ++i)
    for (int c = 0; c < dim; ++c) sum[c] += cert.lambda[i] * normals[i][c];
  if (std::any_of(sum.begin(), sum.end(), [](const Rational& x) { return x != 0; })) return false;
  if (static_cast<int>(cert.rank_witness.size()) != dim) return false;
  Mat basis;
  for (int r : cert.rank_witness) {
    if (std::find(rows.begin(), rows.end(), r) == rows.end()) return false;
    basis.emplace_back(cube.rows[r].begin(), cube.rows[r].begin() + dim);
  }
  return dim == 0 || determinant(basis) != 0;
}

Vec project_to_R4(const SignedVertex& v) {
  if (v.coords.size() < 4) throw Error(ErrorCode::DomainError, "vertex has fewer than 4 coordinates");
  return Vec(v.coords.end() - 4, v.coords.end());
}

}  // namespace highgenus
