#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "highgenus/mirror.hpp"
#include "highgenus/rational.hpp"

namespace highgenus {

/// The 2m inequalities  +-eps x_k + 2x_{k-1} - 7x_{k-2} + 7x_{k-3} - 2x_{k-4} <= b_k,
/// b_k = (6/eps)^(k-1). Row 2(k-1) carries -eps (tight where code entry k is 0),
/// row 2(k-1)+1 carries +eps (tight where code entry k is 1).
struct DeformedCube {
  int m = 0;
  Rational eps;
  Mat rows;  // 2m rows of length m
  Vec rhs;   // 2m entries
  Vec b;     // b_1..b_m

  static int row_index(int position, bool upper) { return 2 * position + (upper ? 1 : 0); }

  /// Same system without the range checks on m and eps.
  static DeformedCube unchecked(int m, const Rational& eps);
};

/// Throws DomainError for m < 4, EpsilonOutOfRange unless 0 < eps < 1/2.
DeformedCube build_deformed_cube(int m, const Rational& eps);

struct SignedVertex {
  std::uint64_t mask = 0;  // bit p set: coordinate p+1 on its upper (+eps) row
  Vec coords;

  std::vector<int> signs() const;
};

/// Forward substitution with the rows selected by mask made tight.
SignedVertex cube_vertex(const DeformedCube& cube, std::uint64_t mask);

struct CubeCheck {
  bool ok = true;
  std::optional<std::uint64_t> witness_vertex;
  std::string detail;
};

/// All 2^m vertices distinct and feasible, each tight on exactly its m rows,
/// the two rows of a pair never both tight, every row tight at 2^(m-1) vertices.
CubeCheck verify_cube_combinatorics(const DeformedCube& cube);

/// |x_k| < (1/3)(6/eps)^k at every vertex.
CubeCheck verify_vertex_bounds(const DeformedCube& cube);

/// A'_m: m x (m-4), the system matrix with eps = 0 and the last four columns dropped.
Mat matrix_a_prime(int m);

/// The four vectors (e_1, all ones, 2^(i-1), 2^-(i-1)) are row
/// dependencies of A'_m. Throws DomainError for m < 5.
bool kernel_check_Am(int m);

struct PreservationCertificate {
  CubeFaceCode face;
  std::vector<int> tight_rows;
  Vec lambda;                     // one entry per tight row, each >= 1
  std::vector<int> rank_witness;  // tight rows forming a basis of R^(m-4)
};

struct PreservationAttempt {
  std::optional<PreservationCertificate> certificate;
  std::string failure;  // set when certificate is empty
};

PreservationAttempt try_preservation_certificate(const DeformedCube& cube, const CubeFaceCode& face);

/// Throws NotPreserved when the restricted normals are not positively dependent and spanning.
PreservationCertificate preservation_certificate(const DeformedCube& cube, const CubeFaceCode& face);

/// Independent re-check of a certificate against the cube.
bool verify_certificate(const DeformedCube& cube, const PreservationCertificate& cert);

/// Tight rows of a face, restricted to the first m-4 columns.
Mat restricted_normals(const DeformedCube& cube, const CubeFaceCode& face, std::vector<int>* rows = nullptr);

Vec project_to_R4(const SignedVertex& v);

}  // namespace highgenus
