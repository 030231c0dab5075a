#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "highgenus/rational.hpp"
#include "highgenus/schlegel.hpp"

namespace highgenus {

struct FaceFailure {
  int face = -1;
  std::string kind;  // "nonplanar", "degenerate", "nonconvex"
  std::string detail;
};

struct FaceCheck {
  bool planar_ok = true;
  bool convex_ok = true;
  std::vector<FaceFailure> failures;
};

/// Every face affinely 2-dimensional and strictly convex: for every edge all
/// other vertices lie strictly on the same side, with one turning direction.
FaceCheck check_planarity_convexity(const EmbeddedMesh& mesh);

struct PairFailure {
  int face_a = -1;
  int face_b = -1;
  std::string kind;             // "overlap", "crossing", "touching", "duplicate-vertex", "combinatorial"
  std::vector<int> shared;      // common vertex ids
  std::vector<Vec> witness;     // points of the intersection outside the shared face
};

struct PairwiseOptions {
  /// 0: min(hardware threads, $HIGHGENUS_THREADS)
  unsigned threads = 0;
  /// bounding-box prefilter; default on for more than 512 faces
  std::optional<bool> prefilter;
};

/// For each face pair, the exact intersection of the two convex polygons
/// must equal their shared vertex or edge (or be empty). Witnesses come back
/// sorted by face pair. Assumes planar convex faces.
std::vector<PairFailure> check_pairwise(const EmbeddedMesh& mesh, const PairwiseOptions& options = {});

struct EmbeddingCertificate {
  bool planar_ok = false;
  bool convex_ok = false;
  bool pairwise_ok = false;
  bool combinatorics_ok = false;
  std::optional<std::int64_t> genus_from_mesh;
  std::vector<PairFailure> failures;
  std::vector<FaceFailure> face_failures;
  std::string combinatorics_detail;

  bool accepted() const { return planar_ok && convex_ok && pairwise_ok && combinatorics_ok && genus_from_mesh; }
};

/// Runs both geometric checks and rebuilds the surface from the faces. When
/// the mesh metadata names m, the faces must also be exactly Q_m's (or its
/// equivelar triangulation when "triangulated" is set).
EmbeddingCertificate certify(const EmbeddedMesh& mesh, const PairwiseOptions& options = {});

/// Thread count used when options.threads == 0.
unsigned default_thread_count();

}  // namespace highgenus
