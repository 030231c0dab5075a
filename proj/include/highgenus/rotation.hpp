#pragma once

#include <array>
#include <optional>
#include <vector>

#include "highgenus/surface.hpp"

namespace highgenus {

/// Per-vertex cyclic neighbor orders. rows[v] lists the neighbors of v in
/// orientation order; any rotation of a row denotes the same scheme.
struct RotationScheme {
  int n = 0;
  std::vector<std::vector<int>> rows;

  bool operator==(const RotationScheme&) const = default;
};

/// Throws InvalidScheme if a row repeats a vertex, names itself or an
/// out-of-range vertex, or adjacency is not symmetric.
void validate_scheme(const RotationScheme& scheme);

/// Face tracing: from directed edge (i,j) continue with (j,k), k the
/// predecessor of i in row j. Under this convention an adjacent pair (j,k)
/// in row i yields the oriented triangle [i,j,k].
CellSurface scheme_to_surface(const RotationScheme& scheme);

struct DeltaStarCheck {
  bool holds = true;
  /// (i, j, k): row i has j,k adjacent but row j lacks (k,i) or row k lacks (i,j)
  std::optional<std::array<int, 3>> witness;
};

DeltaStarCheck check_delta_star(const RotationScheme& scheme);

/// Rows rotated to start at their smallest entry.
RotationScheme canonicalize(RotationScheme scheme);

/// Scheme whose row v is row0 shifted by +v mod n.
RotationScheme cyclic_scheme(int n, const std::vector<int>& row0);

/// The 7-vertex Möbius torus: row v is (1,3,2,6,4,5) + v mod 7.
RotationScheme mobius_torus_scheme();

/// The 5-vertex square pyramid (apex 0).
RotationScheme square_pyramid_scheme();

}  // namespace highgenus
