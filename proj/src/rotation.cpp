#include "highgenus/rotation.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "highgenus/errors.hpp"

namespace highgenus {
namespace {

// position of each neighbor inside each row
std::vector<std::unordered_map<int, int>> row_positions(const RotationScheme& scheme) {
  std::vector<std::unordered_map<int, int>> positions(scheme.n);
  for (int v = 0; v < scheme.n; ++v)
    for (std::size_t p = 0; p < scheme.rows[v].size(); ++p) positions[v][scheme.rows[v][p]] = static_cast<int>(p);
  return positions;
}

bool followed_by(const std::vector<int>& row, const std::unordered_map<int, int>& positions, int a, int b) {
  const auto it = positions.find(a);
  if (it == positions.end()) return false;
  return row[(it->second + 1) % row.size()] == b;
}

}  // namespace

void validate_scheme(const RotationScheme& scheme) {
  if (scheme.n <= 0 || static_cast<int>(scheme.rows.size()) != scheme.n)
    throw Error(ErrorCode::InvalidScheme, "row count must equal n > 0");
  for (int v = 0; v < scheme.n; ++v) {
    std::vector<int> sorted = scheme.rows[v];
    for (int w : sorted) {
      if (w < 0 || w >= scheme.n || w == v)
        throw Error(ErrorCode::InvalidScheme, "row " + std::to_string(v) + " contains invalid entry " + std::to_string(w));
    }
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorCode::InvalidScheme, "row " + std::to_string(v) + " repeats a vertex");
  }
  const auto positions = row_positions(scheme);
  for (int v = 0; v < scheme.n; ++v)
    for (int w : scheme.rows[v])
      if (!positions[w].contains(v))
        throw Error(ErrorCode::InvalidScheme,
                    std::to_string(w) + " appears in row " + std::to_string(v) + " but not vice versa");
}

CellSurface scheme_to_surface(const RotationScheme& scheme) {
  validate_scheme(scheme);
  const auto positions = row_positions(scheme);
  std::vector<std::vector<bool>> used(scheme.n);
  for (int v = 0; v < scheme.n; ++v) used[v].assign(scheme.rows[v].size(), false);

  std::vector<Face> faces;
  for (int i0 = 0; i0 < scheme.n; ++i0) {
    for (std::size_t p0 = 0; p0 < scheme.rows[i0].size(); ++p0) {
      if (used[i0][p0]) continue;
      Face face;
      int i = i0;
      int p = static_cast<int>(p0);
      while (!used[i][p]) {
        used[i][p] = true;
        face.push_back(i);
        const int j = scheme.rows[i][p];
        const auto& row_j = scheme.rows[j];
        const int at = positions[j].at(i);
        const int k = row_j[(at + row_j.size() - 1) % row_j.size()];
        i = j;
        p = positions[j].at(k);
      }
      faces.push_back(std::move(face));
    }
  }
  return validate_surface(scheme.n, std::move(faces));
}

DeltaStarCheck check_delta_star(const RotationScheme& scheme) {
  const auto positions = row_positions(scheme);
  for (int i = 0; i < scheme.n; ++i) {
    const auto& row = scheme.rows[i];
    for (std::size_t p = 0; p < row.size(); ++p) {
      const int j = row[p];
      const int k = row[(p + 1) % row.size()];
      const bool ok = followed_by(scheme.rows[j], positions[j], k, i) &&
                      followed_by(scheme.rows[k], positions[k], i, j);
      if (!ok) return {false, std::array<int, 3>{i, j, k}};
    }
  }
  return {};
}

RotationScheme canonicalize(RotationScheme scheme) {
  for (auto& row : scheme.rows)
    if (!row.empty()) std::rotate(row.begin(), std::min_element(row.begin(), row.end()), row.end());
  return scheme;
}

RotationScheme cyclic_scheme(int n, const std::vector<int>& row0) {
  RotationScheme scheme{n, std::vector<std::vector<int>>(n)};
  for (int v = 0; v < n; ++v) {
    scheme.rows[v].reserve(row0.size());
    for (int x : row0) scheme.rows[v].push_back(((x + v) % n + n) % n);
  }
  return scheme;
}

RotationScheme mobius_torus_scheme() {
  return {7,
          {{1, 3, 2, 6, 4, 5},
           {2, 4, 3, 0, 5, 6},
           {3, 5, 4, 1, 6, 0},
           {4, 6, 5, 2, 0, 1},
           {5, 0, 6, 3, 1, 2},
           {6, 1, 0, 4, 2, 3},
           {0, 2, 1, 5, 3, 4}}};
}

RotationScheme square_pyramid_scheme() {
  return {5, {{1, 2, 3, 4}, {0, 4, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 1}}};
}

}  // namespace highgenus
