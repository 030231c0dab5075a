#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "highgenus/surface.hpp"

namespace highgenus {

/// A nonempty face of the unit m-cube as a string over {0,1,*}. Position p
/// is coordinate p+1. Vertices of the cube are numbered by bitmask: bit p is
/// set iff coordinate p+1 equals 1.
struct CubeFaceCode {
  std::string code;

  /// Throws ParseError on characters outside {0,1,*} or an empty string.
  static CubeFaceCode parse(const std::string& text);
  static CubeFaceCode vertex(int m, std::uint64_t mask);

  int m() const { return static_cast<int>(code.size()); }
  int dimension() const;
  std::vector<int> free_positions() const;
  /// Bitmask of the 1 entries (the vertex with all free coordinates 0).
  std::uint64_t base_mask() const;
  /// Vertex ids of all vertices of the face, increasing.
  std::vector<std::uint64_t> vertices() const;
  /// At most two free coordinates, and two only if cyclically adjacent.
  bool in_qm() const;

  auto operator<=>(const CubeFaceCode&) const = default;
};

/// Parity of the coordinate sum of a vertex.
inline bool odd_vertex(std::uint64_t mask) { return __builtin_popcountll(mask) % 2 == 1; }

/// Free positions {(p-1) mod m, p} of a quad, written as (k-1, k) with
/// k = p+1 the 1-based coordinate index. Returns {position of k-1, position of k}.
std::array<int, 2> quad_positions(const CubeFaceCode& quad);

/// 1-based index k of a quad's second free coordinate.
int quad_k(const CubeFaceCode& quad);

struct QmComplex {
  int m = 0;
  std::vector<CubeFaceCode> vertices;  // index = vertex id
  std::vector<CubeFaceCode> edges;
  std::vector<CubeFaceCode> quads;
};

struct QmConstruction {
  QmComplex complex;
  /// quads in QmComplex order, each walked 00 -> 10 -> 11 -> 01 in the
  /// free coordinates (k-1, k)
  CellSurface surface;
};

/// Throws DomainError for m < 3 or m > 24.
QmConstruction build_qm(int m);

/// Boundary cycle of a quad: 00,10,11,01 in (k-1, k), reversed when the
/// base vertex has odd coordinate sum.
std::array<std::uint64_t, 4> oriented_quad(const CubeFaceCode& quad);

/// Faces oriented by the parity rule; the result is consistently oriented.
CellSurface orient_qm(const QmComplex& complex);

/// Triangles of one oriented quad: split along the even-sum diagonal when k
/// is even, along the odd-sum diagonal when k is odd.
std::array<std::array<std::uint64_t, 3>, 2> split_quad(const CubeFaceCode& quad);

CellSurface triangulate_equivelar(const QmComplex& complex);

/// 1 + (m-4) 2^(m-3)
std::int64_t qm_genus(int m);

}  // namespace highgenus
