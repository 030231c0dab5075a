#include "highgenus/mirror.hpp"

#include <algorithm>

#include "highgenus/errors.hpp"

namespace highgenus {

CubeFaceCode CubeFaceCode::parse(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty face code");
  if (text.size() > 62) throw Error(ErrorCode::DomainError, "face code longer than 62");
  for (char c : text)
    if (c != '0' && c != '1' && c != '*') throw Error(ErrorCode::ParseError, "bad face code \"" + text + "\"");
  return {text};
}

CubeFaceCode CubeFaceCode::vertex(int m, std::uint64_t mask) {
  std::string code(m, '0');
  for (int p = 0; p < m; ++p)
    if (mask >> p & 1U) code[p] = '1';
  return {code};
}

int CubeFaceCode::dimension() const { return static_cast<int>(std::count(code.begin(), code.end(), '*')); }

std::vector<int> CubeFaceCode::free_positions() const {
  std::vector<int> out;
  for (int p = 0; p < m(); ++p)
    if (code[p] == '*') out.push_back(p);
  return out;
}

std::uint64_t CubeFaceCode::base_mask() const {
  std::uint64_t mask = 0;
  for (int p = 0; p < m(); ++p)
    if (code[p] == '1') mask |= std::uint64_t{1} << p;
  return mask;
}

std::vector<std::uint64_t> CubeFaceCode::vertices() const {
  const auto free = free_positions();
  std::vector<std::uint64_t> out;
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << free.size()); ++sub) {
    std::uint64_t mask = base_mask();
    for (std::size_t i = 0; i < free.size(); ++i)
      if (sub >> i & 1U) mask |= std::uint64_t{1} << free[i];
    out.push_back(mask);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool CubeFaceCode::in_qm() const {
  const auto free = free_positions();
  if (free.size() <= 1) return true;
  if (free.size() > 2) return false;
  const int gap = free[1] - free[0];
  return gap == 1 || gap == m() - 1;
}

std::array<int, 2> quad_positions(const CubeFaceCode& quad) {
  const auto free = quad.free_positions();
  if (free.size() != 2 || !quad.in_qm()) throw Error(ErrorCode::DomainError, "\"" + quad.code + "\" is not a quad of Q_m");
  // wrap pair (m-1, 0): coordinate k-1 = m, k = 1
  if (free[1] - free[0] != 1) return {free[1], free[0]};
  return {free[0], free[1]};
}

int quad_k(const CubeFaceCode& quad) { return quad_positions(quad)[1] + 1; }

std::int64_t qm_genus(int m) { return 1 + (static_cast<std::int64_t>(m) - 4) * (std::int64_t{1} << (m - 3)); }

QmConstruction build_qm(int m) {
  if (m < 3) throw Error(ErrorCode::DomainError, "Q_m needs m >= 3");
  if (m > 24) throw Error(ErrorCode::DomainError, "m > 24 is too large to enumerate");
  QmComplex complex;
  complex.m = m;
  const std::uint64_t count = std::uint64_t{1} << m;
  for (std::uint64_t v = 0; v < count; ++v) complex.vertices.push_back(CubeFaceCode::vertex(m, v));
  for (int p = 0; p < m; ++p)
    for (std::uint64_t v = 0; v < count; ++v)
      if (!(v >> p & 1U)) {
        auto code = CubeFaceCode::vertex(m, v);
        code.code[p] = '*';
        complex.edges.push_back(code);
      }
  std::vector<Face> faces;
  for (int p = 0; p < m; ++p) {
    const int prev = (p + m - 1) % m;
    for (std::uint64_t v = 0; v < count; ++v) {
      if (v >> p & 1U || v >> prev & 1U) continue;
      auto code = CubeFaceCode::vertex(m, v);
      code.code[p] = '*';
      code.code[prev] = '*';
      const std::uint64_t a = std::uint64_t{1} << prev;
      const std::uint64_t b = std::uint64_t{1} << p;
      faces.push_back({static_cast<int>(v), static_cast<int>(v | a), static_cast<int>(v | a | b), static_cast<int>(v | b)});
      complex.quads.push_back(std::move(code));
    }
  }
  std::vector<std::string> labels;
  labels.reserve(complex.vertices.size());
  for (const auto& c : complex.vertices) labels.push_back(c.code);
  CellSurface surface = validate_surface(static_cast<int>(count), std::move(faces), std::move(labels));
  return {std::move(complex), std::move(surface)};
}

std::array<std::uint64_t, 4> oriented_quad(const CubeFaceCode& quad) {
  const auto [first, second] = quad_positions(quad);
  const std::uint64_t v = quad.base_mask();
  const std::uint64_t a = std::uint64_t{1} << first;
  const std::uint64_t b = std::uint64_t{1} << second;
  if (odd_vertex(v)) return {v, v | b, v | a | b, v | a};
  return {v, v | a, v | a | b, v | b};
}

CellSurface orient_qm(const QmComplex& complex) {
  std::vector<Face> faces;
  faces.reserve(complex.quads.size());
  for (const auto& quad : complex.quads) {
    const auto c = oriented_quad(quad);
    faces.push_back({static_cast<int>(c[0]), static_cast<int>(c[1]), static_cast<int>(c[2]), static_cast<int>(c[3])});
  }
  std::vector<std::string> labels;
  for (const auto& c : complex.vertices) labels.push_back(c.code);
  return validate_surface(static_cast<int>(complex.vertices.size()), std::move(faces), std::move(labels));
}

std::array<std::array<std::uint64_t, 3>, 2> split_quad(const CubeFaceCode& quad) {
  const auto c = oriented_quad(quad);
  const bool want_odd = quad_k(quad) % 2 == 1;
  // c[0], c[2] share parity, as do c[1], c[3]
  if (odd_vertex(c[0]) == want_odd) return {{{c[0], c[1], c[2]}, {c[0], c[2], c[3]}}};
  return {{{c[1], c[2], c[3]}, {c[1], c[3], c[0]}}};
}

CellSurface triangulate_equivelar(const QmComplex& complex) {
  std::vector<Face> faces;
  faces.reserve(2 * complex.quads.size());
  for (const auto& quad : complex.quads)
    for (const auto& t : split_quad(quad))
      faces.push_back({static_cast<int>(t[0]), static_cast<int>(t[1]), static_cast<int>(t[2])});
  std::vector<std::string> labels;
  for (const auto& c : complex.vertices) labels.push_back(c.code);
  return validate_surface(static_cast<int>(complex.vertices.size()), std::move(faces), std::move(labels));
}

}  // namespace highgenus
