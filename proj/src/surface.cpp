#include "highgenus/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>

#include "highgenus/errors.hpp"

namespace highgenus {
namespace {

std::uint64_t edge_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

struct Corner {
  int prev;
  int next;
};

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

bool consecutive_in(const Face& face, int a, int b) {
  const std::size_t k = face.size();
  for (std::size_t i = 0; i < k; ++i) {
    const int x = face[i];
    const int y = face[(i + 1) % k];
    if ((x == a && y == b) || (x == b && y == a)) return true;
  }
  return false;
}

}  // namespace

std::vector<Edge> CellSurface::edges() const {
  std::set<Edge> out;
  for (const auto& face : faces_) {
    for (std::size_t i = 0; i < face.size(); ++i) {
      int a = face[i];
      int b = face[(i + 1) % face.size()];
      if (a > b) std::swap(a, b);
      out.insert({a, b});
    }
  }
  return {out.begin(), out.end()};
}

FVector CellSurface::f_vector() const {
  std::int64_t incidences = 0;
  for (const auto& face : faces_) incidences += static_cast<std::int64_t>(face.size());
  // every edge lies in exactly two faces
  return {n_, incidences / 2, static_cast<std::int64_t>(faces_.size())};
}

std::vector<int> CellSurface::vertex_degrees() const {
  std::vector<int> degree(n_, 0);
  for (const auto& e : edges()) {
    ++degree[e.u];
    ++degree[e.v];
  }
  return degree;
}

CellSurface validate_surface(int n, std::vector<Face> faces, std::vector<std::string> labels) {
  if (faces.empty()) throw Error(ErrorCode::DomainError, "empty face list");
  if (n <= 0) throw Error(ErrorCode::DomainError, "vertex count must be positive");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw Error(ErrorCode::DomainError, "label count does not match vertex count");

  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& face = faces[f];
    if (face.size() < 3)
      throw Error(ErrorCode::IrregularFace, "face " + std::to_string(f) + " has fewer than 3 vertices");
    for (int v : face) {
      if (v < 0 || v >= n)
        throw Error(ErrorCode::DomainError,
                    "face " + std::to_string(f) + " references vertex " + std::to_string(v) + " out of range");
    }
    std::vector<int> sorted = face;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorCode::IrregularFace, "face " + std::to_string(f) + " repeats a vertex");
  }

  std::map<std::uint64_t, int> edge_faces;
  for (const auto& face : faces)
    for (std::size_t i = 0; i < face.size(); ++i) ++edge_faces[edge_key(face[i], face[(i + 1) % face.size()])];
  for (const auto& [key, count] : edge_faces) {
    if (count != 2) {
      const int a = static_cast<int>(key >> 32);
      const int b = static_cast<int>(key & 0xffffffffu);
      throw Error(ErrorCode::EdgeDegree, "edge {" + std::to_string(a) + "," + std::to_string(b) + "} lies in " +
                                             std::to_string(count) + " faces");
    }
  }

  std::vector<std::vector<Corner>> corners(n);
  for (const auto& face : faces) {
    const std::size_t k = face.size();
    for (std::size_t i = 0; i < k; ++i) corners[face[i]].push_back({face[(i + k - 1) % k], face[(i + 1) % k]});
  }
  for (int v = 0; v < n; ++v) {
    const auto& link = corners[v];
    if (link.empty()) throw Error(ErrorCode::BrokenLink, "vertex " + std::to_string(v) + " lies in no face");
    std::unordered_map<int, std::vector<int>> at;
    for (std::size_t c = 0; c < link.size(); ++c) {
      at[link[c].prev].push_back(static_cast<int>(c));
      at[link[c].next].push_back(static_cast<int>(c));
    }
    // walk the link multigraph; every link vertex has degree 2 since edges have degree 2
    std::vector<bool> used(link.size(), false);
    int corner = 0;
    int here = link[0].next;
    std::size_t visited = 0;
    while (!used[corner]) {
      used[corner] = true;
      ++visited;
      const auto& incident = at[here];
      const int other = incident[0] == corner ? incident[1] : incident[0];
      corner = other;
      here = link[other].prev == here ? link[other].next : link[other].prev;
    }
    if (visited != link.size())
      throw Error(ErrorCode::BrokenLink, "link of vertex " + std::to_string(v) + " is not a single cycle");
  }

  DisjointSets components(n);
  for (const auto& face : faces)
    for (std::size_t i = 1; i < face.size(); ++i) components.unite(face[0], face[i]);
  for (int v = 1; v < n; ++v)
    if (components.find(v) != components.find(0))
      throw Error(ErrorCode::Disconnected, "vertex " + std::to_string(v) + " is not connected to vertex 0");

  return CellSurface(n, std::move(faces), std::move(labels));
}

std::optional<std::vector<int>> orientation_signs(const CellSurface& surface) {
  const auto& faces = surface.faces();
  // per undirected edge: the two (face, direction) incidences
  std::unordered_map<std::uint64_t, std::vector<std::pair<int, int>>> incidences;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& face = faces[f];
    for (std::size_t i = 0; i < face.size(); ++i) {
      const int a = face[i];
      const int b = face[(i + 1) % face.size()];
      incidences[edge_key(a, b)].push_back({static_cast<int>(f), a < b ? 1 : -1});
    }
  }
  std::vector<std::vector<std::pair<int, int>>> adjacency(faces.size());
  for (const auto& [key, inc] : incidences) {
    // adjacent faces f, g need sign_f * dir_f == -sign_g * dir_g
    const int relation = -inc[0].second * inc[1].second;
    adjacency[inc[0].first].push_back({inc[1].first, relation});
    adjacency[inc[1].first].push_back({inc[0].first, relation});
  }
  std::vector<int> sign(faces.size(), 0);
  std::queue<int> queue;
  sign[0] = 1;
  queue.push(0);
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop();
    for (const auto& [g, relation] : adjacency[f]) {
      const int wanted = sign[f] * relation;
      if (sign[g] == 0) {
        sign[g] = wanted;
        queue.push(g);
      } else if (sign[g] != wanted) {
        return std::nullopt;
      }
    }
  }
  return sign;
}

bool is_consistently_oriented(const CellSurface& surface) {
  std::set<std::pair<int, int>> directed;
  for (const auto& face : surface.faces())
    for (std::size_t i = 0; i < face.size(); ++i)
      if (!directed.insert({face[i], face[(i + 1) % face.size()]}).second) return false;
  return true;
}

std::optional<CellSurface> oriented_copy(const CellSurface& surface) {
  const auto signs = orientation_signs(surface);
  if (!signs) return std::nullopt;
  std::vector<Face> faces = surface.faces();
  for (std::size_t f = 0; f < faces.size(); ++f)
    if ((*signs)[f] < 0) std::reverse(faces[f].begin(), faces[f].end());
  return validate_surface(surface.vertex_count(), std::move(faces), surface.labels());
}

IntersectionCheck check_intersection_condition(const CellSurface& surface) {
  const auto& faces = surface.faces();
  std::vector<std::vector<int>> faces_at(surface.vertex_count());
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (int v : faces[f]) faces_at[v].push_back(static_cast<int>(f));

  std::vector<int> shared_count(faces.size(), 0);
  std::vector<int> touched;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    touched.clear();
    for (int v : faces[f]) {
      for (int g : faces_at[v]) {
        if (g <= static_cast<int>(f)) continue;
        if (shared_count[g]++ == 0) touched.push_back(g);
      }
    }
    std::sort(touched.begin(), touched.end());
    std::optional<int> bad;
    for (int g : touched) {
      if (!bad) {
        if (shared_count[g] > 2) {
          bad = g;
        } else if (shared_count[g] == 2) {
          std::vector<int> common;
          for (int v : faces[f])
            if (std::find(faces[g].begin(), faces[g].end(), v) != faces[g].end()) common.push_back(v);
          if (!consecutive_in(faces[f], common[0], common[1]) || !consecutive_in(faces[g], common[0], common[1]))
            bad = g;
        }
      }
      shared_count[g] = 0;
    }
    if (bad) {
      IntersectionCheck result;
      result.holds = false;
      result.witness_faces = std::make_pair(static_cast<int>(f), *bad);
      for (int v : faces[f])
        if (std::find(faces[*bad].begin(), faces[*bad].end(), v) != faces[*bad].end())
          result.shared_vertices.push_back(v);
      std::sort(result.shared_vertices.begin(), result.shared_vertices.end());
      return result;
    }
  }
  return {};
}

SurfaceReport analyze(const CellSurface& surface) {
  SurfaceReport report;
  report.f_vector = surface.f_vector();
  const auto& f = report.f_vector;
  report.euler_characteristic = f.f0 - f.f1 + f.f2;
  report.orientable = orientation_signs(surface).has_value();
  if (report.orientable) report.genus = (2 - report.euler_characteristic) / 2;
  report.simplicial = 3 * f.f2 == 2 * f.f1;
  report.neighborly = f.f1 == f.f0 * (f.f0 - 1) / 2;
  report.intersection_condition = check_intersection_condition(surface).holds;
  return report;
}

GenusBound max_genus_bound(std::int64_t n) {
  if (n < 4) throw Error(ErrorCode::DomainError, "genus bound needs n >= 4");
  const std::int64_t product = (n - 3) * (n - 4);
  return {product / 12, product % 12 == 0};
}

CellSurface relabel(const CellSurface& surface, const std::vector<int>& permutation) {
  std::vector<Face> faces = surface.faces();
  for (auto& face : faces)
    for (int& v : face) v = permutation.at(v);
  std::vector<std::string> labels;
  if (!surface.labels().empty()) {
    labels.resize(surface.labels().size());
    for (std::size_t v = 0; v < labels.size(); ++v) labels[permutation[v]] = surface.labels()[v];
  }
  return validate_surface(surface.vertex_count(), std::move(faces), std::move(labels));
}

namespace {

// Darts of a consistently oriented surface: dart (f, i) is the directed edge
// face[i] -> face[i+1].
struct DartStructure {
  std::vector<int> face_of;
  std::vector<int> tail;
  std::vector<int> next;
  std::vector<int> twin;
  std::vector<int> face_size;

  explicit DartStructure(const std::vector<Face>& faces) {
    std::unordered_map<std::uint64_t, int> by_directed;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      const int base = static_cast<int>(tail.size());
      const int k = static_cast<int>(faces[f].size());
      for (int i = 0; i < k; ++i) {
        face_of.push_back(static_cast<int>(f));
        tail.push_back(faces[f][i]);
        next.push_back(base + (i + 1) % k);
        face_size.push_back(k);
        const auto key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(faces[f][i])) << 32) |
                         static_cast<std::uint32_t>(faces[f][(i + 1) % k]);
        by_directed[key] = base + i;
      }
    }
    twin.resize(tail.size());
    for (std::size_t d = 0; d < tail.size(); ++d) {
      const int head = tail[next[d]];
      const auto key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(head)) << 32) |
                       static_cast<std::uint32_t>(tail[d]);
      twin[d] = by_directed.at(key);
    }
  }
};

std::optional<std::vector<int>> try_map(const DartStructure& a, const DartStructure& b, int n, int start_b) {
  const std::size_t darts = a.tail.size();
  std::vector<int> image(darts, -1);
  std::vector<bool> hit(darts, false);
  std::vector<int> vertex_map(n, -1);
  std::vector<int> vertex_preimage(n, -1);
  std::vector<int> stack{0};
  image[0] = start_b;
  hit[start_b] = true;
  while (!stack.empty()) {
    const int d = stack.back();
    stack.pop_back();
    const int e = image[d];
    if (a.face_size[d] != b.face_size[e]) return std::nullopt;
    const int u = a.tail[d];
    const int w = b.tail[e];
    if (vertex_map[u] == -1 && vertex_preimage[w] == -1) {
      vertex_map[u] = w;
      vertex_preimage[w] = u;
    } else if (vertex_map[u] != w || vertex_preimage[w] != u) {
      return std::nullopt;
    }
    for (const auto& [da, db] : {std::pair{a.next[d], b.next[e]}, std::pair{a.twin[d], b.twin[e]}}) {
      if (image[da] == -1) {
        if (hit[db]) return std::nullopt;
        image[da] = db;
        hit[db] = true;
        stack.push_back(da);
      } else if (image[da] != db) {
        return std::nullopt;
      }
    }
  }
  if (std::find(image.begin(), image.end(), -1) != image.end()) return std::nullopt;
  return vertex_map;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const CellSurface& a, const CellSurface& b) {
  if (a.vertex_count() != b.vertex_count() || !(a.f_vector() == b.f_vector())) return std::nullopt;
  const auto oa = oriented_copy(a);
  const auto ob = oriented_copy(b);
  if (!oa || !ob) return std::nullopt;

  std::vector<Face> mirrored = ob->faces();
  for (auto& face : mirrored) std::reverse(face.begin(), face.end());

  const DartStructure da(oa->faces());
  for (const auto& faces_b : {ob->faces(), mirrored}) {
    const DartStructure db(faces_b);
    for (std::size_t start = 0; start < db.tail.size(); ++start) {
      if (auto map = try_map(da, db, a.vertex_count(), static_cast<int>(start))) return map;
    }
  }
  return std::nullopt;
}

}  // namespace highgenus
