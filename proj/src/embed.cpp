#include "highgenus/embed.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "highgenus/errors.hpp"
#include "highgenus/linalg.hpp"
#include "highgenus/mirror.hpp"

namespace highgenus {
namespace {

Vec cross(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

int sign(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// normal of a face from its first non-collinear corner triple; zero if none
Vec face_normal(const EmbeddedMesh& mesh, const Face& face) {
  const Vec& o = mesh.vertices[face[0]];
  for (std::size_t i = 1; i < face.size(); ++i)
    for (std::size_t j = i + 1; j < face.size(); ++j) {
      Vec n = cross(sub(mesh.vertices[face[i]], o), sub(mesh.vertices[face[j]], o));
      if (!is_zero(n)) return n;
    }
  return Vec(3, Rational(0));
}

struct Plane {
  Vec normal;
  Rational offset;
};

struct Point2 {
  Rational x, y;
  bool operator==(const Point2&) const = default;
};

Rational cross2(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// convex polygon clipping; clip must be counterclockwise, both convex
std::vector<Point2> clip_convex(std::vector<Point2> subject, const std::vector<Point2>& clip) {
  for (std::size_t e = 0; e < clip.size() && !subject.empty(); ++e) {
    const Point2& a = clip[e];
    const Point2& b = clip[(e + 1) % clip.size()];
    std::vector<Point2> out;
    for (std::size_t i = 0; i < subject.size(); ++i) {
      const Point2& prev = subject[(i + subject.size() - 1) % subject.size()];
      const Point2& cur = subject[i];
      const Rational cp = cross2(a, b, prev);
      const Rational cc = cross2(a, b, cur);
      auto cut = [&] {
        const Rational s = cp / (cp - cc);
        out.push_back({prev.x + s * (cur.x - prev.x), prev.y + s * (cur.y - prev.y)});
      };
      if (cc >= 0) {
        if (cp < 0) cut();
        out.push_back(cur);
      } else if (cp > 0) {
        cut();
      }
    }
    subject = std::move(out);
  }
  std::vector<Point2> unique;
  for (const auto& p : subject)
    if (std::find(unique.begin(), unique.end(), p) == unique.end()) unique.push_back(p);
  return unique;
}

// p lies in the convex hull of at most two points
bool in_small_hull(const Vec& p, const std::vector<Vec>& hull) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return p == hull[0];
  const Vec d = sub(hull[1], hull[0]);
  const Vec w = sub(p, hull[0]);
  if (!is_zero(cross(d, w))) return false;
  const Rational t = dot(w, d);
  return t >= 0 && t <= dot(d, d);
}

struct PreparedFace {
  Plane plane;
  Vec lo, hi;  // bounding box
};

class PairChecker {
 public:
  PairChecker(const EmbeddedMesh& mesh) : mesh_(mesh) {
    for (const auto& face : mesh.faces) {
      PreparedFace pf;
      pf.plane.normal = face_normal(mesh, face);
      pf.plane.offset = dot(pf.plane.normal, mesh.vertices[face[0]]);
      pf.lo = pf.hi = mesh.vertices[face[0]];
      for (int v : face)
        for (int c = 0; c < 3; ++c) {
          pf.lo[c] = std::min(pf.lo[c], mesh.vertices[v][c]);
          pf.hi[c] = std::max(pf.hi[c], mesh.vertices[v][c]);
        }
      prepared_.push_back(std::move(pf));
    }
  }

  bool boxes_disjoint(int a, int b) const {
    for (int c = 0; c < 3; ++c)
      if (prepared_[a].hi[c] < prepared_[b].lo[c] || prepared_[b].hi[c] < prepared_[a].lo[c]) return true;
    return false;
  }

  std::optional<PairFailure> check(int a, int b) const {
    const Face& fa = mesh_.faces[a];
    const Face& fb = mesh_.faces[b];
    std::vector<int> shared;
    for (int v : fa)
      if (std::find(fb.begin(), fb.end(), v) != fb.end()) shared.push_back(v);
    std::sort(shared.begin(), shared.end());

    PairFailure failure{a, b, "", shared, {}};
    if (shared.size() > 2 || (shared.size() == 2 && !(is_face_edge(fa, shared) && is_face_edge(fb, shared)))) {
      failure.kind = "combinatorial";
      return failure;
    }
    std::vector<Vec> allowed;
    for (int v : shared) allowed.push_back(mesh_.vertices[v]);

    const auto points = intersection_points(a, b, failure.kind);
    for (const auto& p : points)
      if (!in_small_hull(p, allowed)) failure.witness.push_back(p);
    if (failure.witness.empty()) return std::nullopt;
    if (failure.kind.empty()) failure.kind = "crossing";
    return failure;
  }

 private:
  static bool is_face_edge(const Face& f, const std::vector<int>& pair) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      const int u = f[i];
      const int w = f[(i + 1) % f.size()];
      if ((u == pair[0] && w == pair[1]) || (u == pair[1] && w == pair[0])) return true;
    }
    return false;
  }

  // extreme points of the intersection of the two polygons
  std::vector<Vec> intersection_points(int a, int b, std::string& kind) const {
    const Face& fa = mesh_.faces[a];
    const Face& fb = mesh_.faces[b];
    const Plane& pa = prepared_[a].plane;
    const Plane& pb = prepared_[b].plane;

    std::vector<int> sb;
    for (int v : fb) sb.push_back(sign(dot(pa.normal, mesh_.vertices[v]) - pa.offset));
    if (std::all_of(sb.begin(), sb.end(), [](int s) { return s > 0; }) ||
        std::all_of(sb.begin(), sb.end(), [](int s) { return s < 0; }))
      return {};
    if (std::all_of(sb.begin(), sb.end(), [](int s) { return s == 0; })) {
      kind = "overlap";
      return coplanar_points(fa, fb, pa);
    }
    const auto sa = section(fb, pa);
    const auto sb_section = section(fa, pb);
    if (sa.empty() || sb_section.empty()) return {};
    kind = "crossing";
    // both sections lie on the line of the two planes; clip parameters
    const Vec dir = cross(pa.normal, pb.normal);
    auto range = [&](const std::vector<Vec>& pts) {
      std::pair<Vec, Vec> r{pts[0], pts[0]};
      for (const auto& p : pts) {
        if (dot(dir, p) < dot(dir, r.first)) r.first = p;
        if (dot(dir, p) > dot(dir, r.second)) r.second = p;
      }
      return r;
    };
    const auto ra = range(sa);
    const auto rb = range(sb_section);
    const Vec& lo = dot(dir, ra.first) >= dot(dir, rb.first) ? ra.first : rb.first;
    const Vec& hi = dot(dir, ra.second) <= dot(dir, rb.second) ? ra.second : rb.second;
    if (dot(dir, lo) > dot(dir, hi)) return {};
    if (lo == hi) return {lo};
    return {lo, hi};
  }

  // points of polygon f on plane p: vertices on it and sign-change crossings
  std::vector<Vec> section(const Face& f, const Plane& p) const {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const Vec& u = mesh_.vertices[f[i]];
      const Vec& w = mesh_.vertices[f[(i + 1) % f.size()]];
      const Rational su = dot(p.normal, u) - p.offset;
      const Rational sw = dot(p.normal, w) - p.offset;
      if (su == 0) out.push_back(u);
      if ((su < 0 && sw > 0) || (su > 0 && sw < 0)) {
        const Rational t = su / (su - sw);
        Vec x(3);
        for (int c = 0; c < 3; ++c) x[c] = u[c] + t * (w[c] - u[c]);
        out.push_back(std::move(x));
      }
    }
    return out;
  }

  std::vector<Vec> coplanar_points(const Face& fa, const Face& fb, const Plane& plane) const {
    int drop = 0;
    for (int c = 1; c < 3; ++c)
      if (abs(plane.normal[c]) > abs(plane.normal[drop])) drop = c;
    const int i0 = drop == 0 ? 1 : 0;
    const int i1 = drop == 2 ? 1 : 2;
    auto flat = [&](const Face& f) {
      std::vector<Point2> out;
      for (int v : f) out.push_back({mesh_.vertices[v][i0], mesh_.vertices[v][i1]});
      Rational area = 0;
      for (std::size_t i = 0; i < out.size(); ++i) {
        const auto& p = out[i];
        const auto& q = out[(i + 1) % out.size()];
        area += p.x * q.y - p.y * q.x;
      }
      if (area < 0) std::reverse(out.begin(), out.end());
      return out;
    };
    const auto clipped = clip_convex(flat(fa), flat(fb));
    std::vector<Vec> out;
    for (const auto& p : clipped) {
      Vec x(3);
      x[i0] = p.x;
      x[i1] = p.y;
      x[drop] = (plane.offset - plane.normal[i0] * p.x - plane.normal[i1] * p.y) / plane.normal[drop];
      out.push_back(std::move(x));
    }
    return out;
  }

  const EmbeddedMesh& mesh_;
  std::vector<PreparedFace> prepared_;
};

std::string cycle_key(const Face& f) {
  const auto it = std::min_element(f.begin(), f.end());
  Face r(it, f.end());
  r.insert(r.end(), f.begin(), it);
  std::string key;
  for (int v : r) key += std::to_string(v) + ",";
  return key;
}

std::string meta(const EmbeddedMesh& mesh, const std::string& key) {
  for (const auto& [k, v] : mesh.metadata)
    if (k == key) return v;
  return "";
}

}  // namespace

unsigned default_thread_count() {
  unsigned n = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HIGHGENUS_THREADS"); env && *env) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
  }
  return n;
}

FaceCheck check_planarity_convexity(const EmbeddedMesh& mesh) {
  FaceCheck out;
  for (int f = 0; f < static_cast<int>(mesh.faces.size()); ++f) {
    const Face& face = mesh.faces[f];
    if (face.size() < 3) {
      out.convex_ok = false;
      out.failures.push_back({f, "degenerate", "fewer than 3 vertices"});
      continue;
    }
    Mat diffs;
    for (std::size_t i = 1; i < face.size(); ++i) diffs.push_back(sub(mesh.vertices[face[i]], mesh.vertices[face[0]]));
    const int r = rank(diffs);
    if (r > 2) {
      out.planar_ok = false;
      out.failures.push_back({f, "nonplanar", "vertices span 3 dimensions"});
      continue;
    }
    if (r < 2) {
      out.convex_ok = false;
      out.failures.push_back({f, "degenerate", "vertices are collinear"});
      continue;
    }
    const Vec normal = face_normal(mesh, face);
    int turn = 0;
    bool convex = true;
    for (std::size_t i = 0; i < face.size() && convex; ++i) {
      const Vec& a = mesh.vertices[face[i]];
      const Vec edge = sub(mesh.vertices[face[(i + 1) % face.size()]], a);
      for (std::size_t j = 0; j < face.size(); ++j) {
        if (j == i || j == (i + 1) % face.size()) continue;
        const int s = sign(dot(normal, cross(edge, sub(mesh.vertices[face[j]], a))));
        if (s == 0 || (turn != 0 && s != turn)) {
          convex = false;
          out.failures.push_back({f, "nonconvex", "vertex " + std::to_string(face[j]) + " against edge " +
                                                      std::to_string(face[i]) + "-" +
                                                      std::to_string(face[(i + 1) % face.size()])});
          break;
        }
        turn = s;
      }
    }
    if (!convex) out.convex_ok = false;
  }
  return out;
}

std::vector<PairFailure> check_pairwise(const EmbeddedMesh& mesh, const PairwiseOptions& options) {
  const int faces = static_cast<int>(mesh.faces.size());
  std::vector<PairFailure> failures;

  // distinct vertex ids must have distinct positions
  std::map<Vec, int> positions;
  std::set<int> used;
  for (const auto& f : mesh.faces) used.insert(f.begin(), f.end());
  for (int v : used) {
    const auto [it, fresh] = positions.emplace(mesh.vertices.at(v), v);
    if (!fresh) failures.push_back({-1, -1, "duplicate-vertex", {it->second, v}, {mesh.vertices[v]}});
  }

  const PairChecker checker(mesh);
  const bool prefilter = options.prefilter.value_or(faces > 512);
  const unsigned threads = std::max(1U, std::min(options.threads ? options.threads : default_thread_count(),
                                                 static_cast<unsigned>(std::max(1, faces))));
  std::vector<std::vector<PairFailure>> found(threads);
  auto work = [&](unsigned id) {
    for (int a = static_cast<int>(id); a < faces; a += static_cast<int>(threads))
      for (int b = a + 1; b < faces; ++b) {
        if (prefilter && checker.boxes_disjoint(a, b)) continue;
        if (auto failure = checker.check(a, b)) found[id].push_back(std::move(*failure));
      }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(work, id);
    for (auto& t : pool) t.join();
  }
  std::vector<PairFailure> pairs;
  for (auto& part : found) pairs.insert(pairs.end(), part.begin(), part.end());
  std::sort(pairs.begin(), pairs.end(),
            [](const PairFailure& x, const PairFailure& y) { return std::pair{x.face_a, x.face_b} < std::pair{y.face_a, y.face_b}; });
  failures.insert(failures.end(), pairs.begin(), pairs.end());
  return failures;
}

EmbeddingCertificate certify(const EmbeddedMesh& mesh, const PairwiseOptions& options) {
  EmbeddingCertificate cert;
  for (const auto& f : mesh.faces)
    for (int v : f)
      if (v < 0 || v >= static_cast<int>(mesh.vertices.size()))
        throw Error(ErrorCode::DomainError, "face refers to missing vertex " + std::to_string(v));
  for (const auto& v : mesh.vertices)
    if (v.size() != 3) throw Error(ErrorCode::DomainError, "mesh vertices must be in R^3");

  const auto faces = check_planarity_convexity(mesh);
  cert.planar_ok = faces.planar_ok;
  cert.convex_ok = faces.convex_ok;
  cert.face_failures = faces.failures;
  if (cert.planar_ok && cert.convex_ok) {
    cert.failures = check_pairwise(mesh, options);
    cert.pairwise_ok = cert.failures.empty();
  }

  try {
    const auto surface = validate_surface(static_cast<int>(mesh.vertices.size()), mesh.faces);
    cert.genus_from_mesh = analyze(surface).genus;
    cert.combinatorics_ok = true;
  } catch (const Error& e) {
    cert.combinatorics_detail = e.what();
  }

  if (cert.combinatorics_ok && !meta(mesh, "m").empty()) {
    const int m = std::stoi(meta(mesh, "m"));
    const auto qm = build_qm(m);
    const bool triangulated = meta(mesh, "triangulated") == "true";
    const auto expected = triangulated ? triangulate_equivelar(qm.complex) : orient_qm(qm.complex);
    std::multiset<std::string> want, have;
    for (const auto& f : expected.faces()) want.insert(cycle_key(f));
    for (const auto& f : mesh.faces) have.insert(cycle_key(f));
    if (want != have || mesh.vertices.size() != qm.complex.vertices.size()) {
      cert.combinatorics_ok = false;
      cert.combinatorics_detail = "faces differ from Q_" + std::to_string(m);
    }
  }
  return cert;
}

}  // namespace highgenus
