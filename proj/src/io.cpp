#include "highgenus/io.hpp"

#include <fstream>
#include <sstream>

#include "highgenus/errors.hpp"

namespace highgenus {
namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) parse_fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) parse_fail(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

std::vector<std::vector<int>> int_lists(const Json& j, const char* what) {
  if (!j.is_array()) parse_fail(std::string(what) + " must be an array");
  std::vector<std::vector<int>> out;
  for (const auto& x : j) out.push_back(int_list(x, what));
  return out;
}

Json rationals(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Rational rational_of(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  parse_fail("coordinates must be rational strings or integers");
}

std::string metadata_comment(const EmbeddedMesh& mesh) {
  std::string line = "#";
  for (const auto& [key, value] : mesh.metadata) line += " " + key + "=" + value;
  return line + "\n";
}

}  // namespace

Json surface_to_json(const CellSurface& surface) {
  Json j;
  j["n"] = surface.vertex_count();
  j["faces"] = surface.faces();
  if (!surface.labels().empty()) j["labels"] = surface.labels();
  return j;
}

CellSurface surface_from_json(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  auto faces = int_lists(field(j, "faces"), "faces");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) parse_fail("labels must be an array");
    for (const auto& x : j["labels"]) {
      if (!x.is_string()) parse_fail("labels must be strings");
      labels.push_back(x.get<std::string>());
    }
  }
  return validate_surface(n, std::move(faces), std::move(labels));
}

Json report_to_json(const SurfaceReport& report) {
  Json j;
  j["f_vector"] = {report.f_vector.f0, report.f_vector.f1, report.f_vector.f2};
  j["euler_characteristic"] = report.euler_characteristic;
  j["genus"] = report.genus ? Json(*report.genus) : Json(nullptr);
  j["orientable"] = report.orientable;
  j["simplicial"] = report.simplicial;
  j["neighborly"] = report.neighborly;
  j["intersection_condition"] = report.intersection_condition;
  return j;
}

Json scheme_to_json(const RotationScheme& scheme) {
  const auto canonical = canonicalize(scheme);
  Json j;
  j["n"] = canonical.n;
  j["rows"] = canonical.rows;
  return j;
}

RotationScheme scheme_from_json(const Json& j) {
  RotationScheme scheme{as_int(field(j, "n"), "n"), int_lists(field(j, "rows"), "rows")};
  validate_scheme(scheme);
  return scheme;
}

Json current_graph_to_json(const CurrentGraph& graph) {
  Json j;
  j["modulus"] = graph.modulus;
  Json vertices = Json::array();
  for (const auto& v : graph.vertices) {
    Json x;
    if (!v.name.empty()) x["name"] = v.name;
    x["color"] = v.color == VertexColor::Black ? "black" : "white";
    x["rotation"] = v.rotation;
    vertices.push_back(std::move(x));
  }
  Json arcs = Json::array();
  for (const auto& a : graph.arcs) {
    Json x;
    if (!a.name.empty()) x["name"] = a.name;
    x["tail"] = a.tail;
    x["head"] = a.head;
    x["current"] = a.current;
    arcs.push_back(std::move(x));
  }
  j["vertices"] = std::move(vertices);
  j["arcs"] = std::move(arcs);
  return j;
}

CurrentGraph current_graph_from_json(const Json& j) {
  CurrentGraph graph;
  graph.modulus = as_int(field(j, "modulus"), "modulus");
  if (!field(j, "vertices").is_array() || !field(j, "arcs").is_array()) parse_fail("vertices and arcs must be arrays");
  for (const auto& x : j["vertices"]) {
    CurrentGraph::Vertex v;
    const auto& color = field(x, "color");
    if (color == "black") v.color = VertexColor::Black;
    else if (color == "white") v.color = VertexColor::White;
    else parse_fail("color must be black or white");
    v.rotation = int_list(field(x, "rotation"), "rotation");
    if (x.contains("name") && x["name"].is_string()) v.name = x["name"].get<std::string>();
    graph.vertices.push_back(std::move(v));
  }
  for (const auto& x : j["arcs"]) {
    CurrentGraph::Arc a;
    a.tail = as_int(field(x, "tail"), "tail");
    a.head = as_int(field(x, "head"), "head");
    a.current = as_int(field(x, "current"), "current");
    if (x.contains("name") && x["name"].is_string()) a.name = x["name"].get<std::string>();
    graph.arcs.push_back(std::move(a));
  }
  return graph;
}

Json field_to_json(const FiniteField& f) {
  Json j;
  j["q"] = f.order();
  j["alpha"] = f.describe(f.generator());
  return j;
}

Json certificate_to_json(const PreservationCertificate& cert) {
  Json j;
  j["face"] = cert.face.code;
  j["tight_rows"] = cert.tight_rows;
  j["lambda"] = rationals(cert.lambda);
  j["rank_witness"] = cert.rank_witness;
  return j;
}

Json embedding_certificate_to_json(const EmbeddingCertificate& cert) {
  Json j;
  j["planar_ok"] = cert.planar_ok;
  j["convex_ok"] = cert.convex_ok;
  j["pairwise_ok"] = cert.pairwise_ok;
  j["combinatorics_ok"] = cert.combinatorics_ok;
  j["genus_from_mesh"] = cert.genus_from_mesh ? Json(*cert.genus_from_mesh) : Json(nullptr);
  j["accepted"] = cert.accepted();
  Json faces = Json::array();
  for (const auto& f : cert.face_failures) faces.push_back({{"face", f.face}, {"kind", f.kind}, {"detail", f.detail}});
  j["face_failures"] = std::move(faces);
  Json pairs = Json::array();
  for (const auto& p : cert.failures) {
    Json x;
    x["faces"] = {p.face_a, p.face_b};
    x["kind"] = p.kind;
    x["shared"] = p.shared;
    Json w = Json::array();
    for (const auto& point : p.witness) w.push_back(rationals(point));
    x["witness"] = std::move(w);
    pairs.push_back(std::move(x));
  }
  j["failures"] = std::move(pairs);
  if (!cert.combinatorics_detail.empty()) j["combinatorics_detail"] = cert.combinatorics_detail;
  return j;
}

Json mesh_to_json(const EmbeddedMesh& mesh) {
  Json j;
  Json meta = Json::object();
  for (const auto& [key, value] : mesh.metadata) meta[key] = value;
  j["metadata"] = std::move(meta);
  Json vertices = Json::array();
  for (const auto& v : mesh.vertices) vertices.push_back(rationals(v));
  j["vertices"] = std::move(vertices);
  j["faces"] = mesh.faces;
  j["provenance"] = mesh.provenance;
  return j;
}

EmbeddedMesh mesh_from_json(const Json& j) {
  EmbeddedMesh mesh;
  const auto& vertices = field(j, "vertices");
  if (!vertices.is_array()) parse_fail("vertices must be an array");
  for (const auto& v : vertices) {
    if (!v.is_array() || v.size() != 3) parse_fail("each vertex needs three coordinates");
    Vec p;
    for (const auto& c : v) p.push_back(rational_of(c));
    mesh.vertices.push_back(std::move(p));
  }
  mesh.faces = int_lists(field(j, "faces"), "faces");
  for (const auto& f : mesh.faces)
    for (int v : f)
      if (v < 0 || v >= static_cast<int>(mesh.vertices.size())) parse_fail("face index out of range");
  if (j.contains("provenance")) {
    for (const auto& c : j["provenance"]) {
      if (!c.is_string()) parse_fail("provenance entries must be strings");
      mesh.provenance.push_back(c.get<std::string>());
    }
    if (!mesh.provenance.empty() && mesh.provenance.size() != mesh.faces.size())
      parse_fail("provenance must have one code per face");
  }
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) parse_fail("metadata must be an object");
    for (const auto& [key, value] : j["metadata"].items())
      mesh.metadata.emplace_back(key, value.is_string() ? value.get<std::string>() : value.dump());
  }
  return mesh;
}

std::string mesh_to_off(const EmbeddedMesh& mesh, int places) {
  std::ostringstream out;
  out << "OFF\n" << metadata_comment(mesh);
  out << mesh.vertices.size() << ' ' << mesh.faces.size() << " 0\n";
  for (const auto& v : mesh.vertices) out << to_decimal(v[0], places) << ' ' << to_decimal(v[1], places) << ' ' << to_decimal(v[2], places) << '\n';
  for (const auto& f : mesh.faces) {
    out << f.size();
    for (int v : f) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

std::string mesh_to_obj(const EmbeddedMesh& mesh, int places) {
  std::ostringstream out;
  out << metadata_comment(mesh);
  for (const auto& v : mesh.vertices) out << "v " << to_decimal(v[0], places) << ' ' << to_decimal(v[1], places) << ' ' << to_decimal(v[2], places) << '\n';
  for (const auto& f : mesh.faces) {
    out << 'f';
    for (int v : f) out << ' ' << v + 1;
    out << '\n';
  }
  return out.str();
}

EmbeddedMesh mesh_from_off(const std::string& text) {
  std::istringstream lines(text);
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(lines, line)) {
    line = line.substr(0, line.find('#'));
    std::istringstream words(line);
    std::string w;
    while (words >> w) tokens.push_back(w);
  }
  std::size_t at = 0;
  auto next = [&]() -> const std::string& {
    if (at >= tokens.size()) parse_fail("OFF file ends early");
    return tokens[at++];
  };
  auto next_int = [&]() {
    const std::string& t = next();
    try {
      std::size_t used = 0;
      const long long v = std::stoll(t, &used);
      if (used != t.size() || v < 0 || v > (1 << 30)) parse_fail("bad integer '" + t + "'");
      return static_cast<int>(v);
    } catch (const std::logic_error&) {
      parse_fail("bad integer '" + t + "'");
    }
  };
  if (next() != "OFF") parse_fail("missing OFF header");
  const int nv = next_int();
  const int nf = next_int();
  next_int();
  EmbeddedMesh mesh;
  for (int i = 0; i < nv; ++i) mesh.vertices.push_back(Vec{parse_rational(next()), parse_rational(next()), parse_rational(next())});
  for (int i = 0; i < nf; ++i) {
    const int k = next_int();
    Face f;
    for (int j = 0; j < k; ++j) {
      f.push_back(next_int());
      if (f.back() >= nv) parse_fail("face index out of range");
    }
    mesh.faces.push_back(std::move(f));
  }
  return mesh;
}

std::filesystem::path sidecar_path(const std::filesystem::path& path) {
  return std::filesystem::path(path.string() + ".json");
}

EmbeddedMesh load_mesh(const std::filesystem::path& path) {
  if (path.extension() == ".json") {
    try {
      return mesh_from_json(Json::parse(read_text(path)));
    } catch (const Json::exception& e) {
      parse_fail(path.string() + ": " + e.what());
    }
  }
  const auto side = sidecar_path(path);
  if (std::filesystem::exists(side)) return load_mesh(side);
  return mesh_from_off(read_text(path));
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_fail("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::DomainError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::DomainError, "write failed for " + path.string());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace highgenus
