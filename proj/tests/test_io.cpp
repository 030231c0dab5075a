#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <functional>

#include <sys/wait.h>
#include <unistd.h>

#include "highgenus/errors.hpp"
#include "highgenus/io.hpp"
#include "highgenus/mirror.hpp"

using namespace highgenus;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / ("highgenus_io_" + std::to_string(getpid()));
  fs::create_directories(dir);
  return dir;
}

int cli(const std::string& args) {
  const std::string cmd = std::string("\"") + HIGHGENUS_CLI + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalAssertion;
}

}  // namespace

TEST_CASE("surface and scheme round trips") {
  const auto s = build_qm(4).surface;
  const auto back = surface_from_json(Json::parse(dump(surface_to_json(s))));
  CHECK(back.faces() == s.faces());
  const RotationScheme scheme = mobius_torus_scheme();
  CHECK(scheme_from_json(scheme_to_json(scheme)) == canonicalize(scheme));
  CHECK(code_of([] { surface_from_json(Json::parse(R"({"faces": [[0,1,2]]})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { surface_from_json(Json::parse(R"({"n": 3, "faces": [[0,1,"x"]]})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { surface_from_json(Json::parse(R"({"n": 3, "faces": [[0,1,2]]})")); }) == ErrorCode::EdgeDegree);
}

TEST_CASE("report field names") {
  const auto j = report_to_json(analyze(scheme_to_surface(mobius_torus_scheme())));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"f_vector", "euler_characteristic", "genus", "orientable", "simplicial", "neighborly",
                                         "intersection_condition"});
  CHECK(j["genus"] == 1);
}

TEST_CASE("current graph round trip") {
  const CurrentGraph g = ringel_network(1);
  const CurrentGraph back = current_graph_from_json(current_graph_to_json(g));
  CHECK(back.modulus == 19);
  CHECK(log_to_row(trace_current_graph(back), 19) == log_to_row(trace_current_graph(g), 19));
}

TEST_CASE("mesh JSON round trip reproduces the certificate") {
  const auto mesh = realize_surface(5, Rational(1, 4), 2).mesh;
  const auto text = dump(mesh_to_json(mesh));
  const auto back = mesh_from_json(Json::parse(text));
  CHECK(back.vertices == mesh.vertices);
  CHECK(back.faces == mesh.faces);
  CHECK(back.provenance == mesh.provenance);
  CHECK(back.metadata == mesh.metadata);
  CHECK(dump(embedding_certificate_to_json(certify(back))) == dump(embedding_certificate_to_json(certify(mesh))));
  CHECK(dump(mesh_to_json(back)) == text);
}

TEST_CASE("OFF export and import") {
  EmbeddedMesh mesh;
  mesh.vertices = {{0, 0, 0}, {Rational(1, 3), 0, 0}, {0, Rational(-2, 3), 0}};
  mesh.faces = {{0, 1, 2}};
  mesh.metadata = {{"m", "4"}};
  const std::string off = mesh_to_off(mesh, 4);
  CHECK(off == "OFF\n# m=4\n3 1 0\n0.0000 0.0000 0.0000\n0.3333 0.0000 0.0000\n0.0000 -0.6667 0.0000\n3 0 1 2\n");
  const auto back = mesh_from_off(off);
  CHECK(back.vertices[1][0] == Rational(3333, 10000));
  CHECK(back.faces == mesh.faces);
  CHECK(mesh_to_obj(mesh, 1) == "# m=4\nv 0.0 0.0 0.0\nv 0.3 0.0 0.0\nv 0.0 -0.7 0.0\nf 1 2 3\n");
  CHECK(code_of([] { mesh_from_off("OFF\n3 1 0\n0 0 0\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { mesh_from_off("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 7\n"); }) == ErrorCode::ParseError);
}

TEST_CASE("load_mesh prefers the sidecar") {
  const fs::path dir = scratch();
  const auto mesh = realize_surface(4, Rational(1, 4)).mesh;
  write_text(dir / "t.off", mesh_to_off(mesh, 3));
  CHECK_FALSE(certify(load_mesh(dir / "t.off")).accepted());
  write_text(sidecar_path(dir / "t.off"), dump(mesh_to_json(mesh)));
  CHECK(load_mesh(dir / "t.off").vertices == mesh.vertices);
  CHECK(certify(load_mesh(dir / "t.off")).accepted());
  fs::remove_all(dir);
}

TEST_CASE("CLI exit codes") {
  const fs::path dir = scratch();
  CHECK(cli("ringel --s 0") == 0);
  CHECK(cli("mirror --m 5") == 0);
  CHECK(cli("heffter --q 13 --triangulate") == 0);
  CHECK(cli("ringel") == 2);
  CHECK(cli("frobnicate") == 2);
  CHECK(cli("heffter --q 7") == 3);
  CHECK(cli("mirror --m 2") == 3);
  CHECK(cli("realize --m 5 --eps 9/10") == 3);
  CHECK(cli("realize --m 5 --eps abc") == 2);
  CHECK(cli("verify \"" + (dir / "missing.off").string() + "\"") == 2);

  const auto out = (dir / "q4.off").string();
  CHECK(cli("realize --m 4 --out \"" + out + "\"") == 0);
  CHECK(fs::exists(out));
  CHECK(fs::exists(out + ".json"));
  CHECK(cli("verify \"" + out + "\"") == 0);
  auto j = Json::parse(read_text(out + ".json"));
  j["vertices"][0][2] = "1/7";
  write_text(dir / "bad.json", dump(j));
  CHECK(cli("verify \"" + (dir / "bad.json").string() + "\"") == 4);
  fs::remove_all(dir);
}
