#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "highgenus/current_graph.hpp"
#include "highgenus/embed.hpp"
#include "highgenus/errors.hpp"
#include "highgenus/heffter.hpp"
#include "highgenus/io.hpp"
#include "highgenus/mirror.hpp"
#include "highgenus/rotation.hpp"
#include "highgenus/schlegel.hpp"

using namespace highgenus;

namespace {

struct Options {
  int s = 0;
  int q = 5;
  int m = 4;
  std::string eps = "1/4";
  int f0 = 0;
  std::string out;
  std::string format;
  std::string graph_out;
  std::string network;
  std::string certificates_out;
  std::string input;
  int places = 12;
  unsigned threads = 0;
  bool triangulate = false;
  bool force = false;
};

void emit(const std::string& path, const Json& artifact) {
  if (!path.empty()) write_text(path, dump(artifact));
}

int cmd_ringel(const Options& o) {
  std::optional<NetworkTemplate> family;
  if (!o.network.empty()) family = load_network_template(o.network);
  const RotationScheme scheme = ringel_scheme(o.s, family);
  const CellSurface surface = scheme_to_surface(scheme);
  const auto delta = check_delta_star(scheme);
  emit(o.out, scheme_to_json(scheme));
  if (!o.graph_out.empty()) {
    if (o.s == 0) throw Error(ErrorCode::DomainError, "s = 0 uses the fixed seven-vertex listing, not a current graph");
    const CurrentGraph graph = family ? instantiate(*family, o.s) : ringel_network(o.s);
    emit(o.graph_out, current_graph_to_json(graph));
  }
  Json j;
  j["command"] = "ringel";
  j["s"] = o.s;
  j["n"] = scheme.n;
  j["delta_star"] = delta.holds;
  j["report"] = report_to_json(analyze(surface));
  std::cout << dump(j);
  return 0;
}

int cmd_heffter(const Options& o) {
  const FiniteField f = make_field(o.q);
  const auto built = heffter_surface(f);
  const auto symmetry = check_self_dual_and_actions(built.heffter);
  const CellSurface surface = o.triangulate ? stellar_triangulation(built.heffter) : built.surface;
  Json artifact = surface_to_json(surface);
  artifact["field"] = field_to_json(f);
  emit(o.out, artifact);
  Json j;
  j["command"] = "heffter";
  j["field"] = field_to_json(f);
  j["triangulated"] = o.triangulate;
  j["additive_action"] = symmetry.additive;
  j["multiplicative_action"] = symmetry.multiplicative;
  j["dual_complete"] = symmetry.dual_complete;
  j["report"] = report_to_json(analyze(surface));
  std::cout << dump(j);
  return 0;
}

int cmd_mirror(const Options& o) {
  const auto built = build_qm(o.m);
  const CellSurface surface = o.triangulate ? triangulate_equivelar(built.complex) : orient_qm(built.complex);
  Json artifact = surface_to_json(surface);
  Json codes = Json::array();
  for (const auto& quad : built.complex.quads) codes.push_back(quad.code);
  artifact["quads"] = std::move(codes);
  emit(o.out, artifact);
  Json j;
  j["command"] = "mirror";
  j["m"] = o.m;
  j["triangulated"] = o.triangulate;
  j["consistently_oriented"] = is_consistently_oriented(surface);
  j["report"] = report_to_json(analyze(surface));
  std::cout << dump(j);
  return 0;
}

std::string format_of(const Options& o) {
  if (!o.format.empty()) return o.format;
  const auto ext = std::filesystem::path(o.out).extension().string();
  if (ext == ".obj") return "obj";
  if (ext == ".json") return "json";
  return "off";
}

int cmd_realize(const Options& o) {
  const Rational eps = parse_rational(o.eps);
  Realization r = realize_surface(o.m, eps, o.f0);
  EmbeddedMesh mesh = o.triangulate ? triangulate_mesh(r.mesh) : r.mesh;
  const auto cert = certify(mesh, PairwiseOptions{o.threads, std::nullopt});
  Json j;
  j["command"] = "realize";
  j["m"] = o.m;
  j["eps"] = to_string(eps);
  j["f0"] = o.f0;
  j["faces"] = mesh.faces.size();
  j["certificate"] = embedding_certificate_to_json(cert);
  if (!o.certificates_out.empty()) {
    Json certs = Json::array();
    for (const auto& c : r.certificates) certs.push_back(certificate_to_json(c));
    emit(o.certificates_out, certs);
  }
  const bool write = !o.out.empty() && (cert.accepted() || o.force);
  if (write) {
    const std::string format = format_of(o);
    if (format == "json") {
      emit(o.out, mesh_to_json(mesh));
    } else {
      write_text(o.out, format == "obj" ? mesh_to_obj(mesh, o.places) : mesh_to_off(mesh, o.places));
      emit(sidecar_path(o.out).string(), mesh_to_json(mesh));
    }
  }
  j["written"] = write;
  std::cout << dump(j);
  return cert.accepted() ? 0 : exit_code_for(ErrorKind::Certification);
}

int cmd_verify(const Options& o) {
  const EmbeddedMesh mesh = load_mesh(o.input);
  const auto cert = certify(mesh, PairwiseOptions{o.threads, std::nullopt});
  Json j;
  j["command"] = "verify";
  j["faces"] = mesh.faces.size();
  j["certificate"] = embedding_certificate_to_json(cert);
  std::cout << dump(j);
  return cert.accepted() ? 0 : exit_code_for(ErrorKind::Certification);
}

int cmd_report(const Options& o) {
  Json input;
  try {
    input = Json::parse(read_text(o.input));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, o.input + ": " + e.what());
  }
  const CellSurface surface = input.contains("rows") ? scheme_to_surface(scheme_from_json(input)) : surface_from_json(input);
  Json j;
  j["command"] = "report";
  j["report"] = report_to_json(analyze(surface));
  std::cout << dump(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constructions and exact polyhedral realizations of high-genus surfaces"};
  app.require_subcommand(1);
  Options o;

  auto* ringel = app.add_subcommand("ringel", "cyclic neighborly triangulation on 12s+7 vertices");
  ringel->add_option("--s", o.s, "s >= 0")->required();
  ringel->add_option("--out", o.out, "scheme JSON");
  ringel->add_option("--graph", o.graph_out, "current graph JSON (s >= 1)");
  ringel->add_option("--network", o.network, "network template instead of the shipped one");

  auto* heffter = app.add_subcommand("heffter", "self-dual surface over GF(q), q = 4g+1");
  heffter->add_option("--q", o.q, "field order")->required();
  heffter->add_flag("--triangulate", o.triangulate, "stellar triangulation");
  heffter->add_option("--out", o.out, "surface JSON");

  auto* mirror = app.add_subcommand("mirror", "the quad surface Q_m in the m-cube");
  mirror->add_option("--m", o.m, "3 <= m <= 24")->required();
  mirror->add_flag("--triangulate", o.triangulate, "equivelar triangulation");
  mirror->add_option("--out", o.out, "surface JSON");

  auto* realize = app.add_subcommand("realize", "embed Q_m in R^3 and certify it");
  realize->add_option("--m", o.m, "4 <= m <= 10")->required();
  realize->add_option("--eps", o.eps, "exact rational, default 1/4");
  realize->add_option("--f0", o.f0, "facet index in the sorted facet list, default 0");
  realize->add_option("--out", o.out, "mesh file");
  realize->add_option("--format", o.format, "off, obj or json")->check(CLI::IsMember({"off", "obj", "json"}));
  realize->add_option("--places", o.places, "decimal places for OFF/OBJ")->check(CLI::Range(1, 60));
  realize->add_option("--certificates", o.certificates_out, "preservation certificates JSON");
  realize->add_option("--threads", o.threads, "verifier threads");
  realize->add_flag("--triangulate", o.triangulate, "equivelar triangulation");
  realize->add_flag("--force", o.force, "write even if certification fails");

  auto* verify = app.add_subcommand("verify", "certify a mesh file (OFF, OFF with sidecar, or JSON)");
  verify->add_option("mesh", o.input, "mesh file")->required();
  verify->add_option("--threads", o.threads, "verifier threads");

  auto* report = app.add_subcommand("report", "report on a surface or scheme JSON file");
  report->add_option("surface", o.input, "surface JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_code_for(ErrorKind::Parse);
  }

  try {
    if (*ringel) return cmd_ringel(o);
    if (*heffter) return cmd_heffter(o);
    if (*mirror) return cmd_mirror(o);
    if (*realize) return cmd_realize(o);
    if (*verify) return cmd_verify(o);
    if (*report) return cmd_report(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return exit_code_for(ErrorKind::Internal);
  }
  return exit_code_for(ErrorKind::Internal);
}
