#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "highgenus/current_graph.hpp"
#include "highgenus/deformed_cube.hpp"
#include "highgenus/embed.hpp"
#include "highgenus/heffter.hpp"
#include "highgenus/rotation.hpp"
#include "highgenus/schlegel.hpp"
#include "highgenus/surface.hpp"

namespace highgenus {

using Json = nlohmann::ordered_json;

/// {"n": int, "faces": [[int,...],...]} plus "labels" when present.
Json surface_to_json(const CellSurface& surface);
/// Validates the faces; ParseError on malformed JSON.
CellSurface surface_from_json(const Json& j);

Json report_to_json(const SurfaceReport& report);

/// {"n": int, "rows": [[int,...],...]}, rows rotated to start at their minimum.
Json scheme_to_json(const RotationScheme& scheme);
RotationScheme scheme_from_json(const Json& j);

/// {"modulus": n, "vertices": [{"color", "rotation": [end ids]}], "arcs": [{"tail", "head", "current"}]}
Json current_graph_to_json(const CurrentGraph& graph);
CurrentGraph current_graph_from_json(const Json& j);

/// {"q": int, "alpha": canonical element text}
Json field_to_json(const FiniteField& field);

Json certificate_to_json(const PreservationCertificate& cert);
Json embedding_certificate_to_json(const EmbeddingCertificate& cert);

/// Exact rational strings for coordinates.
Json mesh_to_json(const EmbeddedMesh& mesh);
EmbeddedMesh mesh_from_json(const Json& j);

/// OFF and OBJ with coordinates rounded to `places` decimals; the header
/// comment lists the mesh metadata.
std::string mesh_to_off(const EmbeddedMesh& mesh, int places = 12);
std::string mesh_to_obj(const EmbeddedMesh& mesh, int places = 12);
/// Decimal coordinates are read exactly as written.
EmbeddedMesh mesh_from_off(const std::string& text);

/// path + ".json"
std::filesystem::path sidecar_path(const std::filesystem::path& path);

/// JSON for *.json paths; otherwise the sidecar when it exists, else OFF.
EmbeddedMesh load_mesh(const std::filesystem::path& path);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);
/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace highgenus
