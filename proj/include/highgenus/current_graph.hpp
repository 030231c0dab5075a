#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "highgenus/errors.hpp"
#include "highgenus/rotation.hpp"

namespace highgenus {

enum class VertexColor { Black, White };

/// A graph with Z_n currents on its arcs.
///
/// Arc ends carry global ids; every vertex lists the ids of its incident arc
/// ends in clockwise order. Walking through a black vertex continues with the
/// clockwise successor of the arriving end, through a white vertex with the
/// counterclockwise successor.
struct CurrentGraph {
  struct Vertex {
    VertexColor color = VertexColor::Black;
    std::vector<int> rotation;
    std::string name;
  };
  struct Arc {
    int tail = 0;  // end id at the arc's source
    int head = 0;  // end id at the arc's target
    int current = 0;
    std::string name;
  };

  int modulus = 0;
  std::vector<Vertex> vertices;
  std::vector<Arc> arcs;
};

struct CurrentGraphCheck {
  bool ok = true;
  std::optional<ErrorCode> failure;  // NotCubic, LabelReuse, FlowViolation or DomainError (malformed)
  int witness = -1;                  // vertex index or label
  std::string detail;
};

/// Checks cubic degrees, that the currents are exactly 1..(n-1)/2, and
/// Kirchhoff's law mod n at every vertex.
CurrentGraphCheck validate_current_graph(const CurrentGraph& graph);

struct TraversalLog {
  std::vector<int> labels;  // +current along the arrow, -current against it
  bool closed = false;      // the walk used every arc once in each direction
};

/// Walks from the arc carrying current 1, in arrow direction, until the
/// starting step repeats.
TraversalLog walk_current_graph(const CurrentGraph& graph);

/// walk_current_graph, throwing NotSingleCycle unless the walk covers every
/// arc in both directions.
TraversalLog trace_current_graph(const CurrentGraph& graph);

/// Row 0 of the cyclic scheme: log entries reduced into 0..n-1.
std::vector<int> log_to_row(const TraversalLog& log, int modulus);

/// A current graph family described by integer expressions in s (and loop
/// variables). See data/ringel_network.json for the format.
struct NetworkTemplate {
  nlohmann::json document;
};

NetworkTemplate load_network_template(const std::filesystem::path& path);
CurrentGraph instantiate(const NetworkTemplate& family, int s);

/// data/ringel_network.json, or $HIGHGENUS_DATA_DIR/ringel_network.json when set.
std::filesystem::path default_network_path();

/// Ringel's network for n = 12s+7 from the shipped data file.
CurrentGraph ringel_network(int s);

/// Cyclic neighborly scheme on n = 12s+7 vertices. s = 0 returns the
/// Möbius torus listing; s >= 1 traces ringel_network(s).
RotationScheme ringel_scheme(int s, const std::optional<NetworkTemplate>& family = std::nullopt);

/// Integer expression with + - * ( ) and named variables.
long long evaluate_expression(std::string_view expression,
                              const std::vector<std::pair<std::string, long long>>& bindings);

}  // namespace highgenus
