#include "highgenus/current_graph.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>

#ifndef HIGHGENUS_DATA_DIR
#define HIGHGENUS_DATA_DIR "data"
#endif

namespace highgenus {
namespace {

using Bindings = std::vector<std::pair<std::string, long long>>;

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const Bindings& bindings) : text_(text), bindings_(bindings) {}

  long long parse() {
    const long long value = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  long long sum() {
    long long value = product();
    for (;;) {
      skip_space();
      if (accept('+')) value += product();
      else if (accept('-')) value -= product();
      else return value;
    }
  }

  long long product() {
    long long value = unary();
    for (;;) {
      skip_space();
      if (accept('*')) value *= unary();
      else return value;
    }
  }

  long long unary() {
    skip_space();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  long long primary() {
    skip_space();
    if (accept('(')) {
      const long long value = sum();
      skip_space();
      if (!accept(')')) fail("missing ')'");
      return value;
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      long long value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        value = value * 10 + (text_[pos_++] - '0');
      return value;
    }
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      for (auto it = bindings_.rbegin(); it != bindings_.rend(); ++it)
        if (it->first == name) return it->second;
      fail("unbound variable '" + std::string(name) + "'");
    }
    fail("expected a number, variable or '('");
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, "expression \"" + std::string(text_) + "\": " + why);
  }

  std::string_view text_;
  const Bindings& bindings_;
  std::size_t pos_ = 0;
};

// "T[2*j-1]" -> "T[3]"
std::string expand_name(const std::string& pattern, const Bindings& bindings) {
  std::string out;
  std::size_t pos = 0;
  while (pos < pattern.size()) {
    const std::size_t open = pattern.find('[', pos);
    if (open == std::string::npos) {
      out += pattern.substr(pos);
      break;
    }
    const std::size_t close = pattern.find(']', open);
    if (close == std::string::npos) throw Error(ErrorCode::ParseError, "unterminated index in \"" + pattern + "\"");
    out += pattern.substr(pos, open - pos + 1);
    out += std::to_string(evaluate_expression(std::string_view(pattern).substr(open + 1, close - open - 1), bindings));
    out += ']';
    pos = close + 1;
  }
  return out;
}

std::string expression_text(const nlohmann::json& value) {
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  if (value.is_string()) return value.get<std::string>();
  throw Error(ErrorCode::ParseError, "expected an expression, got " + value.dump());
}

// Calls body once per binding of the item's optional "for": [var, from, to].
template <typename Body>
void for_each_binding(const nlohmann::json& item, const Bindings& outer, Body body) {
  if (!item.contains("for")) {
    body(outer);
    return;
  }
  const auto& loop = item.at("for");
  if (!loop.is_array() || loop.size() != 3) throw Error(ErrorCode::ParseError, "\"for\" must be [var, from, to]");
  const std::string var = loop[0].get<std::string>();
  const long long from = evaluate_expression(expression_text(loop[1]), outer);
  const long long to = evaluate_expression(expression_text(loop[2]), outer);
  for (long long x = from; x <= to; ++x) {
    Bindings inner = outer;
    inner.emplace_back(var, x);
    body(inner);
  }
}

const nlohmann::json& select_variant(const nlohmann::json& document, int s) {
  for (const auto& variant : document.at("variants")) {
    const int lo = variant.value("s_min", 0);
    const bool bounded = variant.contains("s_max");
    if (s >= lo && (!bounded || s <= variant.at("s_max").get<int>())) return variant;
  }
  throw Error(ErrorCode::DomainError, "network template has no variant for s = " + std::to_string(s));
}

}  // namespace

long long evaluate_expression(std::string_view expression, const Bindings& bindings) {
  return ExpressionParser(expression, bindings).parse();
}

CurrentGraphCheck validate_current_graph(const CurrentGraph& graph) {
  const int n = graph.modulus;
  auto fail = [](ErrorCode code, int witness, std::string detail) {
    return CurrentGraphCheck{false, code, witness, std::move(detail)};
  };
  if (n < 3 || n % 2 == 0) return fail(ErrorCode::DomainError, n, "modulus must be odd and >= 3");

  const int end_count = 2 * static_cast<int>(graph.arcs.size());
  std::vector<int> owner(end_count, -1);
  for (const auto& arc : graph.arcs) {
    if (arc.tail < 0 || arc.tail >= end_count || arc.head < 0 || arc.head >= end_count || arc.tail == arc.head)
      return fail(ErrorCode::DomainError, -1, "arc ends must be distinct ids below 2*|arcs|");
  }
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    for (int end : graph.vertices[v].rotation) {
      if (end < 0 || end >= end_count || owner[end] != -1)
        return fail(ErrorCode::DomainError, static_cast<int>(v), "arc end " + std::to_string(end) + " misplaced");
      owner[end] = static_cast<int>(v);
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end())
    return fail(ErrorCode::DomainError, -1, "some arc end is not attached to a vertex");

  for (std::size_t v = 0; v < graph.vertices.size(); ++v)
    if (graph.vertices[v].rotation.size() != 3)
      return fail(ErrorCode::NotCubic, static_cast<int>(v),
                  "vertex " + std::to_string(v) + " has degree " + std::to_string(graph.vertices[v].rotation.size()));

  const int half = (n - 1) / 2;
  std::vector<int> uses(half + 1, 0);
  for (const auto& arc : graph.arcs) {
    if (arc.current < 1 || arc.current > half)
      return fail(ErrorCode::LabelReuse, arc.current, "current " + std::to_string(arc.current) + " outside 1..(n-1)/2");
    if (++uses[arc.current] > 1)
      return fail(ErrorCode::LabelReuse, arc.current, "current " + std::to_string(arc.current) + " used twice");
  }
  for (int label = 1; label <= half; ++label)
    if (uses[label] == 0) return fail(ErrorCode::LabelReuse, label, "current " + std::to_string(label) + " unused");

  std::vector<long long> balance(graph.vertices.size(), 0);
  for (const auto& arc : graph.arcs) {
    balance[owner[arc.tail]] -= arc.current;
    balance[owner[arc.head]] += arc.current;
  }
  for (std::size_t v = 0; v < balance.size(); ++v)
    if (balance[v] % n != 0)
      return fail(ErrorCode::FlowViolation, static_cast<int>(v),
                  "net inflow " + std::to_string(balance[v]) + " at vertex " + std::to_string(v));
  return {};
}

TraversalLog walk_current_graph(const CurrentGraph& graph) {
  const int end_count = 2 * static_cast<int>(graph.arcs.size());
  std::vector<int> owner(end_count, -1);
  std::vector<int> slot(end_count, -1);
  std::vector<int> arc_of(end_count, -1);
  for (std::size_t v = 0; v < graph.vertices.size(); ++v)
    for (std::size_t p = 0; p < graph.vertices[v].rotation.size(); ++p) {
      owner.at(graph.vertices[v].rotation[p]) = static_cast<int>(v);
      slot.at(graph.vertices[v].rotation[p]) = static_cast<int>(p);
    }
  for (std::size_t a = 0; a < graph.arcs.size(); ++a) {
    arc_of.at(graph.arcs[a].tail) = static_cast<int>(a);
    arc_of.at(graph.arcs[a].head) = static_cast<int>(a);
  }
  const auto first = std::find_if(graph.arcs.begin(), graph.arcs.end(), [](const auto& a) { return a.current == 1; });
  if (first == graph.arcs.end()) throw Error(ErrorCode::DomainError, "no arc carries current 1");

  TraversalLog log;
  // a step is identified by the end we leave through
  std::vector<bool> taken(end_count, false);
  int leave = first->tail;
  while (!taken[leave]) {
    taken[leave] = true;
    const auto& arc = graph.arcs[arc_of[leave]];
    const bool along = leave == arc.tail;
    log.labels.push_back(along ? arc.current : -arc.current);
    const int arrive = along ? arc.head : arc.tail;
    const auto& vertex = graph.vertices[owner[arrive]];
    const int degree = static_cast<int>(vertex.rotation.size());
    const int step = vertex.color == VertexColor::Black ? 1 : degree - 1;
    leave = vertex.rotation[(slot[arrive] + step) % degree];
  }
  log.closed = static_cast<int>(log.labels.size()) == end_count;
  return log;
}

TraversalLog trace_current_graph(const CurrentGraph& graph) {
  TraversalLog log = walk_current_graph(graph);
  if (!log.closed)
    throw Error(ErrorCode::NotSingleCycle, "walk closed after " + std::to_string(log.labels.size()) + " of " +
                                               std::to_string(2 * graph.arcs.size()) + " steps");
  return log;
}

std::vector<int> log_to_row(const TraversalLog& log, int modulus) {
  std::vector<int> row;
  row.reserve(log.labels.size());
  for (int label : log.labels) row.push_back(((label % modulus) + modulus) % modulus);
  return row;
}

NetworkTemplate load_network_template(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open network template " + path.string());
  try {
    return {nlohmann::json::parse(in)};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

CurrentGraph instantiate(const NetworkTemplate& family, int s) {
  if (s < 0) throw Error(ErrorCode::DomainError, "s must be nonnegative");
  try {
    const auto& doc = family.document;
    const Bindings top{{"s", s}};
    const auto& variant = select_variant(doc, s);

    CurrentGraph graph;
    graph.modulus = static_cast<int>(evaluate_expression(expression_text(doc.at("modulus")), top));

    std::map<std::string, int> arc_index;
    std::vector<std::pair<std::string, std::string>> arc_vertices;
    for (const auto& item : variant.at("arcs")) {
      for_each_binding(item, top, [&](const Bindings& b) {
        const std::string name = expand_name(item.at("name").get<std::string>(), b);
        const int k = static_cast<int>(graph.arcs.size());
        if (!arc_index.emplace(name, k).second) throw Error(ErrorCode::ParseError, "duplicate arc " + name);
        const long long current = evaluate_expression(expression_text(item.at("current")), b);
        graph.arcs.push_back({2 * k, 2 * k + 1, static_cast<int>(current), name});
        arc_vertices.emplace_back(expand_name(item.at("tail").get<std::string>(), b),
                                  expand_name(item.at("head").get<std::string>(), b));
      });
    }

    std::set<std::string> vertex_names;
    for (const auto& item : variant.at("vertices")) {
      for_each_binding(item, top, [&](const Bindings& b) {
        CurrentGraph::Vertex vertex;
        vertex.name = expand_name(item.at("name").get<std::string>(), b);
        if (!vertex_names.insert(vertex.name).second)
          throw Error(ErrorCode::ParseError, "duplicate vertex " + vertex.name);
        const std::string color = item.at("color").get<std::string>();
        if (color == "black") vertex.color = VertexColor::Black;
        else if (color == "white") vertex.color = VertexColor::White;
        else throw Error(ErrorCode::ParseError, "unknown color " + color);
        for (const auto& arc_pattern : item.at("rotation")) {
          const std::string arc_name = expand_name(arc_pattern.get<std::string>(), b);
          const auto it = arc_index.find(arc_name);
          if (it == arc_index.end()) throw Error(ErrorCode::ParseError, vertex.name + " rotates unknown arc " + arc_name);
          const auto& [tail, head] = arc_vertices[it->second];
          if (tail == vertex.name && head == vertex.name)
            throw Error(ErrorCode::ParseError, "loop arcs are not supported: " + arc_name);
          if (tail == vertex.name) vertex.rotation.push_back(2 * it->second);
          else if (head == vertex.name) vertex.rotation.push_back(2 * it->second + 1);
          else throw Error(ErrorCode::ParseError, "arc " + arc_name + " is not incident to " + vertex.name);
        }
        graph.vertices.push_back(std::move(vertex));
      });
    }
    for (const auto& [tail, head] : arc_vertices)
      if (!vertex_names.contains(tail) || !vertex_names.contains(head))
        throw Error(ErrorCode::ParseError, "arc endpoint " + (vertex_names.contains(tail) ? head : tail) + " undeclared");
    return graph;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("network template: ") + e.what());
  }
}

std::filesystem::path default_network_path() {
  if (const char* dir = std::getenv("HIGHGENUS_DATA_DIR"); dir && *dir)
    return std::filesystem::path(dir) / "ringel_network.json";
  return std::filesystem::path(HIGHGENUS_DATA_DIR) / "ringel_network.json";
}

CurrentGraph ringel_network(int s) { return instantiate(load_network_template(default_network_path()), s); }

RotationScheme ringel_scheme(int s, const std::optional<NetworkTemplate>& family) {
  if (s < 0) throw Error(ErrorCode::DomainError, "s must be nonnegative");
  if (s == 0) return mobius_torus_scheme();
  const CurrentGraph graph = family ? instantiate(*family, s) : ringel_network(s);
  const auto check = validate_current_graph(graph);
  if (!check.ok) throw Error(*check.failure, check.detail);
  const TraversalLog log = trace_current_graph(graph);
  return cyclic_scheme(graph.modulus, log_to_row(log, graph.modulus));
}

}  // namespace highgenus
