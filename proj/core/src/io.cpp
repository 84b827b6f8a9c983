#include "bcs/io.hpp"

#include <fstream>

#include "bcs/error.hpp"

namespace bcs {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

template <typename T>
T number(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number()) throw InputError(std::string("field \"") + key + "\" must be a number");
  if constexpr (std::is_integral_v<T>) {
    if (!v.is_number_integer()) throw InputError(std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<T>();
}

Color color_field(const Json& j) {
  const Json& v = field(j, "color");
  if (!v.is_string()) throw InputError("color must be a string");
  return parse_color(v.get<std::string>());
}

const Json& items_of(const Json& j) {
  const Json& items = field(j, "items");
  if (!items.is_array()) throw InputError("\"items\" must be an array");
  return items;
}

}  // namespace

std::string_view shape_name(ShapeKind shape) noexcept {
  switch (shape) {
    case ShapeKind::UnitDisk:
      return "disk";
    case ShapeKind::UnitSquare:
      return "square";
    case ShapeKind::Grid:
      return "grid";
  }
  return "disk";
}

ShapeKind parse_shape(std::string_view text) {
  if (text == "disk" || text == "unit_disk") return ShapeKind::UnitDisk;
  if (text == "square" || text == "unit_square") return ShapeKind::UnitSquare;
  if (text == "grid") return ShapeKind::Grid;
  throw InputError("unknown shape \"" + std::string(text) + "\"");
}

Json to_json(const BicoloredGraph& g) {
  Json colors = Json::array();
  for (Color c : g.colors()) colors.push_back(std::string(to_string(c)));
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"type", "graph"}, {"n", g.size()}, {"colors", colors}, {"edges", edges}};
}

Json to_json(const IntervalModel& m) {
  Json items = Json::array();
  for (const auto& it : m.items) {
    items.push_back({{"l", it.l}, {"r", it.r}, {"color", std::string(to_string(it.color))}});
  }
  return {{"type", "interval"}, {"items", items}};
}

Json to_json(const CircularArcModel& m) {
  Json items = Json::array();
  for (const auto& it : m.items) {
    items.push_back(
        {{"start", it.start}, {"length", it.length}, {"color", std::string(to_string(it.color))}});
  }
  return {{"type", "arc"}, {"items", items}};
}

Json to_json(const PermutationModel& m) {
  Json items = Json::array();
  for (const auto& it : m.items) {
    items.push_back({{"top", it.top}, {"bottom", it.bottom}, {"color", std::string(to_string(it.color))}});
  }
  return {{"type", "permutation"}, {"items", items}};
}

Json to_json(const PointSetModel& m) {
  Json items = Json::array();
  for (const auto& it : m.items) {
    items.push_back({{"x", it.x}, {"y", it.y}, {"color", std::string(to_string(it.color))}});
  }
  return {{"type", "points"}, {"shape", std::string(shape_name(m.shape))}, {"items", items}};
}

Json to_json(const Instance& instance) {
  return std::visit([](const auto& x) { return to_json(x); }, instance);
}

Json to_json(const Solution& s) {
  return {{"vertices", s.vertices},
          {"size", s.size()},
          {"red", s.red_count},
          {"blue", s.blue_count},
          {"algorithm", s.algorithm}};
}

Json to_json(const ReductionOutput& out) {
  Json j = std::visit([](const auto& x) { return to_json(x); }, out.instance);
  j["target_size"] = out.target_size;
  j["case"] = out.case_tag;
  if (out.rst_case != 0) j["rst_case"] = out.rst_case;
  j["provenance"] = out.provenance;
  if (out.warning) j["warning"] = *out.warning;
  return j;
}

BicoloredGraph graph_from_json(const Json& j) {
  const int n = number<int>(j, "n");
  if (n < 0) throw InputError("vertex count must be non-negative");
  const Json& colors = field(j, "colors");
  if (!colors.is_array() || static_cast<int>(colors.size()) != n) {
    throw InputError("\"colors\" must list one color per vertex");
  }
  std::vector<Color> palette;
  for (const auto& c : colors) {
    if (!c.is_string()) throw InputError("color must be a string");
    palette.push_back(parse_color(c.get<std::string>()));
  }
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    const Json& list = j.at("edges");
    if (!list.is_array()) throw InputError("\"edges\" must be an array");
    for (const auto& e : list) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        throw InputError("each edge must be a pair of vertex ids");
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  return BicoloredGraph(std::move(palette), edges);
}

namespace {

Instance parse_instance(const Json& j) {
  if (!j.is_object()) throw InputError("instance must be a JSON object");
  const std::string type = j.contains("type") ? j.at("type").get<std::string>() : "graph";
  if (type == "graph") return graph_from_json(j);
  if (type == "interval") {
    IntervalModel m;
    for (const auto& it : items_of(j)) {
      m.items.push_back({number<double>(it, "l"), number<double>(it, "r"), color_field(it)});
    }
    return m;
  }
  if (type == "arc") {
    CircularArcModel m;
    for (const auto& it : items_of(j)) {
      m.items.push_back({number<double>(it, "start"), number<double>(it, "length"), color_field(it)});
    }
    return m;
  }
  if (type == "permutation") {
    PermutationModel m;
    for (const auto& it : items_of(j)) {
      m.items.push_back({number<int>(it, "top"), number<int>(it, "bottom"), color_field(it)});
    }
    return m;
  }
  if (type == "points") {
    PointSetModel m;
    m.shape = parse_shape(field(j, "shape").get<std::string>());
    for (const auto& it : items_of(j)) {
      m.items.push_back({number<double>(it, "x"), number<double>(it, "y"), color_field(it)});
    }
    return m;
  }
  throw InputError("unknown instance type \"" + type + "\"");
}

}  // namespace

Instance instance_from_json(const Json& j) {
  try {
    return parse_instance(j);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed instance: ") + e.what());
  }
}

BicoloredGraph instance_graph(const Instance& instance) {
  struct Compile {
    BicoloredGraph operator()(const BicoloredGraph& g) const { return g; }
    BicoloredGraph operator()(const IntervalModel& m) const { return interval_graph(m); }
    BicoloredGraph operator()(const CircularArcModel& m) const { return circular_arc_graph(m); }
    BicoloredGraph operator()(const PermutationModel& m) const { return permutation_graph(m); }
    BicoloredGraph operator()(const PointSetModel& m) const { return point_set_graph(m); }
  };
  return std::visit(Compile{}, instance);
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("invalid JSON in " + path.string() + ": " + e.what());
  }
}

}  // namespace bcs
