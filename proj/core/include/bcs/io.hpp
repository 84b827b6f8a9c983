#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "bcs/geometry.hpp"
#include "bcs/graph.hpp"
#include "bcs/reductions.hpp"

namespace bcs {

using Json = nlohmann::json;

/// Any instance the tool reads. JSON layouts, keyed by "type":
///   graph:       {"type":"graph","n":3,"colors":["red",...],"edges":[[0,1],...]}
///   interval:    {"type":"interval","items":[{"l":0,"r":1,"color":"red"},...]}
///   arc:         {"type":"arc","items":[{"start":0.1,"length":0.3,"color":"blue"},...]}
///   permutation: {"type":"permutation","items":[{"top":1,"bottom":2,"color":"red"},...]}
///   points:      {"type":"points","shape":"disk|square|grid","items":[{"x":0,"y":0,"color":"red"},...]}
/// A graph object may omit "type".
using Instance =
    std::variant<BicoloredGraph, IntervalModel, CircularArcModel, PermutationModel, PointSetModel>;

Json to_json(const BicoloredGraph& g);
Json to_json(const IntervalModel& m);
Json to_json(const CircularArcModel& m);
Json to_json(const PermutationModel& m);
Json to_json(const PointSetModel& m);
Json to_json(const Instance& instance);
Json to_json(const Solution& s);
/// The instance JSON plus "target_size", "case", "rst_case" and, when
/// present, "warning".
Json to_json(const ReductionOutput& out);

/// Throws InputError on malformed content.
Instance instance_from_json(const Json& j);
BicoloredGraph graph_from_json(const Json& j);

/// Compiles any instance to its graph.
BicoloredGraph instance_graph(const Instance& instance);

/// Throws InputError when the file cannot be read or parsed.
Json read_json_file(const std::filesystem::path& path);

std::string_view shape_name(ShapeKind shape) noexcept;
/// Accepts disk / square / grid (and unit_disk / unit_square). Throws InputError.
ShapeKind parse_shape(std::string_view text);

}  // namespace bcs
