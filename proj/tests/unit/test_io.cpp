#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "bcs/error.hpp"
#include "bcs/generators.hpp"
#include "bcs/io.hpp"

using namespace bcs;

namespace {

Json round_trip(const Instance& instance) { return to_json(instance_from_json(Json::parse(to_json(instance).dump()))); }

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("every instance kind round-trips") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Instance kinds[] = {random_graph(8, 0.4, seed), random_interval_model(8, seed),
                                random_arc_model(8, seed), random_permutation_model(8, seed)};
      for (const auto& inst : kinds) {
        CHECK(round_trip(inst) == to_json(inst));
        CHECK(instance_graph(instance_from_json(to_json(inst))) == instance_graph(inst));
      }
    }
    PointSetModel pts{ShapeKind::UnitSquare, {{0, 0, Color::Red}, {1, 0, Color::Blue}}};
    CHECK(round_trip(Instance{pts}) == to_json(Instance{pts}));
    CHECK(instance_graph(Instance{pts}).edge_count() == 1);
  }

  TEST_CASE("graph objects may omit the type") {
    const auto j = Json::parse(R"({"n": 3, "colors": ["red", "blue", "red"], "edges": [[0, 1], [1, 2]]})");
    const auto inst = instance_from_json(j);
    REQUIRE(std::holds_alternative<BicoloredGraph>(inst));
    CHECK(std::get<BicoloredGraph>(inst).edge_count() == 2);
  }

  TEST_CASE("malformed content is an input error") {
    const char* bad[] = {
        R"([1, 2])",
        R"({"type": "graph", "n": 2, "colors": ["red"]})",
        R"({"type": "graph", "n": 2, "colors": ["red", "green"]})",
        R"({"type": "graph", "n": 2, "colors": ["red", "blue"], "edges": [[0]]})",
        R"({"type": "interval", "items": [{"l": 0, "color": "red"}]})",
        R"({"type": "interval", "items": {"l": 0}})",
        R"({"type": "permutation", "items": [{"top": 1.5, "bottom": 1, "color": "red"}]})",
        R"({"type": "points", "shape": "hexagon", "items": []})",
        R"({"type": "polygon"})",
        R"({"type": 7})",
    };
    for (const char* text : bad) CHECK_THROWS_AS(instance_from_json(Json::parse(text)), InputError);
  }

  TEST_CASE("files") {
    CHECK_THROWS_AS(read_json_file("/nonexistent/instance.json"), InputError);
    const auto path = std::filesystem::temp_directory_path() / "bcs_io_test_broken.json";
    std::ofstream(path) << "{ not json";
    CHECK_THROWS_AS(read_json_file(path), InputError);
    std::filesystem::remove(path);
  }

  TEST_CASE("solutions and reductions serialize their fields") {
    const BicoloredGraph g({Color::Red, Color::Blue}, std::vector<Edge>{{0, 1}});
    const auto j = to_json(make_solution(g, {0, 1}, "oracle"));
    CHECK(j.at("size") == 2);
    CHECK(j.at("red") == 1);
    CHECK(j.at("algorithm") == "oracle");

    const auto out = to_json(reduce_rst_to_unit_disk(std::vector<GridPoint>{{0, 0}}, 0));
    CHECK(out.at("type") == "points");
    CHECK(out.at("target_size") == 4);
    CHECK(out.at("rst_case") == 2);
    CHECK(out.contains("warning"));
    CHECK(parse_shape("unit_disk") == ShapeKind::UnitDisk);
    CHECK(shape_name(ShapeKind::Grid) == "grid");
  }
}
