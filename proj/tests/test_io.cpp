#include "rectpack/json_io.hpp"
#include "rectpack/render.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace rectpack;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("json_io") {
  TEST_CASE("instance and packing round trip") {
    Instance inst{10, true, {{"a", 3, 4, 5}, {"b", 1, 2, 3}}};
    Instance back = instance_from_json(to_json(inst));
    CHECK(back.N == 10);
    CHECK(back.rotation_allowed);
    REQUIRE(back.items.size() == 2);
    CHECK(back.items[1].id == "b");
    Packing p{inst, {{"a", 1, 2, true}}};
    Packing q = packing_from_json(to_json(p));
    REQUIRE(q.placements.size() == 1);
    CHECK(q.placements[0].rotated);
    CHECK(q.placements[0].y == 2);
  }

  TEST_CASE("rotation flag defaults to false") {
    Instance inst = instance_from_json(Json::parse(R"({"N": 5, "items": []})"));
    CHECK_FALSE(inst.rotation_allowed);
  }

  TEST_CASE("schema errors") {
    CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"items": []})")), SchemaError);
    CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"N": "5", "items": []})")), SchemaError);
    CHECK_THROWS_AS(container_from_json(Json::parse(R"({"x":0,"y":0,"w":1,"h":1,"label":"diagonal"})")), SchemaError);
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), IoError);
  }

  TEST_CASE("containers, corridors, splits and GAP round trip") {
    std::vector<Container> cs{{1, 2, 3, 4, ContainerLabel::Vertical}, {0, 0, 1, 1, ContainerLabel::Area}};
    CHECK(containers_from_json(containers_to_json(cs)) == cs);
    CHECK(containers_from_json(Json{{"containers", containers_to_json(cs)}}) == cs);

    Corridor corr{CorridorKind::Closed, {{{0, 0, 5, 1}, Orientation::Horizontal}, {{4, 0, 1, 5}, Orientation::Vertical}}};
    Corridor c2 = corridor_from_json(to_json(corr));
    CHECK(c2.kind == CorridorKind::Closed);
    CHECK(c2.subcorridors[1].orientation == Orientation::Vertical);
    CHECK(c2.subcorridors[1].rect == Rect{4, 0, 1, 5});

    EqualSplit s{{3, 1, 2}, 1};
    CHECK(split_from_json(to_json(s)).values == s.values);

    GapInstance g{{{"b0", 5}}, {{"i0", 3, {std::nullopt}}, {"i1", 2, {4}}}};
    GapInstance g2 = gap_instance_from_json(to_json(g));
    CHECK_FALSE(g2.items[0].sizes[0].has_value());
    CHECK(*g2.items[1].sizes[0] == 4);
    GapSolution sol{{{"i1", "b0"}}, 2};
    CHECK(gap_solution_from_json(to_json(sol)).assignment.at("i1") == "b0");
  }
}

TEST_SUITE("render") {
  TEST_CASE("empty packing draws only the frame") {
    std::string svg = render_svg(Packing{Instance{10, false, {}}, {}});
    CHECK(count(svg, "<rect") == 1);
    CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
  }

  TEST_CASE("strip overlay adds two rectangles") {
    RenderOptions opts;
    opts.overlay_strips = true;
    std::string svg = render_svg(Packing{Instance{10, false, {}}, {}}, opts);
    CHECK(count(svg, "<rect") == 3);
    CHECK(count(svg, "fill=\"gray\"") == 2);
  }

  TEST_CASE("y axis points up") {
    Instance inst{10, false, {{"a", 10, 2, 1}}};
    RenderOptions opts;
    opts.size = 100;
    std::string svg = render_svg(Packing{inst, {{"a", 0, 0, false}}}, opts);
    CHECK(svg.find("y=\"90.000\" width=\"100.000\" height=\"20.000\"") != std::string::npos);
  }

  TEST_CASE("lower-bound n = 3 matches the golden file") {
    Instance inst = gen_lowerbound_family(3);
    Packing p = construct_lowerbound_packing(inst);
    RenderOptions opts;
    opts.containers = {{0, 0, 64, 4, ContainerLabel::Horizontal}, {0, 4, 64, 60, ContainerLabel::Horizontal}};
    CHECK(render_svg(p, opts) == slurp(std::string(RECTPACK_TEST_DATA) + "/lowerbound3.svg"));
  }
}
