#include "rectpack/transforms.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace rectpack;

namespace {

PlacedItem at(const std::string& id, i64 x, i64 y, i64 w, i64 h, i64 p = 1) { return {{id, w, h, p}, x, y, false}; }

Packing packing_of(i64 N, const std::vector<PlacedItem>& items, bool rot = false) {
  Instance inst{N, rot, {}};
  for (const auto& it : items) inst.items.push_back(it.item);
  return make_packing(inst, items);
}

void check_inside_band(const ContractionReport& r, i64 N) {
  CHECK(validate_packing(r.packing).valid());
  for (const auto& it : placed_items(r.packing)) {
    CHECK(Rational(it.y + it.h()) <= (1 - r.mu_effective) * N);
    CHECK(Rational(it.x + it.w()) <= Rational(N));
  }
}

}  // namespace

TEST_SUITE("resource_contraction") {
  TEST_CASE("thin containers are repacked without loss") {
    const i64 N = 1000;
    std::vector<PlacedItem> items{at("a", 0, 500, 400, 1, 3), at("b", 0, 700, 300, 1, 2)};
    std::vector<Container> cs{{0, 500, 400, 1, ContainerLabel::Horizontal}, {0, 700, 300, 1, ContainerLabel::Horizontal}};
    ContractionReport r = resource_contraction(packing_of(N, items), cs, {});
    CHECK(r.discarded_count == 0);
    CHECK(r.packing.placements.size() == 2);
    CHECK(r.strip == FreeStrip::Top);
    check_inside_band(r, N);
    CHECK(validate_container_packing(r.packing, r.containers, Rational(1, 4)).valid());
  }

  TEST_CASE("six thick containers") {
    const i64 N = 1000;
    std::vector<PlacedItem> items;
    std::vector<Container> cs;
    int id = 0;
    for (int col = 0; col < 2; ++col) {
      for (int row = 0; row < 3; ++row) {
        const Container C{col * 500, row * 333, 500, 333, ContainerLabel::Horizontal};
        cs.push_back(C);
        for (int k = 0; k < 4; ++k) items.push_back(at("i" + std::to_string(id++), C.x, C.y + 80 * k, 400, 80, 5));
      }
    }
    ContractionParams params;
    ContractionReport r = resource_contraction(packing_of(N, items), cs, params);
    check_inside_band(r, N);
    CHECK(r.strip != FreeStrip::Neither);
    // Per container: up to three line crossers plus one strip.
    CHECK(Rational(r.discarded_count) <= params.eps * static_cast<i64>(items.size()) + 6 * 4);
    CHECK(r.discarded_count + static_cast<i64>(r.packing.placements.size()) == static_cast<i64>(items.size()));
  }

  TEST_CASE("weighted mode repacks items removed by shrinking") {
    const i64 N = 1000;
    std::vector<PlacedItem> items;
    for (int k = 0; k < 8; ++k) items.push_back(at("s" + std::to_string(k), 0, 40 * k, 300, 40, 10 + k));
    items.push_back(at("thin", 600, 0, 300, 2, 1));
    std::vector<Container> cs{{0, 0, 400, 320, ContainerLabel::Horizontal}};
    ContractionParams params;
    params.mode = LossMode::Weighted;
    ContractionReport weighted = resource_contraction(packing_of(N, items), cs, params);
    params.mode = LossMode::Cardinality;
    ContractionReport card = resource_contraction(packing_of(N, items), cs, params);
    check_inside_band(weighted, N);
    check_inside_band(card, N);
    CHECK(weighted.losses.at("shrink").count <= card.losses.at("shrink").count);
    CHECK(weighted.discarded_profit <= card.discarded_profit);
    i64 total = 0;
    for (const auto& it : items) total += it.item.p;
    CHECK(Rational(weighted.discarded_profit) <= Rational(1, 4) * total + 17);
  }

  TEST_CASE("input must be a container packing") {
    std::vector<PlacedItem> items{at("a", 0, 0, 10, 10), at("b", 0, 5, 10, 10)};
    CHECK_THROWS_AS(resource_contraction(packing_of(100, items), {{0, 0, 20, 20, ContainerLabel::Horizontal}}, {}),
                    InvalidArgument);
  }
}
