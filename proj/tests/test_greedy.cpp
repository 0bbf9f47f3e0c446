#include "rectpack/greedy.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace rectpack;
using rectpack::testing::uniform;

namespace {

std::vector<OrientedItem> flat(const std::vector<ItemSpec>& items) {
  std::vector<OrientedItem> out;
  for (const auto& it : items) out.push_back({it, false});
  return out;
}

const Container kTen{0, 0, 10, 10, ContainerLabel::Horizontal};

bool valid_in(const Container& region, const PackResult& r, const std::vector<ItemSpec>& items) {
  return validate_in_region(region.rect(), to_placed(r, items)).valid();
}

}  // namespace

TEST_SUITE("greedy_packers") {
  TEST_CASE("stack_horizontal examples") {
    std::vector<ItemSpec> items{{"a", 8, 2, 1}, {"b", 10, 3, 1}, {"c", 6, 4, 1}};
    PackResult r = stack_horizontal(kTen, flat(items));
    REQUIRE(r.placements.size() == 3);
    CHECK(r.placements[0].y == 0);
    CHECK(r.placements[1].y == 2);
    CHECK(r.placements[2].y == 5);
    CHECK(r.leftovers.empty());

    r = stack_horizontal(kTen, flat({{"a", 8, 6, 1}, {"b", 8, 6, 1}}));
    CHECK(r.placements.size() == 1);
    CHECK(r.leftovers == std::vector<std::string>{"b"});

    r = stack_horizontal(kTen, flat({{"a", 12, 1, 1}}));
    CHECK(r.leftovers == std::vector<std::string>{"a"});
  }

  TEST_CASE("stack_vertical examples") {
    std::vector<ItemSpec> items{{"a", 2, 9, 1}, {"b", 3, 10, 1}, {"c", 5, 7, 1}};
    PackResult r = stack_vertical(kTen, flat(items));
    REQUIRE(r.placements.size() == 3);
    CHECK(r.placements[0].x == 0);
    CHECK(r.placements[1].x == 2);
    CHECK(r.placements[2].x == 5);
    CHECK(stack_vertical(kTen, flat({{"a", 6, 9, 1}, {"b", 6, 9, 1}})).leftovers == std::vector<std::string>{"b"});
    CHECK(stack_vertical(kTen, flat({{"a", 1, 12, 1}})).leftovers == std::vector<std::string>{"a"});
  }

  TEST_CASE("nfdh shelf trace") {
    std::vector<ItemSpec> items{{"a", 4, 5, 1}, {"b", 3, 4, 1}, {"c", 6, 2, 1}};
    PackResult r = nfdh(kTen, items);
    REQUIRE(r.placements.size() == 3);
    CHECK(r.placements[0].item_id == "a");
    CHECK((r.placements[0].x == 0 && r.placements[0].y == 0));
    CHECK(r.placements[1].item_id == "b");
    CHECK((r.placements[1].x == 4 && r.placements[1].y == 0));
    CHECK(r.placements[2].item_id == "c");
    CHECK((r.placements[2].x == 0 && r.placements[2].y == 5));
    CHECK(nfdh(kTen, {}).placements.empty());
    CHECK(nfdh(kTen, {}).leftovers.empty());
  }

  TEST_CASE("nfdh area guarantee on 120 small squares") {
    std::vector<ItemSpec> items;
    for (int i = 0; i < 120; ++i) items.push_back({"s" + std::to_string(i), 9, 9, 1});
    const Container region{0, 0, 100, 100, ContainerLabel::Area};
    PackResult r = nfdh(region, items);
    CHECK(packed_area(r, items) >= 8000);
    CHECK(r.placements.size() >= 99);
    CHECK(valid_in(region, r, items));
  }

  TEST_CASE("steinberg examples") {
    const Container region{0, 0, 10, 8, ContainerLabel::Area};
    std::vector<ItemSpec> ok{{"a", 4, 3, 1}, {"b", 4, 3, 1}, {"c", 3, 2, 1}};
    CHECK_FALSE(steinberg_violation(10, 8, ok));
    PackResult r = steinberg(region, ok);
    CHECK(r.leftovers.empty());
    CHECK(r.placements.size() == 3);
    CHECK(valid_in(region, r, ok));

    CHECK_THROWS_AS(steinberg(region, {{"a", 5, 4, 1}, {"b", 5, 4, 1}, {"c", 4, 3, 1}}), PreconditionFailed);
    CHECK_THROWS_AS(steinberg(kTen, {{"a", 10, 10, 1}}), PreconditionFailed);
  }

  TEST_CASE("thin strip lays items flat and packs validly") {
    const Container strip{0, 0, 40, 4, ContainerLabel::Horizontal};
    std::vector<ItemSpec> items{{"a", 2, 10, 1}, {"b", 1, 6, 1}, {"c", 5, 1, 1}};
    PackResult r = pack_thin_strip(strip, items, true);
    CHECK(r.leftovers.empty());
    for (const auto& pl : r.placements) {
      if (pl.item_id != "c") CHECK(pl.rotated);
    }
    CHECK(valid_in(strip, r, items));
  }

  TEST_CASE("every packer stays in its region") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 2000; ++trial) {
      const Container region{uniform(rng, 0, 5), uniform(rng, 0, 5), uniform(rng, 1, 30), uniform(rng, 1, 30),
                             ContainerLabel::Area};
      auto items = rectpack::testing::random_items(rng, uniform(rng, 0, 12), 20, 20);
      CHECK(valid_in(region, nfdh(region, items), items));
      CHECK(valid_in(region, stack_horizontal(region, flat(items)), items));
      CHECK(valid_in(region, stack_vertical(region, flat(items)), items));
      CHECK(valid_in(region, pack_thin_strip(region, items, false), items));
      if (!steinberg_violation(region.w, region.h, items)) {
        PackResult r = steinberg(region, items);
        CHECK(r.leftovers.empty());
        CHECK(valid_in(region, r, items));
      }
    }
  }

  TEST_CASE("packers are deterministic") {
    std::mt19937_64 rng(19);
    auto items = rectpack::testing::random_items(rng, 15, 10, 10);
    const Container region{0, 0, 30, 30, ContainerLabel::Area};
    auto a = nfdh(region, items), b = nfdh(region, items);
    REQUIRE(a.placements.size() == b.placements.size());
    for (std::size_t i = 0; i < a.placements.size(); ++i) {
      CHECK(a.placements[i].item_id == b.placements[i].item_id);
      CHECK(a.placements[i].x == b.placements[i].x);
      CHECK(a.placements[i].y == b.placements[i].y);
    }
  }
}
