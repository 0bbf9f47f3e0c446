#include "rectpack/container_search.hpp"
#include "rectpack/instance_lab.hpp"
#include "rectpack/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace rectpack;
using rectpack::testing::uniform;

namespace {

const Rational kEps(1, 4);

bool has_container(const std::vector<std::vector<Container>>& cands, const Container& C) {
  for (const auto& set : cands) {
    if (std::find(set.begin(), set.end(), C) != set.end()) return true;
  }
  return false;
}

Instance random_tiny(std::mt19937_64& rng, std::size_t max_n, i64 max_N, bool rot) {
  const i64 N = uniform(rng, 4, max_N);
  return Instance{N, rot, rectpack::testing::random_items(rng, uniform(rng, 1, max_n), N, N)};
}

}  // namespace

TEST_SUITE("container_search") {
  TEST_CASE("c = 1 offers the whole knapsack under every label") {
    Instance inst{10, false, {{"a", 3, 3, 1}}};
    auto cands = candidate_containers(inst, 1, 100000, 1);
    for (ContainerLabel l : {ContainerLabel::Horizontal, ContainerLabel::Vertical, ContainerLabel::Area}) {
      CHECK(has_container(cands, {0, 0, 10, 10, l}));
    }
  }

  TEST_CASE("subset-sum coordinates give side-by-side vertical containers") {
    Instance inst{10, false, {{"a", 3, 9, 1}, {"b", 7, 9, 1}}};
    auto cands = candidate_containers(inst, 2, 1000000, 16);
    bool found = false;
    for (const auto& set : cands) {
      if (set.size() != 2) continue;
      auto a = set[0], b = set[1];
      if (a.x > b.x) std::swap(a, b);
      found = found || (a.label == ContainerLabel::Vertical && b.label == ContainerLabel::Vertical && a.x == 0 &&
                        a.w == 3 && b.x == 3 && b.w == 7);
    }
    CHECK(found);
  }

  TEST_CASE("budget caps the candidate count") {
    Instance inst{10, false, {{"a", 3, 9, 1}, {"b", 7, 9, 1}}};
    CHECK(candidate_containers(inst, 2, 1).size() == 1);
    CHECK(candidate_containers(inst, 2, 0).empty());
  }

  TEST_CASE("candidates are disjoint and inside the knapsack") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 30; ++trial) {
      Instance inst = random_tiny(rng, 6, 30, trial % 2);
      for (const auto& set : candidate_containers(inst, 3, 500)) {
        CHECK(set.size() <= 3);
        for (std::size_t i = 0; i < set.size(); ++i) {
          CHECK(contains({0, 0, inst.N, inst.N}, set[i].rect()));
          for (std::size_t j = i + 1; j < set.size(); ++j) CHECK_FALSE(interiors_overlap(set[i].rect(), set[j].rect()));
        }
      }
    }
  }

  TEST_CASE("vertical container picks the best width subset") {
    Instance inst{10, false, {{"a", 3, 9, 2}, {"b", 7, 9, 3}, {"c", 5, 9, 4}}};
    std::vector<Container> cs{{0, 0, 10, 10, ContainerLabel::Vertical}};
    Packing p = pack_into_containers(inst, cs, kEps);
    CHECK(p.profit() == 6);
    CHECK(validate_container_packing(p, cs, kEps).valid());
  }

  TEST_CASE("no containers, no items") {
    Instance inst{10, false, {{"a", 3, 9, 2}}};
    CHECK(pack_into_containers(inst, {}, kEps).placements.empty());
  }

  TEST_CASE("area container fills up to its capacity of (1 - 2 eps) area") {
    Instance inst{100, false, {}};
    for (int i = 0; i < 99; ++i) inst.items.push_back({"s" + std::to_string(i), 9, 9, 1});
    std::vector<Container> cs{{0, 0, 100, 100, ContainerLabel::Area}};
    Packing p = pack_into_containers(inst, cs, Rational(1, 10));
    // 98 * 81 = 7938 <= 8000 < 99 * 81.
    CHECK(p.placements.size() == 98);
    CHECK(validate_container_packing(p, cs, Rational(1, 10)).valid());
  }

  TEST_CASE("full-knapsack item with one container") {
    Instance inst{10, false, {{"a", 10, 10, 7}, {"b", 2, 2, 1}}};
    CHECK(solve_container(inst, 1, kEps, 1000).packing.profit() >= 7);
  }

  TEST_CASE("lower-bound family n = 3 with two containers reaches the optimum") {
    Instance inst = gen_lowerbound_family(3);
    ContainerPacking r = solve_container(inst, 2, kEps, 2000);
    CHECK(r.packing.profit() == 3);
    CHECK(validate_container_packing(r.packing, r.containers, kEps).valid());
  }

  TEST_CASE("strip below the big item holds one symmetric pair in one container") {
    Instance full = gen_lowerbound_family(3);
    Instance rest{full.N, full.rotation_allowed, {}};
    for (const auto& it : full.items) {
      if (it.id != "istar") rest.items.push_back(it);
    }
    const std::vector<Rect> blocked{{0, 4, 64, 60}};
    i64 best = 0;
    for (const auto& cs : candidate_containers(rest, 1, 100000, 16, blocked)) {
      best = std::max(best, pack_into_containers(rest, cs, kEps).profit());
    }
    CHECK(best == 2);
  }

  TEST_CASE("outputs are valid container packings") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
      Instance inst = random_tiny(rng, 8, 24, trial % 2);
      const int c = static_cast<int>(uniform(rng, 1, 3));
      ContainerPacking r = solve_container(inst, c, kEps, 300);
      CHECK(r.containers.size() <= static_cast<std::size_t>(c));
      CHECK(validate_container_packing(r.packing, r.containers, kEps).valid());
    }
  }

  TEST_CASE("tiny instances match the exhaustive container oracle") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 25; ++trial) {
      Instance inst = random_tiny(rng, 4, 10, trial % 2);
      for (int c = 1; c <= 2; ++c) {
        OracleContainerResult ex = solve_exact_container(inst, c, kEps);
        REQUIRE(ex.certified);
        ContainerPacking r = solve_container(inst, c, kEps, 200000);
        CHECK(r.packing.profit() == ex.packing.profit());
      }
    }
  }
}

TEST_SUITE("lc_star") {
  TEST_CASE("item partition relative to the L") {
    Instance inst{100, false, {{"h", 60, 5, 1}, {"v", 30, 4, 1}, {"r", 60, 60, 1}}};
    ItemPartition part = partition_for_L(inst, 40, Rational(1, 10));
    CHECK(part.I_H == std::vector<std::string>{"h"});
    CHECK(part.I_V == std::vector<std::string>{"v"});
    CHECK(part.I_R == std::vector<std::string>{"r"});
  }

  TEST_CASE("partition covers every item exactly once") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 200; ++trial) {
      Instance inst{uniform(rng, 10, 200), trial % 2 == 0, {}};
      inst.items = rectpack::testing::random_items(rng, uniform(rng, 0, 15), inst.N, inst.N);
      ItemPartition part = partition_for_L(inst, uniform(rng, 0, inst.N / 2), Rational(1, uniform(rng, 2, 10)));
      std::vector<std::string> all = part.I_H;
      all.insert(all.end(), part.I_V.begin(), part.I_V.end());
      all.insert(all.end(), part.I_R.begin(), part.I_R.end());
      std::sort(all.begin(), all.end());
      CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
      CHECK(all.size() == inst.items.size());
    }
  }

  TEST_CASE("both arms filled by hand") {
    const Rational eps(1, 10);
    Instance inst{100, false, {{"h", 90, 10, 5}, {"v", 8, 35, 4}}};
    LShape L{100, 40, 10, 10};
    LcPacking r = pack_lc_fixed(inst, L, true, {}, eps);
    CHECK(r.packing.profit() == 9);
    CHECK(validate_lc_packing(r.packing, L, {}, eps).valid());
  }

  TEST_CASE("tall item fits the vertical arm only when guessed tall") {
    const Rational eps(1, 10);
    Instance inst{100, true, {{"v", 8, 35, 4}}};
    LShape L{100, 40, 10, 10};
    CHECK(pack_lc_fixed(inst, L, true, {}, eps).packing.profit() == 4);
    Packing wrong{inst, {{"v", 0, 0, true}}};
    CHECK_FALSE(validate_lc_packing(wrong, L, {}, eps).valid());
  }

  TEST_CASE("validator rejects a narrow item in the horizontal arm") {
    const Rational eps(1, 10);
    Instance inst{100, false, {{"h", 40, 5, 1}}};
    LShape L{100, 40, 10, 10};
    Packing p{inst, {{"h", 20, 0, false}}};
    ValidationReport rep = validate_lc_packing(p, L, {}, eps);
    REQUIRE_FALSE(rep.valid());
    bool cites = false;
    for (const auto& v : rep.violations) cites = cites || v.detail.find("N/2") != std::string::npos;
    CHECK(cites);
  }

  TEST_CASE("absent L reduces to container search") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 10; ++trial) {
      Instance inst = random_tiny(rng, 5, 12, trial % 2);
      LcPacking lc = solve_lc_star(inst, 1, kEps, 300);
      CHECK(lc.packing.profit() >= solve_container(inst, 1, kEps, 300).packing.profit());
      CHECK(validate_lc_packing(lc.packing, lc.lshape, lc.containers, kEps).valid());
    }
  }
}
