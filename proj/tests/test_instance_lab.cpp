#include "rectpack/instance_lab.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace rectpack;
using rectpack::testing::uniform;

namespace {

i64 sum(const std::vector<i64>& v, std::size_t from, std::size_t to) {
  return std::accumulate(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(to), i64{0});
}

bool equal_split(const EqualSplit& s) {
  const auto m = static_cast<std::size_t>(s.m);
  return s.m >= 1 && m < s.values.size() && sum(s.values, 0, m) == sum(s.values, m, s.values.size());
}

}  // namespace

TEST_SUITE("instance_lab") {
  TEST_CASE("k-Sum reduction examples") {
    PartSumInstance a = reduce_ksum_to_partsum({-2, 2}, 3);
    CHECK(a.A == std::vector<i64>{5, 9, 14});
    PartSumInstance b = reduce_ksum_to_partsum({1}, 3);
    CHECK(b.A == std::vector<i64>{5, 8});
    PartSumInstance c = reduce_ksum_to_partsum({-1, 2, -1}, 3);
    CHECK(c.A == std::vector<i64>{6, 9, 6, 14});
    CHECK_THROWS_AS(reduce_ksum_to_partsum({1}, 4), InvalidArgument);
  }

  TEST_CASE("hardness rectangles for A = {1}, k = 9") {
    Instance inst = gen_hardness_2dkr({{1}, 9}, true, true);
    CHECK(inst.N == 13122);
    const ItemSpec* R = inst.find("R0");
    const ItemSpec* Rp = inst.find("Rp0");
    REQUIRE(R);
    REQUIRE(Rp);
    CHECK((R->w == 1459 && R->h == 6560));
    CHECK((Rp->w == 1457 && Rp->h == 6562));
    CHECK(R->w + R->h == 8019);
    CHECK(18 * 8019 == 11 * inst.N);
  }

  TEST_CASE("dimension invariants on random hardness instances") {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 30; ++trial) {
      const i64 k = 9;
      PartSumInstance ps{{}, 9};
      for (int i = 0; i < uniform(rng, 1, 12); ++i) ps.A.push_back(uniform(rng, 1, 200));
      Instance inst = gen_hardness_2dkr(ps, true, true);
      const i64 N = inst.N, k4 = k * k * k * k;
      for (const auto& it : inst.items) {
        CHECK(2 * k * (it.w + it.h) == (k + 2) * N);
        CHECK((k4 * it.w > (k * k * k - 1) * N && k4 * it.w < (k * k * k + 1) * N));
        CHECK((2 * k4 * it.h > (k4 - 2) * N && 2 * k4 * it.h < (k4 + 2) * N));
        const __int128 area = static_cast<__int128>(it.w) * it.h, NN = static_cast<__int128>(N) * N;
        CHECK((2 * k4 * area > (k * k * k - 2) * NN && 2 * k4 * area < (k * k * k + 2) * NN));
      }
    }
  }

  TEST_CASE("yes packing for a one-versus-eight split") {
    PartSumInstance ps{{36, 1, 2, 3, 4, 5, 6, 7, 8}, 9};
    EqualSplit split{{36, 1, 2, 3, 4, 5, 6, 7, 8}, 1};
    Packing p = construct_yes_packing(ps, split);
    CHECK(p.placements.size() == 18);
    CHECK(validate_packing(p).valid());
  }

  TEST_CASE("yes packing with m = k - 1") {
    PartSumInstance ps{{1, 2, 3, 4, 5, 6, 7, 8, 36}, 9};
    EqualSplit split{{1, 2, 3, 4, 5, 6, 7, 8, 36}, 8};
    Packing p = construct_yes_packing(ps, split);
    CHECK(validate_packing(p).valid());
    CHECK(equal_split(extract_partition(p)));
  }

  TEST_CASE("unequal split is rejected") {
    PartSumInstance ps{{1, 2, 3, 4, 5, 6, 7, 8, 9}, 9};
    CHECK_THROWS_AS(construct_yes_packing(ps, {{1, 2, 3, 4, 5, 6, 7, 8, 9}, 1}), InvalidSplit);
  }

  TEST_CASE("round trip recovers an equal split of the same values") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      YesInstance y = gen_yes_partsum(9, 40, 3, seed);
      REQUIRE(equal_split(y.split));
      Packing p = construct_yes_packing(y.ps, y.split);
      REQUIRE(validate_packing(p).valid());
      EqualSplit back = extract_partition(p, 9);
      CHECK(equal_split(back));
      auto a = back.values, b = y.split.values;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
    }
  }

  TEST_CASE("dropping a rectangle makes the packing non-extractable") {
    YesInstance y = gen_yes_partsum(9, 40, 0, 5);
    Packing p = construct_yes_packing(y.ps, y.split);
    p.placements.pop_back();
    CHECK_THROWS_AS(extract_partition(p, 9), NotExtractable);
    CHECK_THROWS_AS(extract_partition(p), NotExtractable);
  }

  TEST_CASE("transposed yes packing gives the same split") {
    YesInstance y = gen_yes_partsum(9, 40, 2, 9);
    Packing p = construct_yes_packing(y.ps, y.split);
    Packing t = p;
    for (auto& pl : t.placements) {
      std::swap(pl.x, pl.y);
      pl.rotated = !pl.rotated;
    }
    REQUIRE(validate_packing(t).valid());
    EqualSplit a = extract_partition(p), b = extract_partition(t);
    auto va = a.values, vb = b.values;
    std::sort(va.begin(), va.end());
    std::sort(vb.begin(), vb.end());
    CHECK(va == vb);
    CHECK(equal_split(b));
  }

  TEST_CASE("lower-bound family dimensions") {
    Instance three = gen_lowerbound_family(3);
    CHECK(three.N == 64);
    CHECK(three.find("H1")->w == 64);
    CHECK(three.find("H1")->h == 1);
    CHECK(three.find("V1")->w == 16);
    CHECK(three.find("V1")->h == 3);
    CHECK(three.find("istar")->w == 64);
    CHECK(three.find("istar")->h == 60);
    CHECK(three.find("istar")->p == 1);
    CHECK(three.total_profit() == 3);

    Instance five = gen_lowerbound_family(5);
    CHECK(five.N == 512);
    CHECK((five.find("H2")->w == 448 && five.find("H2")->h == 2));
    CHECK((five.find("V2")->w == 128 && five.find("V2")->h == 5));
    CHECK((five.find("istar")->h == 504 && five.find("istar")->p == 2));
    CHECK_THROWS_AS(gen_lowerbound_family(4), InvalidArgument);
  }

  TEST_CASE("lower-bound packing") {
    Packing p = construct_lowerbound_packing(gen_lowerbound_family(3));
    for (const auto& pl : p.placements) {
      if (pl.item_id == "istar") CHECK((pl.x == 0 && pl.y == 4));
      if (pl.item_id == "H1") CHECK((pl.x == 0 && pl.y == 0));
      if (pl.item_id == "V1") CHECK((pl.x == 0 && pl.y == 1));
    }
    for (int n = 3; n <= 15; n += 2) {
      Instance inst = gen_lowerbound_family(n);
      Packing q = construct_lowerbound_packing(inst);
      CHECK(validate_packing(q).valid());
      CHECK(q.placements.size() == inst.items.size());
      CHECK(2 * q.profit() == 3 * (n - 1));
    }
  }

  TEST_CASE("symmetric pair counting") {
    Instance inst = gen_lowerbound_family(3);
    Packing both{inst, {{"H1", 0, 0, false}, {"V1", 0, 1, false}}};
    CHECK(count_symmetric_pairs(both, {{0, 0, 64, 1, ContainerLabel::Horizontal}, {0, 1, 64, 3, ContainerLabel::Horizontal}}) == 1);
    Packing one{inst, {{"H1", 0, 0, false}}};
    CHECK(count_symmetric_pairs(one, {}) == 0);
  }

  TEST_CASE("random generator") {
    CHECK(gen_random({Profile::Uniform, 0, 100, 1}).items.empty());
    RandomSpec skew{Profile::Skewed, 200, 100, 3};
    for (const auto& it : gen_random(skew).items) CHECK(std::min(it.w, it.h) <= 10);
    RandomSpec spec{Profile::Cardinality, 30, 50, 7};
    Instance a = gen_random(spec), b = gen_random(spec);
    REQUIRE(a.items.size() == b.items.size());
    for (std::size_t i = 0; i < a.items.size(); ++i) {
      CHECK(a.items[i].w == b.items[i].w);
      CHECK(a.items[i].h == b.items[i].h);
      CHECK(a.items[i].p == b.items[i].p);
      CHECK(a.items[i].p == 1);
    }
    CHECK_THROWS_AS(parse_profile("nope"), InvalidArgument);
  }
}
