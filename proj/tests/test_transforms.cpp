#include "rectpack/transforms.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace rectpack;
using rectpack::testing::uniform;

namespace {

PlacedItem at(const std::string& id, i64 x, i64 y, i64 w, i64 h, i64 p = 1) { return {{id, w, h, p}, x, y, false}; }

std::set<std::string> ids_of(const std::vector<PlacedItem>& items) {
  std::set<std::string> out;
  for (const auto& it : items) out.insert(it.item.id);
  return out;
}

Packing packing_of(i64 N, const std::vector<PlacedItem>& items) {
  Instance inst{N, false, {}};
  for (const auto& it : items) inst.items.push_back(it.item);
  return make_packing(inst, items);
}

const Container& host_of(const std::vector<Container>& cs, const PlacedItem& it) {
  for (const auto& c : cs) {
    if (contains(c.rect(), it.rect())) return c;
  }
  FAIL("item " << it.item.id << " lies in no container");
  return cs.front();
}

}  // namespace

TEST_SUITE("structure_transforms") {
  TEST_CASE("box split: the middle line kills the crossing item") {
    const Container box{0, 0, 10, 8, ContainerLabel::Horizontal};
    std::vector<PlacedItem> items{at("a", 0, 0, 10, 3, 5), at("b", 0, 3, 10, 2, 9), at("c", 0, 5, 10, 3, 4)};
    BoxSplit r = box_to_containers(box, items, Rational(1, 2));
    CHECK(std::count(r.killed.begin(), r.killed.end(), "b") == 1);
    // Remaining strips hold a (profit 5) and c (profit 4); the cheaper one goes.
    CHECK(std::count(r.killed.begin(), r.killed.end(), "c") == 1);
    CHECK(ids_of(r.kept) == std::set<std::string>{"a"});
    CHECK(validate_container_packing(packing_of(10, r.kept), r.containers, Rational(1, 2)).valid());
  }

  TEST_CASE("box split keeps a single full-height item") {
    const Container box{0, 0, 10, 8, ContainerLabel::Horizontal};
    BoxSplit r = box_to_containers(box, {at("a", 0, 0, 10, 8)}, Rational(1, 2));
    CHECK(r.killed.empty());
    CHECK(r.kept.size() == 1);
    CHECK(r.containers.size() == 1);
  }

  TEST_CASE("box split of an empty box") {
    BoxSplit r = box_to_containers({0, 0, 10, 8, ContainerLabel::Horizontal}, {}, Rational(1, 2));
    CHECK(r.containers.empty());
    CHECK(r.kept.empty());
    CHECK(r.killed.empty());
  }

  TEST_CASE("box split outputs valid container packings") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 300; ++trial) {
      const Container box{0, 0, 40, 40, trial % 2 ? ContainerLabel::Vertical : ContainerLabel::Horizontal};
      // Random guillotine-free layout: items on a coarse grid without overlaps.
      std::vector<PlacedItem> items;
      std::vector<Rect> used;
      for (int k = 0; k < 12; ++k) {
        PlacedItem it = at("i" + std::to_string(k), uniform(rng, 0, 35), uniform(rng, 0, 35), uniform(rng, 1, 5),
                           uniform(rng, 1, 5), uniform(rng, 1, 9));
        bool free = true;
        for (const auto& r : used) free = free && !interiors_overlap(r, it.rect());
        if (free) {
          used.push_back(it.rect());
          items.push_back(it);
        }
      }
      BoxSplit r = box_to_containers(box, items, Rational(1, uniform(rng, 2, 5)));
      CHECK(r.kept.size() + r.killed.size() == items.size());
      CHECK(validate_container_packing(packing_of(40, r.kept), r.containers, Rational(1, 4)).valid());
      for (const auto& c : r.containers) CHECK(contains(box.rect(), c.rect()));
    }
  }

  TEST_CASE("container classes") {
    auto classes = classify_containers({{0, 0, 50, 30, ContainerLabel::Horizontal},
                                        {0, 0, 50, 1, ContainerLabel::Horizontal},
                                        {0, 0, 10, 90, ContainerLabel::Vertical},
                                        {0, 0, 5, 5, ContainerLabel::Area}},
                                       100, Rational(1, 50), Rational(1, 5));
    CHECK(classes[0] == ContainerClass::Thick);
    CHECK(classes[1] == ContainerClass::Thin);
    CHECK(classes[2] == ContainerClass::IntermediateC);
    CHECK(classes[3] == ContainerClass::Thick);
    CHECK_THROWS_AS(classify_containers({}, 100, Rational(1, 5), Rational(1, 50)), InvalidArgument);
  }

  TEST_CASE("container thresholds pick the cheapest band") {
    std::mt19937_64 rng(73);
    const i64 N = 1'000'000;
    for (int trial = 0; trial < 100; ++trial) {
      const Rational eps(1, uniform(rng, 2, 4)), eps_large(1, 4);
      std::vector<Container> cs;
      std::vector<i64> profits;
      for (int c = 0; c < 4; ++c) {
        const i64 t = uniform(rng, 1, N / 4);
        cs.push_back(c % 2 ? Container{0, 0, t, N, ContainerLabel::Vertical} : Container{0, 0, N, t, ContainerLabel::Horizontal});
        profits.push_back(uniform(rng, 0, 20));
      }
      ContainerThresholds th = choose_container_thresholds(cs, profits, N, eps, eps_large);
      // Reference: bands (hi/k, hi] from eps_large downwards, k = ceil(3|C|/eps).
      const i64 k = ceil_of(Rational(12) / eps);
      Rational hi = eps_large;
      i64 best = -1;
      int best_j = 0;
      i64 total = 0;
      for (i64 p : profits) total += p;
      for (int j = 1; j <= ceil_inverse(eps); ++j) {
        i64 in = 0;
        for (std::size_t c = 0; c < cs.size(); ++c) {
          const i64 m = cs[c].label == ContainerLabel::Horizontal ? cs[c].h : cs[c].w;
          if (Rational(m) > hi / k * N && Rational(m) <= hi * N) in += profits[c];
        }
        if (best < 0 || in < best) {
          best = in;
          best_j = j;
        }
        hi /= k;
      }
      CHECK(th.band == best_j);
      CHECK(Rational(best) <= eps * total);
      auto classes = classify_containers(cs, N, th.eps_c_small, th.eps_c_large);
      i64 lost = 0;
      for (std::size_t c = 0; c < cs.size(); ++c) {
        if (classes[c] == ContainerClass::IntermediateC) lost += profits[c];
      }
      CHECK(lost == best);
    }
  }

  TEST_CASE("shrink by a third") {
    const Container C{0, 0, 10, 9, ContainerLabel::Horizontal};
    std::vector<PlacedItem> items{at("a", 0, 0, 10, 2), at("b", 0, 2, 10, 2), at("c", 0, 4, 10, 2), at("d", 0, 6, 10, 3)};
    ShrinkResult r = shrink_container(C, items, Rational(1, 3));
    CHECK(r.container == Container{0, 0, 10, 6, ContainerLabel::Horizontal});
    CHECK(std::count(r.killed.begin(), r.killed.end(), "b") == 1);
    CHECK(r.kept.size() == 2);
    CHECK(validate_container_packing(packing_of(10, r.kept), {r.container}, Rational(1, 3)).valid());
  }

  TEST_CASE("shrink keeps an item of the shrunk height") {
    const Container C{0, 0, 10, 9, ContainerLabel::Horizontal};
    ShrinkResult r = shrink_container(C, {at("a", 0, 0, 10, 6)}, Rational(1, 3));
    REQUIRE(r.kept.size() == 1);
    CHECK(contains(r.container.rect(), r.kept[0].rect()));
  }

  TEST_CASE("shrink an empty container") {
    ShrinkResult r = shrink_container({0, 0, 10, 9, ContainerLabel::Vertical}, {}, Rational(1, 3));
    CHECK(r.container == Container{0, 0, 6, 9, ContainerLabel::Vertical});
    CHECK(r.kept.empty());
    CHECK(r.killed.empty());
  }

  TEST_CASE("shrink loses at most the crossers plus one strip") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 300; ++trial) {
      const i64 H = uniform(rng, 8, 60);
      const bool vertical = trial % 2 == 1;
      const Container C = vertical ? Container{0, 0, H, 20, ContainerLabel::Vertical}
                                   : Container{0, 0, 20, H, ContainerLabel::Horizontal};
      std::vector<PlacedItem> items;
      i64 y = 0;
      for (int k = 0; y < H; ++k) {
        const i64 h = std::min<i64>(uniform(rng, 1, 6), H - y);
        PlacedItem it = at("i" + std::to_string(k), 0, y, uniform(rng, 1, 20), h, uniform(rng, 1, 9));
        if (C.label == ContainerLabel::Vertical) {
          std::swap(it.x, it.y);
          std::swap(it.item.w, it.item.h);
        }
        items.push_back(it);
        y += h;
      }
      const i64 m = uniform(rng, 2, 5);
      const Rational delta(1, m);
      for (LossMode mode : {LossMode::Weighted, LossMode::Cardinality}) {
        ShrinkResult r = shrink_container(C, items, delta, mode);
        CHECK(r.kept.size() + r.killed.size() == items.size());
        CHECK(validate_container_packing(packing_of(std::max<i64>(H, 20), r.kept), {r.container}, delta).valid());
        i64 crossers = 0;
        for (const auto& it : items) {
          const i64 lo = C.label == ContainerLabel::Vertical ? it.x : it.y;
          const i64 len = C.label == ContainerLabel::Vertical ? it.w() : it.h();
          for (i64 j = 1; j < m; ++j) {
            if (m * lo < j * H && j * H < m * (lo + len)) {
              ++crossers;
              break;
            }
          }
        }
        // Items are at least one unit thick, so a strip of height ceil(H/m) holds at most that many.
        CHECK(static_cast<i64>(r.killed.size()) <= crossers + (H + m - 1) / m);
      }
    }
  }

  TEST_CASE("split into exact-fit containers") {
    const Container C{0, 0, 10, 8, ContainerLabel::Horizontal};
    BoxSplit r = split_container(C, {at("a", 0, 0, 10, 4), at("b", 0, 4, 6, 4)}, Rational(1, 2));
    REQUIRE(r.containers.size() == 2);
    CHECK(r.containers[0].w == 10);
    CHECK(r.containers[1].w == 6);
    CHECK(r.killed.empty());
  }

  TEST_CASE("split waste stays below delta times the area") {
    const Container C{0, 0, 10, 8, ContainerLabel::Horizontal};
    std::vector<PlacedItem> items;
    for (int w = 10; w >= 3; --w) items.push_back(at("w" + std::to_string(w), 0, 10 - w, w, 1));
    for (i64 m : {2, 4, 8}) {
      BoxSplit r = split_container(C, items, Rational(1, m));
      i64 used = 0, filled = 0;
      for (const auto& c : r.containers) used += c.w * c.h;
      for (const auto& it : r.kept) filled += it.rect().area();
      CHECK(Rational(used - filled) <= Rational(80, m));
      CHECK(validate_container_packing(packing_of(10, r.kept), r.containers, Rational(1, m)).valid());
    }
  }

  TEST_CASE("split of a single item") {
    BoxSplit r = split_container({0, 0, 10, 8, ContainerLabel::Horizontal}, {at("a", 0, 0, 7, 3)}, Rational(1, 2));
    REQUIRE(r.containers.size() == 1);
    CHECK(r.containers[0].rect() == Rect{0, 0, 7, 3});
  }

  TEST_CASE("split rejects bad arguments") {
    const Container C{0, 0, 10, 8, ContainerLabel::Horizontal};
    CHECK_THROWS_AS(split_container(C, {}, Rational(2, 5)), InvalidArgument);
    CHECK_THROWS_AS(split_container({0, 0, 10, 8, ContainerLabel::Area}, {}, Rational(1, 2)), InvalidArgument);
  }

  TEST_CASE("compaction drops a floating container into the corner") {
    auto out = compact({{{30, 40, 10, 10, ContainerLabel::Horizontal}, {at("a", 31, 41, 5, 5)}}});
    CHECK(out[0].container.rect() == Rect{0, 0, 10, 10});
    CHECK(out[0].items[0].x == 1);
    CHECK(out[0].items[0].y == 1);
  }

  TEST_CASE("stacked containers descend together") {
    auto out = compact({{{20, 30, 10, 10, ContainerLabel::Horizontal}, {}}, {{20, 40, 10, 5, ContainerLabel::Horizontal}, {}}});
    CHECK(out[0].container.y == 0);
    CHECK(out[1].container.y == 10);
    CHECK(out[0].container.x == out[1].container.x);
  }

  TEST_CASE("compaction is idempotent and monotone") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<ContainerContents> cs;
      for (int k = 0; k < 8; ++k) {
        Container c{uniform(rng, 0, 90), uniform(rng, 0, 90), uniform(rng, 1, 10), uniform(rng, 1, 10), ContainerLabel::Horizontal};
        bool free = true;
        for (const auto& o : cs) free = free && !interiors_overlap(o.container.rect(), c.rect());
        if (free) cs.push_back({c, {}});
      }
      auto once = compact(cs);
      auto twice = compact(once);
      for (std::size_t i = 0; i < cs.size(); ++i) {
        CHECK(once[i].container.x <= cs[i].container.x);
        CHECK(once[i].container.y <= cs[i].container.y);
        CHECK(twice[i].container == once[i].container);
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
          CHECK_FALSE(interiors_overlap(once[i].container.rect(), once[j].container.rect()));
        }
      }
    }
  }

  TEST_CASE("free strip detection") {
    CHECK(find_free_strip({}, 100, 5) == FreeStrip::Top);
    CHECK(find_free_strip({{0, 0, 100, 100, ContainerLabel::Horizontal}}, 100, 5) == FreeStrip::Neither);
    CHECK(find_free_strip({{0, 0, 50, 97, ContainerLabel::Vertical}}, 100, 5) == FreeStrip::Right);
  }

  TEST_CASE("chain fixture: vertical stack blocks the top, the right strip clears after pushing left") {
    std::vector<ContainerContents> cs{{{40, 0, 20, 40, ContainerLabel::Vertical}, {}},
                                      {{50, 40, 10, 57, ContainerLabel::Vertical}, {}},
                                      {{88, 0, 10, 20, ContainerLabel::Horizontal}, {}}};
    std::vector<Container> before;
    for (const auto& c : cs) before.push_back(c.container);
    CHECK(find_free_strip(before, 100, 5) == FreeStrip::Neither);
    std::vector<Container> after;
    for (const auto& c : compact(cs)) after.push_back(c.container);
    CHECK(find_free_strip(after, 100, 5) == FreeStrip::Right);
    auto chain = extract_chain(after, 100, 5);
    REQUIRE(chain.has_value());
    REQUIRE(chain->size() == 2);
    for (const auto& c : *chain) CHECK(c.label == ContainerLabel::Vertical);
    CHECK(chain->back().y == 0);
    for (std::size_t j = 1; j < chain->size(); ++j) CHECK((*chain)[j].top() == (*chain)[j - 1].y);
  }

  TEST_CASE("no chain when nothing meets the top strip") {
    CHECK_FALSE(extract_chain({{0, 0, 50, 50, ContainerLabel::Vertical}}, 100, 5).has_value());
    CHECK_FALSE(extract_chain({{0, 0, 100, 99, ContainerLabel::Horizontal}}, 100, 5).has_value());
    CHECK_THROWS_AS(extract_chain({{0, 10, 10, 90, ContainerLabel::Vertical}}, 100, 5), ChainNotFound);
  }

  TEST_CASE("a full-width strip empties the packing") {
    Packing p = packing_of(10, {at("a", 0, 0, 3, 3), at("b", 5, 5, 5, 5)});
    CHECK(delete_random_strip(p, Orientation::Horizontal, 10, 1).placements.empty());
    CHECK(delete_random_strip(p, Orientation::Vertical, 0, 1).placements.size() == 2);
    CHECK_THROWS_AS(delete_random_strip(p, Orientation::Vertical, 11, 1), InvalidArgument);
  }

  TEST_CASE("strip deletion removes exactly the items meeting the strip") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 500; ++trial) {
      Packing p = packing_of(50, {at("a", 0, uniform(rng, 0, 40), 5, 10), at("b", 10, uniform(rng, 0, 45), 5, 5)});
      const i64 t = uniform(rng, 0, 50);
      const std::uint64_t seed = static_cast<std::uint64_t>(trial);
      const i64 o = random_strip_offset(50, t, seed);
      Packing q = delete_random_strip(p, Orientation::Horizontal, t, seed);
      std::set<std::string> kept;
      for (const auto& pl : q.placements) kept.insert(pl.item_id);
      for (const auto& it : placed_items(p)) {
        const bool hit = t > 0 && it.y < o + t && o < it.y + it.h();
        CHECK(kept.count(it.item.id) == (hit ? 0u : 1u));
      }
    }
  }

  TEST_CASE("degenerate corridor lanes") {
    Corridor corr{CorridorKind::Open, {{{0, 0, 64, 16}, Orientation::Horizontal}}};
    std::vector<PlacedItem> items{at("thin", 0, 0, 30, 1), at("cross", 32, 1, 30, 2), at("upper", 0, 8, 40, 4)};
    CorridorProcessOutput out = process_corridor(corr, packing_of(64, items), Rational(1), Rational(1, 16));
    CHECK(out.thin_items == std::vector<std::string>{"thin"});
    CHECK(std::count(out.killed_items.begin(), out.killed_items.end(), "cross") == 1);
    CHECK(out.thin_area == 30);
    CHECK(out.thin_area_bound == Rational(2 * 64 * 16, 16));
  }

  TEST_CASE("empty corridor") {
    Corridor corr{CorridorKind::Open, {{{0, 0, 64, 16}, Orientation::Horizontal}}};
    CorridorProcessOutput out = process_corridor(corr, packing_of(64, {}), Rational(1, 2), Rational(1, 16));
    CHECK(out.thin_items.empty());
    CHECK(out.killed_items.empty());
    CHECK(out.boxed.empty());
  }

  TEST_CASE("one-bend corridor by hand") {
    Corridor corr{CorridorKind::Open,
                  {{{0, 0, 100, 20}, Orientation::Horizontal}, {{80, 0, 20, 100}, Orientation::Vertical}}};
    std::vector<PlacedItem> items{at("h1", 0, 0, 70, 2, 3), at("h2", 0, 5, 60, 4, 5), at("h3", 5, 12, 70, 6, 2),
                                  at("v1", 80, 30, 3, 50, 4), at("v2", 88, 25, 8, 60, 6)};
    const Rational eps(1, 2), eps_thin(1, 8);
    CorridorProcessOutput out = process_corridor(corr, packing_of(100, items), eps, eps_thin);
    std::multiset<std::string> seen(out.thin_items.begin(), out.thin_items.end());
    seen.insert(out.killed_items.begin(), out.killed_items.end());
    for (const auto& it : out.boxed) seen.insert(it.item.id);
    CHECK(seen == std::multiset<std::string>{"h1", "h2", "h3", "v1", "v2"});
    CHECK(out.boxes.size() <= out.box_bound);
    CHECK(Rational(out.thin_area) <= out.thin_area_bound);
    for (const auto& it : out.boxed) {
      int hosts = 0;
      for (const auto& b : out.boxes) hosts += contains(b.rect(), it.rect());
      CHECK(hosts == 1);
      (void)host_of(out.containers, it);
    }
    CHECK(validate_container_packing(packing_of(100, out.boxed), out.containers, eps).valid());
  }

  TEST_CASE("corridor input errors") {
    Corridor bad{CorridorKind::Open, {{{0, 0, 64, 16}, Orientation::Horizontal}}};
    CHECK_THROWS_AS(process_corridor(bad, packing_of(64, {at("tall", 0, 0, 2, 10)}), Rational(1, 2), Rational(1, 16)),
                    MixedOrientation);
    CHECK_THROWS_AS(process_corridor(bad, packing_of(64, {at("out", 0, 20, 10, 2)}), Rational(1, 2), Rational(1, 16)),
                    MalformedCorridor);
    Corridor same{CorridorKind::Open,
                  {{{0, 0, 64, 16}, Orientation::Horizontal}, {{0, 16, 64, 16}, Orientation::Horizontal}}};
    CHECK_THROWS_AS(process_corridor(same, packing_of(64, {}), Rational(1, 2), Rational(1, 16)), MalformedCorridor);
  }

  TEST_CASE("generated fixtures are valid and deterministic") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      CorridorFixture f = gen_corridor_fixture(seed, 1000, 2, seed % 4 == 0);
      CHECK(validate_packing(f.packing).valid());
      CorridorFixture g = gen_corridor_fixture(seed, 1000, 2, seed % 4 == 0);
      CHECK(f.packing.placements.size() == g.packing.placements.size());
    }
  }
}
