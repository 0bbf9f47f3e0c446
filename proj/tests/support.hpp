#pragma once

// Independent reference implementations used only by tests.

#include "rectpack/gap.hpp"
#include "rectpack/model.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

namespace rectpack::testing {

// Exhaustive GAP: every item goes to one bin or stays out.
inline i64 brute_gap(const GapInstance& g) {
  std::vector<i64> left;
  for (const auto& b : g.bins) left.push_back(b.capacity);
  i64 best = 0;
  std::function<void(std::size_t, i64)> go = [&](std::size_t i, i64 profit) {
    if (i == g.items.size()) {
      best = std::max(best, profit);
      return;
    }
    go(i + 1, profit);
    for (std::size_t b = 0; b < g.bins.size(); ++b) {
      const auto& s = g.items[i].sizes[b];
      if (!s || *s > left[b]) continue;
      left[b] -= *s;
      go(i + 1, profit + g.items[i].profit);
      left[b] += *s;
    }
  };
  go(0, 0);
  return best;
}

// Exhaustive search over every integer position and orientation of every subset.
inline i64 grid_oracle(const Instance& inst) {
  const i64 N = inst.N;
  const std::size_t n = inst.items.size();
  std::vector<Rect> placed;
  i64 best = 0;
  std::function<void(std::size_t, i64)> go = [&](std::size_t i, i64 profit) {
    if (i == n) {
      best = std::max(best, profit);
      return;
    }
    go(i + 1, profit);
    const ItemSpec& it = inst.items[i];
    for (int r = 0; r < (inst.rotation_allowed && it.w != it.h ? 2 : 1); ++r) {
      const i64 w = r ? it.h : it.w, h = r ? it.w : it.h;
      for (i64 x = 0; x + w <= N; ++x) {
        for (i64 y = 0; y + h <= N; ++y) {
          const Rect cand{x, y, w, h};
          bool free = true;
          for (const auto& q : placed) free = free && !interiors_overlap(q, cand);
          if (!free) continue;
          placed.push_back(cand);
          go(i + 1, profit + it.p);
          placed.pop_back();
        }
      }
    }
  };
  go(0, 0);
  return best;
}

inline i64 uniform(std::mt19937_64& rng, i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng); }

inline std::vector<ItemSpec> random_items(std::mt19937_64& rng, std::size_t n, i64 max_w, i64 max_h,
                                          i64 max_p = 20) {
  std::vector<ItemSpec> items;
  for (std::size_t i = 0; i < n; ++i) {
    items.push_back({"i" + std::to_string(i), uniform(rng, 1, max_w), uniform(rng, 1, max_h), uniform(rng, 1, max_p)});
  }
  return items;
}

inline i64 profit_of_ids(const std::vector<ItemSpec>& items, const std::vector<Placement>& ps) {
  i64 total = 0;
  for (const auto& pl : ps) {
    for (const auto& it : items) {
      if (it.id == pl.item_id) total += it.p;
    }
  }
  return total;
}

}  // namespace rectpack::testing
