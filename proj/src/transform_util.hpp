#pragma once

#include "rectpack/transforms.hpp"

#include <algorithm>

namespace rectpack::detail {

// Mirror across the diagonal y = x.
PlacedItem transpose(const PlacedItem& p);
Container transpose(const Container& c);
std::vector<PlacedItem> transpose(const std::vector<PlacedItem>& items);
BoxSplit transpose(const BoxSplit& b);

inline i64 profit_of(const std::vector<PlacedItem>& items) {
  i64 p = 0;
  for (const auto& it : items) p += it.item.p;
  return p;
}

// Horizontal cut lines at y0 + j*h/m, j = 1..m-1, compared in integers scaled by m.
struct Strips {
  i64 y0, h, m;

  bool crosses(const PlacedItem& it) const {
    for (i64 j = 1; j < m; ++j) {
      const __int128 line = static_cast<__int128>(m) * y0 + static_cast<__int128>(j) * h;
      if (static_cast<__int128>(m) * it.y < line && line < static_cast<__int128>(m) * (it.y + it.h())) return true;
    }
    return false;
  }

  // Index of the strip holding a non-crossing item.
  i64 index(const PlacedItem& it) const {
    if (h <= 0) return 0;
    const __int128 rel = static_cast<__int128>(m) * (it.y - y0);
    i64 j = static_cast<i64>(rel / h);
    return std::clamp<i64>(j, 0, m - 1);
  }

  i64 lo(i64 j) const { return y0 + static_cast<i64>((static_cast<__int128>(j) * h + m - 1) / m); }
  i64 hi(i64 j) const { return y0 + static_cast<i64>((static_cast<__int128>(j + 1) * h) / m); }
};

inline i64 strips_for(const Rational& delta, bool allow_one = false) {
  if (delta <= 0 || delta > 1 || (delta == 1 && !allow_one)) {
    throw InvalidArgument("delta must lie in (0, 1), got " + to_string(delta));
  }
  return std::max<i64>(1, floor_of(Rational(1) / delta));
}

inline std::size_t min_strip(const std::vector<std::vector<PlacedItem>>& strips, LossMode mode) {
  std::size_t best = 0;
  i64 best_v = -1;
  for (std::size_t j = 0; j < strips.size(); ++j) {
    const i64 v = mode == LossMode::Cardinality ? static_cast<i64>(strips[j].size()) : profit_of(strips[j]);
    if (best_v < 0 || v < best_v) {
      best_v = v;
      best = j;
    }
  }
  return best;
}

}  // namespace rectpack::detail
