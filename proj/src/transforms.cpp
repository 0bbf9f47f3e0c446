#include "rectpack/transforms.hpp"
#include "transform_util.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace rectpack {

std::string orientation_name(Orientation o) { return o == Orientation::Horizontal ? "horizontal" : "vertical"; }

Orientation parse_orientation(const std::string& name) {
  if (name == "horizontal") return Orientation::Horizontal;
  if (name == "vertical") return Orientation::Vertical;
  throw InvalidArgument("unknown orientation '" + name + "'");
}

std::string container_class_name(ContainerClass c) {
  switch (c) {
    case ContainerClass::Thick: return "thick";
    case ContainerClass::Thin: return "thin";
    case ContainerClass::IntermediateC: return "intermediate";
  }
  return "?";
}

LossMode parse_mode(const std::string& name) {
  if (name == "cardinality") return LossMode::Cardinality;
  if (name == "weighted") return LossMode::Weighted;
  throw InvalidArgument("unknown mode '" + name + "'");
}

std::string free_strip_name(FreeStrip s) {
  switch (s) {
    case FreeStrip::Top: return "top";
    case FreeStrip::Right: return "right";
    case FreeStrip::Neither: return "neither";
  }
  return "?";
}

namespace detail {

PlacedItem transpose(const PlacedItem& p) { return {p.item, p.y, p.x, !p.rotated}; }

Container transpose(const Container& c) {
  ContainerLabel l = c.label;
  if (l == ContainerLabel::Horizontal) l = ContainerLabel::Vertical;
  else if (l == ContainerLabel::Vertical) l = ContainerLabel::Horizontal;
  return {c.y, c.x, c.h, c.w, l};
}

std::vector<PlacedItem> transpose(const std::vector<PlacedItem>& items) {
  std::vector<PlacedItem> out;
  for (const auto& it : items) out.push_back(transpose(it));
  return out;
}

BoxSplit transpose(const BoxSplit& b) {
  BoxSplit out;
  for (const auto& c : b.containers) out.containers.push_back(transpose(c));
  out.kept = transpose(b.kept);
  out.killed = b.killed;
  return out;
}

}  // namespace detail

namespace {

using namespace detail;


ShrinkResult shrink_horizontal(const Container& C, const std::vector<PlacedItem>& items, i64 m, LossMode mode) {
  ShrinkResult out;
  const i64 shift = (C.h + m - 1) / m;
  out.container = {C.x, C.y, C.w, std::max<i64>(C.h - shift, 0), C.label};
  if (C.label == ContainerLabel::Horizontal) {
    i64 stack = 0;
    for (const auto& it : items) stack += it.h();
    if (stack <= out.container.h) {
      // The stack already fits the shrunk container: restack without losses.
      std::vector<PlacedItem> sorted = items;
      std::stable_sort(sorted.begin(), sorted.end(), [](const PlacedItem& a, const PlacedItem& b) { return a.y < b.y; });
      i64 y = C.y;
      for (auto& it : sorted) {
        it.y = y;
        y += it.h();
      }
      out.kept = sorted;
      return out;
    }
  }
  const Strips s{C.y, C.h, m};
  std::vector<std::vector<PlacedItem>> strips(static_cast<std::size_t>(m));
  for (const auto& it : items) {
    if (s.crosses(it)) {
      out.killed.push_back(it.item.id);
    } else {
      strips[static_cast<std::size_t>(s.index(it))].push_back(it);
    }
  }
  const std::size_t drop = min_strip(strips, mode);
  for (const auto& it : strips[drop]) out.killed.push_back(it.item.id);
  for (std::size_t j = 0; j < strips.size(); ++j) {
    if (j == drop) continue;
    for (auto it : strips[j]) {
      if (j > drop) it.y -= shift;
      out.kept.push_back(it);
    }
  }
  return out;
}

// Splits a region into horizontal containers whose items are pairwise y-disjoint, using
// guillotine cuts and killing the cheapest item when no cut exists.
void decompose(const Rect& region, std::vector<PlacedItem> items, BoxSplit& out) {
  if (items.empty()) return;
  for (;;) {
    bool stacked = true;
    for (std::size_t a = 0; a < items.size() && stacked; ++a) {
      for (std::size_t b = a + 1; b < items.size(); ++b) {
        if (items[a].y < items[b].y + items[b].h() && items[b].y < items[a].y + items[a].h()) {
          stacked = false;
          break;
        }
      }
    }
    if (stacked) {
      out.containers.push_back({region.x, region.y, region.w, region.h, ContainerLabel::Horizontal});
      out.kept.insert(out.kept.end(), items.begin(), items.end());
      return;
    }
    for (bool vertical_cut : {true, false}) {
      std::sort(items.begin(), items.end(), [&](const PlacedItem& a, const PlacedItem& b) {
        return vertical_cut ? (a.x != b.x ? a.x < b.x : a.item.id < b.item.id)
                            : (a.y != b.y ? a.y < b.y : a.item.id < b.item.id);
      });
      std::vector<std::vector<PlacedItem>> groups(1);
      std::vector<i64> cuts;
      i64 reach = vertical_cut ? items[0].x + items[0].w() : items[0].y + items[0].h();
      groups[0].push_back(items[0]);
      for (std::size_t k = 1; k < items.size(); ++k) {
        const i64 start = vertical_cut ? items[k].x : items[k].y;
        const i64 end = vertical_cut ? items[k].x + items[k].w() : items[k].y + items[k].h();
        if (start >= reach) {
          cuts.push_back(start);
          groups.emplace_back();
        }
        groups.back().push_back(items[k]);
        reach = std::max(reach, end);
      }
      if (groups.size() < 2) continue;
      i64 from = vertical_cut ? region.x : region.y;
      for (std::size_t g = 0; g < groups.size(); ++g) {
        const i64 to = g + 1 < groups.size() ? cuts[g] : (vertical_cut ? region.right() : region.top());
        Rect sub = vertical_cut ? Rect{from, region.y, to - from, region.h} : Rect{region.x, from, region.w, to - from};
        decompose(sub, groups[g], out);
        from = to;
      }
      return;
    }
    auto worst = std::min_element(items.begin(), items.end(), [](const PlacedItem& a, const PlacedItem& b) {
      return a.item.p != b.item.p ? a.item.p < b.item.p : a.item.id < b.item.id;
    });
    out.killed.push_back(worst->item.id);
    items.erase(worst);
    if (items.empty()) return;
  }
}

}  // namespace

BoxSplit box_to_containers(const Container& box, const std::vector<PlacedItem>& items, const Rational& delta) {
  if (box.label == ContainerLabel::Vertical) {
    Container t = transpose(box);
    return transpose(box_to_containers(t, transpose(items), delta));
  }
  const i64 m = strips_for(delta, true);
  BoxSplit out;
  if (items.empty()) return out;
  if (items.size() == 1 && items[0].y == box.y && items[0].h() == box.h) {
    // A single layer spanning the whole box already is a container.
    out.containers.push_back({box.x, box.y, box.w, box.h, ContainerLabel::Horizontal});
    out.kept = items;
    return out;
  }
  const Strips s{box.y, box.h, m};
  std::vector<std::vector<PlacedItem>> strips(static_cast<std::size_t>(m));
  for (const auto& it : items) {
    if (s.crosses(it)) {
      out.killed.push_back(it.item.id);
    } else {
      strips[static_cast<std::size_t>(s.index(it))].push_back(it);
    }
  }
  const std::size_t drop = min_strip(strips, LossMode::Weighted);
  for (const auto& it : strips[drop]) out.killed.push_back(it.item.id);
  for (std::size_t j = 0; j < strips.size(); ++j) {
    if (j == drop || strips[j].empty()) continue;
    const i64 lo = s.lo(static_cast<i64>(j)), hi = s.hi(static_cast<i64>(j));
    decompose({box.x, lo, box.w, hi - lo}, strips[j], out);
  }
  return out;
}

std::vector<ContainerClass> classify_containers(const std::vector<Container>& containers, i64 N,
                                                const Rational& eps_c_small, const Rational& eps_c_large) {
  if (!(eps_c_small > 0 && eps_c_small < eps_c_large)) throw InvalidArgument("need 0 < eps_c_small < eps_c_large");
  std::vector<ContainerClass> out;
  for (const auto& C : containers) {
    if (C.label == ContainerLabel::Area) {
      out.push_back(ContainerClass::Thick);
      continue;
    }
    const Rational m(C.label == ContainerLabel::Horizontal ? C.h : C.w);
    if (m >= eps_c_large * N) out.push_back(ContainerClass::Thick);
    else if (m <= eps_c_small * N) out.push_back(ContainerClass::Thin);
    else out.push_back(ContainerClass::IntermediateC);
  }
  return out;
}

ContainerThresholds choose_container_thresholds(const std::vector<Container>& containers,
                                                const std::vector<i64>& profits, i64 N, const Rational& eps,
                                                const Rational& eps_large) {
  if (eps <= 0 || eps > Rational(1, 2)) throw InvalidArgument("eps must lie in (0, 1/2]");
  if (profits.size() != containers.size()) throw InvalidArgument("one profit per container expected");
  const i64 count = std::max<i64>(1, static_cast<i64>(containers.size()));
  const i64 k = ceil_of(Rational(3 * count) / eps);
  const i64 bands = ceil_inverse(eps);
  ContainerThresholds best;
  i64 best_profit = -1;
  Rational hi = eps_large;
  for (i64 j = 1; j <= bands; ++j) {
    const Rational lo = hi / k;
    i64 in_band = 0;
    for (std::size_t c = 0; c < containers.size(); ++c) {
      const auto& C = containers[c];
      if (C.label == ContainerLabel::Area) continue;
      const Rational m(C.label == ContainerLabel::Horizontal ? C.h : C.w);
      if (m > lo * N && m <= hi * N) in_band += profits[c];
    }
    if (best_profit < 0 || in_band < best_profit) {
      best_profit = in_band;
      best = {lo, hi, static_cast<int>(j)};
    }
    hi = lo;
  }
  return best;
}

ShrinkResult shrink_container(const Container& C, const std::vector<PlacedItem>& items, const Rational& delta,
                              LossMode mode) {
  const i64 m = strips_for(delta);
  if (C.label == ContainerLabel::Vertical) {
    ShrinkResult r = shrink_horizontal(transpose(C), transpose(items), m, mode);
    return {transpose(r.container), transpose(r.kept), r.killed};
  }
  ShrinkResult r = shrink_horizontal(C, items, m, mode);
  if (C.label == ContainerLabel::Area) {
    ShrinkResult r2 = shrink_horizontal(transpose(r.container), transpose(r.kept), m, mode);
    r.container = transpose(r2.container);
    r.container.label = ContainerLabel::Area;
    r.kept = transpose(r2.kept);
    r.killed.insert(r.killed.end(), r2.killed.begin(), r2.killed.end());
  }
  return r;
}

BoxSplit split_container(const Container& C, const std::vector<PlacedItem>& items, const Rational& delta) {
  if (delta <= 0 || delta >= 1) throw InvalidArgument("delta must lie in (0, 1)");
  const Rational inv = Rational(1) / delta;
  if (denominator(inv) != 1) throw InvalidArgument("1/delta must be an integer, got " + to_string(inv));
  if (C.label == ContainerLabel::Area) throw InvalidArgument("area containers cannot be split");
  if (C.label == ContainerLabel::Vertical) {
    return transpose(split_container(transpose(C), transpose(items), delta));
  }
  const i64 m = static_cast<i64>(numerator(inv));
  // Normalize: widest at the bottom, pushed left and down.
  std::vector<PlacedItem> sorted = items;
  std::stable_sort(sorted.begin(), sorted.end(), [](const PlacedItem& a, const PlacedItem& b) {
    return a.w() != b.w() ? a.w() > b.w() : a.item.id < b.item.id;
  });
  i64 y = C.y;
  for (auto& it : sorted) {
    if (it.w() > C.w) throw InvalidArgument("item '" + it.item.id + "' is wider than the container");
    it.x = C.x;
    it.y = y;
    y += it.h();
  }
  if (y > C.top()) throw InvalidArgument("items do not fit the container as a stack");

  BoxSplit out;
  const Strips s{C.y, C.h, m};
  std::vector<std::vector<PlacedItem>> strips(static_cast<std::size_t>(m));
  for (const auto& it : sorted) {
    if (s.crosses(it)) out.killed.push_back(it.item.id);
    else strips[static_cast<std::size_t>(s.index(it))].push_back(it);
  }
  i64 used = 0, filled = 0;
  for (const auto& strip : strips) {
    if (strip.empty()) continue;
    i64 w = 0, lo = strip.front().y, hi = strip.front().y;
    for (const auto& it : strip) {
      w = std::max(w, it.w());
      lo = std::min(lo, it.y);
      hi = std::max(hi, it.y + it.h());
      filled += it.w() * it.h();
    }
    out.containers.push_back({C.x, lo, w, hi - lo, ContainerLabel::Horizontal});
    out.kept.insert(out.kept.end(), strip.begin(), strip.end());
    used += w * (hi - lo);
  }
  if (Rational(used - filled) > delta * (C.w * C.h)) {
    throw Error("split_container: waste " + std::to_string(used - filled) + " exceeds delta * a(C)");
  }
  return out;
}

std::vector<ContainerContents> compact(std::vector<ContainerContents> contents) {
  auto shift = [](ContainerContents& cc, i64 dx, i64 dy) {
    cc.container.x += dx;
    cc.container.y += dy;
    for (auto& it : cc.items) {
      it.x += dx;
      it.y += dy;
    }
  };
  std::vector<std::size_t> order(contents.size());
  for (bool moved = true; moved;) {
    moved = false;
    for (bool down : {true, false}) {
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& ca = contents[a].container;
        const auto& cb = contents[b].container;
        if (down) return ca.y != cb.y ? ca.y < cb.y : (ca.x != cb.x ? ca.x < cb.x : a < b);
        return ca.x != cb.x ? ca.x < cb.x : (ca.y != cb.y ? ca.y < cb.y : a < b);
      });
      for (std::size_t i : order) {
        const Container& c = contents[i].container;
        i64 target = 0;
        for (std::size_t j = 0; j < contents.size(); ++j) {
          if (j == i) continue;
          const Container& o = contents[j].container;
          if (down) {
            if (o.x < c.right() && c.x < o.right() && o.top() <= c.y) target = std::max(target, o.top());
          } else {
            if (o.y < c.top() && c.y < o.top() && o.right() <= c.x) target = std::max(target, o.right());
          }
        }
        const i64 delta = (down ? c.y : c.x) - target;
        if (delta > 0) {
          shift(contents[i], down ? 0 : -delta, down ? -delta : 0);
          moved = true;
        }
      }
    }
  }
  return contents;
}

FreeStrip find_free_strip(const std::vector<Container>& containers, i64 N, const Rational& thickness) {
  bool top_blocked = false, right_blocked = false;
  const Rational edge = Rational(N) - thickness;
  for (const auto& c : containers) {
    if (c.w <= 0 || c.h <= 0) continue;
    if (Rational(c.top()) > edge) top_blocked = true;
    if (Rational(c.right()) > edge) right_blocked = true;
  }
  if (!top_blocked) return FreeStrip::Top;
  if (!right_blocked) return FreeStrip::Right;
  return FreeStrip::Neither;
}

std::optional<std::vector<Container>> extract_chain(const std::vector<Container>& containers, i64 N,
                                                    const Rational& thickness) {
  const Rational edge = Rational(N) - thickness;
  std::vector<std::size_t> vertical;
  for (std::size_t i = 0; i < containers.size(); ++i) {
    const Container& c = containers[i];
    if (c.label == ContainerLabel::Vertical && c.w > 0 && c.h > 0) vertical.push_back(i);
  }
  std::sort(vertical.begin(), vertical.end(), [&](std::size_t a, std::size_t b) {
    const Container &ca = containers[a], &cb = containers[b];
    return ca.x != cb.x ? ca.x < cb.x : a < b;
  });
  std::vector<std::size_t> starts;
  for (std::size_t i : vertical) {
    if (Rational(containers[i].top()) > edge) starts.push_back(i);
  }
  if (starts.empty()) return std::nullopt;
  std::stable_sort(starts.begin(), starts.end(),
                   [&](std::size_t a, std::size_t b) { return containers[a].top() > containers[b].top(); });

  // Depth-first over vertical supports in x order; dead ends are remembered.
  std::vector<bool> dead(containers.size(), false);
  std::vector<std::size_t> path;
  std::function<bool(std::size_t)> descend = [&](std::size_t i) {
    path.push_back(i);
    const Container& cur = containers[i];
    if (cur.y == 0) return true;
    for (std::size_t j : vertical) {
      const Container& c = containers[j];
      if (dead[j] || c.top() != cur.y || !(c.x < cur.right() && cur.x < c.right())) continue;
      if (descend(j)) return true;
    }
    dead[i] = true;
    path.pop_back();
    return false;
  };
  for (std::size_t s : starts) {
    if (!descend(s)) continue;
    std::vector<Container> chain;
    for (std::size_t i : path) chain.push_back(containers[i]);
    return chain;
  }
  const Container& c = containers[starts.front()];
  throw ChainNotFound("vertical container at (" + std::to_string(c.x) + "," + std::to_string(c.y) +
                      ") meets the top strip but no chain of vertical containers reaches the floor");
}

i64 random_strip_offset(i64 N, i64 thickness, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return std::uniform_int_distribution<i64>(0, N - thickness)(rng);
}

Packing delete_random_strip(const Packing& p, Orientation orientation, i64 thickness, std::uint64_t seed) {
  const i64 N = p.instance.N;
  if (thickness < 0 || thickness > N) throw InvalidArgument("strip thickness must lie in [0, N]");
  const i64 o = random_strip_offset(N, thickness, seed);
  Packing out{p.instance, {}};
  for (const auto& it : placed_items(p)) {
    const i64 lo = orientation == Orientation::Horizontal ? it.y : it.x;
    const i64 len = orientation == Orientation::Horizontal ? it.h() : it.w();
    if (thickness > 0 && lo < o + thickness && lo + len > o) continue;
    out.placements.push_back(it.placement());
  }
  return out;
}

}  // namespace rectpack
