#include "rectpack/container_search.hpp"

#include "rectpack/parallel.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <tuple>

namespace rectpack {

std::vector<i64> candidate_extents(const Instance& inst, i64 grid) {
  const i64 N = inst.N;
  std::set<i64> vals{N};
  std::vector<i64> ext;
  for (const auto& it : inst.items) {
    ext.push_back(it.w);
    ext.push_back(it.h);
  }
  for (std::size_t a = 0; a < ext.size(); ++a) {
    vals.insert(ext[a]);
    for (std::size_t b = a + 1; b < ext.size(); ++b) {
      if (a / 2 == b / 2) continue;  // both extents of one item
      vals.insert(ext[a] + ext[b]);
    }
  }
  if (grid > 0) {
    for (i64 q = 1; q <= grid; ++q) vals.insert((N * q + grid - 1) / grid);
  }
  std::vector<i64> out;
  for (i64 v : vals) {
    if (v >= 1 && v <= N) out.push_back(v);
  }
  return out;
}

namespace {

bool overlaps_any(const Rect& r, const std::vector<Rect>& occupied) {
  for (const auto& o : occupied) {
    if (interiors_overlap(r, o)) return true;
  }
  return false;
}

std::vector<std::pair<i64, i64>> corner_points(const std::vector<Rect>& occupied, i64 N) {
  std::set<i64> xs{0}, ys{0};
  for (const auto& r : occupied) {
    xs.insert(r.right());
    ys.insert(r.top());
  }
  std::vector<std::pair<i64, i64>> pts;
  for (i64 y : ys) {
    for (i64 x : xs) {
      if (x >= N || y >= N) continue;
      if (overlaps_any({x, y, 1, 1}, occupied)) continue;
      pts.emplace_back(x, y);
    }
  }
  return pts;
}

// Largest free rectangle anchored at (x, y), growing one axis first.
Rect maximal_free(i64 x, i64 y, const std::vector<Rect>& occupied, i64 N, bool width_first) {
  i64 W = N - x, H = N - y;
  if (width_first) {
    for (const auto& r : occupied) {
      if (r.y < y + 1 && r.top() > y && r.right() > x) W = std::min(W, std::max<i64>(r.x - x, 0));
    }
    for (const auto& r : occupied) {
      if (r.x < x + W && r.right() > x && r.top() > y) H = std::min(H, std::max<i64>(r.y - y, 0));
    }
  } else {
    for (const auto& r : occupied) {
      if (r.x < x + 1 && r.right() > x && r.top() > y) H = std::min(H, std::max<i64>(r.y - y, 0));
    }
    for (const auto& r : occupied) {
      if (r.y < y + H && r.top() > y && r.right() > x) W = std::min(W, std::max<i64>(r.x - x, 0));
    }
  }
  return {x, y, W, H};
}

bool holds_something(const Container& C, const Instance& inst) {
  for (const auto& it : inst.items) {
    for (bool rot : {false, true}) {
      if (rot && !inst.rotation_allowed) continue;
      auto [w, h] = effective_dims(it, rot);
      if (C.label == ContainerLabel::Area) {
        // Any item small enough for an area container; eps is not known here so use the weakest test.
        if (w < C.w && h < C.h) return true;
      } else if (w <= C.w && h <= C.h) {
        return true;
      }
    }
  }
  return false;
}

// Crude value estimate used only to order candidates.
i64 fit_score(const Container& C, const Instance& inst) {
  i64 s = 0;
  for (const auto& it : inst.items) {
    bool fits = it.w <= C.w && it.h <= C.h;
    if (inst.rotation_allowed) fits = fits || (it.h <= C.w && it.w <= C.h);
    if (fits) s += it.p;
  }
  return s;
}

using Key = std::vector<std::array<i64, 5>>;

Key key_of(const std::vector<Container>& cs) {
  Key k;
  for (const auto& c : cs) k.push_back({c.x, c.y, c.w, c.h, static_cast<i64>(c.label)});
  std::sort(k.begin(), k.end());
  return k;
}

const ContainerLabel kLabels[] = {ContainerLabel::Horizontal, ContainerLabel::Vertical, ContainerLabel::Area};

}  // namespace

std::vector<std::vector<Container>> candidate_containers(const Instance& inst, int c, std::size_t budget, i64 grid,
                                                         const std::vector<Rect>& obstacles) {
  std::vector<std::vector<Container>> out;
  if (c < 1 || budget == 0) return out;
  const i64 N = inst.N;
  std::set<Key> seen;
  auto emit = [&](std::vector<std::vector<Container>>& level, std::vector<Container> cs) {
    if (seen.insert(key_of(cs)).second) level.push_back(std::move(cs));
  };

  // Level 1: maximal containers first, then sized ones ordered by a fit score.
  std::vector<std::vector<Container>> singles;
  const auto anchors = corner_points(obstacles, N);
  for (auto [x, y] : anchors) {
    for (bool wf : {true, false}) {
      Rect r = maximal_free(x, y, obstacles, N, wf);
      if (r.w < 1 || r.h < 1) continue;
      for (auto label : kLabels) {
        Container C{r.x, r.y, r.w, r.h, label};
        if (holds_something(C, inst)) emit(singles, {C});
      }
    }
  }
  const std::size_t maximal_count = singles.size();
  const auto ext = candidate_extents(inst, grid);
  struct Sized {
    Container C;
    i64 score;
  };
  std::vector<Sized> sized;
  for (auto [x, y] : anchors) {
    for (i64 w : ext) {
      if (x + w > N) break;
      for (i64 h : ext) {
        if (y + h > N) break;
        if (overlaps_any({x, y, w, h}, obstacles)) continue;
        for (auto label : kLabels) {
          Container C{x, y, w, h, label};
          if (!holds_something(C, inst)) continue;
          sized.push_back({C, fit_score(C, inst)});
        }
      }
    }
  }
  std::stable_sort(sized.begin(), sized.end(), [](const Sized& a, const Sized& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.C.w * a.C.h < b.C.w * b.C.h;
  });
  for (const auto& s : sized) emit(singles, {s.C});

  std::size_t remaining = budget;
  auto take = [&](const std::vector<std::vector<Container>>& level, int levels_left) {
    std::size_t quota = levels_left <= 1 ? remaining : std::max<std::size_t>(1, remaining / static_cast<std::size_t>(levels_left));
    std::size_t n = std::min({quota, level.size(), remaining});
    for (std::size_t i = 0; i < n; ++i) out.push_back(level[i]);
    remaining -= n;
  };
  take(singles, c);

  // Level k: extend each (k-1)-tuple by a maximal container at one of its corner points.
  std::vector<std::vector<Container>> prev = singles;
  for (int level = 2; level <= c && remaining > 0; ++level) {
    std::vector<std::vector<Container>> next;
    const std::size_t cap = remaining * 4 + 16;
    for (std::size_t t = 0; t < prev.size() && next.size() < cap; ++t) {
      if (level == 2 && t < maximal_count) continue;  // maximal singles leave no useful room
      const auto& base = prev[t];
      std::vector<Rect> occupied = obstacles;
      for (const auto& C : base) occupied.push_back(C.rect());
      for (auto [x, y] : corner_points(occupied, N)) {
        for (bool wf : {true, false}) {
          Rect r = maximal_free(x, y, occupied, N, wf);
          if (r.w < 1 || r.h < 1) continue;
          for (auto label : kLabels) {
            Container C{r.x, r.y, r.w, r.h, label};
            if (!holds_something(C, inst)) continue;
            auto cs = base;
            cs.push_back(C);
            emit(next, std::move(cs));
          }
        }
      }
    }
    take(next, c - level + 1);
    prev = std::move(next);
  }
  return out;
}

GapSolution solve_gap_adaptive(const GapInstance& gap, const SearchOptions& opts, i64* used_coarsen) {
  GapOptions o = opts.gap;
  for (;;) {
    try {
      GapSolution s = solve_gap(gap, o);
      if (used_coarsen) *used_coarsen = o.coarsen;
      return s;
    } catch (const StateBudgetExceeded&) {
      if (!opts.auto_coarsen || o.coarsen > (i64{1} << 50)) throw;
      o.coarsen *= 2;
    }
  }
}

ContainerFill realize_assignment(const Instance& inst, const std::vector<Container>& containers,
                                 const ContainerBins& bins, const std::map<std::string, std::size_t>& assignment,
                                 const Rational& eps) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < inst.items.size(); ++i) index[inst.items[i].id] = i;
  std::vector<std::vector<std::size_t>> members(containers.size());
  for (const auto& [id, c] : assignment) members.at(c).push_back(index.at(id));

  ContainerFill fill;
  for (std::size_t c = 0; c < containers.size(); ++c) {
    const Container& C = containers[c];
    auto& m = members[c];
    std::sort(m.begin(), m.end(), [&](std::size_t a, std::size_t b) { return inst.items[a].id < inst.items[b].id; });
    PackResult r;
    std::map<std::string, std::size_t> local;
    for (std::size_t i : m) local[inst.items[i].id] = i;
    if (C.label != ContainerLabel::Area) {
      std::vector<OrientedItem> oriented;
      for (std::size_t i : m) oriented.emplace_back(inst.items[i], bins.rotated[i][c]);
      r = C.label == ContainerLabel::Horizontal ? stack_horizontal(C, oriented) : stack_vertical(C, oriented);
    } else {
      std::vector<ItemSpec> turned;
      for (std::size_t i : m) {
        ItemSpec s = inst.items[i];
        if (bins.rotated[i][c]) std::swap(s.w, s.h);
        turned.push_back(s);
      }
      r = nfdh(C, turned);
      // Group discard: cut the members into groups of area >= 2*eps*a(C), drop the cheapest, retry.
      const Rational group_area = 2 * eps * (C.w * C.h);
      std::vector<std::string> discarded;
      while (!r.leftovers.empty() && !turned.empty()) {
        std::vector<std::vector<std::size_t>> groups(1);
        Rational acc = 0;
        for (std::size_t k = 0; k < turned.size(); ++k) {
          groups.back().push_back(k);
          acc += turned[k].w * turned[k].h;
          if (acc >= group_area && k + 1 < turned.size()) {
            groups.emplace_back();
            acc = 0;
          }
        }
        std::size_t worst = 0;
        i64 worst_p = -1;
        for (std::size_t g = 0; g < groups.size(); ++g) {
          i64 p = 0;
          for (std::size_t k : groups[g]) p += turned[k].p;
          if (worst_p < 0 || p < worst_p) {
            worst_p = p;
            worst = g;
          }
        }
        std::vector<ItemSpec> kept;
        std::set<std::size_t> drop(groups[worst].begin(), groups[worst].end());
        for (std::size_t k = 0; k < turned.size(); ++k) {
          if (drop.count(k)) discarded.push_back(turned[k].id); else kept.push_back(turned[k]);
        }
        turned = std::move(kept);
        r = nfdh(C, turned);
      }
      for (auto& pl : r.placements) pl.rotated = bins.rotated[local.at(pl.item_id)][c];
      r.leftovers.insert(r.leftovers.end(), discarded.begin(), discarded.end());
    }
    for (const auto& pl : r.placements) fill.placed.push_back({inst.items[local.at(pl.item_id)], pl.x, pl.y, pl.rotated});
    fill.dropped.insert(fill.dropped.end(), r.leftovers.begin(), r.leftovers.end());
  }
  return fill;
}

namespace {

void check_layout(const Instance& inst, const std::vector<Container>& containers) {
  for (std::size_t a = 0; a < containers.size(); ++a) {
    const Rect ra = containers[a].rect();
    if (ra.w < 1 || ra.h < 1 || !contains({0, 0, inst.N, inst.N}, ra)) {
      throw InvalidArgument("container outside the knapsack or degenerate");
    }
    for (std::size_t b = a + 1; b < containers.size(); ++b) {
      if (interiors_overlap(ra, containers[b].rect())) throw InvalidArgument("containers overlap");
    }
  }
}

ContainerPacking realize_solution(const Instance& inst, const std::vector<Container>& containers,
                                  const ContainerBins& bins, const GapSolution& sol, const Rational& eps) {
  ContainerPacking out;
  out.containers = containers;
  std::map<std::string, std::size_t> bin_index;
  for (std::size_t c = 0; c < bins.gap.bins.size(); ++c) bin_index[bins.gap.bins[c].id] = c;
  std::map<std::string, std::size_t> assignment;
  for (const auto& [item, bin] : sol.assignment) assignment[item] = bin_index.at(bin);
  ContainerFill fill = realize_assignment(inst, containers, bins, assignment, eps);
  out.packing = make_packing(inst, fill.placed);
  out.dropped = std::move(fill.dropped);
  return out;
}

// GAP input depends on container shapes only, not positions.
using Shape = std::vector<std::tuple<i64, i64, ContainerLabel>>;

Shape shape_of(const std::vector<Container>& cs) {
  Shape s;
  for (const auto& c : cs) s.emplace_back(c.w, c.h, c.label);
  return s;
}

}  // namespace

ContainerPacking pack_into_containers_detailed(const Instance& inst, const std::vector<Container>& containers,
                                               const Rational& eps, const SearchOptions& opts) {
  check_layout(inst, containers);
  if (containers.empty() || inst.items.empty()) {
    ContainerPacking out;
    out.containers = containers;
    out.packing.instance = inst;
    return out;
  }
  const ContainerBins bins = container_bins(containers, inst.items, inst.rotation_allowed, eps);
  return realize_solution(inst, containers, bins, solve_gap_adaptive(bins.gap, opts), eps);
}

Packing pack_into_containers(const Instance& inst, const std::vector<Container>& containers, const Rational& eps,
                             const SearchOptions& opts) {
  return pack_into_containers_detailed(inst, containers, eps, opts).packing;
}

ContainerPacking solve_container(const Instance& inst, int c, const Rational& eps, std::size_t budget,
                                 const SearchOptions& opts) {
  if (c < 0) throw InvalidArgument("container count must be non-negative");
  ContainerPacking best;
  best.packing.instance = inst;
  if (c == 0 || inst.items.empty()) return best;
  const auto cands = candidate_containers(inst, c, budget, opts.grid);
  std::map<Shape, std::size_t> shape_index;
  std::vector<std::size_t> first_of_shape, shape_of_cand(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i) {
    check_layout(inst, cands[i]);
    auto [it, fresh] = shape_index.emplace(shape_of(cands[i]), first_of_shape.size());
    if (fresh) first_of_shape.push_back(i);
    shape_of_cand[i] = it->second;
  }
  std::vector<ContainerBins> bins(first_of_shape.size());
  std::vector<GapSolution> sols(first_of_shape.size());
  parallel_for(first_of_shape.size(), [&](std::size_t s) {
    bins[s] = container_bins(cands[first_of_shape[s]], inst.items, inst.rotation_allowed, eps);
    sols[s] = solve_gap_adaptive(bins[s].gap, opts);
  });
  std::vector<ContainerPacking> results(cands.size());
  parallel_for(cands.size(), [&](std::size_t i) {
    const std::size_t s = shape_of_cand[i];
    results[i] = realize_solution(inst, cands[i], bins[s], sols[s], eps);
  });
  i64 best_profit = -1;
  for (auto& r : results) {
    i64 p = r.packing.profit();
    if (p > best_profit) {
      best_profit = p;
      best = std::move(r);
    }
  }
  return best;
}

}  // namespace rectpack
