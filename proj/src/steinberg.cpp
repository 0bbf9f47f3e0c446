// Recursive area-based packer. Each procedure places a frame of items and hands the rest
// to sub-rectangles whose own area condition is checked exactly before recursing.
#include "rectpack/greedy.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rectpack {

namespace {

using i128 = __int128;

struct Box {
  int idx;
  i64 w;
  i64 h;
};

struct Spot {
  int idx;
  i64 x;
  i64 y;
};

struct Region {
  i64 x, y, u, v;
};

i128 pos(i128 v) { return v > 0 ? v : 0; }

struct Load {
  i64 a = 0;
  i64 b = 0;
  i128 area = 0;

  void add(const Box& bx) {
    a = std::max(a, bx.w);
    b = std::max(b, bx.h);
    area += static_cast<i128>(bx.w) * bx.h;
  }
};

// Remaining room in u x v once `load` is inside: negative means the condition fails.
i128 slack(i64 u, i64 v, const Load& load) {
  if (load.a > u || load.b > v) return -1;
  return static_cast<i128>(u) * v - pos(2 * static_cast<i128>(load.a) - u) * pos(2 * static_cast<i128>(load.b) - v) -
         2 * load.area;
}

bool holds(i64 u, i64 v, const std::vector<Box>& L) {
  if (L.empty()) return true;
  if (u <= 0 || v <= 0) return false;
  Load load;
  for (const auto& b : L) load.add(b);
  return slack(u, v, load) >= 0;
}

std::vector<Box> transposed(const std::vector<Box>& L) {
  std::vector<Box> t = L;
  for (auto& b : t) std::swap(b.w, b.h);
  return t;
}

class Packer {
 public:
  explicit Packer(long budget) : budget_(budget) {}

  bool solve(const Region& Q, const std::vector<Box>& L, std::vector<Spot>& out) {
    if (L.empty()) return true;
    if (--budget_ < 0) return false;
    if (L.size() == 1) {
      if (L[0].w > Q.u || L[0].h > Q.v) return false;
      out.push_back({L[0].idx, Q.x, Q.y});
      return true;
    }
    for (int proc : {1, -1, 2, -2, 3, -3, 0}) {
      std::size_t mark = out.size();
      if (run(proc, Q, L, out)) return true;
      out.resize(mark);
      if (budget_ < 0) return false;
    }
    return skyline(Q, L, out);
  }

 private:
  long budget_;

  bool run(int proc, const Region& Q, const std::vector<Box>& L, std::vector<Spot>& out) {
    if (proc < 0) {
      Region T{Q.y, Q.x, Q.v, Q.u};
      std::vector<Spot> tmp;
      if (!run(-proc, T, transposed(L), tmp)) return false;
      for (const auto& s : tmp) out.push_back({s.idx, s.y, s.x});
      return true;
    }
    switch (proc) {
      case 1: return wide_stack(Q, L, out);
      case 2: return tall_pair(Q, L, out);
      case 3: return split(Q, L, out);
      default: return corner(Q, L, out);
    }
  }

  // Items at least half as wide as the region, stacked widest first along the floor.
  bool wide_stack(const Region& Q, const std::vector<Box>& L, std::vector<Spot>& out) {
    std::vector<Box> wide, rest;
    for (const auto& b : L) (2 * b.w >= Q.u ? wide : rest).push_back(b);
    if (wide.empty()) return false;
    std::sort(wide.begin(), wide.end(), [](const Box& p, const Box& q) {
      if (p.w != q.w) return p.w > q.w;
      if (p.h != q.h) return p.h > q.h;
      return p.idx < q.idx;
    });
    i64 y = 0;
    for (const auto& b : wide) y += b.h;
    if (y > Q.v) return false;
    y = 0;
    for (const auto& b : wide) {
      out.push_back({b.idx, Q.x, Q.y + y});
      y += b.h;
    }
    std::vector<Region> regions{{Q.x, Q.y + y, Q.u, Q.v - y}, {Q.x + wide[0].w, Q.y, Q.u - wide[0].w, y}};
    return fill(regions, rest, out);
  }

  // The two tallest items side by side when both reach half the height.
  bool tall_pair(const Region& Q, const std::vector<Box>& L, std::vector<Spot>& out) {
    std::vector<Box> s = L;
    std::sort(s.begin(), s.end(), [](const Box& p, const Box& q) {
      if (p.h != q.h) return p.h > q.h;
      if (p.w != q.w) return p.w > q.w;
      return p.idx < q.idx;
    });
    const Box first = s[0], second = s[1];
    if (2 * second.h < Q.v || first.w + second.w > Q.u) return false;
    out.push_back({first.idx, Q.x, Q.y});
    out.push_back({second.idx, Q.x + first.w, Q.y});
    std::vector<Box> rest(s.begin() + 2, s.end());
    const i64 pair_w = first.w + second.w;
    std::vector<Region> regions{{Q.x + pair_w, Q.y, Q.u - pair_w, Q.v},
                                {Q.x, Q.y + first.h, pair_w, Q.v - first.h},
                                {Q.x + first.w, Q.y + second.h, second.w, first.h - second.h}};
    return fill(regions, rest, out);
  }

  // Vertical cut: a sorted prefix goes left into the narrowest width that satisfies its condition.
  bool split(const Region& Q, const std::vector<Box>& L, std::vector<Spot>& out) {
    using Key = bool (*)(const Box&, const Box&);
    const Key keys[] = {
        [](const Box& p, const Box& q) { return p.w != q.w ? p.w > q.w : p.idx < q.idx; },
        [](const Box& p, const Box& q) { return p.h != q.h ? p.h > q.h : p.idx < q.idx; },
        [](const Box& p, const Box& q) {
          i64 ap = p.w * p.h, aq = q.w * q.h;
          return ap != aq ? ap > aq : p.idx < q.idx;
        },
    };
    for (Key key : keys) {
      std::vector<Box> s = L;
      std::sort(s.begin(), s.end(), key);
      struct Cut {
        std::size_t k;
        i64 u1;
        i128 balance;
      };
      std::vector<Cut> cuts;
      for (std::size_t k = 1; k < s.size(); ++k) {
        std::vector<Box> left(s.begin(), s.begin() + static_cast<long>(k));
        std::vector<Box> right(s.begin() + static_cast<long>(k), s.end());
        i64 lo = 0;
        for (const auto& b : left) lo = std::max(lo, b.w);
        i64 hi = Q.u;
        if (lo > hi || !holds(hi, Q.v, left)) continue;
        while (lo < hi) {
          i64 mid = lo + (hi - lo) / 2;
          if (holds(mid, Q.v, left)) hi = mid; else lo = mid + 1;
        }
        if (lo >= Q.u || !holds(Q.u - lo, Q.v, right)) continue;
        Load rl;
        for (const auto& b : right) rl.add(b);
        cuts.push_back({k, lo, slack(Q.u - lo, Q.v, rl)});
      }
      std::stable_sort(cuts.begin(), cuts.end(), [](const Cut& p, const Cut& q) { return p.balance > q.balance; });
      int tries = 0;
      for (const auto& c : cuts) {
        if (++tries > 3) break;
        std::size_t mark = out.size();
        std::vector<Box> left(s.begin(), s.begin() + static_cast<long>(c.k));
        std::vector<Box> right(s.begin() + static_cast<long>(c.k), s.end());
        if (solve({Q.x, Q.y, c.u1, Q.v}, left, out) && solve({Q.x + c.u1, Q.y, Q.u - c.u1, Q.v}, right, out)) {
          return true;
        }
        out.resize(mark);
        if (budget_ < 0) return false;
      }
    }
    return false;
  }

  // Largest item in the corner, remainder cut into two guillotine pieces.
  bool corner(const Region& Q, const std::vector<Box>& L, std::vector<Spot>& out) {
    auto it = std::max_element(L.begin(), L.end(), [](const Box& p, const Box& q) {
      i64 ap = p.w * p.h, aq = q.w * q.h;
      return ap != aq ? ap < aq : p.idx > q.idx;
    });
    const Box big = *it;
    std::vector<Box> rest;
    for (const auto& b : L) {
      if (b.idx != big.idx) rest.push_back(b);
    }
    const std::vector<Region> variants[2] = {
        {{Q.x + big.w, Q.y, Q.u - big.w, Q.v}, {Q.x, Q.y + big.h, big.w, Q.v - big.h}},
        {{Q.x, Q.y + big.h, Q.u, Q.v - big.h}, {Q.x + big.w, Q.y, Q.u - big.w, big.h}},
    };
    for (const auto& regions : variants) {
      std::size_t mark = out.size();
      out.push_back({big.idx, Q.x, Q.y});
      if (fill(regions, rest, out)) return true;
      out.resize(mark);
      if (budget_ < 0) return false;
    }
    return false;
  }

  // Distributes items over disjoint regions so every region keeps its condition, then recurses.
  bool fill(const std::vector<Region>& regions, const std::vector<Box>& items, std::vector<Spot>& out) {
    if (items.empty()) return true;
    std::vector<std::vector<std::vector<Box>>> plans;
    for (int order = 0; order < 3; ++order) {
      std::vector<Box> s = items;
      std::sort(s.begin(), s.end(), [order](const Box& p, const Box& q) {
        i64 kp = order == 1 ? p.h : order == 2 ? p.w : p.w * p.h;
        i64 kq = order == 1 ? q.h : order == 2 ? q.w : q.w * q.h;
        return kp != kq ? kp > kq : p.idx < q.idx;
      });
      for (int rule = 0; rule < 2; ++rule) {
        std::vector<std::vector<Box>> plan(regions.size());
        std::vector<Load> loads(regions.size());
        bool ok = true;
        for (const auto& b : s) {
          int pick = -1;
          i128 best = -1;
          for (std::size_t r = 0; r < regions.size(); ++r) {
            Load l = loads[r];
            l.add(b);
            i128 sl = slack(regions[r].u, regions[r].v, l);
            if (sl < 0) continue;
            if (rule == 1) {  // first fit
              pick = static_cast<int>(r);
              break;
            }
            if (sl > best) {
              best = sl;
              pick = static_cast<int>(r);
            }
          }
          if (pick < 0) {
            ok = false;
            break;
          }
          loads[pick].add(b);
          plan[pick].push_back(b);
        }
        if (ok) plans.push_back(std::move(plan));
      }
    }
    for (const auto& plan : plans) {
      std::size_t mark = out.size();
      bool ok = true;
      for (std::size_t r = 0; r < regions.size() && ok; ++r) {
        if (plan[r].empty()) continue;
        ok = solve(regions[r], plan[r], out);
      }
      if (ok) return true;
      out.resize(mark);
      if (budget_ < 0) return false;
    }
    return false;
  }

  // Bottom-left skyline placement under a few orderings; last resort inside a node.
  bool skyline(const Region& Q, const std::vector<Box>& L, std::vector<Spot>& out) {
    for (int order = 0; order < 4; ++order) {
      std::vector<Box> s = L;
      std::sort(s.begin(), s.end(), [order](const Box& p, const Box& q) {
        i64 kp = order == 0 ? p.h : order == 1 ? p.w : order == 2 ? p.w * p.h : std::max(p.w, p.h);
        i64 kq = order == 0 ? q.h : order == 1 ? q.w : order == 2 ? q.w * q.h : std::max(q.w, q.h);
        return kp != kq ? kp > kq : p.idx < q.idx;
      });
      struct Seg {
        i64 x, y, w;
      };
      std::vector<Seg> sky{{0, 0, Q.u}};
      std::vector<Spot> local;
      bool ok = true;
      for (const auto& b : s) {
        i64 best_y = -1, best_x = -1;
        for (std::size_t i = 0; i < sky.size(); ++i) {
          i64 x = sky[i].x;
          if (x + b.w > Q.u) break;
          i64 y = 0;
          for (std::size_t j = i; j < sky.size() && sky[j].x < x + b.w; ++j) y = std::max(y, sky[j].y);
          if (y + b.h > Q.v) continue;
          if (best_y < 0 || y < best_y || (y == best_y && x < best_x)) {
            best_y = y;
            best_x = x;
          }
        }
        if (best_y < 0) {
          ok = false;
          break;
        }
        local.push_back({b.idx, Q.x + best_x, Q.y + best_y});
        std::vector<Seg> next;
        const i64 x0 = best_x, x1 = best_x + b.w;
        for (const auto& sg : sky) {
          i64 sx0 = sg.x, sx1 = sg.x + sg.w;
          if (sx1 <= x0 || sx0 >= x1) {
            next.push_back(sg);
            continue;
          }
          if (sx0 < x0) next.push_back({sx0, sg.y, x0 - sx0});
          if (sx1 > x1) next.push_back({x1, sg.y, sx1 - x1});
        }
        next.push_back({x0, best_y + b.h, b.w});
        std::sort(next.begin(), next.end(), [](const Seg& p, const Seg& q) { return p.x < q.x; });
        std::vector<Seg> merged;
        for (const auto& sg : next) {
          if (!merged.empty() && merged.back().y == sg.y && merged.back().x + merged.back().w == sg.x) {
            merged.back().w += sg.w;
          } else {
            merged.push_back(sg);
          }
        }
        sky = std::move(merged);
      }
      if (ok) {
        out.insert(out.end(), local.begin(), local.end());
        return true;
      }
    }
    return false;
  }
};

}  // namespace

std::optional<std::string> steinberg_violation(i64 width, i64 height, const std::vector<ItemSpec>& items) {
  i64 a = 0, b = 0;
  i128 area = 0;
  for (const auto& it : items) {
    a = std::max(a, it.w);
    b = std::max(b, it.h);
    area += static_cast<i128>(it.w) * it.h;
  }
  if (a > width) return "widest item " + std::to_string(a) + " exceeds region width " + std::to_string(width);
  if (b > height) return "tallest item " + std::to_string(b) + " exceeds region height " + std::to_string(height);
  i128 rhs = static_cast<i128>(width) * height - pos(2 * static_cast<i128>(a) - width) * pos(2 * static_cast<i128>(b) - height);
  if (2 * area > rhs) {
    std::ostringstream os;
    os << "2*area = " << static_cast<long long>(2 * area) << " > " << static_cast<long long>(rhs)
       << " = w*h - (2*w_max - w)+ * (2*h_max - h)+";
    return os.str();
  }
  return std::nullopt;
}

PackResult steinberg(const Container& region, const std::vector<ItemSpec>& items) {
  if (auto why = steinberg_violation(region.w, region.h, items)) throw PreconditionFailed(*why);
  std::vector<Box> boxes;
  boxes.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) boxes.push_back({static_cast<int>(i), items[i].w, items[i].h});
  Packer packer(200000);
  std::vector<Spot> spots;
  PackResult r;
  if (packer.solve({region.x, region.y, region.w, region.h}, boxes, spots)) {
    std::sort(spots.begin(), spots.end(), [](const Spot& p, const Spot& q) { return p.idx < q.idx; });
    for (const auto& s : spots) r.placements.push_back({items[static_cast<std::size_t>(s.idx)].id, s.x, s.y, false});
    return r;
  }
  for (const auto& it : items) r.leftovers.push_back(it.id);
  return r;
}

}  // namespace rectpack
