#include "rectpack/oracle.hpp"

#include "rectpack/container_search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_set>

namespace rectpack {

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
  std::uint64_t nodes = 0;
  std::uint64_t node_limit;
  Clock::time_point deadline;
  bool exhausted = false;

  bool tick() {
    if (exhausted) return false;
    if (++nodes > node_limit || ((nodes & 1023u) == 0 && Clock::now() > deadline)) exhausted = true;
    return !exhausted;
  }
};

// Every packing compacts down and left, after which all item edges lie on sums of effective sides.
std::vector<i64> side_sums(const std::vector<std::pair<i64, i64>>& options, i64 N) {
  std::set<i64> sums{0};
  for (const auto& [a, b] : options) {
    std::set<i64> next = sums;
    for (i64 s : sums) {
      if (s + a <= N) next.insert(s + a);
      if (b != a && s + b <= N) next.insert(s + b);
    }
    sums = std::move(next);
  }
  sums.insert(N);
  return {sums.begin(), sums.end()};
}

// Decides whether a set of items packs, by filling the first free cell of a compressed grid
// either with an item's bottom-left corner or with waste.
class Feasibility {
 public:
  Feasibility(const Instance& inst, std::vector<std::size_t> items, Budget& budget, std::size_t max_cells)
      : inst_(inst), items_(std::move(items)), budget_(budget) {
    const i64 N = inst.N;
    std::vector<std::pair<i64, i64>> xs, ys;
    for (std::size_t k : items_) {
      const auto& it = inst.items[k];
      xs.emplace_back(it.w, inst.rotation_allowed ? it.h : it.w);
      ys.emplace_back(it.h, inst.rotation_allowed ? it.w : it.h);
    }
    X_ = side_sums(xs, N);
    Y_ = side_sums(ys, N);
    cols_ = X_.size() - 1;
    rows_ = Y_.size() - 1;
    too_big_ = cols_ * rows_ > max_cells;
    for (std::size_t a = 0; a < items_.size(); ++a) {
      twin_of_.push_back(a);
      for (std::size_t b = 0; b < a; ++b) {
        const auto& p = inst.items[items_[a]];
        const auto& q = inst.items[items_[b]];
        if (p.w == q.w && p.h == q.h) {
          twin_of_[a] = b;
          break;
        }
      }
    }
    i64 area = 0;
    for (std::size_t k : items_) area += inst.items[k].w * inst.items[k].h;
    slack_ = N * N - area;
  }

  // nullopt when the budget ran out or the grid is too large.
  std::optional<bool> run(std::vector<PlacedItem>* witness) {
    if (slack_ < 0) return false;
    if (too_big_) return std::nullopt;
    filled_.assign(cols_ * rows_, 0);
    placed_.assign(items_.size(), false);
    stack_.clear();
    const bool ok = dfs(0, 0, 0);
    if (budget_.exhausted && !ok) return std::nullopt;
    if (ok && witness) *witness = stack_;
    return ok;
  }

 private:
  i64 cell_area(std::size_t c) const {
    return (X_[c % cols_ + 1] - X_[c % cols_]) * (Y_[c / cols_ + 1] - Y_[c / cols_]);
  }

  std::string key(std::size_t from) const {
    std::string k(placed_.begin(), placed_.end());
    k.append(filled_.begin() + static_cast<std::ptrdiff_t>(from), filled_.end());
    return k;
  }

  std::optional<std::size_t> line_index(const std::vector<i64>& lines, i64 v) const {
    auto f = std::lower_bound(lines.begin(), lines.end(), v);
    if (f == lines.end() || *f != v) return std::nullopt;
    return static_cast<std::size_t>(f - lines.begin());
  }

  bool dfs(std::size_t cell, std::size_t placed_count, i64 waste) {
    if (placed_count == items_.size()) return true;
    while (cell < filled_.size() && filled_[cell]) ++cell;
    if (cell == filled_.size()) return false;
    if (!budget_.tick()) return false;
    const std::string k = key(cell);
    if (failed_.count(k)) return false;

    const std::size_t cx = cell % cols_, cy = cell / cols_;
    const i64 x = X_[cx], y = Y_[cy];
    for (std::size_t a = 0; a < items_.size(); ++a) {
      if (placed_[a]) continue;
      if (twin_of_[a] != a && !placed_[twin_of_[a]]) continue;
      const ItemSpec& it = inst_.items[items_[a]];
      for (bool rot : {false, true}) {
        if (rot && (!inst_.rotation_allowed || it.w == it.h)) continue;
        auto [w, h] = effective_dims(it, rot);
        auto ex = line_index(X_, x + w);
        auto ey = line_index(Y_, y + h);
        if (!ex || !ey) continue;
        bool free = true;
        for (std::size_t r = cy; r < *ey && free; ++r) {
          for (std::size_t c = cx; c < *ex; ++c) {
            if (filled_[r * cols_ + c]) {
              free = false;
              break;
            }
          }
        }
        if (!free) continue;
        set_block(cx, *ex, cy, *ey, 1);
        placed_[a] = true;
        stack_.push_back({it, x, y, rot});
        if (dfs(cell + 1, placed_count + 1, waste)) return true;
        stack_.pop_back();
        placed_[a] = false;
        set_block(cx, *ex, cy, *ey, 0);
        if (budget_.exhausted) return false;
      }
    }
    const i64 more = waste + cell_area(cell);
    if (more <= slack_) {
      filled_[cell] = 2;
      if (dfs(cell + 1, placed_count, more)) return true;
      filled_[cell] = 0;
    }
    if (!budget_.exhausted) failed_.insert(k);
    return false;
  }

  void set_block(std::size_t x0, std::size_t x1, std::size_t y0, std::size_t y1, char v) {
    for (std::size_t r = y0; r < y1; ++r) {
      for (std::size_t c = x0; c < x1; ++c) filled_[r * cols_ + c] = v;
    }
  }

  const Instance& inst_;
  std::vector<std::size_t> items_;
  Budget& budget_;
  std::vector<i64> X_, Y_;
  std::size_t cols_ = 0, rows_ = 0;
  bool too_big_ = false;
  std::vector<std::size_t> twin_of_;
  i64 slack_ = 0;
  std::vector<char> filled_;
  std::vector<char> placed_;
  std::vector<PlacedItem> stack_;
  std::unordered_set<std::string> failed_;
};

class SubsetSearch {
 public:
  SubsetSearch(const Instance& inst, const OracleLimits& limits) : inst_(inst), limits_(limits) {
    budget_.node_limit = limits.node_budget;
    budget_.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(limits.time_budget_s));
    order_.resize(inst.items.size());
    std::iota(order_.begin(), order_.end(), 0);
    // Profit density descending, compared exactly by cross-multiplication.
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      const auto& p = inst.items[a];
      const auto& q = inst.items[b];
      const __int128 lhs = static_cast<__int128>(p.p) * (q.w * q.h);
      const __int128 rhs = static_cast<__int128>(q.p) * (p.w * p.h);
      if (lhs != rhs) return lhs > rhs;
      return p.id < q.id;
    });
  }

  OracleResult run() {
    best_profit_ = 0;
    descend(0, 0, 0, 0);
    OracleResult r;
    r.packing = make_packing(inst_, best_items_);
    r.certified = !uncertain_;
    return r;
  }

 private:
  i64 bound(std::size_t from, i64 profit, i64 area) const {
    i64 room = inst_.N * inst_.N - area;
    i64 b = profit;
    for (std::size_t k = from; k < order_.size(); ++k) {
      const auto& it = inst_.items[order_[k]];
      const i64 a = it.w * it.h;
      if (a <= room) {
        room -= a;
        b += it.p;
      } else {
        b += static_cast<i64>(static_cast<__int128>(it.p) * room / a);
        break;
      }
    }
    return b;
  }

  std::optional<bool> feasible(std::uint32_t mask) {
    auto f = memo_.find(mask);
    if (f != memo_.end()) return f->second.has_value();
    for (std::uint32_t bad : infeasible_) {
      if ((bad & mask) == bad) return false;
    }
    std::vector<std::size_t> items;
    for (std::size_t k = 0; k < inst_.items.size(); ++k) {
      if (mask >> k & 1u) items.push_back(k);
    }
    Feasibility check(inst_, items, budget_, limits_.max_candidate_coords);
    std::vector<PlacedItem> witness;
    auto ok = check.run(&witness);
    if (!ok) return std::nullopt;
    if (*ok) {
      memo_[mask] = witness;
    } else {
      memo_[mask] = std::nullopt;
      infeasible_.push_back(mask);
    }
    return *ok;
  }

  void descend(std::size_t from, std::uint32_t mask, i64 profit, i64 area) {
    if (budget_.exhausted) {
      uncertain_ = true;
      return;
    }
    if (from == order_.size()) return;
    if (bound(from, profit, area) <= best_profit_) return;
    const std::size_t k = order_[from];
    const auto& it = inst_.items[k];
    const i64 a = it.w * it.h;
    if (area + a <= inst_.N * inst_.N) {
      const std::uint32_t next = mask | (std::uint32_t{1} << k);
      auto ok = feasible(next);
      if (!ok) {
        uncertain_ = true;
      } else if (*ok) {
        if (profit + it.p > best_profit_) {
          best_profit_ = profit + it.p;
          best_items_ = *memo_.at(next);
        }
        descend(from + 1, next, profit + it.p, area + a);
      }
    }
    descend(from + 1, mask, profit, area);
  }

  const Instance& inst_;
  OracleLimits limits_;
  Budget budget_;
  std::vector<std::size_t> order_;
  std::map<std::uint32_t, std::optional<std::vector<PlacedItem>>> memo_;
  std::vector<std::uint32_t> infeasible_;
  i64 best_profit_ = 0;
  std::vector<PlacedItem> best_items_;
  bool uncertain_ = false;
};

}  // namespace

OracleResult solve_exact(const Instance& inst, const OracleLimits& limits) {
  if (inst.items.size() > limits.max_items || inst.items.size() > 31) {
    throw InvalidArgument("oracle accepts at most " + std::to_string(std::min<std::size_t>(limits.max_items, 31)) +
                          " items, got " + std::to_string(inst.items.size()));
  }
  for (const auto& it : inst.items) {
    if (it.w < 1 || it.h < 1 || it.w > inst.N || it.h > inst.N) {
      throw InvalidArgument("item '" + it.id + "' does not fit the knapsack");
    }
  }
  return SubsetSearch(inst, limits).run();
}

OracleContainerResult solve_exact_container(const Instance& inst, int c, const Rational& eps,
                                            const OracleLimits& limits) {
  if (c < 0) throw InvalidArgument("container count must be non-negative");
  if (c > 2) throw InvalidArgument("container oracle supports at most 2 containers");
  if (inst.items.size() > limits.max_items) throw InvalidArgument("container oracle: too many items");
  OracleContainerResult best;
  best.packing.instance = inst;
  best.certified = true;
  if (c == 0 || inst.items.empty()) return best;

  const i64 N = inst.N;
  std::vector<std::pair<i64, i64>> opts;
  for (const auto& it : inst.items) opts.emplace_back(it.w, it.h);
  std::vector<i64> sizes;
  for (i64 v : side_sums(opts, N)) {
    if (v > 0) sizes.push_back(v);
  }
  if (sizes.size() * sizes.size() > limits.max_candidate_coords) best.certified = false;

  const ContainerLabel labels[] = {ContainerLabel::Horizontal, ContainerLabel::Vertical, ContainerLabel::Area};
  auto useful = [&](const Container& C) {
    for (const auto& it : inst.items) {
      for (bool rot : {false, true}) {
        if (rot && !inst.rotation_allowed) continue;
        auto [w, h] = effective_dims(it, rot);
        if (C.label == ContainerLabel::Area) {
          if (Rational(w) <= eps * C.w && Rational(h) <= eps * C.h) return true;
        } else if (w <= C.w && h <= C.h) {
          return true;
        }
      }
    }
    return false;
  };
  Budget budget;
  budget.node_limit = limits.node_budget;
  budget.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(limits.time_budget_s));
  i64 best_profit = -1;
  auto evaluate = [&](const std::vector<Container>& cs) {
    if (!budget.tick()) return;
    ContainerPacking r = pack_into_containers_detailed(inst, cs, eps);
    const i64 p = r.packing.profit();
    if (p > best_profit) {
      best_profit = p;
      best.packing = std::move(r.packing);
      best.containers = cs;
    }
  };

  std::size_t limit = static_cast<std::size_t>(std::sqrt(static_cast<double>(limits.max_candidate_coords))) + 1;
  const std::size_t used = std::min(sizes.size(), limit);
  for (auto l1 : labels) {
    for (std::size_t a = 0; a < used; ++a) {
      for (std::size_t b = 0; b < used; ++b) {
        Container A{0, 0, sizes[a], sizes[b], l1};
        if (!useful(A)) continue;
        evaluate({A});
        if (c < 2) continue;
        for (bool right : {true, false}) {
          const i64 x = right ? A.w : 0, y = right ? 0 : A.h;
          if (x >= N || y >= N) continue;
          for (auto l2 : labels) {
            for (std::size_t d = 0; d < used; ++d) {
              if (x + sizes[d] > N) break;
              for (std::size_t e = 0; e < used; ++e) {
                if (y + sizes[e] > N) break;
                Container B{x, y, sizes[d], sizes[e], l2};
                if (!useful(B)) continue;
                evaluate({A, B});
              }
            }
          }
        }
      }
    }
  }
  if (budget.exhausted) best.certified = false;
  if (best_profit < 0) best.packing = Packing{inst, {}};
  return best;
}

}  // namespace rectpack
