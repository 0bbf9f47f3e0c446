#include "rectpack/gap.hpp"

#include <algorithm>
#include <numeric>

namespace rectpack {

GapInstance coarsen(const GapInstance& inst, i64 g) {
  if (g < 1) throw InvalidArgument("coarsening factor must be >= 1");
  if (g == 1) return inst;
  GapInstance out = inst;
  for (auto& b : out.bins) b.capacity /= g;
  for (auto& it : out.items) {
    for (auto& s : it.sizes) {
      if (s) s = (*s + g - 1) / g;
    }
  }
  return out;
}

namespace {

struct DpRun {
  GapInstance inst;  // coarsened
  std::vector<std::size_t> order;
  std::vector<std::uint64_t> stride;
  std::uint64_t states = 1;
  std::vector<i64> value;  // optimum over all items for each residual state
  std::vector<std::uint8_t> choice;
};

DpRun run_gap_dp(const GapInstance& raw, const GapOptions& opts, bool keep_choice) {
  const std::size_t k = raw.bins.size();
  if (k > opts.k_max) {
    throw InvalidArgument("GAP with " + std::to_string(k) + " bins exceeds the limit of " + std::to_string(opts.k_max));
  }
  DpRun run;
  run.inst = coarsen(raw, opts.coarsen);
  const GapInstance& inst = run.inst;
  for (const auto& b : inst.bins) {
    if (b.capacity < 0) throw InvalidArgument("negative capacity on bin '" + b.id + "'");
  }
  run.order.resize(inst.items.size());
  std::iota(run.order.begin(), run.order.end(), 0);
  std::sort(run.order.begin(), run.order.end(),
            [&](std::size_t a, std::size_t b) { return inst.items[a].id < inst.items[b].id; });
  for (const auto& it : inst.items) {
    if (it.sizes.size() != k) throw InvalidArgument("item '" + it.id + "' has the wrong number of sizes");
    for (const auto& s : it.sizes) {
      if (s && *s < 0) throw InvalidArgument("negative size on item '" + it.id + "'");
    }
  }

  run.stride.resize(k);
  std::uint64_t states = 1;
  const std::uint64_t n = inst.items.size();
  for (std::size_t b = 0; b < k; ++b) {
    run.stride[b] = states;
    const auto radix = static_cast<std::uint64_t>(inst.bins[b].capacity) + 1;
    if (states > opts.state_budget / radix) throw StateBudgetExceeded("GAP state space exceeds the budget");
    states *= radix;
  }
  if (n > 0 && states > opts.state_budget / n) throw StateBudgetExceeded("GAP table exceeds the budget");
  run.states = states;

  std::vector<i64> next(states, 0), cur(states, 0);
  if (keep_choice) run.choice.assign(static_cast<std::size_t>(n * states), 0);
  std::vector<i64> residual(k);
  for (std::size_t ii = n; ii-- > 0;) {
    const GapItem& item = inst.items[run.order[ii]];
    for (std::uint64_t s = 0; s < states; ++s) {
      std::uint64_t rest = s;
      for (std::size_t b = 0; b < k; ++b) {
        const auto radix = static_cast<std::uint64_t>(inst.bins[b].capacity) + 1;
        residual[b] = static_cast<i64>(rest % radix);
        rest /= radix;
      }
      i64 best = next[s];
      std::uint8_t pick = 0;
      for (std::size_t b = 0; b < k; ++b) {
        const auto& sz = item.sizes[b];
        if (!sz || *sz > residual[b]) continue;
        i64 cand = item.profit + next[s - static_cast<std::uint64_t>(*sz) * run.stride[b]];
        if (cand > best) {
          best = cand;
          pick = static_cast<std::uint8_t>(b + 1);
        }
      }
      cur[s] = best;
      if (keep_choice) run.choice[ii * states + s] = pick;
    }
    std::swap(cur, next);
  }
  run.value = std::move(next);
  return run;
}

}  // namespace

GapSolution solve_gap(const GapInstance& raw, const GapOptions& opts) {
  DpRun run = run_gap_dp(raw, opts, true);
  const GapInstance& inst = run.inst;
  GapSolution sol;
  std::uint64_t s = 0;
  for (std::size_t b = 0; b < inst.bins.size(); ++b) {
    s += static_cast<std::uint64_t>(inst.bins[b].capacity) * run.stride[b];
  }
  sol.profit = run.value[s];
  for (std::size_t ii = 0; ii < inst.items.size(); ++ii) {
    std::uint8_t pick = run.choice[ii * run.states + s];
    if (pick == 0) continue;
    const GapItem& item = inst.items[run.order[ii]];
    const std::size_t b = pick - 1u;
    sol.assignment[item.id] = inst.bins[b].id;
    s -= static_cast<std::uint64_t>(*item.sizes[b]) * run.stride[b];
  }
  return sol;
}

GapValueTable gap_value_table(const GapInstance& inst, const GapOptions& opts) {
  DpRun run = run_gap_dp(inst, opts, false);
  GapValueTable t;
  for (const auto& b : run.inst.bins) t.capacities.push_back(b.capacity);
  t.stride = std::move(run.stride);
  t.value = std::move(run.value);
  return t;
}

bool gap_feasible(const GapInstance& inst, const GapSolution& sol) {
  std::map<std::string, std::size_t> bin_index;
  for (std::size_t b = 0; b < inst.bins.size(); ++b) bin_index[inst.bins[b].id] = b;
  std::vector<i64> used(inst.bins.size(), 0);
  i64 profit = 0;
  for (const auto& it : inst.items) {
    auto f = sol.assignment.find(it.id);
    if (f == sol.assignment.end()) continue;
    auto b = bin_index.find(f->second);
    if (b == bin_index.end() || !it.sizes[b->second]) return false;
    used[b->second] += *it.sizes[b->second];
    profit += it.profit;
  }
  for (std::size_t b = 0; b < inst.bins.size(); ++b) {
    if (used[b] > inst.bins[b].capacity) return false;
  }
  return profit == sol.profit && sol.assignment.size() <= inst.items.size();
}

ContainerBins container_bins(const std::vector<Container>& containers, const std::vector<ItemSpec>& items,
                             bool rotation_allowed, const Rational& eps) {
  ContainerBins out;
  for (std::size_t c = 0; c < containers.size(); ++c) {
    const Container& C = containers[c];
    i64 cap = C.label == ContainerLabel::Area ? floor_mul(Rational(1) - 2 * eps, C.w * C.h)
                                              : (C.label == ContainerLabel::Horizontal ? C.h : C.w);
    out.gap.bins.push_back({"C" + std::to_string(c), std::max<i64>(cap, 0)});
  }
  out.rotated.assign(items.size(), std::vector<bool>(containers.size(), false));
  for (std::size_t i = 0; i < items.size(); ++i) {
    const ItemSpec& it = items[i];
    GapItem gi{it.id, it.p, std::vector<std::optional<i64>>(containers.size())};
    for (std::size_t c = 0; c < containers.size(); ++c) {
      const Container& C = containers[c];
      std::vector<bool> options;
      if (C.label == ContainerLabel::Area) {
        options = {false};
        if (rotation_allowed) options.push_back(true);
      } else {
        // Preferred orientation puts the short side across the stacking direction.
        bool prefer = C.label == ContainerLabel::Horizontal ? it.h > it.w : it.w > it.h;
        if (!rotation_allowed) {
          options = {false};
        } else {
          options = {prefer, !prefer};
        }
      }
      for (bool rot : options) {
        auto [w, h] = effective_dims(it, rot);
        bool ok = C.label == ContainerLabel::Area ? (Rational(w) <= eps * C.w && Rational(h) <= eps * C.h)
                                                  : (w <= C.w && h <= C.h);
        if (!ok) continue;
        gi.sizes[c] = C.label == ContainerLabel::Area ? w * h : (C.label == ContainerLabel::Horizontal ? h : w);
        out.rotated[i][c] = rot;
        break;
      }
    }
    out.gap.items.push_back(std::move(gi));
  }
  return out;
}

GapInstance bins_from_containers(const std::vector<Container>& containers, const std::vector<ItemSpec>& items,
                                 bool rotation_allowed, const Rational& eps) {
  return container_bins(containers, items, rotation_allowed, eps).gap;
}

}  // namespace rectpack
