#include "rectpack/container_search.hpp"

#include "rectpack/parallel.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace rectpack {

namespace {

bool le_eps_n(i64 v, const Rational& eps, i64 N) { return Rational(v) <= eps * N; }

bool has_area(const Rect& r) { return r.w > 0 && r.h > 0; }

}  // namespace

ItemPartition partition_for_L(const Instance& inst, i64 H_L, const Rational& eps) {
  if (2 * H_L > inst.N) throw InvalidArgument("H_L must not exceed N/2");
  ItemPartition part;
  for (const auto& it : inst.items) {
    const i64 mx = std::max(it.w, it.h), mn = std::min(it.w, it.h);
    const bool thin = le_eps_n(mn, eps, inst.N);
    if (2 * mx > inst.N && thin) {
      part.I_H.push_back(it.id);
    } else if (2 * mx > H_L && mx <= H_L && thin) {
      part.I_V.push_back(it.id);
    } else {
      part.I_R.push_back(it.id);
    }
  }
  return part;
}

ValidationReport validate_lc_packing(const Packing& p, const LShape& L, const std::vector<Container>& containers,
                                     const Rational& eps) {
  ValidationReport report = validate_packing(p);
  const i64 N = p.instance.N;
  if (!L.absent()) {
    if (L.W_L != N) report.add("lshape", {}, "W_L = " + std::to_string(L.W_L) + " but the horizontal arm must span N");
    if (2 * L.H_L > N) report.add("lshape", {}, "H_L = " + std::to_string(L.H_L) + " exceeds N/2");
    if (!le_eps_n(L.w_L, eps, N)) report.add("lshape", {}, "w_L = " + std::to_string(L.w_L) + " exceeds eps*N");
    if (!le_eps_n(L.h_L, eps, N)) report.add("lshape", {}, "h_L = " + std::to_string(L.h_L) + " exceeds eps*N");
    if (L.h_L > L.H_L || L.w_L > L.W_L) report.add("lshape", {}, "arm thickness exceeds arm length");
    if (L.H_L < 0 || L.w_L < 0 || L.h_L < 0) report.add("lshape", {}, "negative L parameter");
  }
  const Rect harm = L.horizontal_arm(), varm = L.vertical_arm();
  for (std::size_t c = 0; c < containers.size(); ++c) {
    const Rect r = containers[c].rect();
    if ((has_area(harm) && interiors_overlap(r, harm)) || (has_area(varm) && interiors_overlap(r, varm))) {
      report.add("container_in_L", {"container#" + std::to_string(c)}, "container intersects the L");
    }
  }

  std::vector<PlacedItem> items;
  try {
    items = placed_items(p);
  } catch (const Error&) {
    return report;
  }
  Packing rest{p.instance, {}};
  int tall = 0, wide = 0;
  std::vector<std::string> varm_ids;
  for (const auto& it : items) {
    const Rect r = it.rect();
    const bool in_h = !L.absent() && has_area(harm) && contains(harm, r);
    const bool in_v = !L.absent() && has_area(varm) && contains(varm, r);
    if (!in_h && !in_v) {
      rest.placements.push_back(it.placement());
      continue;
    }
    const bool ok_h = in_h && 2 * it.w() > N;
    const bool ok_v = in_v && 2 * it.h() > L.H_L;
    if (!ok_h && !ok_v) {
      std::string need;
      if (in_h) need = "w*(i) > N/2";
      if (in_v) need += std::string(need.empty() ? "" : " or ") + "h*(i) > H_L/2";
      report.add("arm_membership", {it.item.id}, "item in the L violates " + need);
      continue;
    }
    if (!ok_h) {
      varm_ids.push_back(it.item.id);
      (it.h() > it.w() ? tall : wide) += 1;
    }
  }
  if (tall > 0 && wide > 0) {
    report.add("arm_orientation", varm_ids, "vertical-arm items mix h* > w* and w* >= h*");
  }
  const ValidationReport inner = validate_container_packing(rest, containers, eps);
  for (const auto& v : inner.violations) {
    if (v.kind == "container_membership" || v.kind == "container_bounds" || v.kind == "container_overlap" ||
        v.kind == "area_container_item" || v.kind == "stacking") {
      report.violations.push_back(v);
    }
  }
  return report;
}

namespace {

struct ArmItem {
  std::size_t index;  // into inst.items
  bool rotated;
  i64 w, h;           // effective, real units
  i64 along;          // consumed arm thickness in DP units
};

constexpr std::size_t kMemoLimit = 1u << 21;

// Joint DP over arm placements and container capacities. Container capacities are shared with the
// pool of items that cannot enter the L, whose optimum per residual vector comes from a GAP table.
class LcDp {
 public:
  LcDp(std::vector<ArmItem> hs, std::vector<ArmItem> vs, i64 h_cap, i64 w_cap,
       std::vector<std::vector<std::optional<i64>>> hsz, std::vector<std::vector<std::optional<i64>>> vsz,
       GapValueTable pool, i64 gl, i64 N, i64 H_L)
      : gl_(gl), N_(N), H_L_(H_L), hs_(std::move(hs)), vs_(std::move(vs)), h_cap_(h_cap), w_cap_(w_cap), hsz_(std::move(hsz)),
        vsz_(std::move(vsz)), pool_(std::move(pool)) {
    radix_j_ = vs_.size() + 1;
    radix_t_ = static_cast<std::uint64_t>(h_cap_) + 1;
    radix_r_ = static_cast<std::uint64_t>(w_cap_) + 1;
    states_ = pool_.value.size();
    __int128 total = static_cast<__int128>(hs_.size() + 1) * radix_j_ * radix_t_ * radix_r_ * states_;
    if (total > static_cast<__int128>(std::uint64_t{1} << 62)) throw StateBudgetExceeded("L&C* DP key space overflows");
  }

  std::uint64_t full_residual() const {
    std::uint64_t s = 0;
    for (std::size_t b = 0; b < pool_.capacities.size(); ++b) s += static_cast<std::uint64_t>(pool_.capacities[b]) * pool_.stride[b];
    return s;
  }

  i64 best(std::size_t i, std::size_t j, i64 t, i64 r, std::uint64_t s) {
    if (i == hs_.size() && j == vs_.size()) return pool_.value[s];
    const std::uint64_t key = (((i * radix_j_ + j) * radix_t_ + static_cast<std::uint64_t>(t)) * radix_r_ +
                               static_cast<std::uint64_t>(r)) * states_ + s;
    auto f = memo_.find(key);
    if (f != memo_.end()) return f->second;
    if (memo_.size() >= kMemoLimit) throw StateBudgetExceeded("L&C* DP exceeds its memo budget");
    i64 v = -1;
    for (const auto& m : moves(i, j, t, r, s)) v = std::max(v, m.gain + best(m.i, m.j, m.t, m.r, m.s));
    memo_.emplace(key, v);
    return v;
  }

  struct Move {
    std::size_t i, j;
    i64 t, r;
    std::uint64_t s;
    i64 gain;
    int kind;  // 0 drop, 1 container, 2 arm
    bool horizontal;
    std::size_t bin;
  };

  // Transitions in a fixed order so that reconstruction is deterministic.
  std::vector<Move> moves(std::size_t i, std::size_t j, i64 t, i64 r, std::uint64_t s) const {
    std::vector<Move> out;
    auto add_item_moves = [&](bool horizontal) {
      const ArmItem& a = horizontal ? hs_[i] : vs_[j];
      const auto& sizes = horizontal ? hsz_[i] : vsz_[j];
      const std::size_t ni = horizontal ? i + 1 : i, nj = horizontal ? j : j + 1;
      out.push_back({ni, nj, t, r, s, 0, 0, horizontal, 0});
      for (std::size_t b = 0; b < sizes.size(); ++b) {
        if (!sizes[b]) continue;
        const i64 res = static_cast<i64>((s / pool_.stride[b]) % (static_cast<std::uint64_t>(pool_.capacities[b]) + 1));
        if (*sizes[b] > res) continue;
        out.push_back({ni, nj, t, r, s - static_cast<std::uint64_t>(*sizes[b]) * pool_.stride[b], profit(a), 1,
                       horizontal, b});
      }
      // The staircase puts the next item at (r, t); it must still end inside its arm.
      if (horizontal && t + a.along <= h_cap_ && r * gl_ + a.w <= N_) out.push_back({ni, nj, t + a.along, r, s, profit(a), 2, true, 0});
      if (!horizontal && r + a.along <= w_cap_ && t * gl_ + a.h <= H_L_) out.push_back({ni, nj, t, r + a.along, s, profit(a), 2, false, 0});
    };
    if (i < hs_.size()) add_item_moves(true);
    if (j < vs_.size()) add_item_moves(false);
    return out;
  }

  void set_profits(std::vector<i64> p) { profits_ = std::move(p); }
  i64 profit(const ArmItem& a) const { return profits_[a.index]; }

  const std::vector<ArmItem>& hs() const { return hs_; }
  const std::vector<ArmItem>& vs() const { return vs_; }
  const GapValueTable& pool() const { return pool_; }

 private:
  i64 gl_, N_, H_L_;
  std::vector<ArmItem> hs_, vs_;
  i64 h_cap_, w_cap_;
  std::vector<std::vector<std::optional<i64>>> hsz_, vsz_;
  GapValueTable pool_;
  std::vector<i64> profits_;
  std::uint64_t radix_j_ = 1, radix_t_ = 1, radix_r_ = 1, states_ = 1;
  std::unordered_map<std::uint64_t, i64> memo_;
};

i64 ceil_div(i64 a, i64 g) { return (a + g - 1) / g; }

}  // namespace

LcPacking pack_lc_fixed(const Instance& inst, const LShape& L, bool vertical_arm_tall,
                        const std::vector<Container>& containers, const Rational& eps, const SearchOptions& opts) {
  const i64 N = inst.N;
  LcPacking out;
  out.lshape = L;
  out.containers = containers;
  out.packing.instance = inst;
  const ContainerBins bins = container_bins(containers, inst.items, inst.rotation_allowed, eps);

  // Arm candidates in real units.
  std::vector<ArmItem> hs, vs;
  std::vector<bool> in_arm_pool(inst.items.size(), false);
  if (!L.absent()) {
    for (std::size_t k = 0; k < inst.items.size(); ++k) {
      const ItemSpec& it = inst.items[k];
      for (bool rot : {false, true}) {
        if (rot && !inst.rotation_allowed) continue;
        auto [w, h] = effective_dims(it, rot);
        if (2 * w > N && h <= L.h_L && L.h_L > 0) {
          hs.push_back({k, rot, w, h, h});
          in_arm_pool[k] = true;
          break;
        }
      }
      if (in_arm_pool[k]) continue;
      for (bool rot : {false, true}) {
        if (rot && !inst.rotation_allowed) continue;
        auto [w, h] = effective_dims(it, rot);
        if ((h > w) != vertical_arm_tall) continue;
        if (2 * h > L.H_L && h <= L.H_L && w <= L.w_L && L.w_L > 0) {
          vs.push_back({k, rot, w, h, w});
          in_arm_pool[k] = true;
          break;
        }
      }
    }
  }
  std::stable_sort(hs.begin(), hs.end(), [&](const ArmItem& a, const ArmItem& b) {
    return a.w != b.w ? a.w > b.w : inst.items[a.index].id < inst.items[b.index].id;
  });
  std::stable_sort(vs.begin(), vs.end(), [&](const ArmItem& a, const ArmItem& b) {
    return a.h != b.h ? a.h > b.h : inst.items[a.index].id < inst.items[b.index].id;
  });

  GapInstance pool_gap;
  pool_gap.bins = bins.gap.bins;
  for (std::size_t k = 0; k < inst.items.size(); ++k) {
    if (!in_arm_pool[k]) pool_gap.items.push_back(bins.gap.items[k]);
  }

  std::vector<i64> profits;
  for (const auto& it : inst.items) profits.push_back(it.p);

  i64 g = opts.gap.coarsen;  // container units
  i64 gl = 1;                // arm units
  for (;;) {
    try {
      GapOptions go = opts.gap;
      go.coarsen = g;
      GapValueTable table = gap_value_table(pool_gap, go);
      auto coarse_sizes = [&](const std::vector<ArmItem>& arm) {
        std::vector<std::vector<std::optional<i64>>> sz;
        for (const auto& a : arm) {
          auto s = bins.gap.items[a.index].sizes;
          for (auto& v : s) {
            if (v) v = ceil_div(*v, g);
          }
          sz.push_back(std::move(s));
        }
        return sz;
      };
      auto hc = hs, vc = vs;
      for (auto& a : hc) a.along = ceil_div(a.along, gl);
      for (auto& a : vc) a.along = ceil_div(a.along, gl);
      LcDp dp(hc, vc, L.h_L / gl, L.w_L / gl, coarse_sizes(hs), coarse_sizes(vs), std::move(table), gl, N,
               L.H_L);
      dp.set_profits(profits);
      const std::uint64_t s0 = dp.full_residual();
      dp.best(0, 0, 0, 0, s0);

      // Walk the optimal path, placing arm items at real coordinates.
      std::vector<PlacedItem> placed;
      std::map<std::string, std::size_t> assignment;
      std::size_t i = 0, j = 0;
      i64 t = 0, r = 0, real_t = 0, real_r = 0;
      std::uint64_t s = s0;
      while (i < hc.size() || j < vc.size()) {
        const i64 target = dp.best(i, j, t, r, s);
        bool advanced = false;
        for (const auto& m : dp.moves(i, j, t, r, s)) {
          const ArmItem& a = m.horizontal ? hc[i] : vc[j];
          if (m.gain + dp.best(m.i, m.j, m.t, m.r, m.s) != target) continue;
          const ItemSpec& item = inst.items[a.index];
          if (m.kind == 2) {
            placed.push_back({item, real_r, real_t, a.rotated});
            if (m.horizontal) real_t += a.h; else real_r += a.w;
          } else if (m.kind == 1) {
            assignment[item.id] = m.bin;
          }
          i = m.i;
          j = m.j;
          t = m.t;
          r = m.r;
          s = m.s;
          advanced = true;
          break;
        }
        if (!advanced) throw Error("L&C* reconstruction lost the optimal path");
      }
      // Pool assignment at the residual capacities left by the arm-candidate items.
      if (!pool_gap.bins.empty()) {
        GapInstance residual = pool_gap;
        for (std::size_t b = 0; b < residual.bins.size(); ++b) {
          const auto cap = (s / dp.pool().stride[b]) % (static_cast<std::uint64_t>(dp.pool().capacities[b]) + 1);
          residual.bins[b].capacity = static_cast<i64>(cap) * g;
        }
        GapOptions go2 = opts.gap;
        go2.coarsen = g;
        GapSolution sol = solve_gap(residual, go2);
        std::map<std::string, std::size_t> bin_index;
        for (std::size_t b = 0; b < residual.bins.size(); ++b) bin_index[residual.bins[b].id] = b;
        for (const auto& [item, bin] : sol.assignment) assignment[item] = bin_index.at(bin);
      }
      ContainerFill fill = realize_assignment(inst, containers, bins, assignment, eps);
      placed.insert(placed.end(), fill.placed.begin(), fill.placed.end());
      out.packing = make_packing(inst, placed);
      return out;
    } catch (const StateBudgetExceeded&) {
      if (!opts.auto_coarsen || g > (i64{1} << 50)) throw;
      // Coarsen whichever side dominates: arm offsets first when they are the larger radix.
      if (L.h_L / gl + L.w_L / gl > 64) gl *= 2; else g *= 2;
    }
  }
}

LcPacking solve_lc_star(const Instance& inst, int c, const Rational& eps, std::size_t budget,
                        const SearchOptions& opts) {
  if (c < 0) throw InvalidArgument("container count must be non-negative");
  const i64 N = inst.N;
  LcPacking best;
  {
    ContainerPacking base = solve_container(inst, c, eps, budget, opts);
    best.packing = std::move(base.packing);
    best.containers = std::move(base.containers);
    best.lshape = LShape{};
  }
  if (inst.items.empty()) return best;

  const auto ext = candidate_extents(inst, opts.grid);
  const i64 thick_cap = floor_mul(eps, N);
  std::set<i64> thick{0, thick_cap};
  for (const auto& it : inst.items) {
    for (i64 v : {it.w, it.h}) {
      if (v <= thick_cap) thick.insert(v);
    }
  }

  struct Job {
    LShape L;
    bool tall;
    std::vector<Container> containers;
  };
  std::vector<LShape> shapes;
  for (i64 H : ext) {
    if (2 * H > N) break;
    for (i64 w : thick) {
      for (i64 h : thick) {
        if (w == 0 && h == 0) continue;
        if (h > H) continue;
        LShape L{N, H, w, h};
        // Keep the shape only if some item could sit in one of its arms.
        bool usable = false;
        for (const auto& it : inst.items) {
          for (bool rot : {false, true}) {
            if (rot && !inst.rotation_allowed) continue;
            auto [iw, ih] = effective_dims(it, rot);
            if ((2 * iw > N && ih <= h && h > 0) || (2 * ih > H && ih <= H && iw <= w && w > 0)) usable = true;
          }
        }
        if (usable) shapes.push_back(L);
      }
    }
  }
  if (shapes.empty()) return best;

  std::vector<Job> jobs;
  // Without containers, the thickest arms dominate every thinner L of the same height.
  std::set<i64> heights;
  for (const auto& L : shapes) heights.insert(L.H_L);
  for (i64 H : heights) {
    const LShape L{N, H, thick_cap, std::min(thick_cap, H)};
    for (bool tall : {true, false}) jobs.push_back({L, tall, {}});
  }
  if (c > 0 && budget > 0) {
    // Spread the container budget over evenly spaced shapes.
    const std::size_t used = std::min(shapes.size(), budget);
    const std::size_t per_shape = std::max<std::size_t>(1, budget / shapes.size());
    for (std::size_t k = 0; k < used; ++k) {
      const LShape& L = shapes[k * shapes.size() / used];
      std::vector<Rect> arms;
      if (has_area(L.horizontal_arm())) arms.push_back(L.horizontal_arm());
      if (has_area(L.vertical_arm())) arms.push_back(L.vertical_arm());
      for (auto& cs : candidate_containers(inst, c, per_shape, opts.grid, arms)) {
        for (bool tall : {true, false}) jobs.push_back({L, tall, cs});
      }
    }
  }

  std::vector<LcPacking> results(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t k) {
    results[k] = pack_lc_fixed(inst, jobs[k].L, jobs[k].tall, jobs[k].containers, eps, opts);
  });
  i64 best_profit = best.packing.profit();
  for (auto& r : results) {
    const i64 p = r.packing.profit();
    if (p > best_profit) {
      best_profit = p;
      best = std::move(r);
    }
  }
  return best;
}

}  // namespace rectpack
