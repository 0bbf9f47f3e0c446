#include "rectpack/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace rectpack {

const ItemSpec* Instance::find(const std::string& id) const {
  for (const auto& it : items) {
    if (it.id == id) return &it;
  }
  return nullptr;
}

i64 Instance::total_profit() const {
  i64 s = 0;
  for (const auto& it : items) s += it.p;
  return s;
}

bool interiors_overlap(const Rect& a, const Rect& b) {
  return a.x < b.right() && b.x < a.right() && a.y < b.top() && b.y < a.top();
}

bool contains(const Rect& outer, const Rect& inner) {
  return inner.x >= outer.x && inner.y >= outer.y && inner.right() <= outer.right() &&
         inner.top() <= outer.top();
}

i64 Packing::profit() const {
  std::map<std::string, i64> profit_of;
  for (const auto& it : instance.items) profit_of[it.id] = it.p;
  std::set<std::string> seen;
  i64 s = 0;
  for (const auto& pl : placements) {
    auto f = profit_of.find(pl.item_id);
    if (f != profit_of.end() && seen.insert(pl.item_id).second) s += f->second;
  }
  return s;
}

std::pair<i64, i64> effective_dims(const ItemSpec& item, bool rotated) {
  if (rotated) return {item.h, item.w};
  return {item.w, item.h};
}

std::vector<PlacedItem> placed_items(const Packing& p) {
  std::map<std::string, const ItemSpec*> by_id;
  for (const auto& it : p.instance.items) by_id[it.id] = &it;
  std::vector<PlacedItem> out;
  out.reserve(p.placements.size());
  for (const auto& pl : p.placements) {
    auto f = by_id.find(pl.item_id);
    if (f == by_id.end()) throw InvalidArgument("placement references unknown item '" + pl.item_id + "'");
    out.push_back({*f->second, pl.x, pl.y, pl.rotated});
  }
  return out;
}

Packing make_packing(const Instance& inst, const std::vector<PlacedItem>& items) {
  Packing p;
  p.instance = inst;
  p.placements.reserve(items.size());
  for (const auto& it : items) p.placements.push_back(it.placement());
  return p;
}

std::string label_name(ContainerLabel label) {
  switch (label) {
    case ContainerLabel::Horizontal: return "horizontal";
    case ContainerLabel::Vertical: return "vertical";
    case ContainerLabel::Area: return "area";
  }
  return "?";
}

ContainerLabel parse_label(const std::string& name) {
  if (name == "horizontal" || name == "H") return ContainerLabel::Horizontal;
  if (name == "vertical" || name == "V") return ContainerLabel::Vertical;
  if (name == "area" || name == "A") return ContainerLabel::Area;
  throw InvalidArgument("unknown container label '" + name + "'");
}

std::string class_name(ItemClass c) {
  switch (c) {
    case ItemClass::Small: return "small";
    case ItemClass::Large: return "large";
    case ItemClass::HorizontalItem: return "horizontal";
    case ItemClass::VerticalItem: return "vertical";
    case ItemClass::Intermediate: return "intermediate";
  }
  return "?";
}

void ValidationReport::add(std::string kind, std::vector<std::string> ids, std::string detail) {
  violations.push_back({std::move(kind), std::move(ids), std::move(detail)});
}

void ValidationReport::merge(const ValidationReport& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

namespace {

std::string rect_str(const Rect& r) {
  std::ostringstream os;
  os << "[" << r.x << "," << r.right() << "]x[" << r.y << "," << r.top() << "]";
  return os.str();
}

void check_pairwise(const std::vector<PlacedItem>& items, ValidationReport& report) {
  // Sweep on x keeps this near-linear for packings with few vertical overlaps.
  std::vector<std::size_t> order(items.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return items[a].x < items[b].x || (items[a].x == items[b].x && a < b);
  });
  for (std::size_t a = 0; a < order.size(); ++a) {
    Rect ra = items[order[a]].rect();
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      Rect rb = items[order[b]].rect();
      if (rb.x >= ra.right()) break;
      if (interiors_overlap(ra, rb)) {
        std::string ia = items[order[a]].item.id, ib = items[order[b]].item.id;
        if (ib < ia) std::swap(ia, ib);
        report.add("overlap", {ia, ib}, "interiors of " + rect_str(ra) + " and " + rect_str(rb) + " intersect");
      }
    }
  }
}

}  // namespace

ValidationReport validate_in_region(const Rect& region, const std::vector<PlacedItem>& items) {
  ValidationReport report;
  std::set<std::string> seen;
  for (const auto& it : items) {
    if (!seen.insert(it.item.id).second) report.add("duplicate_item", {it.item.id}, "item placed twice");
    if (!contains(region, it.rect())) {
      report.add("out_of_bounds", {it.item.id}, rect_str(it.rect()) + " not inside " + rect_str(region));
    }
  }
  check_pairwise(items, report);
  return report;
}

ValidationReport validate_packing(const Packing& p) {
  ValidationReport report;
  std::map<std::string, const ItemSpec*> by_id;
  for (const auto& it : p.instance.items) by_id[it.id] = &it;
  std::vector<PlacedItem> items;
  for (const auto& pl : p.placements) {
    auto f = by_id.find(pl.item_id);
    if (f == by_id.end()) {
      report.add("unknown_item", {pl.item_id}, "placement references an item not in the instance");
      continue;
    }
    if (pl.rotated && !p.instance.rotation_allowed) {
      report.add("illegal_rotation", {pl.item_id}, "rotated placement in a rotation-forbidden instance");
    }
    items.push_back({*f->second, pl.x, pl.y, pl.rotated});
  }
  report.merge(validate_in_region({0, 0, p.instance.N, p.instance.N}, items));
  return report;
}

ValidationReport validate_container_packing(const Packing& p, const std::vector<Container>& containers,
                                            const Rational& eps) {
  ValidationReport report = validate_packing(p);
  const i64 N = p.instance.N;
  for (std::size_t i = 0; i < containers.size(); ++i) {
    const Rect ci = containers[i].rect();
    if (ci.w < 1 || ci.h < 1 || !contains({0, 0, N, N}, ci)) {
      report.add("container_bounds", {"container#" + std::to_string(i)}, rect_str(ci) + " is degenerate or outside the knapsack");
    }
    for (std::size_t j = i + 1; j < containers.size(); ++j) {
      if (interiors_overlap(ci, containers[j].rect())) {
        report.add("container_overlap", {"container#" + std::to_string(i), "container#" + std::to_string(j)},
                   "containers intersect");
      }
    }
  }
  std::vector<PlacedItem> items;
  try {
    items = placed_items(p);
  } catch (const Error&) {
    return report;
  }
  std::vector<std::vector<const PlacedItem*>> members(containers.size());
  for (const auto& it : items) {
    std::vector<std::size_t> hosts;
    for (std::size_t c = 0; c < containers.size(); ++c) {
      if (contains(containers[c].rect(), it.rect())) hosts.push_back(c);
    }
    if (hosts.size() != 1) {
      report.add("container_membership", {it.item.id},
                 "item lies in " + std::to_string(hosts.size()) + " containers, expected exactly one");
      continue;
    }
    members[hosts[0]].push_back(&it);
  }
  for (std::size_t c = 0; c < containers.size(); ++c) {
    const Container& C = containers[c];
    const auto& m = members[c];
    if (C.label == ContainerLabel::Area) {
      for (const auto* it : m) {
        if (Rational(it->w()) > eps * C.w || Rational(it->h()) > eps * C.h) {
          report.add("area_container_item", {it->item.id},
                     "item " + std::to_string(it->w()) + "x" + std::to_string(it->h()) +
                         " exceeds eps times the container size " + std::to_string(C.w) + "x" + std::to_string(C.h));
        }
      }
      continue;
    }
    const bool horizontal = C.label == ContainerLabel::Horizontal;
    for (std::size_t a = 0; a < m.size(); ++a) {
      for (std::size_t b = a + 1; b < m.size(); ++b) {
        Rect ra = m[a]->rect(), rb = m[b]->rect();
        bool clash = horizontal ? (ra.y < rb.top() && rb.y < ra.top()) : (ra.x < rb.right() && rb.x < ra.right());
        if (clash) {
          report.add("stacking", {m[a]->item.id, m[b]->item.id},
                     std::string(horizontal ? "y" : "x") + "-projections overlap inside a " + label_name(C.label) +
                         " container");
        }
      }
    }
  }
  return report;
}

namespace {

struct Cutoffs {
  i64 small;  // dims <= small are small
  i64 large;  // dims > large are large
};

Cutoffs cutoffs(i64 N, const Rational& eps_small, const Rational& eps_large) {
  return {floor_mul(eps_small, N), floor_mul(eps_large, N)};
}

ItemClass classify_with(const ItemSpec& item, const Cutoffs& c) {
  const bool ws = item.w <= c.small, hs = item.h <= c.small;
  const bool wl = item.w > c.large, hl = item.h > c.large;
  if (ws && hs) return ItemClass::Small;
  if (wl && hl) return ItemClass::Large;
  if (wl && hs) return ItemClass::HorizontalItem;
  if (hl && ws) return ItemClass::VerticalItem;
  return ItemClass::Intermediate;
}

}  // namespace

ItemClass classify_item(const ItemSpec& item, i64 N, const Thresholds& t) {
  return classify_with(item, cutoffs(N, t.eps_small, t.eps_large));
}

i64 intermediate_profit(const std::vector<ItemSpec>& items, i64 N, const Thresholds& t) {
  Cutoffs c = cutoffs(N, t.eps_small, t.eps_large);
  i64 s = 0;
  for (const auto& it : items) {
    if (classify_with(it, c) == ItemClass::Intermediate) s += it.p;
  }
  return s;
}

Thresholds choose_thresholds(const std::vector<ItemSpec>& items, i64 N, const Rational& eps) {
  if (eps <= 0 || eps > Rational(1, 2)) throw InvalidArgument("eps must lie in (0, 1/2]");
  const i64 rungs = ceil_of(Rational(2) / eps);
  Rational hi = eps * eps;
  std::optional<Thresholds> best;
  i64 best_profit = 0;
  for (i64 j = 0; j < rungs; ++j) {
    Rational lo = hi * hi * hi;
    Thresholds t{eps, lo, hi};
    i64 prof = intermediate_profit(items, N, t);
    if (!best || prof < best_profit) {
      best = t;
      best_profit = prof;
    }
    // Once the band holds nothing, no later rung can do better under the smallest-j tie-break.
    if (best_profit == 0) break;
    hi = lo;
  }
  return *best;
}

}  // namespace rectpack
