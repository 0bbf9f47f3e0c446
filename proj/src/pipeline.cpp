#include "rectpack/greedy.hpp"
#include "rectpack/transforms.hpp"
#include "transform_util.hpp"

#include <algorithm>
#include <set>

namespace rectpack {

using namespace detail;

namespace {

// Diagonal mirror that keeps the rotation flag: the item spec is mirrored with it.
PlacedItem mirror(PlacedItem it) {
  std::swap(it.item.w, it.item.h);
  std::swap(it.x, it.y);
  return it;
}

struct Frame {
  bool mirrored = false;

  PlacedItem item(const PlacedItem& it) const { return mirrored ? mirror(it) : it; }
  Container container(const Container& c) const { return mirrored ? transpose(c) : c; }
};

struct Losses {
  std::map<std::string, StageLoss>& table;

  void add(const std::string& stage, const PlacedItem& it) {
    auto& s = table[stage];
    ++s.count;
    s.profit += it.item.p;
  }
};

}  // namespace

ContractionReport resource_contraction(const Packing& p, const std::vector<Container>& containers,
                                       const ContractionParams& params) {
  const i64 N = p.instance.N;
  const bool rot = p.instance.rotation_allowed;
  if (params.eps <= 0 || params.eps > Rational(1, 2)) throw InvalidArgument("eps must lie in (0, 1/2]");
  ValidationReport check = validate_packing(p);
  if (check.valid()) {
    // Items outside every container are thin items, so only contained items face the container rules.
    std::vector<PlacedItem> hosted;
    for (const auto& it : placed_items(p)) {
      for (const auto& c : containers) {
        if (contains(c.rect(), it.rect())) {
          hosted.push_back(it);
          break;
        }
      }
    }
    check = validate_container_packing(make_packing(p.instance, hosted), containers, params.eps);
  }
  if (!check.valid()) {
    const auto& v = check.violations.front();
    throw InvalidArgument("input is not a container packing: " + v.kind + ": " + v.detail);
  }

  ContractionReport rep;
  Losses loss{rep.losses};
  for (const char* stage : {"intermediate", "shrink", "thin_cross", "strip_overflow", "thin_items"}) {
    rep.losses[stage] = {};
  }

  std::vector<std::vector<PlacedItem>> content(containers.size());
  std::vector<PlacedItem> thin_items;
  for (const auto& it : placed_items(p)) {
    bool inside = false;
    for (std::size_t c = 0; c < containers.size() && !inside; ++c) {
      if (contains(containers[c].rect(), it.rect())) {
        content[c].push_back(it);
        inside = true;
      }
    }
    if (!inside) thin_items.push_back(it);
  }

  std::vector<i64> profits;
  for (const auto& items : content) profits.push_back(profit_of(items));
  rep.thresholds = choose_container_thresholds(containers, profits, N, params.eps, params.eps_large);
  const auto classes = classify_containers(containers, N, rep.thresholds.eps_c_small, rep.thresholds.eps_c_large);

  std::vector<ContainerContents> thick, thin;
  std::vector<PlacedItem> set_aside;  // killed by shrinking, repacked in weighted mode
  for (std::size_t c = 0; c < containers.size(); ++c) {
    switch (classes[c]) {
      case ContainerClass::IntermediateC:
        for (const auto& it : content[c]) loss.add("intermediate", it);
        break;
      case ContainerClass::Thin:
        thin.push_back({containers[c], content[c]});
        break;
      case ContainerClass::Thick: {
        ShrinkResult r = shrink_container(containers[c], content[c], params.eps, params.mode);
        std::set<std::string> killed(r.killed.begin(), r.killed.end());
        for (const auto& it : content[c]) {
          if (!killed.count(it.item.id)) continue;
          if (params.mode == LossMode::Weighted) set_aside.push_back(it);
          else loss.add("shrink", it);
        }
        if (r.container.w > 0 && r.container.h > 0) thick.push_back({r.container, r.kept});
        break;
      }
    }
  }
  thick = compact(std::move(thick));

  std::vector<Container> thick_boxes;
  for (const auto& cc : thick) thick_boxes.push_back(cc.container);
  const Rational t = params.eps * rep.thresholds.eps_c_large * N;
  rep.strip = find_free_strip(thick_boxes, N, t);
  if (rep.strip == FreeStrip::Neither) {
    std::string witness;
    try {
      const auto chain = extract_chain(thick_boxes, N, t);
      witness = chain ? "chain of " + std::to_string(chain->size()) + " containers reaches the top strip"
                      : "no vertical container meets the top strip";
    } catch (const ChainNotFound& e) {
      witness = e.what();
    }
    throw StripBlocked("both boundary strips of thickness " + to_string(t) + " meet a container; " + witness);
  }

  const i64 T = floor_of(t);
  const i64 third = T / 3;
  rep.strip_thickness = T;
  rep.mu = params.mu ? *params.mu : 2 * params.eps_thin;
  rep.mu_effective = std::min(rep.mu, Rational(third, N));

  // Lay the strip out as if it were on top; the right strip is handled through a diagonal mirror.
  const Frame frame{rep.strip == FreeStrip::Right};
  const i64 y0 = N - T;
  const i64 band_top = y0 + 2 * third;
  i64 cursor = y0;
  std::vector<PlacedItem> out_items;
  std::vector<Container> out_containers;
  for (const auto& cc : thick) {
    out_containers.push_back(cc.container);
    out_items.insert(out_items.end(), cc.items.begin(), cc.items.end());
  }

  for (const auto& cc : thin) {
    Container c = frame.container(cc.container);
    std::vector<PlacedItem> items;
    for (const auto& it : cc.items) items.push_back(frame.item(it));
    if (c.label == ContainerLabel::Vertical) {
      if (!rot) {
        for (const auto& it : cc.items) loss.add("thin_cross", it);
        continue;
      }
      c = transpose(c);
      items = transpose(items);
    }
    if (cursor + c.h > band_top) {
      for (const auto& it : cc.items) loss.add("strip_overflow", it);
      continue;
    }
    const i64 dx = -c.x, dy = cursor - c.y;
    Container placed{0, cursor, c.w, c.h, ContainerLabel::Horizontal};
    std::vector<PlacedItem> moved;
    for (auto it : items) {
      it.x += dx;
      it.y += dy;
      moved.push_back(frame.item(it));
    }
    out_containers.push_back(frame.container(placed));
    out_items.insert(out_items.end(), moved.begin(), moved.end());
    cursor += c.h;
  }

  if (!set_aside.empty()) {
    std::vector<OrientedItem> flat;
    std::map<std::string, PlacedItem> by_id;
    for (const auto& orig : set_aside) {
      const PlacedItem it = frame.item(orig);
      by_id[it.item.id] = orig;
      flat.push_back({it.item, rot ? it.item.h > it.item.w : it.rotated});
    }
    const Container region{0, cursor, N, std::max<i64>(band_top - cursor, 0), ContainerLabel::Horizontal};
    PackResult r = region.h > 0 ? stack_horizontal(region, flat) : PackResult{{}, {}};
    if (region.h <= 0) {
      for (const auto& f : flat) r.leftovers.push_back(f.first.id);
    }
    i64 top = cursor, right = 0;
    for (const auto& pl : r.placements) {
      PlacedItem it{frame.item(by_id.at(pl.item_id)).item, pl.x, pl.y, pl.rotated};
      top = std::max(top, it.y + it.h());
      right = std::max(right, it.x + it.w());
      out_items.push_back(frame.item(it));
    }
    for (const auto& id : r.leftovers) loss.add("shrink", by_id.at(id));
    if (top > cursor) {
      out_containers.push_back(frame.container({0, cursor, right, top - cursor, ContainerLabel::Horizontal}));
      cursor = top;
    }
  }

  std::vector<PlacedItem> unplaced;
  if (!thin_items.empty()) {
    std::vector<ItemSpec> specs;
    std::map<std::string, PlacedItem> by_id;
    for (const auto& orig : thin_items) {
      const PlacedItem it = frame.item(orig);
      specs.push_back(it.item);
      by_id[it.item.id] = orig;
    }
    const Container region{0, cursor, N, std::max<i64>(band_top - cursor, 0), ContainerLabel::Horizontal};
    PackResult r;
    if (region.h > 0) r = pack_thin_strip(region, specs, rot);
    else for (const auto& s : specs) r.leftovers.push_back(s.id);
    for (const auto& pl : r.placements) {
      const PlacedItem local = frame.item(by_id.at(pl.item_id));
      out_items.push_back(frame.item(PlacedItem{local.item, pl.x, pl.y, pl.rotated}));
    }
    for (const auto& id : r.leftovers) unplaced.push_back(by_id.at(id));
  }

  if (params.mode == LossMode::Cardinality && !unplaced.empty()) {
    // Free cells of a uniform grid below the strip take leftovers via NFDH.
    const i64 g = std::max<i64>(1, floor_mul(params.eps, N));
    std::vector<Rect> occupied;
    for (const auto& c : out_containers) occupied.push_back(frame.container(c).rect());
    for (const auto& it : out_items) occupied.push_back(frame.item(it).rect());
    std::map<std::string, PlacedItem> by_id;
    std::vector<ItemSpec> pending;
    for (const auto& orig : unplaced) {
      PlacedItem it = frame.item(orig);
      if (it.rotated) std::swap(it.item.w, it.item.h);
      by_id[it.item.id] = orig;
      pending.push_back(it.item);
    }
    for (i64 cy = 0; cy + g <= y0 && !pending.empty(); cy += g) {
      for (i64 cx = 0; cx + g <= N && !pending.empty(); cx += g) {
        const Rect cell{cx, cy, g, g};
        bool free = true;
        for (const auto& r : occupied) {
          if (interiors_overlap(r, cell)) {
            free = false;
            break;
          }
        }
        if (!free) continue;
        PackResult r = nfdh({cx, cy, g, g, ContainerLabel::Area}, pending);
        std::set<std::string> placed;
        for (const auto& pl : r.placements) {
          const PlacedItem local = frame.item(by_id.at(pl.item_id));
          out_items.push_back(frame.item(PlacedItem{local.item, pl.x, pl.y, local.rotated}));
          placed.insert(pl.item_id);
        }
        std::erase_if(pending, [&](const ItemSpec& s) { return placed.count(s.id) > 0; });
        occupied.push_back(cell);
      }
    }
    std::set<std::string> left;
    for (const auto& s : pending) left.insert(s.id);
    std::erase_if(unplaced, [&](const PlacedItem& it) { return !left.count(it.item.id); });
  }
  for (const auto& it : unplaced) loss.add("thin_items", it);

  rep.packing = make_packing(p.instance, out_items);
  rep.containers = out_containers;
  for (const auto& [stage, s] : rep.losses) {
    rep.discarded_count += s.count;
    rep.discarded_profit += s.profit;
  }
  return rep;
}

}  // namespace rectpack
