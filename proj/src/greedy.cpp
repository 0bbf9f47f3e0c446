#include "rectpack/greedy.hpp"

#include <algorithm>
#include <map>

namespace rectpack {

PackResult stack_horizontal(const Container& region, const std::vector<OrientedItem>& items) {
  PackResult r;
  i64 y = 0;
  for (const auto& [item, rotated] : items) {
    auto [w, h] = effective_dims(item, rotated);
    if (w <= region.w && y + h <= region.h) {
      r.placements.push_back({item.id, region.x, region.y + y, rotated});
      y += h;
    } else {
      r.leftovers.push_back(item.id);
    }
  }
  return r;
}

PackResult stack_vertical(const Container& region, const std::vector<OrientedItem>& items) {
  PackResult r;
  i64 x = 0;
  for (const auto& [item, rotated] : items) {
    auto [w, h] = effective_dims(item, rotated);
    if (h <= region.h && x + w <= region.w) {
      r.placements.push_back({item.id, region.x + x, region.y, rotated});
      x += w;
    } else {
      r.leftovers.push_back(item.id);
    }
  }
  return r;
}

PackResult nfdh(const Container& region, const std::vector<ItemSpec>& items) {
  std::vector<const ItemSpec*> order;
  order.reserve(items.size());
  for (const auto& it : items) order.push_back(&it);
  std::sort(order.begin(), order.end(), [](const ItemSpec* a, const ItemSpec* b) {
    if (a->h != b->h) return a->h > b->h;
    if (a->w != b->w) return a->w > b->w;
    return a->id < b->id;
  });
  PackResult r;
  i64 shelf_y = 0, shelf_h = 0, x = 0;
  bool open = false, stopped = false;
  for (const ItemSpec* it : order) {
    if (stopped || it->w > region.w) {
      r.leftovers.push_back(it->id);
      continue;
    }
    if (!open || x + it->w > region.w) {
      i64 next_y = open ? shelf_y + shelf_h : 0;
      if (next_y + it->h > region.h) {
        stopped = true;
        r.leftovers.push_back(it->id);
        continue;
      }
      shelf_y = next_y;
      shelf_h = it->h;
      x = 0;
      open = true;
    }
    r.placements.push_back({it->id, region.x + x, region.y + shelf_y, false});
    x += it->w;
  }
  return r;
}

PackResult pack_thin_strip(const Container& strip, const std::vector<ItemSpec>& items, bool rotation_allowed) {
  std::vector<ItemSpec> turned = items;
  std::map<std::string, bool> rotated;
  for (auto& it : turned) {
    bool flip = rotation_allowed && it.h > it.w;
    rotated[it.id] = flip;
    if (flip) std::swap(it.w, it.h);
  }
  PackResult r;
  if (!steinberg_violation(strip.w, strip.h, turned)) {
    r = steinberg(strip, turned);
  } else {
    r = nfdh(strip, turned);
  }
  for (auto& pl : r.placements) pl.rotated = rotated[pl.item_id];
  return r;
}

i64 packed_area(const PackResult& r, const std::vector<ItemSpec>& items) {
  std::map<std::string, i64> area;
  for (const auto& it : items) area[it.id] = it.w * it.h;
  i64 s = 0;
  for (const auto& pl : r.placements) s += area[pl.item_id];
  return s;
}

std::vector<PlacedItem> to_placed(const PackResult& r, const std::vector<ItemSpec>& items) {
  std::map<std::string, const ItemSpec*> by_id;
  for (const auto& it : items) by_id[it.id] = &it;
  std::vector<PlacedItem> out;
  out.reserve(r.placements.size());
  for (const auto& pl : r.placements) out.push_back({*by_id.at(pl.item_id), pl.x, pl.y, pl.rotated});
  return out;
}

}  // namespace rectpack
