#pragma once

#include "rectpack/errors.hpp"
#include "rectpack/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rectpack {

using i64 = std::int64_t;

struct ItemSpec {
  std::string id;
  i64 w = 0;
  i64 h = 0;
  i64 p = 0;
};

struct Instance {
  i64 N = 0;
  bool rotation_allowed = false;
  std::vector<ItemSpec> items;

  const ItemSpec* find(const std::string& id) const;
  i64 total_profit() const;
};

struct Rect {
  i64 x = 0;
  i64 y = 0;
  i64 w = 0;
  i64 h = 0;

  i64 right() const { return x + w; }
  i64 top() const { return y + h; }
  i64 area() const { return w * h; }
  bool operator==(const Rect&) const = default;
};

// Open-rectangle semantics: touching edges do not overlap.
bool interiors_overlap(const Rect& a, const Rect& b);
bool contains(const Rect& outer, const Rect& inner);

struct Placement {
  std::string item_id;
  i64 x = 0;
  i64 y = 0;
  bool rotated = false;
};

struct Packing {
  Instance instance;
  std::vector<Placement> placements;

  i64 profit() const;
};

std::pair<i64, i64> effective_dims(const ItemSpec& item, bool rotated);

// An item together with where it sits.
struct PlacedItem {
  ItemSpec item;
  i64 x = 0;
  i64 y = 0;
  bool rotated = false;

  i64 w() const { return rotated ? item.h : item.w; }
  i64 h() const { return rotated ? item.w : item.h; }
  Rect rect() const { return {x, y, w(), h()}; }
  Placement placement() const { return {item.id, x, y, rotated}; }
};

std::vector<PlacedItem> placed_items(const Packing& p);
Packing make_packing(const Instance& inst, const std::vector<PlacedItem>& items);

enum class ContainerLabel { Horizontal, Vertical, Area };

struct Container {
  i64 x = 0;
  i64 y = 0;
  i64 w = 0;
  i64 h = 0;
  ContainerLabel label = ContainerLabel::Horizontal;

  i64 right() const { return x + w; }
  i64 top() const { return y + h; }
  Rect rect() const { return {x, y, w, h}; }
  bool operator==(const Container&) const = default;
};

std::string label_name(ContainerLabel label);
ContainerLabel parse_label(const std::string& name);

enum class ItemClass { Small, Large, HorizontalItem, VerticalItem, Intermediate };

std::string class_name(ItemClass c);

struct Thresholds {
  Rational eps;
  Rational eps_small;
  Rational eps_large;
};

struct Violation {
  std::string kind;
  std::vector<std::string> ids;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  void add(std::string kind, std::vector<std::string> ids, std::string detail);
  void merge(const ValidationReport& other);
};

ValidationReport validate_packing(const Packing& p);

// Checks placements of `items` against an arbitrary region instead of the knapsack.
ValidationReport validate_in_region(const Rect& region, const std::vector<PlacedItem>& items);

ValidationReport validate_container_packing(const Packing& p, const std::vector<Container>& containers,
                                            const Rational& eps);

ItemClass classify_item(const ItemSpec& item, i64 N, const Thresholds& t);

// Candidate threshold pairs (eps_small, eps_large) = (e_{j+1}, e_j) with e_0 = eps^2 and
// e_{j+1} = e_j^3. Rungs below 1/N are never materialized since every later band is empty.
Thresholds choose_thresholds(const std::vector<ItemSpec>& items, i64 N, const Rational& eps);

i64 intermediate_profit(const std::vector<ItemSpec>& items, i64 N, const Thresholds& t);

}  // namespace rectpack
