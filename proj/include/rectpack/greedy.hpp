#pragma once

#include "rectpack/model.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rectpack {

struct PackResult {
  std::vector<Placement> placements;
  std::vector<std::string> leftovers;
};

using OrientedItem = std::pair<ItemSpec, bool>;

// Bottom-up, left-aligned stack; an item is packed iff it fits at the current height.
PackResult stack_horizontal(const Container& region, const std::vector<OrientedItem>& items);
// Left-to-right, bottom-aligned row.
PackResult stack_vertical(const Container& region, const std::vector<OrientedItem>& items);

// Next-Fit-Decreasing-Height. Order: height desc, width desc, id asc.
PackResult nfdh(const Container& region, const std::vector<ItemSpec>& items);

// Empty when the area condition for packing every item holds, else a message quoting both sides.
std::optional<std::string> steinberg_violation(i64 width, i64 height, const std::vector<ItemSpec>& items);

// Packs every item or throws PreconditionFailed.
PackResult steinberg(const Container& region, const std::vector<ItemSpec>& items);

// Longest side horizontal (when rotations are allowed), steinberg, NFDH on failure.
PackResult pack_thin_strip(const Container& strip, const std::vector<ItemSpec>& items, bool rotation_allowed);

// Sum of w*h over placed ids.
i64 packed_area(const PackResult& r, const std::vector<ItemSpec>& items);

std::vector<PlacedItem> to_placed(const PackResult& r, const std::vector<ItemSpec>& items);

}  // namespace rectpack
