#pragma once

#include "rectpack/model.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rectpack {

struct GapBin {
  std::string id;
  i64 capacity = 0;
};

struct GapItem {
  std::string id;
  i64 profit = 0;
  std::vector<std::optional<i64>> sizes;  // one per bin; nullopt = does not fit
};

struct GapInstance {
  std::vector<GapBin> bins;
  std::vector<GapItem> items;
};

struct GapSolution {
  std::map<std::string, std::string> assignment;  // item id -> bin id
  i64 profit = 0;
};

struct GapOptions {
  std::size_t k_max = 8;
  std::uint64_t state_budget = std::uint64_t{1} << 26;  // items * prod(capacity + 1)
  i64 coarsen = 1;  // capacities floor-divided, sizes ceil-divided
};

GapInstance coarsen(const GapInstance& inst, i64 g);

// Exact DP over residual capacities. Ties go to the lexicographically smallest assignment
// vector over items in id order, with "unassigned" ranked before every bin.
GapSolution solve_gap(const GapInstance& inst, const GapOptions& opts = {});

// Optimal values for every residual-capacity vector, in coarsened units. Index of a residual
// vector r is sum r[b]*stride[b].
struct GapValueTable {
  std::vector<i64> capacities;
  std::vector<std::uint64_t> stride;
  std::vector<i64> value;
};

GapValueTable gap_value_table(const GapInstance& inst, const GapOptions& opts = {});

// Table-free feasibility check of a solution against the instance.
bool gap_feasible(const GapInstance& inst, const GapSolution& sol);

struct ContainerBins {
  GapInstance gap;
  std::vector<std::vector<bool>> rotated;  // [item][bin] orientation used for sizing
};

ContainerBins container_bins(const std::vector<Container>& containers, const std::vector<ItemSpec>& items,
                             bool rotation_allowed, const Rational& eps);

GapInstance bins_from_containers(const std::vector<Container>& containers, const std::vector<ItemSpec>& items,
                                 bool rotation_allowed, const Rational& eps);

}  // namespace rectpack
