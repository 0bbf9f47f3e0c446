#pragma once

#include "rectpack/model.hpp"

#include <cstdint>
#include <vector>

namespace rectpack {

struct OracleLimits {
  std::size_t max_items = 10;
  std::size_t max_candidate_coords = 20000;
  double time_budget_s = 60.0;
  std::uint64_t node_budget = 200'000'000;
};

struct OracleResult {
  Packing packing;
  bool certified = false;  // search finished inside the budget
};

// Branch-and-bound over item subsets; feasibility by placement search over gravity-normalized
// coordinates. Throws InvalidArgument when the instance exceeds max_items.
OracleResult solve_exact(const Instance& inst, const OracleLimits& limits = {});

struct OracleContainerResult {
  Packing packing;
  std::vector<Container> containers;
  bool certified = false;
};

// Exhaustive search over container tuples (c <= 2) at subset-sum coordinates, each evaluated by
// GAP plus realization.
OracleContainerResult solve_exact_container(const Instance& inst, int c, const Rational& eps,
                                            const OracleLimits& limits = {});

}  // namespace rectpack
