#pragma once

#include "rectpack/gap.hpp"
#include "rectpack/greedy.hpp"
#include "rectpack/model.hpp"

#include <map>
#include <string>
#include <vector>

namespace rectpack {

struct SearchOptions {
  i64 grid = 16;
  GapOptions gap{8, std::uint64_t{1} << 20, 1};
  bool auto_coarsen = true;  // retry GAP with doubled coarsening when the state budget trips
};

// Coordinate values used for container extents: {N} and item extents and their pairwise sums,
// plus ceil(N*q/grid). All values lie in [1, N].
std::vector<i64> candidate_extents(const Instance& inst, i64 grid);

// Deterministic enumeration of at most `budget` pairwise-disjoint container tuples with at most c
// containers, none intersecting `obstacles`. Containers sit at corner points of what is already
// placed (gravity-normalized); the last container of a tuple may be grown to the maximal free size.
std::vector<std::vector<Container>> candidate_containers(const Instance& inst, int c, std::size_t budget,
                                                         i64 grid = 16, const std::vector<Rect>& obstacles = {});

struct ContainerFill {
  std::vector<PlacedItem> placed;
  std::vector<std::string> dropped;  // assigned by GAP but not realized
};

// Places a fixed assignment (item id -> container index) inside the containers: stacks for
// horizontal/vertical containers, NFDH with the group-discard fallback for area containers.
ContainerFill realize_assignment(const Instance& inst, const std::vector<Container>& containers,
                                 const ContainerBins& bins, const std::map<std::string, std::size_t>& assignment,
                                 const Rational& eps);

// Solves the GAP, retrying with coarser capacities when allowed. Returns the coarsening used.
GapSolution solve_gap_adaptive(const GapInstance& gap, const SearchOptions& opts, i64* used_coarsen = nullptr);

struct ContainerPacking {
  Packing packing;
  std::vector<Container> containers;
  std::vector<std::string> dropped;
};

ContainerPacking pack_into_containers_detailed(const Instance& inst, const std::vector<Container>& containers,
                                               const Rational& eps, const SearchOptions& opts = {});

Packing pack_into_containers(const Instance& inst, const std::vector<Container>& containers, const Rational& eps,
                             const SearchOptions& opts = {});

ContainerPacking solve_container(const Instance& inst, int c, const Rational& eps, std::size_t budget,
                                 const SearchOptions& opts = {});

// ---- L&C* packings ----

struct LShape {
  i64 W_L = 0;
  i64 H_L = 0;
  i64 w_L = 0;
  i64 h_L = 0;

  bool absent() const { return H_L == 0 && w_L == 0 && h_L == 0; }
  Rect horizontal_arm() const { return {0, 0, W_L, h_L}; }
  Rect vertical_arm() const { return {0, 0, w_L, H_L}; }
};

struct ItemPartition {
  std::vector<std::string> I_H;
  std::vector<std::string> I_V;
  std::vector<std::string> I_R;
};

ItemPartition partition_for_L(const Instance& inst, i64 H_L, const Rational& eps);

// Cell of the L&C* dynamic program: counts of consumed horizontal/vertical candidates, the arm
// offsets, and the residual-capacity vector of the containers (in GAP units).
struct DpCell {
  std::size_t i = 0;
  std::size_t j = 0;
  i64 t_L = 0;
  i64 r_L = 0;
  std::vector<i64> residual;
};

struct LcPacking {
  Packing packing;
  LShape lshape;
  std::vector<Container> containers;
};

// Validator for L&C* packings: knapsack validity, container rules for items outside the L, and the
// L conditions (arm geometry, arm membership thresholds, uniform vertical-arm orientation).
ValidationReport validate_lc_packing(const Packing& p, const LShape& L, const std::vector<Container>& containers,
                                     const Rational& eps);

// Best L&C* packing for a fixed L, orientation guess and container set.
LcPacking pack_lc_fixed(const Instance& inst, const LShape& L, bool vertical_arm_tall,
                        const std::vector<Container>& containers, const Rational& eps, const SearchOptions& opts = {});

LcPacking solve_lc_star(const Instance& inst, int c, const Rational& eps, std::size_t budget,
                        const SearchOptions& opts = {});

}  // namespace rectpack
