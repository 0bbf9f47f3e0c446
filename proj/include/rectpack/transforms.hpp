#pragma once

#include "rectpack/model.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rectpack {

enum class Orientation { Horizontal, Vertical };

std::string orientation_name(Orientation o);
Orientation parse_orientation(const std::string& name);

// ---- corridors ----

enum class CorridorKind { Open, Closed };

struct Subcorridor {
  Rect rect;
  Orientation orientation = Orientation::Horizontal;
};

struct Corridor {
  CorridorKind kind = CorridorKind::Open;
  std::vector<Subcorridor> subcorridors;

  int bends() const;
  i64 area() const;  // area of the union
};

struct CorridorProcessOutput {
  std::vector<Container> boxes;
  std::vector<Container> containers;  // boxes split by box_to_containers
  std::vector<PlacedItem> boxed;      // items kept in containers, at their new positions
  std::vector<std::string> thin_items;
  std::vector<std::string> killed_items;
  std::size_t box_bound = 0;       // count bound for the boxes
  Rational thin_area_bound;        // 2 * eps_thin * a(corridor)
  i64 thin_area = 0;
};

// Each subcorridor minus its predecessor forms a piece. Pieces are cut into geometric lanes from their
// bottom or left edge; lane 0 becomes thin, crossers are killed, and other lanes are re-boxed and split
// into containers.
CorridorProcessOutput process_corridor(const Corridor& corr, const Packing& packed, const Rational& eps,
                                       const Rational& eps_thin);

struct BoxSplit {
  std::vector<Container> containers;
  std::vector<PlacedItem> kept;
  std::vector<std::string> killed;
};

BoxSplit box_to_containers(const Container& box, const std::vector<PlacedItem>& items, const Rational& delta);

// ---- containers ----

enum class ContainerClass { Thick, Thin, IntermediateC };

std::string container_class_name(ContainerClass c);

std::vector<ContainerClass> classify_containers(const std::vector<Container>& containers, i64 N,
                                                const Rational& eps_c_small, const Rational& eps_c_large);

struct ContainerThresholds {
  Rational eps_c_small;
  Rational eps_c_large;
  int band = 1;
};

// profits[c] is the profit packed in containers[c].
ContainerThresholds choose_container_thresholds(const std::vector<Container>& containers,
                                                const std::vector<i64>& profits, i64 N, const Rational& eps,
                                                const Rational& eps_large);

enum class LossMode { Cardinality, Weighted };

LossMode parse_mode(const std::string& name);

struct ShrinkResult {
  Container container;
  std::vector<PlacedItem> kept;
  std::vector<std::string> killed;
};

ShrinkResult shrink_container(const Container& C, const std::vector<PlacedItem>& items, const Rational& delta,
                              LossMode mode = LossMode::Weighted);

BoxSplit split_container(const Container& C, const std::vector<PlacedItem>& items, const Rational& delta);

struct ContainerContents {
  Container container;
  std::vector<PlacedItem> items;
};

std::vector<ContainerContents> compact(std::vector<ContainerContents> contents);

enum class FreeStrip { Top, Right, Neither };

std::string free_strip_name(FreeStrip s);

FreeStrip find_free_strip(const std::vector<Container>& containers, i64 N, const Rational& thickness);

// Chain C_0..C_k of vertical containers from the highest one meeting the top strip down to the floor, each
// top edge touching the bottom edge of the previous one. Empty when no vertical container meets the strip.
std::optional<std::vector<Container>> extract_chain(const std::vector<Container>& containers, i64 N,
                                                    const Rational& thickness);

struct ContractionParams {
  Rational eps = Rational(1, 4);
  Rational eps_large = Rational(1, 16);
  Rational eps_thin = Rational(1, 64);
  LossMode mode = LossMode::Weighted;
  std::optional<Rational> mu;  // defaults to 2 * eps_thin
};

struct StageLoss {
  i64 count = 0;
  i64 profit = 0;
};

struct ContractionReport {
  Packing packing;
  std::vector<Container> containers;
  FreeStrip strip = FreeStrip::Neither;
  ContainerThresholds thresholds;
  Rational mu;              // requested
  Rational mu_effective;    // everything lies in the knapsack minus a band of this relative thickness
  i64 strip_thickness = 0;
  std::map<std::string, StageLoss> losses;
  i64 discarded_count = 0;
  i64 discarded_profit = 0;
};

// Placed items outside every container count as thin items.
ContractionReport resource_contraction(const Packing& p, const std::vector<Container>& containers,
                                       const ContractionParams& params);

// Removes the items whose interiors meet a strip of the given thickness at a seeded uniform offset.
Packing delete_random_strip(const Packing& p, Orientation orientation, i64 thickness, std::uint64_t seed);

// Offset used by delete_random_strip for a seed.
i64 random_strip_offset(i64 N, i64 thickness, std::uint64_t seed);

// ---- fixtures ----

struct CorridorFixture {
  Corridor corridor;
  Packing packing;
};

// Seeded corridor with hand-style stacked items: open with 0..max_bends bends, or a closed ring.
CorridorFixture gen_corridor_fixture(std::uint64_t seed, i64 N = 1000, int max_bends = 2, bool closed = false);

}  // namespace rectpack
