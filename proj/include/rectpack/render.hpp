#pragma once

#include "rectpack/container_search.hpp"
#include "rectpack/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rectpack {

struct RenderOptions {
  std::vector<Container> containers;
  std::optional<LShape> lshape;
  bool overlay_strips = false;
  Rational strip_thickness = Rational(1, 16);  // relative to N
  int size = 600;                              // pixels per side of the knapsack
};

// Deterministic SVG with the y axis pointing up.
std::string render_svg(const Packing& p, const RenderOptions& opts = {});

}  // namespace rectpack
