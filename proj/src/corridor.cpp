#include "rectpack/transforms.hpp"
#include "transform_util.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

namespace rectpack {

using namespace detail;

namespace {

Rect transpose_rect(const Rect& r) { return {r.y, r.x, r.h, r.w}; }

// Area of the union of rectangles restricted to `clip`, by coordinate compression.
i64 union_area(const std::vector<Rect>& rects, const Rect& clip) {
  std::set<i64> xs{clip.x, clip.right()}, ys{clip.y, clip.top()};
  for (const auto& r : rects) {
    for (i64 v : {r.x, r.right()}) {
      if (v > clip.x && v < clip.right()) xs.insert(v);
    }
    for (i64 v : {r.y, r.top()}) {
      if (v > clip.y && v < clip.top()) ys.insert(v);
    }
  }
  const std::vector<i64> X(xs.begin(), xs.end()), Y(ys.begin(), ys.end());
  i64 area = 0;
  for (std::size_t i = 0; i + 1 < X.size(); ++i) {
    for (std::size_t j = 0; j + 1 < Y.size(); ++j) {
      const Rect cell{X[i], Y[j], X[i + 1] - X[i], Y[j + 1] - Y[j]};
      for (const auto& r : rects) {
        if (contains(r, cell)) {
          area += cell.area();
          break;
        }
      }
    }
  }
  return area;
}

Rect bounding_box(const std::vector<Subcorridor>& subs) {
  i64 x0 = subs[0].rect.x, y0 = subs[0].rect.y, x1 = subs[0].rect.right(), y1 = subs[0].rect.top();
  for (const auto& s : subs) {
    x0 = std::min(x0, s.rect.x);
    y0 = std::min(y0, s.rect.y);
    x1 = std::max(x1, s.rect.right());
    y1 = std::max(y1, s.rect.top());
  }
  return {x0, y0, x1 - x0, y1 - y0};
}

// a minus b, where b must cover a full-thickness end of a.
Rect cut_end(const Rect& a, Orientation o, const Rect& b, std::size_t index) {
  if (o == Orientation::Vertical) {
    return transpose_rect(cut_end(transpose_rect(a), Orientation::Horizontal, transpose_rect(b), index));
  }
  const i64 x0 = std::max(a.x, b.x), x1 = std::min(a.right(), b.right());
  const i64 y0 = std::max(a.y, b.y), y1 = std::min(a.top(), b.top());
  const auto fail = [&](const std::string& why) {
    return MalformedCorridor("subcorridor " + std::to_string(index) + ": " + why);
  };
  if (x0 >= x1 || y0 >= y1) throw fail("does not overlap its predecessor");
  if (y0 != a.y || y1 != a.top()) throw fail("bend region does not span the full thickness");
  Rect out = a;
  if (x0 == a.x) {
    out.x = x1;
    out.w = a.right() - x1;
  } else if (x1 == a.right()) {
    out.w = x0 - a.x;
  } else {
    throw fail("bend region is not at an end");
  }
  if (out.w <= 0) throw fail("nothing left after removing the bend region");
  return out;
}

struct Piece {
  Rect rect;
  Orientation orientation;
};

std::vector<Subcorridor> normalized(const Corridor& corr) {
  std::vector<Subcorridor> subs = corr.subcorridors;
  if (subs.empty()) throw MalformedCorridor("corridor has no subcorridors");
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const Rect& r = subs[i].rect;
    if (r.w <= 0 || r.h <= 0) throw MalformedCorridor("subcorridor " + std::to_string(i) + " is empty");
    if (i > 0 && subs[i].orientation == subs[i - 1].orientation) {
      throw MalformedCorridor("subcorridors " + std::to_string(i - 1) + " and " + std::to_string(i) +
                              " share an orientation");
    }
  }
  if (corr.kind == CorridorKind::Closed) {
    if (subs.size() < 4 || subs.size() % 2 != 0 || subs.front().orientation == subs.back().orientation) {
      throw MalformedCorridor("a closed corridor needs an even number (>= 4) of alternating subcorridors");
    }
    std::size_t start = subs.size();
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (subs[i].orientation != Orientation::Horizontal) continue;
      if (start == subs.size() || subs[i].rect.y < subs[start].rect.y ||
          (subs[i].rect.y == subs[start].rect.y && subs[i].rect.x < subs[start].rect.x)) {
        start = i;
      }
    }
    std::rotate(subs.begin(), subs.begin() + static_cast<std::ptrdiff_t>(start), subs.end());
  }
  return subs;
}

std::vector<Piece> pieces_of(const std::vector<Subcorridor>& subs, CorridorKind kind) {
  std::vector<Piece> out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    Rect r = subs[i].rect;
    if (i > 0) r = cut_end(r, subs[i].orientation, subs[i - 1].rect, i);
    if (kind == CorridorKind::Closed && i + 1 == subs.size()) r = cut_end(r, subs[i].orientation, subs[0].rect, i);
    out.push_back({r, subs[i].orientation});
  }
  return out;
}

// Relative lane boundaries eps_thin * (1+eps)^j below 1.
std::vector<Rational> lane_fractions(const Rational& eps, const Rational& eps_thin) {
  std::vector<Rational> f;
  for (Rational v = eps_thin; v < 1; v *= (1 + eps)) f.push_back(v);
  return f;
}

// Processes one horizontal piece; the caller transposes vertical pieces.
void process_piece(const Rect& piece, const std::vector<PlacedItem>& items, const std::vector<Rational>& fractions,
                   const Rational& eps, CorridorProcessOutput& out) {
  std::vector<Rational> lines;
  for (const auto& f : fractions) lines.push_back(Rational(piece.y) + f * piece.h);
  std::vector<std::vector<PlacedItem>> lanes(lines.size() + 1);
  for (const auto& it : items) {
    bool crossed = false;
    std::size_t lane = 0;
    for (const auto& line : lines) {
      if (Rational(it.y) < line && line < Rational(it.y + it.h())) crossed = true;
      if (line <= Rational(it.y)) ++lane;
    }
    if (crossed) out.killed_items.push_back(it.item.id);
    else lanes[lane].push_back(it);
  }
  for (const auto& it : lanes[0]) {
    out.thin_items.push_back(it.item.id);
    out.thin_area += it.w() * it.h();
  }
  const i64 m = strips_for(eps, true);
  for (std::size_t k = 1; k < lanes.size(); ++k) {
    const i64 a = ceil_of(lines[k - 1]);
    const i64 b = k < lines.size() ? floor_of(lines[k]) : piece.top();
    if (b - a < 1) continue;
    // Re-box into (1 - eps) of the lane by deleting the cheapest sub-strip.
    const Strips s{a, b - a, m};
    std::vector<std::vector<PlacedItem>> sub(static_cast<std::size_t>(m));
    for (const auto& it : lanes[k]) {
      if (s.crosses(it)) out.killed_items.push_back(it.item.id);
      else sub[static_cast<std::size_t>(s.index(it))].push_back(it);
    }
    const std::size_t drop = min_strip(sub, LossMode::Weighted);
    for (const auto& it : sub[drop]) out.killed_items.push_back(it.item.id);
    const i64 shift = (b - a + m - 1) / m;
    std::vector<PlacedItem> kept;
    for (std::size_t j = 0; j < sub.size(); ++j) {
      if (j == drop) continue;
      for (auto it : sub[j]) {
        if (j > drop) it.y -= shift;
        kept.push_back(it);
      }
    }
    const Container box{piece.x, a, piece.w, b - a - shift, ContainerLabel::Horizontal};
    if (box.h <= 0) {
      for (const auto& it : kept) out.killed_items.push_back(it.item.id);
      continue;
    }
    out.boxes.push_back(box);
    BoxSplit split = box_to_containers(box, kept, eps);
    out.containers.insert(out.containers.end(), split.containers.begin(), split.containers.end());
    out.boxed.insert(out.boxed.end(), split.kept.begin(), split.kept.end());
    out.killed_items.insert(out.killed_items.end(), split.killed.begin(), split.killed.end());
  }
}

}  // namespace

int Corridor::bends() const {
  if (subcorridors.empty()) return 0;
  const int n = static_cast<int>(subcorridors.size());
  return kind == CorridorKind::Closed ? n : n - 1;
}

i64 Corridor::area() const {
  if (subcorridors.empty()) return 0;
  std::vector<Rect> rects;
  for (const auto& s : subcorridors) rects.push_back(s.rect);
  return union_area(rects, bounding_box(subcorridors));
}

CorridorProcessOutput process_corridor(const Corridor& corr, const Packing& packed, const Rational& eps,
                                       const Rational& eps_thin) {
  if (eps <= 0 || eps > 1) throw InvalidArgument("eps must lie in (0, 1]");
  if (eps_thin <= 0 || eps_thin >= 1) throw InvalidArgument("eps_thin must lie in (0, 1)");
  const std::vector<Subcorridor> subs = normalized(corr);
  const std::vector<Piece> pieces = pieces_of(subs, corr.kind);
  std::vector<Rect> sub_rects;
  for (const auto& s : subs) sub_rects.push_back(s.rect);

  CorridorProcessOutput out;
  std::vector<std::vector<PlacedItem>> members(pieces.size());
  for (const auto& it : placed_items(packed)) {
    const Rect r = it.rect();
    bool placed = false;
    for (std::size_t i = 0; i < pieces.size() && !placed; ++i) {
      if (!contains(pieces[i].rect, r)) continue;
      const bool wide = it.w() >= it.h(), tall = it.h() >= it.w();
      if ((pieces[i].orientation == Orientation::Horizontal && !wide) ||
          (pieces[i].orientation == Orientation::Vertical && !tall)) {
        throw MixedOrientation("item '" + it.item.id + "' does not match the orientation of subcorridor " +
                               std::to_string(i));
      }
      members[i].push_back(it);
      placed = true;
    }
    if (placed) continue;
    if (union_area(sub_rects, r) != r.area()) {
      throw MalformedCorridor("item '" + it.item.id + "' is not inside the corridor");
    }
    out.killed_items.push_back(it.item.id);
  }

  const std::vector<Rational> fractions = lane_fractions(eps, eps_thin);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].orientation == Orientation::Horizontal) {
      process_piece(pieces[i].rect, members[i], fractions, eps, out);
      continue;
    }
    CorridorProcessOutput local;
    process_piece(transpose_rect(pieces[i].rect), transpose(members[i]), fractions, eps, local);
    for (const auto& b : local.boxes) out.boxes.push_back(transpose(b));
    for (const auto& c : local.containers) out.containers.push_back(transpose(c));
    for (const auto& it : local.boxed) out.boxed.push_back(transpose(it));
    out.thin_items.insert(out.thin_items.end(), local.thin_items.begin(), local.thin_items.end());
    out.killed_items.insert(out.killed_items.end(), local.killed_items.begin(), local.killed_items.end());
    out.thin_area += local.thin_area;
  }

  const double lanes = std::log(to_double(1 / eps_thin)) / std::log(to_double(1 + eps));
  const double inv = to_double(1 / eps);
  const double bound = std::pow(inv * lanes, corr.bends() + 1) * inv;
  out.box_bound = bound >= static_cast<double>(std::numeric_limits<std::size_t>::max())
                      ? std::numeric_limits<std::size_t>::max()
                      : static_cast<std::size_t>(std::ceil(bound - 1e-9));
  out.thin_area_bound = 2 * eps_thin * corr.area();
  return out;
}

namespace {

Subcorridor transpose_sub(const Subcorridor& s) {
  return {transpose_rect(s.rect),
          s.orientation == Orientation::Horizontal ? Orientation::Vertical : Orientation::Horizontal};
}

// Fills a horizontal piece with a stack of wide, flat items.
void stack_items(const Rect& piece, std::mt19937_64& rng, bool transposed, int& next_id,
                 std::vector<PlacedItem>& out) {
  auto uni = [&](i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng); };
  const i64 max_h = std::max<i64>(1, piece.h / 4);
  i64 y = piece.y + uni(0, 2);
  for (;;) {
    const i64 h = uni(1, max_h);
    if (y + h > piece.top()) break;
    const i64 w = uni(piece.w / 2 + 1, piece.w);
    const i64 x = piece.x + uni(0, piece.w - w);
    PlacedItem it{{"c" + std::to_string(next_id++), w, h, uni(1, 100)}, x, y, false};
    if (transposed) {
      it = transpose(it);
      std::swap(it.item.w, it.item.h);
      it.rotated = false;
    }
    out.push_back(it);
    y += h + uni(0, 2);
  }
}

}  // namespace

CorridorFixture gen_corridor_fixture(std::uint64_t seed, i64 N, int max_bends, bool closed) {
  if (N < 100) throw InvalidArgument("corridor fixtures need N >= 100");
  if (max_bends < 0) throw InvalidArgument("max_bends must be non-negative");
  std::mt19937_64 rng(seed);
  auto uni = [&](i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng); };
  const i64 t_max = std::max<i64>(2, N * 6 / 100);
  const i64 t_min = std::max<i64>(1, t_max / 3);

  Corridor corr;
  corr.kind = closed ? CorridorKind::Closed : CorridorKind::Open;
  for (;;) {
    corr.subcorridors.clear();
    const i64 T = uni(t_min, t_max);
    if (closed) {
      const i64 W = uni(3 * T, N), H = uni(3 * T, N);
      const i64 X = uni(0, N - W), Y = uni(0, N - H);
      corr.subcorridors = {{{X, Y, W, T}, Orientation::Horizontal},
                           {{X + W - T, Y, T, H}, Orientation::Vertical},
                           {{X, Y + H - T, W, T}, Orientation::Horizontal},
                           {{X, Y, T, H}, Orientation::Vertical}};
      break;
    }
    const int bends = static_cast<int>(uni(0, max_bends));
    // Up-right staircase from the origin, then mirrored and shifted.
    i64 x = 0, y = 0;
    for (int i = 0; i <= bends; ++i) {
      const i64 len = uni(3 * T, 8 * T);
      if (i % 2 == 0) {
        corr.subcorridors.push_back({{x, y, len, T}, Orientation::Horizontal});
        x += len - T;
      } else {
        corr.subcorridors.push_back({{x, y, T, len}, Orientation::Vertical});
        y += len - T;
      }
    }
    const Rect bb = bounding_box(corr.subcorridors);
    if (bb.w > N || bb.h > N) continue;
    const bool mirror = uni(0, 1) == 1, flip = uni(0, 1) == 1;
    const i64 dx = uni(0, N - bb.w), dy = uni(0, N - bb.h);
    for (auto& s : corr.subcorridors) {
      if (mirror) s.rect.x = bb.w - s.rect.right();
      s.rect.x += dx;
      s.rect.y += dy;
      if (flip) s = transpose_sub(s);
    }
    break;
  }

  CorridorFixture fx;
  fx.corridor = corr;
  fx.packing.instance.N = N;
  if (uni(0, 9) == 0) return fx;
  std::vector<PlacedItem> items;
  int next_id = 0;
  for (const auto& piece : pieces_of(normalized(corr), corr.kind)) {
    if (piece.orientation == Orientation::Horizontal) {
      stack_items(piece.rect, rng, false, next_id, items);
    } else {
      stack_items(transpose_rect(piece.rect), rng, true, next_id, items);
    }
  }
  Instance inst{N, false, {}};
  for (const auto& it : items) inst.items.push_back(it.item);
  fx.packing = make_packing(inst, items);
  return fx;
}

}  // namespace rectpack
