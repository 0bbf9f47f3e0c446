#include "rectpack/instance_lab.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace rectpack {

PartSumInstance reduce_ksum_to_partsum(const std::vector<i64>& A, int k) {
  if (k < 3 || k % 2 == 0) throw InvalidArgument("k must be an odd integer >= 3, got " + std::to_string(k));
  i64 max_abs = 0;
  for (i64 a : A) max_abs = std::max(max_abs, a < 0 ? -a : a);
  const i64 shift = k * max_abs + 1;
  PartSumInstance out;
  out.k = k;
  for (i64 a : A) out.A.push_back(a + shift);
  out.A.push_back((k - 1) * shift);
  for (i64 v : out.A) {
    if (v <= 0) throw Error("reduction produced a non-positive value");
  }
  return out;
}

Instance gen_hardness_2dkr(const PartSumInstance& ps, bool rotation_allowed, bool force) {
  if (ps.k < 2) throw InvalidArgument("k must be at least 2");
  if (ps.k < 9 && !force) throw InvalidArgument("k < 9 is outside the construction's regime; pass force to override");
  if (ps.A.empty()) throw InvalidArgument("the multiset A is empty");
  for (i64 a : ps.A) {
    if (a <= 0) throw InvalidArgument("PartSum values must be positive");
  }
  const i64 M = *std::max_element(ps.A.begin(), ps.A.end());
  const i64 k = ps.k;
  Instance inst;
  inst.N = 2 * M * k * k * k * k;
  inst.rotation_allowed = rotation_allowed;
  const i64 NK = inst.N / k, half = inst.N / 2;
  for (std::size_t i = 0; i < ps.A.size(); ++i) {
    const i64 a = ps.A[i];
    inst.items.push_back({"R" + std::to_string(i), NK + a, half - a, 1});
    inst.items.push_back({"Rp" + std::to_string(i), NK - a, half + a, 1});
  }
  return inst;
}

namespace {

// Index into A for each split value, consuming multiset copies left to right.
std::vector<std::size_t> match_values(const std::vector<i64>& A, const std::vector<i64>& values) {
  std::vector<bool> used(A.size(), false);
  std::vector<std::size_t> idx;
  for (i64 v : values) {
    bool found = false;
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (!used[i] && A[i] == v) {
        used[i] = true;
        idx.push_back(i);
        found = true;
        break;
      }
    }
    if (!found) throw InvalidSplit("value " + std::to_string(v) + " is not available in A");
  }
  return idx;
}

}  // namespace

Packing construct_yes_packing(const PartSumInstance& ps, const EqualSplit& split, bool rotation_allowed) {
  const int k = ps.k;
  if (static_cast<int>(split.values.size()) != k) {
    throw InvalidSplit("split has " + std::to_string(split.values.size()) + " values, expected " + std::to_string(k));
  }
  if (split.m < 1 || split.m > k - 1) throw InvalidSplit("m must lie in [1, k-1]");
  std::vector<i64> left(split.values.begin(), split.values.begin() + split.m);
  std::vector<i64> right(split.values.begin() + split.m, split.values.end());
  const i64 ls = std::accumulate(left.begin(), left.end(), i64{0});
  const i64 rs = std::accumulate(right.begin(), right.end(), i64{0});
  if (ls != rs) throw InvalidSplit("sides sum to " + std::to_string(ls) + " and " + std::to_string(rs));
  std::sort(left.begin(), left.end(), std::greater<>());
  std::sort(right.begin(), right.end());
  std::vector<i64> values = left;
  values.insert(values.end(), right.begin(), right.end());
  const auto idx = match_values(ps.A, values);

  const Instance inst = gen_hardness_2dkr(ps, rotation_allowed, true);
  const i64 N = inst.N;
  const int m = split.m;
  auto R = [&](int j) { return *inst.find("R" + std::to_string(idx[static_cast<std::size_t>(j)])); };
  auto Rp = [&](int j) { return *inst.find("Rp" + std::to_string(idx[static_cast<std::size_t>(j)])); };

  std::vector<PlacedItem> placed;
  i64 x = 0;
  for (int j = 0; j < k; ++j) {
    const ItemSpec it = j < m ? Rp(j) : R(j);
    placed.push_back({it, x, N - it.h, false});
    x += it.w;
  }
  x = 0;
  for (int j = 0; j < m; ++j) {
    const ItemSpec it = R(j);
    placed.push_back({it, x, 0, false});
    x += it.w;
  }
  x = N;
  for (int j = k - 1; j >= m; --j) {
    const ItemSpec it = Rp(j);
    x -= it.w;
    placed.push_back({it, x, 0, false});
  }
  return make_packing(inst, placed);
}

YesInstance gen_yes_partsum(int k, i64 max_value, std::size_t distractors, std::uint64_t seed) {
  if (k < 2) throw InvalidArgument("k must be at least 2");
  if (max_value < 2) throw InvalidArgument("max_value must be at least 2");
  std::mt19937_64 rng(seed);
  auto uni = [&](i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng); };
  YesInstance out;
  out.ps.k = k;
  for (;;) {
    const int m = static_cast<int>(uni(1, k - 1));
    const i64 parts = k - m;
    std::vector<i64> v;
    i64 left = 0;
    for (int j = 0; j < m; ++j) {
      v.push_back(uni(1, max_value));
      left += v.back();
    }
    if (left < parts || left > parts * max_value) continue;
    // Random composition of the left sum into the right side.
    i64 rem = left;
    for (i64 j = parts; j >= 1; --j) {
      const i64 lo = std::max<i64>(1, rem - (j - 1) * max_value);
      const i64 hi = std::min<i64>(max_value, rem - (j - 1));
      v.push_back(uni(lo, hi));
      rem -= v.back();
    }
    out.split = {v, m};
    break;
  }
  out.ps.A = out.split.values;
  for (std::size_t d = 0; d < distractors; ++d) out.ps.A.push_back(uni(1, max_value));
  std::shuffle(out.ps.A.begin(), out.ps.A.end(), rng);
  return out;
}

EqualSplit extract_partition(const Packing& p, int k) {
  if (!validate_packing(p).valid()) throw NotExtractable("packing is not valid");
  const std::size_t count = p.placements.size();
  if (k == 0) {
    if (count % 2 != 0 || count == 0) throw NotExtractable("odd or zero placement count " + std::to_string(count));
    k = static_cast<int>(count / 2);
  } else if (count != static_cast<std::size_t>(2 * k)) {
    throw NotExtractable("expected " + std::to_string(2 * k) + " placements, got " + std::to_string(count));
  }
  const i64 N = p.instance.N;
  if (N % k != 0 || N % 2 != 0) throw NotExtractable("knapsack side is not a multiple of k and 2");
  const i64 NK = N / k;

  std::vector<Rect> rects;
  std::vector<std::string> ids;
  for (const auto& it : placed_items(p)) {
    rects.push_back(it.rect());
    ids.push_back(it.item.id);
  }
  // Orientation normalization: all tall, or all wide and then transposed.
  std::size_t tall = 0;
  for (const auto& r : rects) tall += r.h > r.w ? 1 : 0;
  if (tall != 0 && tall != rects.size()) throw NotExtractable("packing mixes tall and wide rectangles");
  if (tall == 0) {
    for (auto& r : rects) r = {r.y, r.x, r.h, r.w};
  }

  // Rows: rectangles sharing an x-range form a (bottom, top) pair.
  const std::size_t n = rects.size();
  std::vector<int> row(n, -1);  // 0 bottom, 1 top
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !(rects[a].x < rects[b].right() && rects[b].x < rects[a].right())) continue;
      row[a] = rects[a].y > rects[b].y ? 1 : 0;
    }
  }
  // Three rectangles on one vertical line would leave partners in a common row.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && row[a] >= 0 && row[a] == row[b] && rects[a].x < rects[b].right() && rects[b].x < rects[a].right()) {
        throw NotExtractable("partner rectangles share a row");
      }
    }
  }
  std::size_t top = 0;
  for (int r : row) top += r == 1 ? 1 : 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (row[a] >= 0) continue;
    row[a] = top < static_cast<std::size_t>(k) ? 1 : 0;
    top += row[a];
  }
  // Shift to the boundaries, then check the result is still a packing.
  for (std::size_t a = 0; a < n; ++a) rects[a].y = row[a] == 1 ? N - rects[a].h : 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (rects[a].y < 0) throw NotExtractable("rectangle taller than the knapsack");
    for (std::size_t b = a + 1; b < n; ++b) {
      if (interiors_overlap(rects[a], rects[b])) throw NotExtractable("boundary shift creates an overlap");
    }
  }

  std::vector<std::size_t> top_row;
  for (std::size_t a = 0; a < n; ++a) {
    if (row[a] == 1) top_row.push_back(a);
  }
  if (top_row.size() != static_cast<std::size_t>(k)) {
    throw NotExtractable("top row holds " + std::to_string(top_row.size()) + " rectangles, expected " + std::to_string(k));
  }
  // Sorted re-pack: tallest first from the left.
  std::stable_sort(top_row.begin(), top_row.end(), [&](std::size_t a, std::size_t b) {
    if (rects[a].h != rects[b].h) return rects[a].h > rects[b].h;
    return ids[a] < ids[b];
  });
  i64 width_sum = 0;
  for (std::size_t a : top_row) width_sum += rects[a].w;
  if (width_sum != N) throw NotExtractable("top-row widths sum to " + std::to_string(width_sum) + ", not N");

  EqualSplit split;
  split.m = 0;
  for (std::size_t a : top_row) {
    const bool primed = 2 * rects[a].h > N;
    if (primed) {
      if (split.m != static_cast<int>(split.values.size())) throw NotExtractable("tall rectangles are not a prefix");
      ++split.m;
      split.values.push_back(NK - rects[a].w);
    } else {
      split.values.push_back(rects[a].w - NK);
    }
  }
  if (split.m < 1 || split.m > k - 1) throw NotExtractable("switch point m = " + std::to_string(split.m) + " outside [1, k-1]");
  i64 ls = 0, rs = 0;
  for (int j = 0; j < k; ++j) (j < split.m ? ls : rs) += split.values[static_cast<std::size_t>(j)];
  if (ls != rs) throw NotExtractable("decoded sides sum to " + std::to_string(ls) + " and " + std::to_string(rs));

  // Every decoded value must come from the instance's multiset.
  std::multiset<i64> available;
  for (const auto& it : p.instance.items) {
    if (2 * it.h < N) available.insert(it.w - NK);
  }
  for (i64 v : split.values) {
    auto f = available.find(v);
    if (f == available.end()) throw NotExtractable("decoded value " + std::to_string(v) + " is not in the instance");
    available.erase(f);
  }
  return split;
}

Instance gen_lowerbound_family(int n) {
  if (n < 3 || n % 2 == 0) throw InvalidArgument("n must be odd and at least 3");
  if (n > 39) throw InvalidArgument("n too large for 64-bit coordinates");
  const int q = (n + 1) / 2;
  const i64 N = i64{1} << (3 * q), N13 = i64{1} << q, N23 = i64{1} << (2 * q);
  Instance inst;
  inst.N = N;
  inst.rotation_allowed = true;
  for (int j = 1; j <= (n - 1) / 2; ++j) {
    const i64 pw = i64{1} << (j - 1);
    inst.items.push_back({"H" + std::to_string(j), N - (pw - 1) * N23, pw, 1});
    inst.items.push_back({"V" + std::to_string(j), pw * N23, N13 - 2 * pw + 1, 1});
  }
  inst.items.push_back({"istar", N, N - N13, (n - 1) / 2});
  return inst;
}

Packing construct_lowerbound_packing(const Instance& inst) {
  const i64 N = inst.N;
  int q = 0;
  while ((i64{1} << (3 * q)) < N) ++q;
  if ((i64{1} << (3 * q)) != N) throw InvalidArgument("knapsack side is not a power of 8");
  const i64 N13 = i64{1} << q, N23 = i64{1} << (2 * q);
  std::vector<PlacedItem> placed;
  for (const auto& it : inst.items) {
    if (it.id == "istar") {
      placed.push_back({it, 0, N13, false});
      continue;
    }
    const int j = std::stoi(it.id.substr(1));
    const i64 pw = i64{1} << (j - 1);
    const i64 x = (pw - 1) * N23;
    if (it.id[0] == 'H') {
      placed.push_back({it, x, pw - 1, false});
    } else if (it.id[0] == 'V') {
      placed.push_back({it, x, 2 * pw - 1, false});
    } else {
      throw InvalidArgument("unexpected item '" + it.id + "' in a lower-bound instance");
    }
  }
  return make_packing(inst, placed);
}

int count_symmetric_pairs(const Packing& p, const std::vector<Container>& /*containers*/) {
  std::set<std::string> placed;
  for (const auto& pl : p.placements) placed.insert(pl.item_id);
  int s = 0;
  for (const auto& id : placed) {
    if (id.size() > 1 && id[0] == 'H' && placed.count("V" + id.substr(1))) ++s;
    if (id.size() > 1 && id[0] == 'R' && id[1] != 'p' && placed.count("Rp" + id.substr(1))) ++s;
  }
  return s;
}

Profile parse_profile(const std::string& name) {
  if (name == "uniform") return Profile::Uniform;
  if (name == "skewed") return Profile::Skewed;
  if (name == "cardinality") return Profile::Cardinality;
  throw InvalidArgument("unknown profile '" + name + "'");
}

std::string profile_name(Profile p) {
  switch (p) {
    case Profile::Uniform: return "uniform";
    case Profile::Skewed: return "skewed";
    case Profile::Cardinality: return "cardinality";
  }
  return "?";
}

Instance gen_random(const RandomSpec& spec) {
  if (spec.N < 1) throw InvalidArgument("N must be positive");
  std::mt19937_64 rng(spec.seed);
  auto uniform = [&](i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng); };
  Instance inst;
  inst.N = spec.N;
  inst.rotation_allowed = spec.rotation_allowed;
  const i64 skew = std::max<i64>(1, floor_mul(spec.eps_skew, spec.N));
  for (std::size_t i = 0; i < spec.n; ++i) {
    ItemSpec it;
    it.id = "i" + std::to_string(i);
    it.w = uniform(1, spec.N);
    it.h = uniform(1, spec.N);
    if (spec.profile == Profile::Skewed) {
      if (uniform(0, 1) == 0) it.w = uniform(1, skew); else it.h = uniform(1, skew);
    }
    it.p = spec.profile == Profile::Cardinality ? 1 : uniform(1, spec.max_profit);
    inst.items.push_back(std::move(it));
  }
  return inst;
}

}  // namespace rectpack
