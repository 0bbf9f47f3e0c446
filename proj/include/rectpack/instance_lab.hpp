#pragma once

#include "rectpack/model.hpp"

#include <cstdint>
#include <vector>

namespace rectpack {

struct PartSumInstance {
  std::vector<i64> A;
  int k = 0;
};

struct EqualSplit {
  std::vector<i64> values;  // a_1..a_k
  int m = 0;                // a_1..a_m balance a_{m+1}..a_k
};

// Shifts a k-Sum instance into k-PartSum: M' = k*max|a| + 1, values a+M' plus (k-1)M'.
PartSumInstance reduce_ksum_to_partsum(const std::vector<i64>& A, int k);

// N = 2*M*k^4 with M = max(A); per value a: R_a = (N/k + a) x (N/2 - a) and R'_a = (N/k - a) x (N/2 + a).
// Ids are "R<i>" and "Rp<i>" for the i-th value of A.
Instance gen_hardness_2dkr(const PartSumInstance& ps, bool rotation_allowed = true, bool force = false);

// The 2k-rectangle packing of a yes-instance. Throws InvalidSplit on a bad split.
Packing construct_yes_packing(const PartSumInstance& ps, const EqualSplit& split, bool rotation_allowed = true);

// Inverts a 2k-rectangle packing of a hardness instance into an equal-sum split. k = 0 infers k
// from the placement count. Throws NotExtractable naming the failed check.
EqualSplit extract_partition(const Packing& p, int k = 0);

struct YesInstance {
  PartSumInstance ps;
  EqualSplit split;
};

// Seeded k-PartSum yes-instance: k planted values in [1, max_value] with an equal split, plus
// `distractors` further random values in A.
YesInstance gen_yes_partsum(int k, i64 max_value, std::size_t distractors, std::uint64_t seed);

// Lower-bound family for container packings; n odd >= 3.
Instance gen_lowerbound_family(int n);
Packing construct_lowerbound_packing(const Instance& inst);

// Pairs (H<j>, V<j>) or (R<i>, Rp<i>) with both members placed.
int count_symmetric_pairs(const Packing& p, const std::vector<Container>& containers);

enum class Profile { Uniform, Skewed, Cardinality };

Profile parse_profile(const std::string& name);
std::string profile_name(Profile p);

struct RandomSpec {
  Profile profile = Profile::Uniform;
  std::size_t n = 10;
  i64 N = 100;
  std::uint64_t seed = 0;
  Rational eps_skew = Rational(1, 10);
  bool rotation_allowed = false;
  i64 max_profit = 100;
};

Instance gen_random(const RandomSpec& spec);

}  // namespace rectpack
