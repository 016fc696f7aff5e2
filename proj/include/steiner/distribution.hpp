#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "steiner/design.hpp"
#include "steiner/game.hpp"

namespace steiner {

inline constexpr std::uint64_t kDefaultOrbitCap = 10'000'000;

// Raised when an exhaustive orbit run would exceed the configured cap.
// `estimate` is the exact orbit size v!/|Aut| when representable.
class OrbitCapExceeded : public std::runtime_error {
 public:
  OrbitCapExceeded(std::uint64_t estimate_, std::uint64_t cap_);
  std::uint64_t estimate;
  std::uint64_t cap;
};

// a[i] = number of non-block positions with exactly i out-blocks, i = 0..k.
// When the block set is independent no position has more than k out-blocks.
struct AVector {
  std::vector<std::uint64_t> a;
  std::uint64_t total() const;
};

AVector a_counts(const Design& d);

// |bPosition| = C(v,k) - a_0 = |blocks| + sum_{i>=1} a_i. Fast path via
// a_counts; the games module computes the same number independently through
// b_position for cross-checks.
std::uint64_t n_positions(const Design& d);

// I(B, C) = |InNeighbors(B) ∩ InNeighbors(C)| in Wel(v, k), B != C.
// For 3-subsets meeting in at most one point the closed form
// [c < b'] + [c' < b'] is used (after normalizing B = {x,b,b'}, C = {x,c,c'}
// with b < b', b < c < c'); every other shape is brute-forced.
int intersection_count(int v, Subset b, Subset c);
int intersection_count_brute(int v, Subset b, Subset c);

// a_0 + a_3 of a Steiner triple system without touching non-blocks:
// sum of I(B, C) over block pairs meeting in one point, minus
// v(v-1)(v-3)/12. Must agree with a_counts.
std::uint64_t a0_plus_a3_fast(const Design& d);

std::uint64_t factorial(int n);  // n <= 20

// |Aut(D)|, counted by backtracking over point images. Only the order is
// computed; no generators or group structure are kept.
std::uint64_t automorphism_count(const Design& d);

// v! / |Aut(D)| without enumerating. Requires v <= 20.
std::uint64_t orbit_size_exact(const Design& d);

// ---------------------------------------------------------------------------
// Exhaustive orbit of a design under Sym([v]): BFS over block-set images
// under adjacent transpositions with canonical dedup (the sorted block-mask
// vector is the key). Yields each distinct block set exactly once.

class Orbit {
 public:
  std::size_t size() const { return parent_.size(); }
  int ground_set() const { return v_; }
  int block_count() const { return block_count_; }
  std::span<const std::uint32_t> member(std::size_t i) const;
  std::vector<Subset> member_blocks(std::size_t i) const;
  // A permutation pi with root^pi = member i, composed from the BFS tree.
  Permutation permutation_to(std::size_t i) const;

 private:
  friend Orbit orbit_enumerate(const Design&, std::uint64_t);
  int v_ = 0;
  int block_count_ = 0;
  std::vector<std::uint32_t> arena_;   // member i at [i*bc, (i+1)*bc), sorted
  std::vector<std::uint32_t> parent_;  // BFS tree; parent_[0] == 0
  std::vector<std::uint8_t> gen_;      // index i of the transposition (i i+1)
};

Orbit orbit_enumerate(const Design& d, std::uint64_t cap = kDefaultOrbitCap);

// ---------------------------------------------------------------------------
// Game distributions.

struct ExtremeEntry {
  std::uint64_t n = 0;
  std::uint64_t count = 0;
  std::vector<Subset> witness;  // block set attaining n (lex-least among ties)
};

struct DistributionReport {
  int v = 0, k = 0, t = 0, lambda = 1;
  bool sampled = false;
  std::uint64_t seed = 0;  // 0 in exhaustive mode
  std::uint64_t total = 0; // orbit size, or number of samples
  std::map<std::uint64_t, std::uint64_t> freq;  // n -> count
  // alpha -> (n -> count), alpha descending to match the table layout
  std::map<int, std::map<std::uint64_t, std::uint64_t>, std::greater<int>> components;
  std::vector<int> s_values;  // realized alpha = a_0 + a_k, ascending
  ExtremeEntry min, max;
};

// Exhaustive distribution over the full orbit. Evaluation is a pure map
// Design -> (n, alpha) over the orbit members, parallelized over `jobs`
// workers; the aggregation is a commutative merge, so the report is
// identical for every worker count.
DistributionReport game_distribution(const Design& d, int jobs = 1,
                                     std::uint64_t cap = kDefaultOrbitCap);

// Empirical tallies over `count` uniformly random relabelings (Fisher-Yates
// with the seeded PRNG). Identical output for a fixed seed.
DistributionReport game_distribution_sampled(const Design& d, std::uint64_t count,
                                             std::uint64_t seed, int jobs = 1);

std::vector<int> s_values(const Design& d, int jobs = 1,
                          std::uint64_t cap = kDefaultOrbitCap);
std::vector<int> s_values_sampled(const Design& d, std::uint64_t count,
                                  std::uint64_t seed);

std::string report_to_json(const DistributionReport& r);
// Journal-style table: header row of n values, one row per alpha (descending)
// when with_components, totals row and column. One leading '#' metadata line.
std::string report_to_tsv(const DistributionReport& r, bool with_components);

// ---------------------------------------------------------------------------
// Projectivity of Steiner triple systems through the distribution.

struct ProjectivityVerdict {
  enum class Kind { projective, non_projective, consistent_with_projective };
  Kind kind = Kind::projective;
  std::vector<int> alphas_seen;  // ascending
  // For non-projective verdicts: two relabelings realizing distinct alphas.
  std::optional<std::pair<Permutation, Permutation>> witness_pair;
  std::string note;
};

// Exhaustive: |s(D)| = 1 iff projective. Sampled: non_projective as soon as
// two distinct alphas are observed; consistent_with_projective when all
// samples give v(v-1)(v-3)/24. Input must be a validated STS.
ProjectivityVerdict projective_by_distribution(const Design& d,
                                               std::uint64_t cap = kDefaultOrbitCap);
ProjectivityVerdict projective_by_distribution_sampled(const Design& d,
                                                       std::uint64_t count,
                                                       std::uint64_t seed);

// ---------------------------------------------------------------------------
// Closed forms and spot checks.

// Coefficient list of x^{w^2} * prod_{i=1..w} (1 + x + ... + x^{2i-2});
// entry [n] is the number of S(1,2,2w) relabelings whose game has n
// positions. Length w(2w-1) + 1.
std::vector<std::uint64_t> matching_distribution_polynomial(int w);

// Exhaustively verifies Freq~(n) = Freq(w(2w-1) - n) for an S(1,2,2w),
// tallying non-positions through a_counts and positions through the games
// module so the two routes stay independent.
bool matching_complement_identity(const Design& d,
                                  std::uint64_t cap = kDefaultOrbitCap);

// For an S(t, t+m, v) with m >= 2, every relabeling gives the same position
// count lambda_0 + lambda_0*k*(v-k)/2. Checks `samples` random relabelings
// through both the a_counts and b_position routes.
struct ConstantCountCheck {
  bool ok = true;
  std::uint64_t expected = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> first_deviation;  // observed n
  std::optional<Permutation> deviating_relabeling;
};

ConstantCountCheck constant_count_check(const Design& d, std::uint64_t samples,
                                        std::uint64_t seed);

}  // namespace steiner
