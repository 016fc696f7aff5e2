#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "steiner/permutation.hpp"
#include "steiner/subset.hpp"

namespace steiner {

// A t-(v, k, lambda) design over [v]; a t-(v, k, 1) design is the Steiner
// system S(t, k, v). Blocks are kept strictly ascending by mask. Designs are
// immutable after construction and safe to share across threads.
struct Design {
  int v = 0;
  int k = 0;
  int t = 0;
  int lambda = 1;
  std::vector<Subset> blocks;
};

// Thrown by read_design on malformed input.
class DesignParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Normalizes (sorts blocks by mask) and checks structural invariants:
// parameter ranges, block sizes, labels within [v], no duplicate blocks.
// Throws std::invalid_argument on violation. Does not check coverage.
Design make_design(int v, int k, int t, int lambda, std::vector<Subset> blocks);

// Coverage check: ok iff every t-subset of [v] lies in exactly lambda blocks.
// On failure carries the first failing t-subset and its actual count.
struct DesignCheck {
  bool ok = true;
  Subset witness{};
  int witness_count = 0;
};

DesignCheck is_design(const Design& d);

// lambda_i = C(v-i, t-i) / C(k-i, t-i) * lambda. Throws std::domain_error if
// the quotient is not integral (invalid parameter set), std::invalid_argument
// unless 0 <= i <= t. lambda_0 is the block count, lambda_t is lambda.
std::uint64_t lambda_i(const Design& d, int i);

// S(1, 2, 2w) with blocks {0,1}, {2,3}, ..., {2w-2, 2w-1}.
Design make_matching_design(int w);

// S(2, 3, 2^{d+1} - 1): point j corresponds to the nonzero vector of
// F_2^{d+1} with binary value j+1; blocks are the xor-closed triples
// {p, q, p^q}. These are the point/line sets of PG(d, 2).
Design make_projective_sts(int d);

// S(5, 6, 12) in the shuffle numbering: the orbit of {0,1,2,3,4,11} under
// the group generated by i -> 11-i and the Mongean shuffle
// i -> min(2i, 23-2i). Exactly 132 blocks.
Design make_shuffle_s5612();

// Difference-method constructor: all translates B + j (mod v) of the base
// blocks, deduplicated within each base orbit. Two base blocks whose orbits
// overlap are rejected. lambda is inferred from the coverage of {0,...,t-1};
// the caller must still run is_design.
Design make_cyclic_design(int v, std::span<const Subset> base_blocks, int k, int t);

// Blocks through `point` with that point deleted, relabeled by the
// order-preserving bijection [v] \ {point} -> [v-1]. Takes an S(t,k,v) to an
// S(t-1, k-1, v-1). Requires t >= 2 and 0 <= point < v.
Design derived_design(const Design& d, int point);

Design apply_permutation(const Design& d, const Permutation& pi);

// Veblen-Young quadrilateral closure: for every three distinct blocks
// {a,b,c}, {a,d,e}, {b,d,f} the triple {c,e,f} is also a block. Input must be
// a Steiner triple system (k=3, t=2, lambda=1) that passes is_design; throws
// std::invalid_argument otherwise.
bool is_projective_vy(const Design& d);

// Text format (UTF-8, LF):
//   line 1:  v=<int> k=<int> t=<int> lambda=<int>
//   lines 2+: one block per line, k ascending decimal labels, single spaces
// The writer emits blocks in ascending mask order. The parser rejects bad
// headers, wrong block sizes, out-of-range labels, non-ascending labels
// within a line, and duplicate blocks; block line order is canonicalized.
Design read_design(std::istream& in);
Design read_design_file(const std::string& path);
void write_design(std::ostream& out, const Design& d);
void write_design_file(const std::string& path, const Design& d);

}  // namespace steiner
