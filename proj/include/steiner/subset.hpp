#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace steiner {

// Ground sets are [v] = {0, ..., v-1} with v <= 32, so every subset fits in
// one machine word and neighbor tests are single bit operations.
inline constexpr int kMaxGroundSetSize = 32;

// A subset of [v] encoded as a bitmask. Two subsets are equal iff their masks
// are equal; ascending mask order is the canonical order throughout.
struct Subset {
  std::uint32_t mask = 0;

  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset, Subset) = default;

  constexpr bool contains(int p) const { return (mask >> p) & 1u; }
  constexpr bool empty() const { return mask == 0; }
  constexpr int size() const { return std::popcount(mask); }
  constexpr Subset with(int p) const { return Subset{mask | (1u << p)}; }
  constexpr Subset without(int p) const { return Subset{mask & ~(1u << p)}; }

  // Image under the transposition (p q): membership of p and q is swapped.
  constexpr Subset swapped(int p, int q) const {
    Subset r{mask};
    if (contains(p) != contains(q)) r.mask ^= (1u << p) | (1u << q);
    return r;
  }

  // Sum of the elements. Every Welter move strictly decreases this.
  constexpr int element_sum() const {
    int s = 0;
    for (std::uint32_t m = mask; m != 0; m &= m - 1) s += std::countr_zero(m);
    return s;
  }

  std::vector<int> elements() const;
};

Subset make_subset(std::initializer_list<int> elems);
Subset make_subset(const std::vector<int>& elems);
constexpr Subset full_set(int v) {
  return Subset{v == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << v) - 1};
}

// "{0,2,11}"
std::string to_string(Subset s);

// Exact C(n, r) for 0 <= n <= 62.
std::uint64_t binomial(int n, int r);

// All k-subsets of [v] in ascending mask order: exactly C(v, k) distinct
// entries. Throws std::invalid_argument unless 0 <= k <= v <= 32.
std::vector<Subset> enumerate_k_subsets(int v, int k);

}  // namespace steiner
