#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "steiner/subset.hpp"

namespace steiner {

// A bijection on [v], stored as the image array: i^pi = images[i].
// Permutations act on the right, so (P^sigma)^tau = P^(sigma.then(tau)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity
  static Permutation identity(int degree) { return Permutation(degree); }
  static Permutation transposition(int degree, int a, int b);
  // Validates that images is a bijection on [images.size()].
  static Permutation from_images(std::vector<std::uint8_t> images);

  int degree() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i]; }

  // Right-action composition: apply *this first, then tau.
  Permutation then(const Permutation& tau) const;
  Permutation inverse() const;

  // {p^pi : p in s}
  Subset apply(Subset s) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> image_;
};

// The v-1 transpositions (i i+1), i = 0..v-2; they generate Sym([v]).
std::vector<Permutation> adjacent_transpositions(int v);

// i -> v-1-i
Permutation reversal(int v);

// Unbiased draw from [0, n) by rejection sampling; deterministic for a fixed
// generator state on every platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

// Uniform random permutation (Fisher-Yates).
Permutation random_permutation(int v, std::mt19937_64& rng);

std::string to_string(const Permutation& pi);

}  // namespace steiner
