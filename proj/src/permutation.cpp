#include "steiner/permutation.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace steiner {

Permutation::Permutation(int degree) {
  if (degree < 0 || degree > kMaxGroundSetSize) throw std::invalid_argument("permutation degree out of range");
  image_.resize(degree);
  std::iota(image_.begin(), image_.end(), std::uint8_t{0});
}

Permutation Permutation::transposition(int degree, int a, int b) {
  Permutation pi(degree);
  if (a < 0 || a >= degree || b < 0 || b >= degree) throw std::invalid_argument("transposition point out of range");
  std::swap(pi.image_[a], pi.image_[b]);
  return pi;
}

Permutation Permutation::from_images(std::vector<std::uint8_t> images) {
  const std::size_t n = images.size();
  if (n > static_cast<std::size_t>(kMaxGroundSetSize)) throw std::invalid_argument("permutation degree out of range");
  std::uint32_t seen = 0;
  for (std::uint8_t x : images) {
    if (x >= n || (seen & (1u << x)) != 0) throw std::invalid_argument("image array is not a bijection");
    seen |= 1u << x;
  }
  Permutation pi;
  pi.image_ = std::move(images);
  return pi;
}

Permutation Permutation::then(const Permutation& tau) const {
  if (degree() != tau.degree()) throw std::invalid_argument("degree mismatch in composition");
  Permutation out;
  out.image_.resize(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) out.image_[i] = tau.image_[image_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.image_.resize(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) out.image_[image_[i]] = static_cast<std::uint8_t>(i);
  return out;
}

Subset Permutation::apply(Subset s) const {
  Subset out;
  for (std::uint32_t m = s.mask; m != 0; m &= m - 1) out.mask |= 1u << image_[std::countr_zero(m)];
  return out;
}

std::vector<Permutation> adjacent_transpositions(int v) {
  if (v < 2) throw std::invalid_argument("adjacent_transpositions: need v >= 2");
  std::vector<Permutation> out;
  out.reserve(v - 1);
  for (int i = 0; i + 1 < v; ++i) out.push_back(Permutation::transposition(v, i, i + 1));
  return out;
}

Permutation reversal(int v) {
  std::vector<std::uint8_t> img(v);
  for (int i = 0; i < v; ++i) img[i] = static_cast<std::uint8_t>(v - 1 - i);
  return Permutation::from_images(std::move(img));
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

Permutation random_permutation(int v, std::mt19937_64& rng) {
  std::vector<std::uint8_t> img(v);
  std::iota(img.begin(), img.end(), std::uint8_t{0});
  for (int i = v - 1; i > 0; --i) {
    const auto j = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(i) + 1));
    std::swap(img[i], img[j]);
  }
  return Permutation::from_images(std::move(img));
}

std::string to_string(const Permutation& pi) {
  std::string out = "[";
  for (int i = 0; i < pi.degree(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(pi(i));
  }
  out += ']';
  return out;
}

}  // namespace steiner
