#include "steiner/subset.hpp"

#include <stdexcept>

namespace steiner {

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint32_t m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

namespace {
Subset from_range(const int* begin, const int* end) {
  Subset s;
  for (const int* p = begin; p != end; ++p) {
    if (*p < 0 || *p >= kMaxGroundSetSize) throw std::invalid_argument("subset element out of range");
    s.mask |= 1u << *p;
  }
  return s;
}
}  // namespace

Subset make_subset(std::initializer_list<int> elems) {
  return from_range(elems.begin(), elems.end());
}

Subset make_subset(const std::vector<int>& elems) {
  return from_range(elems.data(), elems.data() + elems.size());
}

std::string to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int p : s.elements()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(p);
  }
  out += '}';
  return out;
}

std::uint64_t binomial(int n, int r) {
  if (n < 0 || n > 62) throw std::invalid_argument("binomial: n out of range");
  if (r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  std::uint64_t result = 1;
  for (int i = 1; i <= r; ++i) {
    // exact at each step: result * (n-r+i) is divisible by i
    result = result * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  }
  return result;
}

std::vector<Subset> enumerate_k_subsets(int v, int k) {
  if (v < 0 || v > kMaxGroundSetSize) throw std::invalid_argument("enumerate_k_subsets: v must be in [0, 32]");
  if (k < 0 || k > v) throw std::invalid_argument("enumerate_k_subsets: need 0 <= k <= v");
  std::vector<Subset> out;
  out.reserve(binomial(v, k));
  if (k == 0) {
    out.push_back(Subset{0});
    return out;
  }
  // Gosper's hack walks the k-subsets in ascending mask order.
  std::uint64_t cur = (std::uint64_t{1} << k) - 1;
  const std::uint64_t last = cur << (v - k);
  for (;;) {
    out.push_back(Subset{static_cast<std::uint32_t>(cur)});
    if (cur == last) break;
    const std::uint64_t low = cur & (~cur + 1);
    const std::uint64_t ripple = cur + low;
    cur = ripple | (((cur ^ ripple) >> 2) / low);
  }
  return out;
}

}  // namespace steiner
