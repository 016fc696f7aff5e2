#include "steiner/distribution.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "json.hpp"

namespace steiner {

OrbitCapExceeded::OrbitCapExceeded(std::uint64_t estimate_, std::uint64_t cap_)
    : std::runtime_error("orbit size " +
                         (estimate_ == std::numeric_limits<std::uint64_t>::max()
                              ? std::string("(beyond 20!)")
                              : std::to_string(estimate_)) +
                         " exceeds cap " + std::to_string(cap_)),
      estimate(estimate_),
      cap(cap_) {}

std::uint64_t AVector::total() const {
  std::uint64_t s = 0;
  for (std::uint64_t x : a) s += x;
  return s;
}

namespace {

// Counts out-blocks for every non-block position of C([v], k). The block
// lookup is a flat bit table indexed by mask (reset after each evaluation so
// one evaluator serves a whole orbit scan); binary search for ground sets too
// large for the table.
class AEvaluator {
 public:
  AEvaluator(int v, int k) : v_(v), k_(k), positions_(enumerate_k_subsets(v, k)) {
    if (v_ <= kFlagBits) flags_.assign(((std::size_t{1} << v_) + 63) / 64, 0);
  }

  AVector eval(std::span<const std::uint32_t> block_masks) {
    blocks_ = block_masks;
    for (std::uint32_t m : block_masks)
      if (!flags_.empty()) flags_[m >> 6] |= std::uint64_t{1} << (m & 63);
    AVector av{std::vector<std::uint64_t>(k_ + 1, 0)};
    bool dependent = false;
    for (const Subset p : positions_) {
      if (test(p.mask)) continue;
      int cnt = 0;
      for (std::uint32_t rem = p.mask; rem != 0; rem &= rem - 1) {
        const int hi = std::countr_zero(rem);
        std::uint32_t cands = ((std::uint32_t{1} << hi) - 1) & ~p.mask;
        for (; cands != 0; cands &= cands - 1)
          cnt += test(p.mask ^ (std::uint32_t{1} << hi) ^ (cands & (~cands + 1)));
      }
      if (cnt > k_) {
        dependent = true;
        break;
      }
      ++av.a[cnt];
    }
    for (std::uint32_t m : block_masks)
      if (!flags_.empty()) flags_[m >> 6] &= ~(std::uint64_t{1} << (m & 63));
    if (dependent)
      throw std::domain_error("a_counts: a position has more than k out-blocks (blocks not independent)");
    return av;
  }

 private:
  bool test(std::uint32_t m) const {
    if (!flags_.empty()) return (flags_[m >> 6] >> (m & 63)) & 1u;
    return std::binary_search(blocks_.begin(), blocks_.end(), m);
  }

  static constexpr int kFlagBits = 24;
  int v_, k_;
  std::vector<Subset> positions_;
  std::vector<std::uint64_t> flags_;
  std::span<const std::uint32_t> blocks_;
};

std::vector<std::uint32_t> block_masks_of(const Design& d) {
  std::vector<std::uint32_t> out;
  out.reserve(d.blocks.size());
  for (Subset b : d.blocks) out.push_back(b.mask);
  return out;
}

void require_validated_sts(const Design& d, const char* who) {
  if (d.k != 3 || d.t != 2 || d.lambda != 1 || !is_design(d).ok)
    throw std::invalid_argument(std::string(who) + ": input is not a validated Steiner triple system");
}

// Independence is relabeling-invariant, so one check on the root covers the
// whole orbit; the a-vector evaluation relies on it.
void require_independent(const Design& d, const char* who) {
  if (!is_independent(WelterGame{d.v, d.k, 1}, d.blocks))
    throw std::invalid_argument(std::string(who) + ": block set is not independent in Wel(v,k)");
}

}  // namespace

AVector a_counts(const Design& d) {
  AEvaluator ev(d.v, d.k);
  return ev.eval(block_masks_of(d));
}

std::uint64_t n_positions(const Design& d) {
  return binomial(d.v, d.k) - a_counts(d).a[0];
}

int intersection_count_brute(int v, Subset b, Subset c) {
  const WelterGame g{v, b.size(), 1};
  const auto nb = in_neighbors(g, b);
  const auto nc = in_neighbors(g, c);
  int count = 0;
  std::size_t i = 0, j = 0;
  while (i < nb.size() && j < nc.size()) {
    if (nb[i] < nc[j]) ++i;
    else if (nc[j] < nb[i]) ++j;
    else ++count, ++i, ++j;
  }
  return count;
}

namespace {

// I(B, C) for triples meeting in exactly one point: normalize to
// B = {x, b, b'}, C = {x, c, c'} with b < b', b < c < c'; then the
// intersection size is [c < b'] + [c' < b'].
int sts_closed_form(Subset b, Subset c) {
  const std::uint32_t common = b.mask & c.mask;
  if (common == 0) return 0;
  auto bp = Subset{b.mask & ~common}.elements();
  auto cp = Subset{c.mask & ~common}.elements();
  if (bp[0] > cp[0]) std::swap(bp, cp);
  return static_cast<int>(cp[0] < bp[1]) + static_cast<int>(cp[1] < bp[1]);
}

}  // namespace

int intersection_count(int v, Subset b, Subset c) {
  if (b == c) throw std::invalid_argument("intersection_count: need B != C");
  if (b.size() != c.size() || (b.mask & ~full_set(v).mask) != 0 || (c.mask & ~full_set(v).mask) != 0)
    throw std::invalid_argument("intersection_count: B, C must be k-subsets of [v]");
  if (b.size() == 3 && std::popcount(b.mask & c.mask) <= 1) return sts_closed_form(b, c);
  return intersection_count_brute(v, b, c);
}

std::uint64_t a0_plus_a3_fast(const Design& d) {
  require_validated_sts(d, "a0_plus_a3_fast");
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < d.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < d.blocks.size(); ++j)
      if (std::popcount(d.blocks[i].mask & d.blocks[j].mask) == 1)
        sum += sts_closed_form(d.blocks[i], d.blocks[j]);
  const std::int64_t v = d.v;
  return static_cast<std::uint64_t>(sum - v * (v - 1) * (v - 3) / 12);
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial: need 0 <= n <= 20");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// ---------------------------------------------------------------------------
// Automorphism-order counter: depth-first over point images, points assigned
// in natural order. For Steiner parameters the unique block through each
// t-subset gives the pruning constraint; other designs fall back to checking
// fully assigned blocks. Only the count of completed bijections is kept.

namespace {

class AutCounter {
 public:
  explicit AutCounter(const Design& d)
      : v_(d.v), k_(d.k), t_(d.t), block_masks_(block_masks_of(d)) {
    steiner_ = d.lambda == 1 && d.t >= 1 && v_ <= 20;
    if (steiner_) {
      through_.assign(std::size_t{1} << v_, 0);
      const auto index_subsets = enumerate_k_subsets(k_, t_);
      for (std::uint32_t bm : block_masks_) {
        const auto elems = Subset{bm}.elements();
        for (Subset idx : index_subsets) {
          std::uint32_t ts = 0;
          for (int i : idx.elements()) ts |= std::uint32_t{1} << elems[i];
          through_[ts] = bm;
        }
      }
      tm1_by_level_.resize(v_);
      for (int l = 0; l < v_; ++l) {
        if (l < t_ - 1) continue;
        for (Subset s : enumerate_k_subsets(l, t_ - 1)) tm1_by_level_[l].push_back(s.mask);
      }
    } else {
      blocks_by_max_.resize(v_);
      for (std::uint32_t bm : block_masks_)
        blocks_by_max_[31 - std::countl_zero(bm)].push_back(bm);
    }
  }

  std::uint64_t count() {
    count_ = 0;
    used_ = 0;
    descend(0);
    return count_;
  }

 private:
  void descend(int level) {
    if (level == v_) {
      ++count_;
      return;
    }
    for (int c = 0; c < v_; ++c) {
      if ((used_ >> c) & 1u) continue;
      img_[level] = static_cast<std::uint8_t>(c);
      const bool ok = steiner_ ? consistent_steiner(level, c) : consistent_fallback(level, c);
      if (ok) {
        used_ |= std::uint32_t{1} << c;
        descend(level + 1);
        used_ &= ~(std::uint32_t{1} << c);
      }
    }
  }

  std::uint32_t image_of(std::uint32_t mask, int level, int c) const {
    std::uint32_t img = 0;
    for (std::uint32_t m = mask; m != 0; m &= m - 1) {
      const int pt = std::countr_zero(m);
      img |= std::uint32_t{1} << (pt == level ? c : img_[pt]);
    }
    return img;
  }

  bool consistent_steiner(int level, int c) const {
    const std::uint32_t assigned = (std::uint32_t{2} << level) - 1;  // points 0..level
    for (std::uint32_t tm1 : tm1_by_level_[level]) {
      const std::uint32_t block = through_[tm1 | (std::uint32_t{1} << level)];
      const std::uint32_t block2 = through_[image_of(tm1, level, c) | (std::uint32_t{1} << c)];
      const std::uint32_t img_s = image_of(block & assigned, level, c);
      if ((img_s & ~block2) != 0) return false;
    }
    return true;
  }

  bool consistent_fallback(int level, int c) const {
    for (std::uint32_t bm : blocks_by_max_[level])
      if (!std::binary_search(block_masks_.begin(), block_masks_.end(), image_of(bm, level, c)))
        return false;
    return true;
  }

  int v_, k_, t_;
  std::vector<std::uint32_t> block_masks_;
  bool steiner_ = false;
  std::vector<std::uint32_t> through_;
  std::vector<std::vector<std::uint32_t>> tm1_by_level_;
  std::vector<std::vector<std::uint32_t>> blocks_by_max_;
  std::uint8_t img_[kMaxGroundSetSize] = {};
  std::uint32_t used_ = 0;
  std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t automorphism_count(const Design& d) {
  return AutCounter(d).count();
}

std::uint64_t orbit_size_exact(const Design& d) {
  if (d.v > 20) throw std::invalid_argument("orbit_size_exact: v too large");
  return factorial(d.v) / automorphism_count(d);
}

// ---------------------------------------------------------------------------
// Orbit enumeration.

std::span<const std::uint32_t> Orbit::member(std::size_t i) const {
  return {arena_.data() + i * static_cast<std::size_t>(block_count_),
          static_cast<std::size_t>(block_count_)};
}

std::vector<Subset> Orbit::member_blocks(std::size_t i) const {
  const auto m = member(i);
  std::vector<Subset> out;
  out.reserve(m.size());
  for (std::uint32_t x : m) out.push_back(Subset{x});
  return out;
}

Permutation Orbit::permutation_to(std::size_t i) const {
  std::vector<std::uint8_t> path;
  for (auto cur = static_cast<std::uint32_t>(i); cur != 0; cur = parent_[cur]) path.push_back(gen_[cur]);
  Permutation pi(v_);
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    pi = pi.then(Permutation::transposition(v_, *it, *it + 1));
  return pi;
}

namespace {

inline std::uint32_t swap_adjacent_bits(std::uint32_t m, int i) {
  const std::uint32_t lo = (m >> i) & 1u, hi = (m >> (i + 1)) & 1u;
  if (lo != hi) m ^= std::uint32_t{3} << i;
  return m;
}

struct SliceHash {
  const std::vector<std::uint32_t>* arena;
  int bc;
  std::size_t operator()(std::uint32_t idx) const {
    const std::uint32_t* p = arena->data() + static_cast<std::size_t>(idx) * bc;
    std::uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < bc; ++i) {
      h ^= p[i];
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct SliceEq {
  const std::vector<std::uint32_t>* arena;
  int bc;
  bool operator()(std::uint32_t a, std::uint32_t b) const {
    return std::memcmp(arena->data() + static_cast<std::size_t>(a) * bc,
                       arena->data() + static_cast<std::size_t>(b) * bc,
                       static_cast<std::size_t>(bc) * sizeof(std::uint32_t)) == 0;
  }
};

}  // namespace

Orbit orbit_enumerate(const Design& d, std::uint64_t cap) {
  if (d.v > 20) throw OrbitCapExceeded(std::numeric_limits<std::uint64_t>::max(), cap);
  if (factorial(d.v) > cap) {
    const std::uint64_t exact = orbit_size_exact(d);
    if (exact > cap) throw OrbitCapExceeded(exact, cap);
  }
  Orbit o;
  o.v_ = d.v;
  o.block_count_ = static_cast<int>(d.blocks.size());
  const int bc = o.block_count_;
  for (Subset b : d.blocks) o.arena_.push_back(b.mask);
  o.parent_.push_back(0);
  o.gen_.push_back(0);

  std::unordered_set<std::uint32_t, SliceHash, SliceEq> seen(
      1024, SliceHash{&o.arena_, bc}, SliceEq{&o.arena_, bc});
  seen.insert(0);

  std::vector<std::uint32_t> head_buf(bc);
  for (std::uint32_t head = 0; head < o.parent_.size(); ++head) {
    std::memcpy(head_buf.data(), o.arena_.data() + static_cast<std::size_t>(head) * bc,
                static_cast<std::size_t>(bc) * sizeof(std::uint32_t));
    for (int g = 0; g + 1 < d.v; ++g) {
      const auto cand = static_cast<std::uint32_t>(o.parent_.size());
      const std::size_t tail = o.arena_.size();
      o.arena_.resize(tail + bc);
      for (int i = 0; i < bc; ++i) o.arena_[tail + i] = swap_adjacent_bits(head_buf[i], g);
      std::sort(o.arena_.begin() + tail, o.arena_.end());
      if (seen.insert(cand).second) {
        o.parent_.push_back(head);
        o.gen_.push_back(static_cast<std::uint8_t>(g));
        if (o.parent_.size() > cap) throw OrbitCapExceeded(o.parent_.size(), cap);
      } else {
        o.arena_.resize(tail);
      }
    }
  }
  return o;
}

// ---------------------------------------------------------------------------
// Distribution evaluation: a pure map member -> (n, alpha) over a flat arena
// of sorted block-mask slices, then one deterministic aggregation pass.

namespace {

struct ArenaView {
  const std::uint32_t* data = nullptr;
  std::size_t count = 0;
  int bc = 0;
  std::span<const std::uint32_t> slice(std::size_t i) const {
    return {data + i * static_cast<std::size_t>(bc), static_cast<std::size_t>(bc)};
  }
};

void evaluate_range(const Design& root, ArenaView view, std::size_t lo, std::size_t hi,
                    std::uint32_t* n_of, std::int32_t* alpha_of) {
  AEvaluator ev(root.v, root.k);
  const std::uint64_t cvk = binomial(root.v, root.k);
  for (std::size_t i = lo; i < hi; ++i) {
    const AVector av = ev.eval(view.slice(i));
    n_of[i] = static_cast<std::uint32_t>(cvk - av.a[0]);
    alpha_of[i] = static_cast<std::int32_t>(av.a[0] + av.a[root.k]);
  }
}

DistributionReport tally(const Design& root, ArenaView view, bool sampled, std::uint64_t seed,
                         int jobs) {
  std::vector<std::uint32_t> n_of(view.count);
  std::vector<std::int32_t> alpha_of(view.count);
  if (jobs <= 1 || view.count < 2) {
    evaluate_range(root, view, 0, view.count, n_of.data(), alpha_of.data());
  } else {
    const std::size_t workers = std::min<std::size_t>(jobs, view.count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t lo = view.count * w / workers;
      const std::size_t hi = view.count * (w + 1) / workers;
      pool.emplace_back(evaluate_range, std::cref(root), view, lo, hi, n_of.data(), alpha_of.data());
    }
    for (auto& th : pool) th.join();
  }

  DistributionReport rep;
  rep.v = root.v;
  rep.k = root.k;
  rep.t = root.t;
  rep.lambda = root.lambda;
  rep.sampled = sampled;
  rep.seed = seed;
  rep.total = view.count;

  const auto slice_less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(
        view.data + a * view.bc, view.data + (a + 1) * view.bc,
        view.data + b * view.bc, view.data + (b + 1) * view.bc);
  };
  std::size_t best_min = 0, best_max = 0;
  for (std::size_t i = 0; i < view.count; ++i) {
    ++rep.freq[n_of[i]];
    ++rep.components[alpha_of[i]][n_of[i]];
    if (n_of[i] < n_of[best_min] || (n_of[i] == n_of[best_min] && slice_less(i, best_min)))
      best_min = i;
    if (n_of[i] > n_of[best_max] || (n_of[i] == n_of[best_max] && slice_less(i, best_max)))
      best_max = i;
  }
  for (const auto& [alpha, row] : rep.components) rep.s_values.push_back(alpha);
  std::reverse(rep.s_values.begin(), rep.s_values.end());  // components map is descending

  const auto witness = [&](std::size_t i) {
    std::vector<Subset> out;
    for (std::uint32_t m : view.slice(i)) out.push_back(Subset{m});
    return out;
  };
  rep.min = ExtremeEntry{n_of[best_min], rep.freq.at(n_of[best_min]), witness(best_min)};
  rep.max = ExtremeEntry{n_of[best_max], rep.freq.at(n_of[best_max]), witness(best_max)};
  return rep;
}

}  // namespace

DistributionReport game_distribution(const Design& d, int jobs, std::uint64_t cap) {
  require_independent(d, "game_distribution");
  const Orbit orbit = orbit_enumerate(d, cap);
  const ArenaView view{orbit.member(0).data(), orbit.size(), orbit.block_count()};
  return tally(d, view, false, 0, jobs);
}

DistributionReport game_distribution_sampled(const Design& d, std::uint64_t count,
                                             std::uint64_t seed, int jobs) {
  if (count < 1) throw std::invalid_argument("game_distribution_sampled: need at least one sample");
  require_independent(d, "game_distribution");
  std::mt19937_64 rng(seed);
  const int bc = static_cast<int>(d.blocks.size());
  std::vector<std::uint32_t> arena;
  arena.reserve(count * static_cast<std::size_t>(bc));
  for (std::uint64_t s = 0; s < count; ++s) {
    const Permutation pi = random_permutation(d.v, rng);
    const std::size_t tail = arena.size();
    for (Subset b : d.blocks) arena.push_back(pi.apply(b).mask);
    std::sort(arena.begin() + tail, arena.end());
  }
  const ArenaView view{arena.data(), static_cast<std::size_t>(count), bc};
  return tally(d, view, true, seed, jobs);
}

std::vector<int> s_values(const Design& d, int jobs, std::uint64_t cap) {
  return game_distribution(d, jobs, cap).s_values;
}

std::vector<int> s_values_sampled(const Design& d, std::uint64_t count, std::uint64_t seed) {
  return game_distribution_sampled(d, count, seed).s_values;
}

// ---------------------------------------------------------------------------
// Report serialization.

std::string report_to_json(const DistributionReport& r) {
  nlohmann::ordered_json j;
  j["v"] = r.v;
  j["k"] = r.k;
  j["t"] = r.t;
  j["lambda"] = r.lambda;
  j["orbit_size"] = r.total;
  j["mode"] = r.sampled ? "sample" : "exhaustive";
  j["seed"] = r.seed;
  auto freq = nlohmann::ordered_json::object();
  for (const auto& [n, c] : r.freq) freq[std::to_string(n)] = c;
  j["freq"] = std::move(freq);
  auto comps = nlohmann::ordered_json::object();
  for (const auto& [alpha, row] : r.components) {
    auto jrow = nlohmann::ordered_json::object();
    for (const auto& [n, c] : row) jrow[std::to_string(n)] = c;
    comps[std::to_string(alpha)] = std::move(jrow);
  }
  j["components"] = std::move(comps);
  j["s_values"] = r.s_values;
  auto extreme = [](const ExtremeEntry& e) {
    auto je = nlohmann::ordered_json::object();
    je["n"] = e.n;
    je["count"] = e.count;
    return je;
  };
  j["min"] = extreme(r.min);
  j["max"] = extreme(r.max);
  return j.dump();
}

std::string report_to_tsv(const DistributionReport& r, bool with_components) {
  std::ostringstream out;
  out << "# v=" << r.v << " k=" << r.k << " t=" << r.t << " lambda=" << r.lambda
      << " mode=" << (r.sampled ? "sample" : "exhaustive") << " orbit_size=" << r.total;
  if (r.sampled) {
    out << " seed=" << r.seed;
  } else if (r.v <= 20 && r.total > 0 && factorial(r.v) % r.total == 0) {
    out << " aut=" << factorial(r.v) / r.total;
  }
  out << "\n";

  out << "n";
  for (const auto& [n, c] : r.freq) out << '\t' << n;
  out << "\tTotal\n";

  if (with_components) {
    for (const auto& [alpha, row] : r.components) {
      out << alpha;
      std::uint64_t row_total = 0;
      for (const auto& [n, c] : r.freq) {
        out << '\t';
        if (const auto it = row.find(n); it != row.end()) {
          out << it->second;
          row_total += it->second;
        }
      }
      out << '\t' << row_total << "\n";
    }
    out << "Total";
  } else {
    out << "Freq";
  }
  std::uint64_t grand = 0;
  for (const auto& [n, c] : r.freq) {
    out << '\t' << c;
    grand += c;
  }
  out << '\t' << grand << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Projectivity by distribution.

ProjectivityVerdict projective_by_distribution(const Design& d, std::uint64_t cap) {
  require_validated_sts(d, "projective_by_distribution");
  const Orbit orbit = orbit_enumerate(d, cap);
  AEvaluator ev(d.v, d.k);
  std::map<int, std::size_t> first_by_alpha;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    const AVector av = ev.eval(orbit.member(i));
    first_by_alpha.try_emplace(static_cast<int>(av.a[0] + av.a[d.k]), i);
  }
  ProjectivityVerdict verdict;
  for (const auto& [alpha, idx] : first_by_alpha) verdict.alphas_seen.push_back(alpha);
  if (first_by_alpha.size() == 1) {
    verdict.kind = ProjectivityVerdict::Kind::projective;
  } else {
    verdict.kind = ProjectivityVerdict::Kind::non_projective;
    verdict.witness_pair = {orbit.permutation_to(first_by_alpha.begin()->second),
                            orbit.permutation_to(first_by_alpha.rbegin()->second)};
    verdict.note = "relabelings realize " + std::to_string(first_by_alpha.size()) +
                   " distinct symmetric components";
  }
  return verdict;
}

ProjectivityVerdict projective_by_distribution_sampled(const Design& d, std::uint64_t count,
                                                       std::uint64_t seed) {
  require_validated_sts(d, "projective_by_distribution");
  if (count < 1) throw std::invalid_argument("projective_by_distribution: need at least one sample");
  std::mt19937_64 rng(seed);
  AEvaluator ev(d.v, d.k);
  std::map<int, Permutation> first_by_alpha;
  for (std::uint64_t s = 0; s < count; ++s) {
    const Permutation pi = random_permutation(d.v, rng);
    std::vector<std::uint32_t> masks;
    masks.reserve(d.blocks.size());
    for (Subset b : d.blocks) masks.push_back(pi.apply(b).mask);
    std::sort(masks.begin(), masks.end());
    const AVector av = ev.eval(masks);
    first_by_alpha.try_emplace(static_cast<int>(av.a[0] + av.a[d.k]), pi);
    if (first_by_alpha.size() == 2) break;
  }
  ProjectivityVerdict verdict;
  for (const auto& [alpha, pi] : first_by_alpha) verdict.alphas_seen.push_back(alpha);
  const std::int64_t v = d.v;
  const auto projective_alpha = static_cast<int>(v * (v - 1) * (v - 3) / 24);
  if (first_by_alpha.size() >= 2) {
    verdict.kind = ProjectivityVerdict::Kind::non_projective;
    verdict.witness_pair = {first_by_alpha.begin()->second, first_by_alpha.rbegin()->second};
    verdict.note = "two sampled relabelings realize distinct symmetric components";
  } else if (verdict.alphas_seen.front() == projective_alpha) {
    verdict.kind = ProjectivityVerdict::Kind::consistent_with_projective;
    verdict.note = "all samples give the projective component value";
  } else {
    verdict.kind = ProjectivityVerdict::Kind::non_projective;
    verdict.note = "samples give a single component that is not the projective value";
  }
  return verdict;
}

// ---------------------------------------------------------------------------
// Matching-design closed form and spot checks.

std::vector<std::uint64_t> matching_distribution_polynomial(int w) {
  if (w < 1 || w > 16) throw std::invalid_argument("matching polynomial: need 1 <= w <= 16");
  std::vector<std::uint64_t> poly{1};
  for (int i = 1; i <= w; ++i) {
    // multiply by 1 + x + ... + x^{2i-2}
    std::vector<std::uint64_t> next(poly.size() + 2 * i - 2, 0);
    for (std::size_t deg = 0; deg < poly.size(); ++deg)
      for (int j = 0; j <= 2 * i - 2; ++j) next[deg + j] += poly[deg];
    poly = std::move(next);
  }
  std::vector<std::uint64_t> out(static_cast<std::size_t>(w) * (2 * w - 1) + 1, 0);
  for (std::size_t deg = 0; deg < poly.size(); ++deg) out[deg + static_cast<std::size_t>(w) * w] = poly[deg];
  return out;
}

bool matching_complement_identity(const Design& d, std::uint64_t cap) {
  if (d.k != 2 || d.t != 1 || d.lambda != 1 || d.v % 2 != 0 || !is_design(d).ok)
    throw std::invalid_argument("matching_complement_identity: input is not a validated S(1,2,2w)");
  const Orbit orbit = orbit_enumerate(d, cap);
  AEvaluator ev(d.v, d.k);
  const WelterGame g{d.v, d.k, 1};
  std::map<std::uint64_t, std::uint64_t> freq, freq_tilde;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    ++freq_tilde[ev.eval(orbit.member(i)).a[0]];
    ++freq[b_position(g, orbit.member_blocks(i)).size()];  // games-module route
  }
  const std::uint64_t all = binomial(d.v, 2);
  if (freq.size() != freq_tilde.size()) return false;
  for (const auto& [n, c] : freq_tilde) {
    const auto it = freq.find(all - n);
    if (it == freq.end() || it->second != c) return false;
  }
  return true;
}

ConstantCountCheck constant_count_check(const Design& d, std::uint64_t samples,
                                        std::uint64_t seed) {
  if (d.k - d.t < 2) throw std::invalid_argument("constant_count_check: need k - t >= 2");
  if (!is_design(d).ok) throw std::invalid_argument("constant_count_check: input fails is_design");
  ConstantCountCheck result;
  result.samples = samples;
  result.seed = seed;
  const std::uint64_t lambda0 = lambda_i(d, 0);
  result.expected = lambda0 + lambda0 * static_cast<std::uint64_t>(d.k) * (d.v - d.k) / 2;

  std::mt19937_64 rng(seed);
  AEvaluator ev(d.v, d.k);
  const WelterGame g{d.v, d.k, 1};
  const std::uint64_t cvk = binomial(d.v, d.k);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Permutation pi = random_permutation(d.v, rng);
    const Design image = apply_permutation(d, pi);
    const std::uint64_t via_counts = cvk - ev.eval(block_masks_of(image)).a[0];
    const std::uint64_t via_game = b_position(g, image.blocks).size();
    if (via_counts != result.expected || via_game != result.expected) {
      result.ok = false;
      result.first_deviation = via_counts != result.expected ? via_counts : via_game;
      result.deviating_relabeling = pi;
      break;
    }
  }
  return result;
}

}  // namespace steiner
