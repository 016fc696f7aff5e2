#include "steiner/design.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace steiner {

Design make_design(int v, int k, int t, int lambda, std::vector<Subset> blocks) {
  if (v < 1 || v > kMaxGroundSetSize) throw std::invalid_argument("design: v must be in [1, 32]");
  if (t < 0 || t > k || k > v) throw std::invalid_argument("design: need 0 <= t <= k <= v");
  if (lambda < 1) throw std::invalid_argument("design: lambda must be positive");
  const Subset ground = full_set(v);
  for (Subset b : blocks) {
    if (b.size() != k) throw std::invalid_argument("design: block of wrong size");
    if ((b.mask & ~ground.mask) != 0) throw std::invalid_argument("design: block label out of range");
  }
  std::sort(blocks.begin(), blocks.end());
  if (std::adjacent_find(blocks.begin(), blocks.end()) != blocks.end())
    throw std::invalid_argument("design: duplicate block");
  return Design{v, k, t, lambda, std::move(blocks)};
}

DesignCheck is_design(const Design& d) {
  for (Subset ts : enumerate_k_subsets(d.v, d.t)) {
    int count = 0;
    for (Subset b : d.blocks)
      if ((b.mask & ts.mask) == ts.mask) ++count;
    if (count != d.lambda) return DesignCheck{false, ts, count};
  }
  return DesignCheck{};
}

std::uint64_t lambda_i(const Design& d, int i) {
  if (i < 0 || i > d.t) throw std::invalid_argument("lambda_i: need 0 <= i <= t");
  const std::uint64_t num = binomial(d.v - i, d.t - i) * static_cast<std::uint64_t>(d.lambda);
  const std::uint64_t den = binomial(d.k - i, d.t - i);
  if (num % den != 0) throw std::domain_error("lambda_i: non-integral (invalid parameter set)");
  return num / den;
}

Design make_matching_design(int w) {
  if (w < 1 || 2 * w > kMaxGroundSetSize) throw std::invalid_argument("matching design: need 1 <= w <= 16");
  std::vector<Subset> blocks;
  blocks.reserve(w);
  for (int i = 0; i < w; ++i) blocks.push_back(make_subset({2 * i, 2 * i + 1}));
  return make_design(2 * w, 2, 1, 1, std::move(blocks));
}

Design make_projective_sts(int d) {
  if (d < 1 || d > 4) throw std::invalid_argument("projective STS: need 1 <= d <= 4 (v <= 31)");
  const int v = (1 << (d + 1)) - 1;
  std::vector<Subset> blocks;
  // Point j <-> the nonzero vector with binary value j+1, so the triple
  // {p, q, r} is a line iff (p+1) ^ (q+1) == r+1.
  for (int p = 1; p <= v; ++p) {
    for (int q = p + 1; q <= v; ++q) {
      const int r = p ^ q;
      if (r > q) blocks.push_back(make_subset({p - 1, q - 1, r - 1}));
    }
  }
  return make_design(v, 3, 2, 1, std::move(blocks));
}

Design make_shuffle_s5612() {
  constexpr int v = 12;
  std::vector<std::uint8_t> mongean(v);
  for (int i = 0; i < v; ++i) mongean[i] = static_cast<std::uint8_t>(std::min(2 * i, 23 - 2 * i));
  const Permutation gens[2] = {reversal(v), Permutation::from_images(std::move(mongean))};

  std::set<Subset> seen{make_subset({0, 1, 2, 3, 4, 11})};
  std::vector<Subset> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    const Subset s = frontier.back();
    frontier.pop_back();
    for (const Permutation& g : gens) {
      const Subset img = g.apply(s);
      if (seen.insert(img).second) frontier.push_back(img);
    }
  }
  if (seen.size() != 132) throw std::logic_error("shuffle orbit closure != 132 blocks");
  return make_design(v, 6, 5, 1, std::vector<Subset>(seen.begin(), seen.end()));
}

Design make_cyclic_design(int v, std::span<const Subset> base_blocks, int k, int t) {
  if (v < 1 || v > kMaxGroundSetSize) throw std::invalid_argument("cyclic design: v out of range");
  if (base_blocks.empty()) throw std::invalid_argument("cyclic design: no base blocks");
  std::set<Subset> all;
  for (Subset base : base_blocks) {
    if (base.size() != k || (base.mask & ~full_set(v).mask) != 0)
      throw std::invalid_argument("cyclic design: base block is not a k-subset of [v]");
    std::set<Subset> orbit;
    for (int j = 0; j < v; ++j) {
      Subset translated;
      for (int p : base.elements()) translated = translated.with((p + j) % v);
      orbit.insert(translated);
    }
    for (Subset b : orbit)
      if (!all.insert(b).second)
        throw std::invalid_argument("cyclic design: translate orbits of base blocks overlap");
  }
  std::vector<Subset> blocks(all.begin(), all.end());
  // Infer lambda from the coverage of {0, ..., t-1}; is_design confirms it.
  const Subset probe = full_set(t);
  int lambda = 0;
  for (Subset b : blocks)
    if ((b.mask & probe.mask) == probe.mask) ++lambda;
  if (lambda == 0) throw std::invalid_argument("cyclic design: base blocks leave a t-subset uncovered");
  return make_design(v, k, t, lambda, std::move(blocks));
}

Design derived_design(const Design& d, int point) {
  if (point < 0 || point >= d.v) throw std::invalid_argument("derived design: point out of range");
  if (d.t < 2) throw std::invalid_argument("derived design: need t >= 2");
  const std::uint32_t low = (std::uint32_t{1} << point) - 1;  // labels below `point` keep their value
  std::vector<Subset> blocks;
  for (Subset b : d.blocks) {
    if (!b.contains(point)) continue;
    const std::uint32_t rest = b.without(point).mask;
    blocks.push_back(Subset{(rest & low) | ((rest & ~low & ~(std::uint32_t{1} << point)) >> 1)});
  }
  return make_design(d.v - 1, d.k - 1, d.t - 1, d.lambda, std::move(blocks));
}

Design apply_permutation(const Design& d, const Permutation& pi) {
  if (pi.degree() != d.v) throw std::invalid_argument("apply_permutation: degree mismatch");
  std::vector<Subset> blocks;
  blocks.reserve(d.blocks.size());
  for (Subset b : d.blocks) blocks.push_back(pi.apply(b));
  return make_design(d.v, d.k, d.t, d.lambda, std::move(blocks));
}

bool is_projective_vy(const Design& d) {
  if (d.k != 3 || d.t != 2 || d.lambda != 1 || !is_design(d).ok)
    throw std::invalid_argument("is_projective_vy: input is not a validated Steiner triple system");
  // Unique block through each pair of points.
  std::unordered_map<std::uint32_t, Subset> through;
  for (Subset b : d.blocks) {
    const auto e = b.elements();
    through[(1u << e[0]) | (1u << e[1])] = b;
    through[(1u << e[0]) | (1u << e[2])] = b;
    through[(1u << e[1]) | (1u << e[2])] = b;
  }
  const auto block_set = [&](Subset s) {
    return std::binary_search(d.blocks.begin(), d.blocks.end(), s);
  };
  // For blocks {a,b,c} and {a,d,e}, the block {b,d,f} forces {c,e,f}.
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < d.blocks.size(); ++j) {
      const std::uint32_t common = d.blocks[i].mask & d.blocks[j].mask;
      if (std::popcount(common) != 1) continue;
      const auto bi = Subset{d.blocks[i].mask & ~common}.elements();  // {b, c}
      const auto bj = Subset{d.blocks[j].mask & ~common}.elements();  // {d, e}
      for (int pick_b : {0, 1}) {
        for (int pick_d : {0, 1}) {
          const int b = bi[pick_b], c = bi[1 - pick_b];
          const int e_d = bj[pick_d], e = bj[1 - pick_d];
          const Subset third = through.at((1u << b) | (1u << e_d));
          const std::uint32_t f_mask = third.mask & ~(1u << b) & ~(1u << e_d);
          if (!block_set(Subset{(1u << c) | (1u << e) | f_mask})) return false;
        }
      }
    }
  }
  return true;
}

namespace {

int parse_header_field(std::istringstream& in, const std::string& key, int line_no) {
  std::string tok;
  if (!(in >> tok) || tok.size() < key.size() + 2 || tok.compare(0, key.size() + 1, key + "=") != 0)
    throw DesignParseError("line " + std::to_string(line_no) + ": expected " + key + "=<int>");
  try {
    std::size_t used = 0;
    const int value = std::stoi(tok.substr(key.size() + 1), &used);
    if (used != tok.size() - key.size() - 1) throw std::invalid_argument("");
    return value;
  } catch (const std::exception&) {
    throw DesignParseError("line " + std::to_string(line_no) + ": bad integer for " + key);
  }
}

}  // namespace

Design read_design(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DesignParseError("empty input");
  std::istringstream header(line);
  const int v = parse_header_field(header, "v", 1);
  const int k = parse_header_field(header, "k", 1);
  const int t = parse_header_field(header, "t", 1);
  const int lambda = parse_header_field(header, "lambda", 1);
  std::string extra;
  if (header >> extra) throw DesignParseError("line 1: trailing tokens after header");
  if (v < 1 || v > kMaxGroundSetSize || t < 0 || t > k || k > v || lambda < 1)
    throw DesignParseError("line 1: invalid design parameters");

  std::vector<Subset> blocks;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    Subset b;
    int label = 0, prev = -1, count = 0;
    while (row >> label) {
      if (label < 0 || label >= v)
        throw DesignParseError("line " + std::to_string(line_no) + ": label out of range");
      if (label <= prev)
        throw DesignParseError("line " + std::to_string(line_no) + ": labels not strictly ascending");
      prev = label;
      b = b.with(label);
      ++count;
    }
    if (!row.eof())
      throw DesignParseError("line " + std::to_string(line_no) + ": non-numeric token");
    if (count != k)
      throw DesignParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(k) + " labels");
    blocks.push_back(b);
  }
  try {
    return make_design(v, k, t, lambda, std::move(blocks));
  } catch (const std::invalid_argument& e) {
    throw DesignParseError(e.what());
  }
}

Design read_design_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DesignParseError("cannot open " + path);
  return read_design(in);
}

void write_design(std::ostream& out, const Design& d) {
  out << "v=" << d.v << " k=" << d.k << " t=" << d.t << " lambda=" << d.lambda << "\n";
  for (Subset b : d.blocks) {
    bool first = true;
    for (int p : b.elements()) {
      if (!first) out << ' ';
      first = false;
      out << p;
    }
    out << "\n";
  }
}

void write_design_file(const std::string& path, const Design& d) {
  std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
  if (!out) throw std::runtime_error("cannot write " + path);
  write_design(out, d);
}

}  // namespace steiner
