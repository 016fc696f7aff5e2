#include "steiner/game.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace steiner {

namespace {

struct TopoResult {
  CycleCheck check;
  std::vector<int> finish_order;  // options finish before their owners
};

TopoResult explore(const ExplicitGame& g) {
  std::vector<std::vector<int>> adj(g.vertex_count);
  for (auto [from, to] : g.edges) {
    if (from < 0 || from >= g.vertex_count || to < 0 || to >= g.vertex_count)
      throw std::invalid_argument("explicit game: edge endpoint out of range");
    adj[from].push_back(to);
  }
  TopoResult result;
  result.finish_order.reserve(g.vertex_count);
  enum : std::uint8_t { kWhite, kGray, kBlack };
  std::vector<std::uint8_t> color(g.vertex_count, kWhite);
  std::vector<std::pair<int, std::size_t>> stack;  // (vertex, next edge index)
  for (int start = 0; start < g.vertex_count; ++start) {
    if (color[start] != kWhite) continue;
    color[start] = kGray;
    stack.push_back({start, 0});
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next < adj[u].size()) {
        const int w = adj[u][next++];
        if (color[w] == kGray) {
          // back edge: the cycle is the stack segment from w to u, closed
          std::vector<int> cycle;
          std::size_t i = 0;
          while (stack[i].first != w) ++i;
          for (; i < stack.size(); ++i) cycle.push_back(stack[i].first);
          cycle.push_back(w);
          result.check = CycleCheck{false, std::move(cycle)};
          return result;
        }
        if (color[w] == kWhite) {
          color[w] = kGray;
          stack.push_back({w, 0});
        }
      } else {
        color[u] = kBlack;
        result.finish_order.push_back(u);
        stack.pop_back();
      }
    }
  }
  return result;
}

}  // namespace

CycleCheck validate_game(const ExplicitGame& g) { return explore(g).check; }

std::vector<Outcome> outcomes(const ExplicitGame& g) {
  TopoResult topo = explore(g);
  if (!topo.check.ok) throw std::invalid_argument("outcomes: graph has a directed cycle");
  std::vector<std::vector<int>> adj(g.vertex_count);
  for (auto [from, to] : g.edges) adj[from].push_back(to);
  std::vector<Outcome> out(g.vertex_count, Outcome::P);
  for (int u : topo.finish_order) {
    for (int w : adj[u]) {
      if (out[w] == Outcome::P) {
        out[u] = Outcome::N;
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void check_position(const WelterGame& g, Subset p) {
  if (p.size() != g.k || (p.mask & ~full_set(g.v).mask) != 0)
    throw std::invalid_argument("position is not a k-subset of [v]");
}

// Single Welter moves out of p: replace a by a smaller b not in p.
void single_out_moves(int v, Subset p, std::vector<Subset>& out) {
  (void)v;
  for (std::uint32_t rem = p.mask; rem != 0; rem &= rem - 1) {
    const int a = std::countr_zero(rem);
    const std::uint32_t candidates = ((std::uint32_t{1} << a) - 1) & ~p.mask;
    for (std::uint32_t qs = candidates; qs != 0; qs &= qs - 1)
      out.push_back(Subset{p.mask ^ (std::uint32_t{1} << a) ^ (qs & (~qs + 1))});
  }
}

// Single Welter moves into p: replace a by a larger b not in p.
void single_in_moves(int v, Subset p, std::vector<Subset>& out) {
  const std::uint32_t ground = full_set(v).mask;
  for (std::uint32_t rem = p.mask; rem != 0; rem &= rem - 1) {
    const int a = std::countr_zero(rem);
    const std::uint32_t candidates = ground & ~p.mask & ~((std::uint32_t{2} << a) - 1);
    for (std::uint32_t qs = candidates; qs != 0; qs &= qs - 1)
      out.push_back(Subset{p.mask ^ (std::uint32_t{1} << a) ^ (qs & (~qs + 1))});
  }
}

std::vector<Subset> walk_closure(const WelterGame& g, Subset p,
                                 void (*step)(int, Subset, std::vector<Subset>&)) {
  check_position(g, p);
  if (g.m < 1) throw std::invalid_argument("Welter game: need m >= 1");
  std::vector<Subset> frontier{p}, next, scratch;
  std::set<Subset> reached;
  for (int depth = 0; depth < g.m; ++depth) {
    next.clear();
    for (Subset q : frontier) {
      scratch.clear();
      step(g.v, q, scratch);
      for (Subset r : scratch)
        if (reached.insert(r).second) next.push_back(r);
    }
    frontier = next;
  }
  reached.erase(p);
  return {reached.begin(), reached.end()};
}

}  // namespace

std::vector<Subset> out_neighbors(const WelterGame& g, Subset p) {
  if (g.m == 1) {
    check_position(g, p);
    std::vector<Subset> out;
    single_out_moves(g.v, p, out);
    std::sort(out.begin(), out.end());
    return out;
  }
  return walk_closure(g, p, &single_out_moves);
}

std::vector<Subset> in_neighbors(const WelterGame& g, Subset p) {
  if (g.m == 1) {
    check_position(g, p);
    std::vector<Subset> out;
    single_in_moves(g.v, p, out);
    std::sort(out.begin(), out.end());
    return out;
  }
  return walk_closure(g, p, &single_in_moves);
}

bool is_independent(const WelterGame& g, std::span<const Subset> blocks) {
  for (Subset b : blocks) {
    for (Subset q : out_neighbors(g, b))
      if (std::binary_search(blocks.begin(), blocks.end(), q)) return false;
  }
  return true;
}

std::vector<Subset> b_position(const WelterGame& g, std::span<const Subset> blocks) {
  std::vector<Subset> out(blocks.begin(), blocks.end());
  for (Subset b : blocks) {
    const auto in = in_neighbors(g, b);
    out.insert(out.end(), in.begin(), in.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------

InducedGame::InducedGame(WelterGame base, std::vector<Subset> positions)
    : base_(base), positions_(std::move(positions)) {
  for (Subset p : positions_) check_position(base_, p);
  std::sort(positions_.begin(), positions_.end());
  if (std::adjacent_find(positions_.begin(), positions_.end()) != positions_.end())
    throw std::invalid_argument("induced game: duplicate position");
  if (base_.v <= 20) {
    direct_.assign(std::size_t{1} << base_.v, -1);
    for (std::size_t i = 0; i < positions_.size(); ++i) direct_[positions_[i].mask] = static_cast<std::int32_t>(i);
  }
}

bool InducedGame::contains(Subset p) const {
  if (!direct_.empty()) return p.mask < direct_.size() && direct_[p.mask] >= 0;
  return std::binary_search(positions_.begin(), positions_.end(), p);
}

OutcomeTable::OutcomeTable(std::vector<Subset> positions, std::vector<Outcome> outcome)
    : positions_(std::move(positions)), outcome_(std::move(outcome)) {}

Outcome OutcomeTable::of(Subset p) const {
  const auto it = std::lower_bound(positions_.begin(), positions_.end(), p);
  if (it == positions_.end() || *it != p) throw std::invalid_argument("outcome: not a position");
  return outcome_[static_cast<std::size_t>(it - positions_.begin())];
}

std::vector<Subset> OutcomeTable::p_positions() const {
  std::vector<Subset> out;
  for (std::size_t i = 0; i < positions_.size(); ++i)
    if (outcome_[i] == Outcome::P) out.push_back(positions_[i]);
  return out;
}

OutcomeTable outcomes(const InducedGame& g) {
  const auto& pos = g.positions();
  // Ascending element sum is a topological order: options are solved first.
  std::vector<std::size_t> order(pos.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pos[a].element_sum() < pos[b].element_sum();
  });
  std::vector<Outcome> result(pos.size(), Outcome::P);
  const auto lookup = [&](Subset q) {
    return std::lower_bound(pos.begin(), pos.end(), q);
  };
  for (std::size_t idx : order) {
    for (Subset q : out_neighbors(g.base(), pos[idx])) {
      if (!g.contains(q)) continue;
      const auto it = lookup(q);
      if (result[static_cast<std::size_t>(it - pos.begin())] == Outcome::P) {
        result[idx] = Outcome::N;
        break;
      }
    }
  }
  return OutcomeTable(pos, std::move(result));
}

std::vector<Subset> winning_set(const InducedGame& g) { return outcomes(g).p_positions(); }

bool phi_membership(const WelterGame& g, std::span<const Subset> blocks,
                    std::span<const Subset> q) {
  if (!is_independent(g, blocks)) throw std::invalid_argument("phi_membership: blocks not independent");
  const InducedGame restricted(g, std::vector<Subset>(q.begin(), q.end()));
  const std::vector<Subset> winning = winning_set(restricted);
  return std::equal(winning.begin(), winning.end(), blocks.begin(), blocks.end());
}

InducedGame game_for_design(const Design& d) {
  const WelterGame g{d.v, d.k, 1};
  if (!is_independent(g, d.blocks))
    throw std::invalid_argument("game_for_design: block set is not independent in Wel(v,k)");
  return InducedGame(g, b_position(g, d.blocks));
}

std::string move_rejection(const InducedGame& g, Subset cur, int p, int q) {
  if (!g.contains(cur)) return "current position is not in the game";
  if (p < 0 || p >= g.base().v || q < 0 || q >= g.base().v)
    return "points must lie in 0.." + std::to_string(g.base().v - 1);
  if (!cur.contains(p)) return std::to_string(p) + " is not in the current position";
  if (cur.contains(q)) return std::to_string(q) + " is already in the current position";
  if (q >= p)
    return "the replacement must be smaller: need q < p, got q=" + std::to_string(q) +
           " >= p=" + std::to_string(p);
  if (!g.contains(cur.swapped(p, q))) return "the move leaves the position set of this game";
  return "";
}

}  // namespace steiner
