#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "steiner/design.hpp"
#include "steiner/subset.hpp"

namespace steiner {

enum class Outcome : std::uint8_t { P, N };

// ---------------------------------------------------------------------------
// Explicit digraphs over integer vertices 0..vertex_count-1.

struct ExplicitGame {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

// ok iff the digraph is acyclic (every walk length finite); otherwise carries
// a directed cycle as a closed vertex walk, e.g. {0, 1, 0}.
struct CycleCheck {
  bool ok = true;
  std::vector<int> cycle;
};

CycleCheck validate_game(const ExplicitGame& g);

// Full outcome map. A position is N iff it has an option with outcome P;
// terminals are P. Throws std::invalid_argument if the graph has a cycle.
std::vector<Outcome> outcomes(const ExplicitGame& g);

// ---------------------------------------------------------------------------
// Welter graphs, kept implicit: neighbors are generated from the move rule on
// demand and never materialized globally.
//
// Wel(v, k) has position set C([v], k); a move replaces p in P by a smaller
// q not in P. Wel^m joins P to every Q != P reachable by a walk of length at
// most m; m = 1 is Welter's game itself.

struct WelterGame {
  int v = 0;
  int k = 0;
  int m = 1;
};

// Option set / in-neighbor set of p, ascending mask order.
std::vector<Subset> out_neighbors(const WelterGame& g, Subset p);
std::vector<Subset> in_neighbors(const WelterGame& g, Subset p);

// No edge joins two members of `blocks` (blocks sorted ascending by mask).
bool is_independent(const WelterGame& g, std::span<const Subset> blocks);

// blocks together with every in-neighbor of a block, ascending mask order.
// Computed mechanically whether or not `blocks` is independent.
std::vector<Subset> b_position(const WelterGame& g, std::span<const Subset> blocks);

// ---------------------------------------------------------------------------
// Restriction of a Welter graph to a position set: keeps exactly the edges
// with both endpoints retained.

class InducedGame {
 public:
  // Sorts the positions ascending by mask; they must be distinct k-subsets
  // of [v].
  InducedGame(WelterGame base, std::vector<Subset> positions);

  const WelterGame& base() const { return base_; }
  const std::vector<Subset>& positions() const { return positions_; }
  bool contains(Subset p) const;

 private:
  WelterGame base_;
  std::vector<Subset> positions_;
  std::vector<std::int32_t> direct_;  // mask -> index when v is small
};

class OutcomeTable {
 public:
  OutcomeTable(std::vector<Subset> positions, std::vector<Outcome> outcome);

  const std::vector<Subset>& positions() const { return positions_; }
  // Throws std::invalid_argument if p is not a position.
  Outcome of(Subset p) const;
  std::vector<Subset> p_positions() const;

 private:
  std::vector<Subset> positions_;  // ascending mask
  std::vector<Outcome> outcome_;   // parallel to positions_
};

// Solves the induced game in one pass over positions sorted by ascending
// element sum (every move strictly decreases the sum, so the order is
// topological) — no recursion, deterministic.
OutcomeTable outcomes(const InducedGame& g);

std::vector<Subset> winning_set(const InducedGame& g);

// True iff the winning set of the restriction of g to q equals `blocks`.
// blocks must be independent in g (throws std::invalid_argument otherwise).
bool phi_membership(const WelterGame& g, std::span<const Subset> blocks,
                    std::span<const Subset> q);

// The Welter game induced on b_position(blocks(d)); its winning set equals
// the block set. Throws std::invalid_argument when the block set is not
// independent in Wel(v, k), since the guarantee fails there.
InducedGame game_for_design(const Design& d);

// Why replacing p by q from `cur` is not a legal single move of g that stays
// inside the retained position set; empty string when the move is legal.
std::string move_rejection(const InducedGame& g, Subset cur, int p, int q);

}  // namespace steiner
