#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "steiner/game.hpp"
#include "support.hpp"

using namespace steiner;

namespace {

std::vector<Subset> all_positions(int v, int k) { return enumerate_k_subsets(v, k); }

// Outcome soundness: every N-position has a P option; every non-terminal
// P-position has only N options.
void check_outcome_soundness(const InducedGame& g, const OutcomeTable& table) {
  for (Subset p : g.positions()) {
    bool has_p_option = false, has_any = false;
    for (Subset q : out_neighbors(g.base(), p)) {
      if (!g.contains(q)) continue;
      has_any = true;
      if (table.of(q) == Outcome::P) has_p_option = true;
    }
    if (table.of(p) == Outcome::N) {
      CHECK(has_p_option);
    } else {
      CHECK_FALSE(has_p_option);
      (void)has_any;
    }
  }
}

bool winning_independent(const WelterGame& base, const std::vector<Subset>& w) {
  return is_independent(base, w);
}

}  // namespace

TEST_CASE("validate_game") {
  const ExplicitGame gamma1{4, {{3, 2}, {3, 1}, {2, 1}, {2, 0}, {1, 0}}};
  CHECK(validate_game(gamma1).ok);

  const ExplicitGame gamma2{2, {{1, 0}, {0, 1}}};
  const CycleCheck check = validate_game(gamma2);
  REQUIRE_FALSE(check.ok);
  CHECK(check.cycle == std::vector<int>{0, 1, 0});

  CHECK(validate_game(ExplicitGame{3, {}}).ok);
  CHECK_FALSE(validate_game(ExplicitGame{1, {{0, 0}}}).ok);
}

TEST_CASE("explicit outcomes") {
  const ExplicitGame gamma1{4, {{3, 2}, {3, 1}, {2, 1}, {2, 0}, {1, 0}}};
  const auto out = outcomes(gamma1);
  CHECK(out == std::vector<Outcome>{Outcome::P, Outcome::N, Outcome::N, Outcome::P});
  CHECK_THROWS_AS(outcomes(ExplicitGame{2, {{1, 0}, {0, 1}}}), std::invalid_argument);
}

TEST_CASE("Welter out-neighbors") {
  const WelterGame g{4, 2, 1};
  CHECK(out_neighbors(g, make_subset({2, 3})) ==
        std::vector<Subset>{make_subset({0, 2}), make_subset({1, 2}), make_subset({0, 3}),
                            make_subset({1, 3})});
  CHECK(out_neighbors(WelterGame{9, 3, 1}, make_subset({0, 1, 2})).empty());

  const auto two_step = out_neighbors(WelterGame{6, 3, 2}, make_subset({1, 4, 5}));
  CHECK(std::find(two_step.begin(), two_step.end(), make_subset({0, 2, 5})) != two_step.end());
}

TEST_CASE("Welter in-neighbors") {
  const WelterGame g{4, 2, 1};
  CHECK(in_neighbors(g, make_subset({0, 2})) ==
        std::vector<Subset>{make_subset({1, 2}), make_subset({0, 3}), make_subset({2, 3})});
  CHECK(in_neighbors(WelterGame{7, 3, 1}, make_subset({4, 5, 6})).empty());
}

TEST_CASE("neighbor duality and move monotonicity over all of Wel(6,3)") {
  const WelterGame g{6, 3, 1};
  std::map<Subset, std::set<Subset>> outs, ins;
  for (Subset p : all_positions(6, 3)) {
    const auto o = out_neighbors(g, p);
    const auto i = in_neighbors(g, p);
    // Every move strictly decreases the element sum, so the graph is acyclic.
    for (Subset q : o) CHECK(q.element_sum() < p.element_sum());
    for (Subset r : i) CHECK(r.element_sum() > p.element_sum());
    outs[p] = {o.begin(), o.end()};
    ins[p] = {i.begin(), i.end()};
  }
  for (Subset p : all_positions(6, 3))
    for (Subset q : all_positions(6, 3))
      CHECK(outs[p].count(q) == ins[q].count(p));
}

TEST_CASE("b_position") {
  const WelterGame g{4, 2, 1};
  const std::vector<Subset> blocks{make_subset({0, 2}), make_subset({1, 3})};
  std::vector<Subset> expected = all_positions(4, 2);
  expected.erase(std::remove(expected.begin(), expected.end(), make_subset({0, 1})), expected.end());
  CHECK(b_position(g, blocks) == expected);

  const std::vector<Subset> single{make_subset({0, 1})};
  std::vector<Subset> expected2 = all_positions(4, 2);
  expected2.erase(std::remove(expected2.begin(), expected2.end(), make_subset({2, 3})), expected2.end());
  CHECK(b_position(g, single) == expected2);

  const Design shuffle = make_shuffle_s5612();
  std::vector<Subset> high_sum;
  for (Subset p : all_positions(12, 6))
    if (p.element_sum() >= 21) high_sum.push_back(p);
  CHECK(high_sum.size() == 905);
  CHECK(b_position(WelterGame{12, 6, 1}, shuffle.blocks) == high_sum);
}

TEST_CASE("independence") {
  CHECK(is_independent(WelterGame{12, 6, 1}, make_shuffle_s5612().blocks));
  const std::vector<Subset> adjacent{make_subset({0, 1}), make_subset({0, 2})};
  CHECK_FALSE(is_independent(WelterGame{3, 2, 1}, adjacent));
  CHECK(is_independent(WelterGame{3, 2, 1}, std::vector<Subset>{}));
  // Block sets of Steiner systems S(t, t+m, v) stay independent in Wel^m.
  CHECK(is_independent(WelterGame{13, 4, 2}, testsupport::singer_s2413().blocks));
}

TEST_CASE("induced outcomes and winning sets") {
  const WelterGame g{4, 2, 1};
  const std::vector<Subset> blocks{make_subset({0, 2}), make_subset({1, 3})};
  const InducedGame intro(g, b_position(g, blocks));
  CHECK(intro.positions().size() == 5);
  const OutcomeTable table = outcomes(intro);
  CHECK(table.p_positions() == blocks);
  check_outcome_soundness(intro, table);

  // Restricting to the blocks alone leaves an edgeless game: all P.
  const InducedGame edgeless(g, blocks);
  CHECK(winning_set(edgeless) == blocks);

  const InducedGame full(g, all_positions(4, 2));
  const auto full_win = winning_set(full);
  CHECK(full_win == std::vector<Subset>{make_subset({0, 1}), make_subset({2, 3})});
  CHECK(winning_independent(g, full_win));
  check_outcome_soundness(full, outcomes(full));

  const InducedGame w52(WelterGame{5, 2, 1}, all_positions(5, 2));
  check_outcome_soundness(w52, outcomes(w52));
  CHECK(winning_independent(WelterGame{5, 2, 1}, winning_set(w52)));
}

TEST_CASE("hexad game") {
  std::vector<Subset> positions;
  for (Subset p : all_positions(12, 6))
    if (p.element_sum() >= 21) positions.push_back(p);
  const InducedGame hexad(WelterGame{12, 6, 1}, positions);
  const auto win = winning_set(hexad);
  CHECK(win.size() == 132);
  CHECK(win == make_shuffle_s5612().blocks);
  // Every sum-21 position is terminal, hence a P-position.
  for (Subset p : positions)
    if (p.element_sum() == 21) CHECK(std::binary_search(win.begin(), win.end(), p));
}

TEST_CASE("phi membership") {
  const WelterGame g{4, 2, 1};
  const std::vector<Subset> blocks{make_subset({0, 2}), make_subset({1, 3})};
  const auto bpos = b_position(g, blocks);
  CHECK(phi_membership(g, blocks, blocks));
  CHECK(phi_membership(g, blocks, bpos));
  CHECK_FALSE(phi_membership(g, blocks, all_positions(4, 2)));  // adds {0,1}

  const std::vector<Subset> dependent{make_subset({0, 1}), make_subset({0, 2})};
  CHECK_THROWS_AS(phi_membership(WelterGame{3, 2, 1}, dependent, dependent),
                  std::invalid_argument);
}

TEST_CASE("set characterization of winning-preserving restrictions") {
  std::mt19937_64 rng(20250808);
  int instances = 0;
  while (instances < 60) {
    const int v = 4 + static_cast<int>(uniform_below(rng, 4));  // 4..7
    const int k = 2 + static_cast<int>(uniform_below(rng, v - 2));
    const WelterGame g{v, k, 1};
    const auto positions = all_positions(v, k);

    // Random independent block set: random order, greedy keep.
    std::vector<Subset> pool = positions;
    for (std::size_t i = pool.size(); i > 1; --i)
      std::swap(pool[i - 1], pool[uniform_below(rng, i)]);
    std::vector<Subset> blocks;
    for (Subset cand : pool) {
      if (blocks.size() >= 3) break;
      std::vector<Subset> trial = blocks;
      trial.push_back(cand);
      std::sort(trial.begin(), trial.end());
      if (is_independent(g, trial)) blocks = std::move(trial);
    }
    if (blocks.empty()) continue;

    const auto bpos = b_position(g, blocks);
    // Random Q with blocks ⊆ Q ⊆ positions.
    std::vector<Subset> q = blocks;
    for (Subset p : positions)
      if (!std::binary_search(blocks.begin(), blocks.end(), p) && uniform_below(rng, 2) == 0)
        q.push_back(p);
    std::sort(q.begin(), q.end());

    const bool predicted = std::includes(bpos.begin(), bpos.end(), q.begin(), q.end());
    CHECK(phi_membership(g, blocks, q) == predicted);
    ++instances;
  }
}

TEST_CASE("Welter move rule oracle and Wel^m walk closure") {
  // m = 1 edges against a direct restatement of the move rule.
  const WelterGame g{6, 3, 1};
  for (Subset p : all_positions(6, 3)) {
    std::set<Subset> oracle;
    for (int a : p.elements())
      for (int q = 0; q < a; ++q)
        if (!p.contains(q)) oracle.insert(p.without(a).with(q));
    const auto got = out_neighbors(g, p);
    CHECK(std::set<Subset>(got.begin(), got.end()) == oracle);
  }
  // Wel^2 joins P to exactly the positions reached by walks of length 1 or 2.
  const WelterGame g2{6, 3, 2};
  for (Subset p : all_positions(6, 3)) {
    std::set<Subset> expect;
    for (Subset q : out_neighbors(g, p)) {
      expect.insert(q);
      for (Subset r : out_neighbors(g, q)) expect.insert(r);
    }
    expect.erase(p);
    const auto got = out_neighbors(g2, p);
    CHECK(std::set<Subset>(got.begin(), got.end()) == expect);
  }
}

TEST_CASE("game_for_design") {
  const Design intro = make_design(4, 2, 1, 1, {make_subset({0, 2}), make_subset({1, 3})});
  const InducedGame g1 = game_for_design(intro);
  CHECK(g1.positions().size() == 5);
  CHECK(winning_set(g1) == intro.blocks);

  const InducedGame g2 = game_for_design(make_matching_design(2));
  CHECK(g2.positions().size() == 6);

  // k = t: every k-subset is a block, which is never independent.
  const Design degenerate = make_design(3, 2, 2, 1, enumerate_k_subsets(3, 2));
  CHECK(is_design(degenerate).ok);
  CHECK_THROWS_AS(game_for_design(degenerate), std::invalid_argument);
}

TEST_CASE("move rejection explanations") {
  std::vector<Subset> positions;
  for (Subset p : all_positions(12, 6))
    if (p.element_sum() >= 21) positions.push_back(p);
  const InducedGame hexad(WelterGame{12, 6, 1}, positions);

  const Subset terminal = make_subset({0, 1, 2, 3, 4, 11});
  // q > p violates the move rule.
  const std::string reason = move_rejection(hexad, terminal, 3, 5);
  CHECK(reason.find("q < p") != std::string::npos);
  // A rule-shaped move that would leave the position set (sum drops below 21).
  CHECK(move_rejection(hexad, terminal, 11, 5).find("position set") != std::string::npos);
  CHECK(move_rejection(hexad, terminal, 7, 5) == std::string("7 is not in the current position"));
  CHECK(move_rejection(hexad, terminal, 3, 2) == std::string("2 is already in the current position"));

  const Subset playable = make_subset({6, 7, 8, 9, 10, 11});
  CHECK(move_rejection(hexad, playable, 11, 0).empty());
}
