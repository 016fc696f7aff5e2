// Command-line front end: design construction and IO, game solving,
// distribution reports, projectivity checks, and an interactive hexad game.
//
// Exit codes: 0 success/PASS, 1 verification FAIL, 2 usage or input error,
// 3 orbit cap exceeded.

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "steiner/design.hpp"
#include "steiner/distribution.hpp"
#include "steiner/game.hpp"

namespace {

using namespace steiner;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

// Input precondition failures (unreadable, unparsable, or non-design files).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Design load_validated(const std::string& path) {
  Design d = read_design_file(path);
  const DesignCheck check = is_design(d);
  if (!check.ok)
    throw InputError(path + ": not a design: t-subset " + to_string(check.witness) +
                     " covered " + std::to_string(check.witness_count) + " times, expected " +
                     std::to_string(d.lambda));
  return d;
}

Subset parse_point_list(const std::string& text) {
  std::vector<int> points;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      points.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw InputError("bad point list: " + text);
    }
  }
  return make_subset(points);
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

// --- construct --------------------------------------------------------------

struct ConstructOpts {
  std::string family;
  int w = 0;
  int d = 0;
  int v = 0, k = 0, t = 0;
  std::vector<std::string> base;
  std::string from;
  int point = -1;
  std::string out;
};

int run_construct(const ConstructOpts& o) {
  Design d;
  if (o.family == "matching") {
    if (o.w < 1) throw InputError("matching: need --w >= 1");
    d = make_matching_design(o.w);
  } else if (o.family == "projective-sts") {
    if (o.d < 1) throw InputError("projective-sts: need --d >= 1");
    d = make_projective_sts(o.d);
  } else if (o.family == "shuffle-s5612") {
    d = make_shuffle_s5612();
  } else if (o.family == "cyclic") {
    if (o.v < 1 || o.k < 1 || o.base.empty())
      throw InputError("cyclic: need --v, --k, --t and at least one --base");
    std::vector<Subset> base;
    for (const std::string& b : o.base) base.push_back(parse_point_list(b));
    d = make_cyclic_design(o.v, base, o.k, o.t);
  } else {  // derived
    if (o.from.empty() || o.point < 0) throw InputError("derived: need --from and --point");
    d = derived_design(load_validated(o.from), o.point);
  }

  const DesignCheck check = is_design(d);
  if (!check.ok) {
    std::cerr << "FAIL: constructed blocks are not a design: t-subset " << to_string(check.witness)
              << " covered " << check.witness_count << " times, expected " << d.lambda << "\n";
    return kExitFail;
  }
  std::ostringstream text;
  write_design(text, d);
  emit(o.out, text.str());
  if (!o.out.empty())
    std::cout << "wrote v=" << d.v << " k=" << d.k << " t=" << d.t << " lambda=" << d.lambda
              << " (" << d.blocks.size() << " blocks) to " << o.out << "\n";
  return kExitPass;
}

// --- verify -----------------------------------------------------------------

int run_verify(const std::string& path) {
  const Design d = read_design_file(path);
  const DesignCheck check = is_design(d);
  if (!check.ok) {
    std::cout << "FAIL: t-subset " << to_string(check.witness) << " covered "
              << check.witness_count << " times, expected " << d.lambda << "\n";
    return kExitFail;
  }
  std::cout << "ok: v=" << d.v << " k=" << d.k << " t=" << d.t << " lambda=" << d.lambda
            << " blocks=" << d.blocks.size() << " (lambda_0=" << lambda_i(d, 0) << ")\n";
  return kExitPass;
}

// --- solve ------------------------------------------------------------------

int run_solve(const std::string& path, bool print_p, bool stats) {
  const Design d = load_validated(path);
  const InducedGame game = game_for_design(d);
  const OutcomeTable table = outcomes(game);
  const std::vector<Subset> pset = table.p_positions();

  std::size_t terminals = 0;
  for (Subset p : game.positions()) {
    bool has_option = false;
    for (Subset q : out_neighbors(game.base(), p))
      if (game.contains(q)) {
        has_option = true;
        break;
      }
    if (!has_option) ++terminals;
  }

  std::cout << "positions: " << game.positions().size() << "\n";
  std::cout << "terminal positions: " << terminals << "\n";
  std::cout << "p-positions: " << pset.size() << "\n";
  if (stats) {
    const AVector av = a_counts(d);
    std::cout << "a-vector:";
    for (std::uint64_t x : av.a) std::cout << ' ' << x;
    std::cout << "\nalpha (a_0 + a_k): " << av.a[0] + av.a[d.k] << "\n";
    std::cout << "n_positions cross-check: " << n_positions(d) << "\n";
  }
  if (print_p)
    for (Subset p : pset) std::cout << to_string(p) << "\n";

  const bool match = pset == d.blocks;
  std::cout << "p-position set equals block set: " << (match ? "PASS" : "FAIL") << "\n";
  return match ? kExitPass : kExitFail;
}

// --- distribution / s-values -------------------------------------------------

struct DistOpts {
  std::string path;
  std::uint64_t sample = 0;
  std::optional<std::uint64_t> seed;
  int jobs = 1;
  bool components = false;
  bool force = false;
  std::uint64_t cap = kDefaultOrbitCap;
  std::string format = "tsv";
  std::string out;
};

DistributionReport compute_report(const Design& d, const DistOpts& o) {
  if (o.sample > 0) {
    std::uint64_t seed;
    if (o.seed) {
      seed = *o.seed;
    } else {
      std::random_device rd;
      seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
      std::cerr << "seed: " << seed << "\n";
    }
    return game_distribution_sampled(d, o.sample, seed, o.jobs);
  }
  return game_distribution(d, o.jobs, o.force ? std::numeric_limits<std::uint64_t>::max() : o.cap);
}

int run_distribution(const DistOpts& o) {
  const Design d = load_validated(o.path);
  const DistributionReport rep = compute_report(d, o);
  emit(o.out, o.format == "json" ? report_to_json(rep) + "\n" : report_to_tsv(rep, o.components));
  return kExitPass;
}

int run_s_values(const DistOpts& o) {
  const Design d = load_validated(o.path);
  const DistributionReport rep = compute_report(d, o);
  bool first = true;
  for (int alpha : rep.s_values) {
    if (!first) std::cout << ' ';
    first = false;
    std::cout << alpha;
  }
  std::cout << "\n";
  return kExitPass;
}

// --- projective-check ---------------------------------------------------------

int run_projective_check(const DistOpts& o, const std::string& method) {
  const Design d = load_validated(o.path);
  std::optional<bool> vy;
  if (method != "game") {
    vy = is_projective_vy(d);
    std::cout << "veblen-young: " << (*vy ? "projective" : "non-projective") << "\n";
  }
  std::optional<ProjectivityVerdict> game;
  if (method != "vy") {
    if (o.sample > 0) {
      std::uint64_t seed = o.seed ? *o.seed : std::random_device{}();
      game = projective_by_distribution_sampled(d, o.sample, seed);
      std::cout << "distribution (" << o.sample << " samples, seed " << seed << "): ";
    } else {
      game = projective_by_distribution(d, o.force ? std::numeric_limits<std::uint64_t>::max() : o.cap);
      std::cout << "distribution (exhaustive): ";
    }
    switch (game->kind) {
      case ProjectivityVerdict::Kind::projective:
        std::cout << "projective, s = {" << game->alphas_seen.front() << "}\n";
        break;
      case ProjectivityVerdict::Kind::consistent_with_projective:
        std::cout << "consistent with projective, all alphas = " << game->alphas_seen.front()
                  << "\n";
        break;
      case ProjectivityVerdict::Kind::non_projective: {
        std::cout << "non-projective, alphas {";
        for (std::size_t i = 0; i < game->alphas_seen.size(); ++i)
          std::cout << (i ? "," : "") << game->alphas_seen[i];
        std::cout << "}\n";
        if (game->witness_pair) {
          std::cout << "witness relabelings: pi1 = " << to_string(game->witness_pair->first)
                    << " pi2 = " << to_string(game->witness_pair->second) << "\n";
        }
        break;
      }
    }
  }
  if (vy && game) {
    const bool game_projective = game->kind != ProjectivityVerdict::Kind::non_projective;
    if (*vy != game_projective) {
      std::cout << "methods DISAGREE\n";
      return kExitFail;
    }
    std::cout << "methods agree\n";
  }
  return kExitPass;
}

// --- gf-check -----------------------------------------------------------------

int run_gf_check(int w, int jobs, std::uint64_t cap) {
  const std::vector<std::uint64_t> poly = matching_distribution_polynomial(w);
  const DistributionReport rep = game_distribution(make_matching_design(w), jobs, cap);
  for (std::uint64_t n = 0; n < poly.size(); ++n) {
    const auto it = rep.freq.find(n);
    const std::uint64_t observed = it == rep.freq.end() ? 0 : it->second;
    if (observed != poly[n]) {
      std::cout << "FAIL gf-check w=" << w << ": n=" << n << " coefficient " << poly[n]
                << " but distribution gives " << observed << "\n";
      return kExitFail;
    }
  }
  for (const auto& [n, c] : rep.freq) {
    if (n >= poly.size() && c != 0) {
      std::cout << "FAIL gf-check w=" << w << ": unexpected n=" << n << "\n";
      return kExitFail;
    }
  }
  std::cout << "PASS gf-check w=" << w << ": polynomial matches the exhaustive distribution (orbit "
            << rep.total << ")\n";
  return kExitPass;
}

// --- hexad ---------------------------------------------------------------------

InducedGame build_hexad() {
  std::vector<Subset> positions;
  for (Subset p : enumerate_k_subsets(12, 6))
    if (p.element_sum() >= 21) positions.push_back(p);
  return InducedGame(WelterGame{12, 6, 1}, std::move(positions));
}

int run_hexad_verify() {
  const Design shuffle = make_shuffle_s5612();
  const InducedGame hexad = build_hexad();
  const std::vector<Subset> winning = winning_set(hexad);
  const std::vector<Subset> bpos = b_position(WelterGame{12, 6, 1}, shuffle.blocks);

  bool ok = true;
  const auto report = [&](const char* what, bool pass) {
    std::cout << what << ": " << (pass ? "PASS" : "FAIL") << "\n";
    ok = ok && pass;
  };
  report("positions (element sum >= 21) count 905", hexad.positions().size() == 905);
  report("winning set equals the 132 shuffle blocks", winning == shuffle.blocks);
  report("b-position of the shuffle blocks equals the hexad position set",
         bpos == hexad.positions());
  std::cout << (ok ? "PASS" : "FAIL") << " hexad verification (positions "
            << hexad.positions().size() << ", winning " << winning.size() << ")\n";
  return ok ? kExitPass : kExitFail;
}

bool hexad_terminal(const InducedGame& g, Subset cur) {
  for (Subset q : out_neighbors(g.base(), cur))
    if (g.contains(q)) return false;
  return true;
}

int run_hexad_play(const std::string& start) {
  const InducedGame hexad = build_hexad();
  const OutcomeTable table = outcomes(hexad);

  Subset cur = start.empty() ? make_subset({6, 7, 8, 9, 10, 11}) : parse_point_list(start);
  if (!hexad.contains(cur))
    throw InputError("start " + to_string(cur) + " is not a hexad position (need a 6-subset of [12] with sum >= 21)");

  std::cout << "Hexad play. Enter moves as \"p q\" (replace p by a smaller absent q). EOF quits.\n";
  const auto show = [&](const char* who, Subset s) {
    std::cout << who << to_string(s) << "  sum " << s.element_sum() << "\n";
  };
  show("position: ", cur);

  std::string line;
  for (;;) {
    if (hexad_terminal(hexad, cur)) {
      std::cout << "No legal moves from " << to_string(cur) << ". You cannot move: I win.\n";
      return kExitPass;
    }
    std::cout << "your move (p q): " << std::flush;
    if (!std::getline(std::cin, line)) {
      std::cout << "\nbye\n";
      return kExitPass;
    }
    if (line == "q" || line == "quit") {
      std::cout << "bye\n";
      return kExitPass;
    }
    int p = 0, q = 0;
    std::istringstream in(line);
    if (!(in >> p >> q)) {
      std::cout << "illegal move: expected two integers \"p q\"\n";
      continue;
    }
    const std::string reason = move_rejection(hexad, cur, p, q);
    if (!reason.empty()) {
      std::cout << "illegal move: " << reason << "\n";
      continue;
    }
    cur = cur.swapped(p, q);
    show("you:      ", cur);
    if (hexad_terminal(hexad, cur)) {
      std::cout << "You made the last move: you win.\n";
      return kExitPass;
    }
    // Engine reply: the lowest-mask winning option when one exists.
    Subset reply;
    bool found_winning = false, found_any = false;
    for (Subset q2 : out_neighbors(hexad.base(), cur)) {  // ascending mask
      if (!hexad.contains(q2)) continue;
      if (!found_any) {
        reply = q2;
        found_any = true;
      }
      if (table.of(q2) == Outcome::P) {
        reply = q2;
        found_winning = true;
        break;
      }
    }
    (void)found_winning;
    cur = reply;
    show("me:       ", cur);
    if (hexad_terminal(hexad, cur)) {
      std::cout << "I made the last move: I win.\n";
      return kExitPass;
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Builds games whose P-position sets are the block sets of Steiner systems;\n"
               "computes game distributions, symmetric components, and projectivity checks."};
  app.require_subcommand(1);

  ConstructOpts con;
  auto* construct = app.add_subcommand("construct", "construct a design and write it in the text format");
  construct->add_option("family", con.family, "matching | projective-sts | shuffle-s5612 | cyclic | derived")
      ->required()
      ->check(CLI::IsMember({"matching", "projective-sts", "shuffle-s5612", "cyclic", "derived"}));
  construct->add_option("--w", con.w, "matching: number of blocks (v = 2w)");
  construct->add_option("--d", con.d, "projective-sts: order parameter (v = 2^(d+1)-1)");
  construct->add_option("--v", con.v, "cyclic: ground set size");
  construct->add_option("--k", con.k, "cyclic: block size");
  construct->add_option("--t", con.t, "cyclic: strength");
  construct->add_option("--base", con.base, "cyclic: base block, e.g. 0,1,3,9 (repeatable)");
  construct->add_option("--from", con.from, "derived: input design file");
  construct->add_option("--point", con.point, "derived: point to derive at");
  construct->add_option("--out", con.out, "output path (stdout if omitted)");

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "check the covering condition of a design file");
  verify->add_option("design", verify_path, "design file")->required();

  std::string solve_path;
  bool solve_print_p = false, solve_stats = false;
  auto* solve = app.add_subcommand("solve", "solve the game induced by a design");
  solve->add_option("design", solve_path, "design file")->required();
  solve->add_flag("--print-p-positions", solve_print_p, "list the P-positions");
  solve->add_flag("--stats", solve_stats, "print the a-vector and cross-checks");

  DistOpts dist;
  auto* distribution = app.add_subcommand("distribution", "game distribution over all relabelings");
  distribution->add_option("design", dist.path, "design file")->required();
  auto* dist_sample = distribution->add_option("--sample", dist.sample, "sample N random relabelings");
  distribution->add_option("--seed", dist.seed, "PRNG seed for --sample (auto-generated and echoed if omitted)");
  distribution->add_option("--jobs", dist.jobs, "worker threads")->check(CLI::PositiveNumber);
  distribution->add_flag("--components", dist.components, "emit the symmetric component table (tsv)");
  distribution->add_option("--format", dist.format, "tsv | json")->check(CLI::IsMember({"tsv", "json"}));
  distribution->add_option("--out", dist.out, "output path (stdout if omitted)");
  distribution->add_option("--cap", dist.cap, "orbit cap for exhaustive mode");
  auto* dist_force = distribution->add_flag("--force-exhaustive", dist.force, "ignore the orbit cap");
  dist_sample->excludes(dist_force);

  DistOpts sv;
  auto* svalues = app.add_subcommand("s-values", "realized symmetric component indices a_0 + a_k");
  svalues->add_option("design", sv.path, "design file")->required();
  auto* sv_sample = svalues->add_option("--sample", sv.sample, "sample N random relabelings");
  svalues->add_option("--seed", sv.seed, "PRNG seed for --sample");
  svalues->add_option("--jobs", sv.jobs, "worker threads")->check(CLI::PositiveNumber);
  svalues->add_option("--cap", sv.cap, "orbit cap for exhaustive mode");
  auto* sv_force = svalues->add_flag("--force-exhaustive", sv.force, "ignore the orbit cap");
  sv_sample->excludes(sv_force);

  DistOpts proj;
  std::string proj_method = "both";
  auto* projective = app.add_subcommand("projective-check", "is the triple system projective?");
  projective->add_option("design", proj.path, "design file")->required();
  projective->add_option("--method", proj_method, "vy | game | both")
      ->check(CLI::IsMember({"vy", "game", "both"}));
  projective->add_option("--sample", proj.sample, "sample N random relabelings (game method)");
  projective->add_option("--seed", proj.seed, "PRNG seed for --sample");
  projective->add_option("--cap", proj.cap, "orbit cap for exhaustive mode");

  int gf_w = 0, gf_jobs = 1;
  std::uint64_t gf_cap = kDefaultOrbitCap;
  auto* gf = app.add_subcommand("gf-check", "closed form vs exhaustive matching-design distribution");
  gf->add_option("--w", gf_w, "matching design parameter (v = 2w)")->required()->check(CLI::PositiveNumber);
  gf->add_option("--jobs", gf_jobs, "worker threads")->check(CLI::PositiveNumber);
  gf->add_option("--cap", gf_cap, "orbit cap");

  bool hexad_verify = false, hexad_play = false;
  std::string hexad_start;
  auto* hexad = app.add_subcommand("hexad", "the hexad game: verification or interactive play");
  hexad->add_flag("--verify", hexad_verify, "verify the hexad/shuffle identities");
  hexad->add_flag("--play", hexad_play, "interactive play on stdin/stdout");
  hexad->add_option("--start", hexad_start, "starting position for --play, e.g. 6,7,8,9,10,11");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*construct) return run_construct(con);
    if (*verify) return run_verify(verify_path);
    if (*solve) return run_solve(solve_path, solve_print_p, solve_stats);
    if (*distribution) return run_distribution(dist);
    if (*svalues) return run_s_values(sv);
    if (*projective) return run_projective_check(proj, proj_method);
    if (*gf) return run_gf_check(gf_w, gf_jobs, gf_cap);
    if (*hexad) {
      if (hexad_verify == hexad_play)
        throw InputError("hexad: need exactly one of --verify / --play");
      return hexad_verify ? run_hexad_verify() : run_hexad_play(hexad_start);
    }
    return kExitUsage;
  } catch (const OrbitCapExceeded& e) {
    std::cerr << "error: " << e.what() << "; use --sample N --seed S, or raise --cap / --force-exhaustive\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
