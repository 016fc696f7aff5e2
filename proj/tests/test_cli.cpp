#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"
#include "steiner/design.hpp"
#include "support.hpp"

using namespace steiner;

namespace {

const std::string kCli = STEINER_CLI_PATH;

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& stdin_data = "") {
  std::string cmd;
  if (!stdin_data.empty()) {
    const std::string in_file = std::filesystem::temp_directory_path() / "steiner_cli_stdin.txt";
    std::ofstream f(in_file, std::ios::binary);
    f << stdin_data;
    f.close();
    cmd = kCli + " " + args + " < " + in_file + " 2>&1";
  } else {
    cmd = kCli + " " + args + " 2>&1";
  }
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {};
  RunResult r;
  std::array<char, 4096> buf;
  while (fgets(buf.data(), buf.size(), pipe) != nullptr) r.out += buf.data();
  const int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::string tmp_path(const std::string& name) {
  static const std::filesystem::path dir = [] {
    const auto d = std::filesystem::temp_directory_path() / "steiner_cli_tests";
    std::filesystem::create_directories(d);
    return d;
  }();
  return (dir / name).string();
}

std::string write_text(const std::string& name, const std::string& text) {
  const std::string path = tmp_path(name);
  std::ofstream f(path, std::ios::binary);
  f << text;
  return path;
}

Subset parse_printed_subset(const std::string& line) {
  const auto open = line.find('{');
  const auto close = line.find('}');
  REQUIRE(open != std::string::npos);
  REQUIRE(close != std::string::npos);
  std::string inner = line.substr(open + 1, close - open - 1);
  for (char& ch : inner)
    if (ch == ',') ch = ' ';
  std::istringstream in(inner);
  std::vector<int> pts;
  int x = 0;
  while (in >> x) pts.push_back(x);
  return make_subset(pts);
}

}  // namespace

TEST_CASE("construct to stdout") {
  const RunResult r = run("construct matching --w 2");
  CHECK(r.status == 0);
  CHECK(r.out == "v=4 k=2 t=1 lambda=1\n0 1\n2 3\n");
}

TEST_CASE("construct, verify, solve round trip") {
  const std::string shuffle = tmp_path("shuffle.design");
  CHECK(run("construct shuffle-s5612 --out " + shuffle).status == 0);

  const RunResult verify = run("verify " + shuffle);
  CHECK(verify.status == 0);
  CHECK(verify.out.find("ok: v=12 k=6 t=5 lambda=1 blocks=132") != std::string::npos);

  const RunResult solve = run("solve " + shuffle);
  CHECK(solve.status == 0);
  CHECK(solve.out.find("positions: 905") != std::string::npos);
  CHECK(solve.out.find("PASS") != std::string::npos);
}

TEST_CASE("solve the intro design") {
  const std::string intro = write_text("intro.design", "v=4 k=2 t=1 lambda=1\n0 2\n1 3\n");
  const RunResult solve = run("solve " + intro + " --print-p-positions --stats");
  CHECK(solve.status == 0);
  CHECK(solve.out.find("positions: 5") != std::string::npos);
  CHECK(solve.out.find("{0,2}") != std::string::npos);
  CHECK(solve.out.find("{1,3}") != std::string::npos);
  CHECK(solve.out.find("p-position set equals block set: PASS") != std::string::npos);
}

TEST_CASE("verify failure modes") {
  // Coverage failure: {2,3} never covered.
  const std::string sparse = write_text("sparse.design", "v=4 k=2 t=1 lambda=1\n0 1\n");
  const RunResult r1 = run("verify " + sparse);
  CHECK(r1.status == 1);
  CHECK(r1.out.find("FAIL") != std::string::npos);

  // Parse failure: duplicate block.
  const std::string dup = write_text("dup.design", "v=4 k=2 t=1 lambda=1\n0 1\n0 1\n");
  CHECK(run("verify " + dup).status == 2);

  CHECK(run("verify " + tmp_path("missing.design")).status == 2);
  CHECK(run("no-such-command").status == 2);

  const std::string garbage = write_text("garbage.design", "not a design\n");
  CHECK(run("solve " + garbage).status == 2);
}

TEST_CASE("construct projective triple systems") {
  const RunResult r = run("construct projective-sts --d 3");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("v=15 k=3 t=2 lambda=1\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 36);  // header + 35 blocks
}

TEST_CASE("distribution json and tsv agree") {
  const std::string nine = tmp_path("sts9.design");
  write_design_file(nine, testsupport::ag23());

  const RunResult jr = run("distribution " + nine + " --format json");
  REQUIRE(jr.status == 0);
  const auto j = nlohmann::json::parse(jr.out);
  CHECK(j["orbit_size"] == 840);
  CHECK(j["mode"] == "exhaustive");
  CHECK(j["freq"]["68"] == 1);
  CHECK(j["freq"]["80"] == 17);
  CHECK(j["s_values"] == nlohmann::json::array({16, 18, 20, 22, 24}));

  const RunResult tr = run("distribution " + nine + " --components --format tsv");
  REQUIRE(tr.status == 0);
  std::istringstream lines(tr.out);
  std::string line, total_line;
  std::vector<std::string> header;
  while (std::getline(lines, line)) {
    if (line.rfind("n\t", 0) == 0) {
      std::istringstream cells(line);
      std::string cell;
      while (std::getline(cells, cell, '\t')) header.push_back(cell);
    }
    if (line.rfind("Total\t", 0) == 0) total_line = line;
  }
  REQUIRE_FALSE(total_line.empty());
  std::istringstream cells(total_line);
  std::string cell;
  std::getline(cells, cell, '\t');  // "Total"
  std::vector<std::string> totals;
  while (std::getline(cells, cell, '\t')) totals.push_back(cell);
  REQUIRE(totals.size() == header.size() - 1);  // n columns + grand total
  // Column sums equal the JSON freq; the grand total equals orbit_size.
  for (std::size_t i = 0; i + 1 < totals.size(); ++i)
    CHECK(std::to_string(j["freq"][header[i + 1]].get<std::uint64_t>()) == totals[i]);
  CHECK(totals.back() == "840");
}

TEST_CASE("distribution sampling is deterministic and echoes the seed") {
  const std::string nine = tmp_path("sts9b.design");
  write_design_file(nine, testsupport::ag23());
  const RunResult a = run("distribution " + nine + " --sample 40 --seed 9 --format json");
  const RunResult b = run("distribution " + nine + " --sample 40 --seed 9 --format json");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"seed\":9") != std::string::npos);
  CHECK(a.out.find("\"mode\":\"sample\"") != std::string::npos);
}

TEST_CASE("orbit cap refusal") {
  const std::string pg15 = tmp_path("pg15.design");
  CHECK(run("construct projective-sts --d 3 --out " + pg15).status == 0);
  const RunResult r = run("distribution " + pg15);
  CHECK(r.status == 3);
  CHECK(r.out.find("64864800") != std::string::npos);  // 15!/20160
  // Sampling still works.
  const RunResult s = run("s-values " + pg15 + " --sample 25 --seed 4");
  CHECK(s.status == 0);
  CHECK(s.out.find("105") != std::string::npos);
}

TEST_CASE("s-values and projective-check") {
  const std::string fano = tmp_path("fano.design");
  CHECK(run("construct cyclic --v 7 --k 3 --t 2 --base 0,1,3 --out " + fano).status == 0);

  const RunResult sv = run("s-values " + fano);
  CHECK(sv.status == 0);
  CHECK(sv.out == "7\n");

  const RunResult pc = run("projective-check " + fano);
  CHECK(pc.status == 0);
  CHECK(pc.out.find("veblen-young: projective") != std::string::npos);
  CHECK(pc.out.find("methods agree") != std::string::npos);

  const std::string nine = tmp_path("sts9c.design");
  write_design_file(nine, testsupport::ag23());
  const RunResult pc9 = run("projective-check " + nine);
  CHECK(pc9.status == 0);
  CHECK(pc9.out.find("veblen-young: non-projective") != std::string::npos);
  CHECK(pc9.out.find("non-projective, alphas {16,18,20,22,24}") != std::string::npos);
  CHECK(pc9.out.find("witness relabelings") != std::string::npos);
  CHECK(pc9.out.find("methods agree") != std::string::npos);

  // Beyond the cap the game method falls back to sampling.
  const std::string pg15 = tmp_path("pg15b.design");
  CHECK(run("construct projective-sts --d 3 --out " + pg15).status == 0);
  const RunResult pc15 = run("projective-check " + pg15 + " --sample 60 --seed 5");
  CHECK(pc15.status == 0);
  CHECK(pc15.out.find("veblen-young: projective") != std::string::npos);
  CHECK(pc15.out.find("consistent with projective") != std::string::npos);
  CHECK(pc15.out.find("methods agree") != std::string::npos);
}

TEST_CASE("derived construction through the CLI") {
  const std::string shuffle = tmp_path("shuffle2.design");
  CHECK(run("construct shuffle-s5612 --out " + shuffle).status == 0);
  const RunResult r = run("construct derived --from " + shuffle + " --point 11");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("v=11 k=5 t=4 lambda=1\n", 0) == 0);
}

TEST_CASE("gf-check") {
  const RunResult r3 = run("gf-check --w 3");
  CHECK(r3.status == 0);
  CHECK(r3.out.find("PASS gf-check w=3") != std::string::npos);
  CHECK(r3.out.find("orbit 15") != std::string::npos);
  CHECK(run("gf-check --w 2").status == 0);
}

TEST_CASE("hexad verify") {
  const RunResult r = run("hexad --verify");
  CHECK(r.status == 0);
  CHECK(r.out.find("positions (element sum >= 21) count 905: PASS") != std::string::npos);
  CHECK(r.out.find("winning set equals the 132 shuffle blocks: PASS") != std::string::npos);
}

TEST_CASE("hexad interactive play") {
  const RunResult r = run("hexad --play", "6 7\n11 0\nquit\n");
  CHECK(r.status == 0);
  CHECK(r.out.find("illegal move") != std::string::npos);  // 7 already present
  REQUIRE(r.out.find("you:") != std::string::npos);
  REQUIRE(r.out.find("me:") != std::string::npos);

  // The engine replies onto a block whenever the user did not land on one.
  const Design shuffle = make_shuffle_s5612();
  const auto is_block = [&](Subset s) {
    return std::binary_search(shuffle.blocks.begin(), shuffle.blocks.end(), s);
  };
  const Subset you = parse_printed_subset(r.out.substr(r.out.find("you:")));
  const Subset me = parse_printed_subset(r.out.substr(r.out.find("me:")));
  CHECK((is_block(you) || is_block(me)));

  // Move rejection reason for a rule violation, as a q < p message.
  const RunResult bad = run("hexad --play --start 0,1,2,3,5,11", "3 4\nquit\n");
  CHECK(bad.status == 0);
  CHECK(bad.out.find("q < p") != std::string::npos);

  // Starting at a sum-21 position: the player to move has no legal move.
  const RunResult stuck = run("hexad --play --start 0,1,2,3,4,11");
  CHECK(stuck.status == 0);
  CHECK(stuck.out.find("No legal moves") != std::string::npos);
}
