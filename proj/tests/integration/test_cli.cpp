#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cycsub/constructions.hpp"
#include "cycsub/graph6.hpp"
#include "cycsub/iso.hpp"

#ifndef CYCSUB_CLI_PATH
#error "CYCSUB_CLI_PATH must point at the cycsub binary"
#endif

using namespace cycsub;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& stdin_file = "") {
  std::string cmd = std::string(CYCSUB_CLI_PATH) + " " + args + " 2>/dev/null";
  if (!stdin_file.empty()) cmd += " < " + stdin_file;
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const fs::path& scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("cycsub_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string path_of(const std::string& name) { return (scratch() / name).string(); }

void write_file(const std::string& name, const std::string& text) { std::ofstream(path_of(name)) << text; }

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

Graph first_graph(const std::string& text) {
  std::istringstream s(text);
  auto gs = read_graph6_all(s);
  REQUIRE_FALSE(gs.empty());
  return gs.front();
}

json result_of(const Run& r) { return json::parse(r.out).at("result"); }

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

int count_of(const std::string& hay, const std::string& needle) {
  int c = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++c;
  return c;
}

}  // namespace

TEST_CASE("construct writes graph6 and a sidecar") {
  auto r = run("construct extremal --n 3 --cycles 4 --out " + path_of("oct.g6"));
  CHECK(r.code == 0);
  const Graph oct = first_graph(read_file(path_of("oct.g6")));
  CHECK(isomorphic(oct, from_graph6("E}lw")));
  const json side = json::parse(read_file(path_of("oct.g6.json")));
  CHECK(side.at("result").at("invariants_ok") == true);
  CHECK(side.at("manifest").at("subcommand") == "construct");

  auto knn = run("construct knn --n 2");
  CHECK(knn.code == 0);
  CHECK(isomorphic(first_graph(knn.out), build_knn(2)));
  CHECK(isomorphic(first_graph(knn.out), cycle(4)));

  CHECK(run("construct extremal --n 4 --cycles 3,2").code == 2);
  CHECK(run("construct regular --n 7").code == 2);
  CHECK(run("construct nosuch --n 3").code == 2);
}

TEST_CASE("construct round trip for every family") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& type : cycle_types(n + 1)) {
      std::string cycles;
      for (int l : type) cycles += (cycles.empty() ? "" : ",") + std::to_string(l);
      auto r = run("construct extremal --n " + std::to_string(n) + " --cycles " + cycles);
      REQUIRE(r.code == 0);
      CHECK(isomorphic(first_graph(r.out), build_extremal(n, type).graph));
    }
    auto knn = run("construct knn --n " + std::to_string(n));
    CHECK(isomorphic(first_graph(knn.out), build_knn(n)));
    if (n >= 3) {
      auto star = run("construct star --n " + std::to_string(n));
      CHECK(star.code == 0);
      CHECK(isomorphic(first_graph(star.out), build_star_augmented(n)));
    } else {
      CHECK(run("construct star --n " + std::to_string(n)).code == 2);
    }
    auto reg = run("construct regular --n " + std::to_string(n));
    CHECK(reg.code == 0);
    std::istringstream s(reg.out);
    const auto got = read_graph6_all(s);
    const auto want = enumerate_regular_complements(n);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(isomorphic(got[i], want[i]));
  }
  auto comp = run("construct competitor --k 3");
  CHECK(comp.code == 0);
  CHECK(isomorphic(first_graph(comp.out), build_competitor(3).graph));
  CHECK(run("construct competitor --k 2").code == 2);

  // construct -> file -> count
  REQUIRE(run("construct extremal --n 3 --cycles 4 --out " + path_of("rt.g6")).code == 0);
  auto c = run("count " + path_of("rt.g6"));
  CHECK(c.code == 0);
  CHECK(result_of(c).at("reports").at(0).at("cyclic_count") == 30);
}

TEST_CASE("count") {
  write_file("k4.g6", "C~\n");
  auto r = run("count " + path_of("k4.g6"));
  CHECK(r.code == 0);
  const json res = result_of(r);
  CHECK(res.at("reports").at(0).at("cyclic_count") == 5);
  CHECK(res.at("reports").at(0).at("p_exact") == "5/16");

  auto piped = run("count -", path_of("k4.g6"));
  CHECK(piped.code == 0);
  CHECK(result_of(piped) == res);
  CHECK(json::parse(piped.out).at("manifest").at("inputs").at(0).at("path") == "-");

  Graph k21(21);
  for (int i = 0; i < 21; ++i) {
    for (int j = i + 1; j < 21; ++j) k21.add_edge(i, j);
  }
  write_file("k21.g6", to_graph6(k21) + "\n");
  CHECK(run("count " + path_of("k21.g6")).code == 3);
  write_file("c21.g6", to_graph6(cycle(21)) + "\n");
  auto forced = run("count --force " + path_of("c21.g6"));
  CHECK(forced.code == 0);
  CHECK(result_of(forced).at("reports").at(0).at("cyclic_count") == 1);

  write_file("empty.g6", "");
  CHECK(run("count " + path_of("empty.g6")).code == 2);
  write_file("junk.g6", "not graph6 at all\n");
  CHECK(run("count " + path_of("junk.g6")).code == 2);
  CHECK(run("count " + path_of("missing.g6")).code == 2);

  // Worker count does not change the payload.
  auto w1 = run("count --workers 1 " + path_of("k4.g6"));
  auto w3 = run("count --workers 3 " + path_of("k4.g6"));
  CHECK(result_of(w1) == result_of(w3));
}

TEST_CASE("estimate") {
  REQUIRE(run("construct extremal --n 3 --cycles 4 --out " + path_of("est.g6")).code == 0);
  const std::string base = "estimate " + path_of("est.g6") + " --p 0.5 --samples 100000 --seed 7";
  auto a = run(base);
  REQUIRE(a.code == 0);
  const json ra = result_of(a);
  const double truth = 15.0 / 32;
  const double se = std::sqrt(truth * (1 - truth) / 100000);
  CHECK(std::abs(ra.at("p_hat").get<double>() - truth) <= 4 * se);
  CHECK(ra.at("undecided_fraction") == 0.0);

  auto b = run(base);
  CHECK(result_of(b).dump() == ra.dump());
  json ma = json::parse(a.out).at("manifest"), mb = json::parse(b.out).at("manifest");
  ma.erase("wall_time_seconds");
  mb.erase("wall_time_seconds");
  CHECK(ma == mb);

  auto w8 = run(base + " --workers 8");
  CHECK(result_of(w8).dump() == ra.dump());

  write_file("c5.g6", to_graph6(cycle(5)) + "\n");
  auto c5 = run("estimate " + path_of("c5.g6") + " --p 1 --samples 100");
  CHECK(c5.code == 0);
  CHECK(result_of(c5).at("p_hat") == 1.0);

  CHECK(run("estimate " + path_of("c5.g6") + " --p 1.5").code == 2);
  CHECK(run("estimate " + path_of("c5.g6") + " --p -0.1").code == 2);
  CHECK(run("estimate " + path_of("c5.g6") + " --decider gn").code == 2);
  auto gn = run("estimate --extremal-n 4 --cycles 5 --decider gn --samples 2000 --seed 1");
  CHECK(gn.code == 0);
  CHECK(result_of(gn).at("decider") == "gn");
}

TEST_CASE("analyze") {
  REQUIRE(run("construct knn --n 5 --out " + path_of("k55.g6")).code == 0);
  auto r = run("analyze " + path_of("k55.g6") + " --exact-bidense");
  CHECK(r.code == 0);
  const json rep = result_of(r).at("reports").at(0);
  CHECK(rep.at("vertices") == 10);
  CHECK(rep.at("classification").at("kind") == "near_bipartite");
  CHECK(rep.at("bidense").at("confidence") == "exact");

  write_file("c6.g6", to_graph6(cycle(6)) + "\n");
  auto sparse = run("analyze " + path_of("c6.g6"));
  CHECK(sparse.code == 0);
  CHECK(result_of(sparse).at("reports").at(0).at("classification").is_null());
  CHECK(run("analyze " + path_of("k55.g6") + " --eps 0.5").code == 2);
}

TEST_CASE("verify") {
  auto calc = run("verify calculus");
  CHECK(calc.code == 0);
  CHECK(result_of(calc).at("pass") == true);
  auto bd = run("verify bindiff");
  CHECK(bd.code == 0);
  for (const auto& c : result_of(bd).at("checks")) CHECK(c.at("pass") == true);
  auto gn = run("verify gncriterion --n 4");
  CHECK(gn.code == 0);
  const auto types = cycle_types(5).size();
  CHECK(result_of(gn).at("checks").at(0).at("values").at("agreements") == 256.0 * types);
  CHECK(run("verify chernoff --n 50").code == 0);
  CHECK(run("verify nosuch").code == 2);
}

TEST_CASE("curve") {
  const std::string csv = path_of("f.csv"), svg = path_of("f.svg"), js = path_of("f.json");
  auto r = run("curve --svg " + svg + " --csv " + csv + " --json " + js);
  CHECK(r.code == 0);
  std::istringstream lines(read_file(csv));
  std::string line;
  std::getline(lines, line);
  CHECK(line == "alpha,f_alpha,is_extremum");
  int rows = 0;
  double best_f = 2, best_alpha = 0;
  while (std::getline(lines, line)) {
    ++rows;
    const auto c1 = line.find(','), c2 = line.rfind(',');
    const double alpha = std::stod(line.substr(0, c1));
    const double f = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
    if (f < best_f) {
      best_f = f;
      best_alpha = alpha;
    }
  }
  CHECK(rows == 400 + 3);
  const double step = std::log(20 / 0.2) / 399;
  CHECK(std::abs(std::log(best_alpha / 2)) <= step);

  const std::string s = read_file(svg);
  CHECK(s.rfind("<?xml", 0) == 0);
  CHECK(s.find("</svg>") != std::string::npos);
  CHECK(count_of(s, "<polyline") == 1);
  CHECK(count_of(s, "<circle") == 3);
  CHECK(count_of(s, "<") == count_of(s, ">"));
  CHECK(json::parse(read_file(js)).at("result").at("pattern_ok") == true);

  CHECK(run("curve --alpha-min 3 --alpha-max 1").code == 2);
  CHECK(run("curve --points 1").code == 2);
}
