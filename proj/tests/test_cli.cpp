#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octa/hierarchy.hpp"
#include "octa/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  const std::string cmd = std::string(OCTA_BIN) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto d = std::filesystem::temp_directory_path() / ("octa_cli_" + name);
  std::filesystem::remove_all(d);
  return d;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("verify algebra emits the structure table") {
  const Run r = run("verify --suite algebra --range 2 --format json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("passed").get<bool>());
  CHECK(j.at("sections").at("algebra").at("data").at("structure_constants").size() == 81);
  CHECK(j.at("paper_deltas").is_array());
  CHECK(j.at("flags").size() == 3);
  CHECK(j.dump(2) + "\n" == r.out);
}

TEST_CASE("verify usage errors") {
  CHECK(run("verify --suite intertwine --range 0").code == 2);
  CHECK(run("verify --suite nonsense").code == 2);
  CHECK(run("verify --format xml").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("verify casimir has three identity blocks") {
  const Run r = run("verify --suite casimir --range 2");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto& ids = j.at("sections").at("casimir").at("data").at("identities");
  REQUIRE(ids.size() == 3);
  CHECK(ids[2].at("printed_constant") == "41/12");
  CHECK(ids[2].at("engine_constant") == "15/4");
}

TEST_CASE("verify text format") {
  const Run r = run("verify --suite riccati --range 1 --format text");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS  riccati_residual_zero") != std::string::npos);
  CHECK(r.out.find("paper_deltas:") != std::string::npos);
}

TEST_CASE("iur so6 lattice export") {
  const auto dir = scratch_dir("so6");
  const Run r = run("iur --algebra so6 --q 3 --emit lattice --out " + dir.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("dimension: 50") != std::string::npos);
  CHECK(r.out.find("energy: 99/4") != std::string::npos);
  std::istringstream csv(slurp(dir / "so6_q3_lattice.csv"));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "l0,l1,l2,multiplicity,shell");
  int rows = 0, total = 0;
  while (std::getline(csv, line)) {
    ++rows;
    std::stringstream ls(line);
    std::string cell;
    for (int k = 0; k < 4; ++k) std::getline(ls, cell, ',');
    total += std::stoi(cell);
  }
  CHECK(rows == 44);
  CHECK(total == 50);
  const std::string js = slurp(dir / "so6_q3_lattice.json");
  CHECK(nlohmann::json::parse(js).dump(2) + "\n" == js);
}

TEST_CASE("iur u3 states export") {
  const auto dir = scratch_dir("u3");
  const Run r = run("iur --algebra u3 --m 1 --n 0 --emit states --out " + dir.string());
  CHECK(r.code == 0);
  const auto states = nlohmann::json::parse(slurp(dir / "u3_m1_n0_states.json"));
  REQUIRE(states.size() == 3);
  for (const auto& s : states) {
    CHECK(s.at("energy") == "35/4");
    CHECK(octa::to_json(octa::state_from_json(s)) == s);
  }
  CHECK_FALSE(std::filesystem::exists(dir / "u3_m1_n0_lattice.csv"));
}

TEST_CASE("iur label errors") {
  CHECK(run("iur --algebra so4 --n -1").code == 2);
  CHECK(run("iur --algebra u3 --m 1").code == 2);
  CHECK(run("iur --algebra so6 --q 1 --m 2").code == 2);
  CHECK(run("iur --algebra so7 --q 1").code == 2);
}

TEST_CASE("iur write failure") {
  const auto dir = scratch_dir("blocked");
  std::filesystem::create_directories(dir.parent_path());
  { std::ofstream(dir.string()) << "file in the way"; }
  CHECK(run("iur --algebra so4 --n 1 --out " + dir.string()).code == 1);
  std::filesystem::remove(dir);
}

TEST_CASE("spectrum table") {
  const Run r1 = run("spectrum --qmax 1");
  CHECK(r1.code == 0);
  CHECK(r1.out.find("0\t15/4\t1\t{(0,0):1}") != std::string::npos);
  CHECK(r1.out.find("1\t35/4\t6\t{(0,1):3,(1,0):3}") != std::string::npos);
  CHECK(r1.out.find("flag caption_energies") != std::string::npos);
  const Run r3 = run("spectrum --qmax 3");
  CHECK(r3.out.find("3\t99/4\t50\t") != std::string::npos);
  const Run r0 = run("spectrum --qmax 0");
  CHECK(r0.code == 0);
  CHECK(r0.out.find("\n1\t") == std::string::npos);
  CHECK(run("spectrum --qmax -1").code == 2);
}

TEST_CASE("report deltas carry exact evidence") {
  const auto deltas = octa::paper_deltas();
  bool b = false, c = false, so6 = false;
  for (const auto& d : deltas) {
    CHECK(d.contains("evidence"));
    const std::string id = d.at("id");
    if (id == "B-_multiplier") {
      b = true;
      CHECK_FALSE(d.at("evidence").at("printed_residual_zero").get<bool>());
      CHECK(d.at("evidence").at("engine_residual_zero").get<bool>());
    }
    if (id == "C-_multiplier") c = true;
    if (id == "so6_symmetrized_constant") {
      so6 = true;
      CHECK(d.at("evidence").at("residual_with_printed_constant") == "-1/3");
    }
  }
  CHECK(b);
  CHECK(c);
  CHECK(so6);
  for (const auto& d : deltas) CHECK(d.at("id") != "A-_multiplier");
}

TEST_CASE("report flags") {
  const auto flags = octa::paper_flags();
  REQUIRE(flags.size() == 3);
  CHECK(flags[0].at("engine").at("q1") == "35/4");
  CHECK(flags[1].at("engine") == "[A-,A+] = -2A");
  CHECK(flags[2].at("engine")[0][1] == "B+");
}
