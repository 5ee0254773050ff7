#include "octa/report.hpp"
#include "octa/hierarchy.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using json = nlohmann::json;
using namespace octa;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError {
  std::string message;
};

bool write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << body;
  out.close();
  return static_cast<bool>(out);
}

int cmd_verify(const std::string& suite, int range, const std::string& format) {
  const json report = verify_report(parse_suite(suite), range);
  if (format == "json")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << verify_text(report);
  return report.at("passed").get<bool>() ? kOk : kFail;
}

struct IurRequest {
  Algebra algebra;
  std::vector<int> label;
  GroundKind ground;
  std::string tag;
};

IurRequest iur_request(const std::string& algebra, std::optional<int> m, std::optional<int> n,
                       std::optional<int> q) {
  auto need = [](std::optional<int> v, const char* flag) {
    if (!v) throw UsageError{std::string("missing label ") + flag};
    if (*v < 0) throw UsageError{std::string("label ") + flag + " must be >= 0"};
    return *v;
  };
  auto forbid = [&algebra](std::optional<int> v, const char* flag) {
    if (v) throw UsageError{std::string("label ") + flag + " does not apply to " + algebra};
  };
  if (algebra == "u3") {
    forbid(q, "--q");
    const int mm = need(m, "--m"), nn = need(n, "--n");
    return {Algebra::u3, {mm, nn}, GroundKind::u3,
            "u3_m" + std::to_string(mm) + "_n" + std::to_string(nn)};
  }
  if (algebra == "so4") {
    forbid(m, "--m");
    forbid(q, "--q");
    const int nn = need(n, "--n");
    return {Algebra::so4, {nn}, GroundKind::so4, "so4_n" + std::to_string(nn)};
  }
  forbid(m, "--m");
  forbid(n, "--n");
  const int qq = need(q, "--q");
  return {Algebra::so6, {qq}, qq % 2 ? GroundKind::so6_odd : GroundKind::so6_even,
          "so6_q" + std::to_string(qq)};
}

int cmd_iur(const IurRequest& req, const std::string& out, const std::string& emit) {
  std::vector<Rational> params(req.label.begin(), req.label.end());
  const Rational e = ground_state(req.ground, params).energy;
  const std::filesystem::path dir(out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    std::cerr << "error: cannot create " << dir << ": " << ec.message() << "\n";
    return kFail;
  }
  std::vector<std::pair<std::filesystem::path, std::string>> files;
  IurLattice lattice;
  if (emit == "lattice") {
    lattice = iur_lattice(req.algebra, req.label);
  } else {
    const IurStates s = iur_states(req.algebra, req.label);
    lattice = s.lattice;
    json states = json::array();
    for (const auto& st : s.states) states.push_back(to_json(st));
    files.emplace_back(dir / (req.tag + "_states.json"), states.dump(2) + "\n");
    std::cout << "states: " << s.states.size() << "\n";
  }
  if (emit != "states") {
    files.emplace_back(dir / (req.tag + "_lattice.csv"), lattice_csv(lattice));
    files.emplace_back(dir / (req.tag + "_lattice.json"), to_json(lattice).dump(2) + "\n");
  }
  for (const auto& [path, body] : files) {
    if (!write_file(path, body)) {
      std::cerr << "error: cannot write " << path << "\n";
      return kFail;
    }
    std::cout << "wrote " << path.string() << "\n";
  }
  std::cout << "algebra: " << algebra_name(req.algebra) << "\n"
            << "points: " << lattice.points.size() << "\n"
            << "dimension: " << lattice.dimension << "\n"
            << "energy: " << to_string(e) << "\n";
  return kOk;
}

int cmd_spectrum(int qmax) {
  const json rows = spectrum_table(qmax);
  std::cout << "q\tE_q\tso6_dim\tu3_decomposition\n";
  for (const auto& r : rows) {
    std::string parts;
    for (const auto& [label, dim] : r.at("u3_decomposition").items())
      parts += (parts.empty() ? "" : ",") + label + ":" + std::to_string(dim.get<long>());
    std::cout << r.at("q").get<int>() << "\t" << r.at("energy").get<std::string>() << "\t"
              << r.at("so6_dimension").get<long>() << "\t{" << parts << "}\n";
  }
  for (const auto& f : paper_flags())
    if (f.at("id") == "caption_energies")
      std::cout << "flag caption_energies: printed " << f.at("printed").dump() << ", engine "
                << f.at("engine").dump() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for the factorized u(3)/so(6) hierarchy on the sphere"};
  app.require_subcommand(1);

  std::string suite = "all", format = "json";
  int range = 2;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"algebra", "intertwine", "casimir", "riccati", "hermiticity", "all"}));
  verify->add_option("--range", range, "Sector box half-width")->check(CLI::Range(1, 1000));
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  std::string algebra, out = ".", emit = "both";
  std::optional<int> m, n, q;
  auto* iur = app.add_subcommand("iur", "Export an IUR lattice and its states");
  iur->add_option("--algebra", algebra)->required()->check(CLI::IsMember({"u3", "so4", "so6"}));
  iur->add_option("--m", m);
  iur->add_option("--n", n);
  iur->add_option("--q", q);
  iur->add_option("--out", out, "Output directory");
  iur->add_option("--emit", emit)->check(CLI::IsMember({"lattice", "states", "both"}));

  int qmax = 3;
  auto* spectrum = app.add_subcommand("spectrum", "Tabulate the so(6) spectrum");
  spectrum->add_option("--qmax", qmax)->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(suite, range, format);
    if (*iur) return cmd_iur(iur_request(algebra, m, n, q), out, emit);
    if (*spectrum) return cmd_spectrum(qmax);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n" << iur->help();
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
