#ifndef OCTA_REPORT_HPP
#define OCTA_REPORT_HPP

// Verification suites behind `octa verify`. Reports are deterministic JSON;
// every departure of the engine from a printed formula is listed under
// "paper_deltas" with the exact computation backing it.

#include <json.hpp>

#include <string>
#include <vector>

namespace octa {

enum class Suite { algebra, intertwine, casimir, riccati, hermiticity, all };

Suite parse_suite(const std::string& name);
std::string suite_name(Suite s);

struct Check {
  std::string name;
  bool exact = true;  // false: numeric check against a tolerance
  bool passed = false;
  nlohmann::json detail;
};

struct SuiteReport {
  std::string name;
  std::vector<Check> checks;
  nlohmann::json data = nlohmann::json::object();
  bool passed() const;
};

/// Runs one suite over the sector box {-range..range}^3 (range >= 1).
SuiteReport run_suite(Suite suite, int range);

/// Printed-vs-engine differences, each with evidence.
nlohmann::json paper_deltas();

/// Inconsistencies inside the printed text: caption energies, the [A-,A+]
/// sign, the duplicated [A+,C+] row.
nlohmann::json paper_flags();

/// Full report object for `verify`.
nlohmann::json verify_report(Suite suite, int range);
std::string verify_text(const nlohmann::json& report);

/// Rows of `octa spectrum`: q, E_q, so6 dimension, u3 decomposition.
nlohmann::json spectrum_table(int qmax);

}  // namespace octa

#endif
