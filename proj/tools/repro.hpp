#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sgtool {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

const std::vector<std::string>& scenario_names();

/// Runs a named scenario; throws std::invalid_argument for unknown names.
std::vector<Check> run_scenario(const std::string& name);

/// One "PASS name" / "FAIL name" line per check plus a summary line.
/// Returns true when every check passed.
bool print_checks(std::ostream& out, const std::string& scenario, const std::vector<Check>& checks);

}  // namespace sgtool
