#ifndef HURWITZ_SELFCHECK_HPP
#define HURWITZ_SELFCHECK_HPP

#include <string>
#include <vector>

namespace hurwitz {

// Desk-scale property suites behind the `verify` subcommand.  Each check
// is fast (the whole set runs in seconds) and independent of the unit
// tests; the CLI prints one line per result.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<CheckResult> verify_quat();
std::vector<CheckResult> verify_lattice();
std::vector<CheckResult> verify_minima();
std::vector<CheckResult> verify_construct();
std::vector<CheckResult> verify_bounds();
std::vector<CheckResult> verify_all();

}  // namespace hurwitz

#endif  // HURWITZ_SELFCHECK_HPP
