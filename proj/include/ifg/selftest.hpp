#ifndef IFG_SELFTEST_HPP
#define IFG_SELFTEST_HPP

#include <string>
#include <vector>

namespace ifg {

struct SelfCheck {
  std::string id;
  bool pass = false;
  std::string detail;
};

// The worked examples of the theory, sorted by id.
std::vector<SelfCheck> run_selftest();

// Canonical rendering of the worked set computations, one fact per line.
std::string worked_examples();

}  // namespace ifg

#endif
