#pragma once

#include <string>
#include <vector>

namespace elliskit {

// One named verification outcome. witness is empty on success and names the
// counterexample otherwise.
struct Check {
  std::string name;
  bool passed = true;
  std::string witness;
};

using CheckList = std::vector<Check>;

inline bool all_passed(CheckList const& checks) {
  for (auto const& c : checks) {
    if (!c.passed) {
      return false;
    }
  }
  return true;
}

}  // namespace elliskit
