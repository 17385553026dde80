#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "elliskit/check.hpp"

namespace elliskit {

// Output of every command: named verdicts, computed structures, and timing
// kept apart so that reports can be compared byte for byte without it.
struct Report {
  std::string command;
  CheckList verdicts;
  nlohmann::json structures = nlohmann::json::object();
  std::optional<std::uint64_t> seed;
  nlohmann::json timing = nlohmann::json::object();

  void add(Check c) { verdicts.push_back(std::move(c)); }
  void add_all(CheckList const& cs, std::string const& prefix = "");
  bool all_passed() const { return elliskit::all_passed(verdicts); }

  nlohmann::json to_json(bool with_timing = true) const;
  std::string dump(bool with_timing = true) const;
  std::string text() const;
};

}  // namespace elliskit
