#include "elliskit/report.hpp"

#include <sstream>

namespace elliskit {

void Report::add_all(CheckList const& cs, std::string const& prefix) {
  for (auto c : cs) {
    c.name = prefix + c.name;
    verdicts.push_back(std::move(c));
  }
}

nlohmann::json Report::to_json(bool with_timing) const {
  nlohmann::json v = nlohmann::json::array();
  for (auto const& c : verdicts) {
    v.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
  }
  nlohmann::json out = {{"command", command}, {"verdicts", v}, {"structures", structures},
                        {"passed", all_passed()}};
  if (seed) {
    out["seed"] = *seed;
  }
  if (with_timing) {
    out["timing"] = timing;
  }
  return out;
}

std::string Report::dump(bool with_timing) const { return to_json(with_timing).dump(2) + "\n"; }

std::string Report::text() const {
  std::ostringstream os;
  os << command << (seed ? " (seed " + std::to_string(*seed) + ")" : "") << "\n";
  for (auto const& c : verdicts) {
    os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
    if (!c.witness.empty()) {
      os << ": " << c.witness;
    }
    os << "\n";
  }
  for (auto const& [k, v] : structures.items()) {
    std::string s = v.dump();
    if (s.size() > 200) {
      s = s.substr(0, 197) + "...";
    }
    os << "  " << k << " = " << s << "\n";
  }
  return os.str();
}

}  // namespace elliskit
