#include "nonleighton/report.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <sstream>

namespace nonleighton {

  bool Report::pass() const noexcept {
    return std::all_of(_checks.begin(), _checks.end(), [](Check const& c) {
      return c.pass;
    });
  }

  void Report::add(std::string name, bool pass, std::optional<std::string> witness) {
    _checks.push_back({std::move(name), pass, std::move(witness)});
  }

  void Report::absorb(Report const& other, std::string const& prefix) {
    for (auto const& c : other._checks) {
      _checks.push_back({prefix + ": " + c.name, c.pass, c.witness});
    }
    for (auto const& [k, v] : other._counts) {
      _counts[prefix + ": " + k] = v;
    }
  }

  std::optional<Check> Report::first_failure() const {
    for (auto const& c : _checks) {
      if (!c.pass) {
        return c;
      }
    }
    return std::nullopt;
  }

  std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["suite"]  = _suite;
    j["checks"] = nlohmann::ordered_json::array();
    for (auto const& c : _checks) {
      nlohmann::ordered_json cj{{"name", c.name}, {"pass", c.pass}};
      if (c.witness) {
        cj["witness"] = *c.witness;
      }
      j["checks"].push_back(std::move(cj));
    }
    j["counts"] = nlohmann::ordered_json::object();
    for (auto const& [k, v] : _counts) {
      j["counts"][k] = v;
    }
    j["pass"] = pass();
    return j.dump(2);
  }

  std::string Report::to_text() const {
    std::ostringstream out;
    out << "suite: " << _suite << '\n';
    for (auto const& c : _checks) {
      out << (c.pass ? "  PASS  " : "  FAIL  ") << c.name;
      if (c.witness) {
        out << "  [witness: " << *c.witness << "]";
      }
      out << '\n';
    }
    for (auto const& [k, v] : _counts) {
      out << "  count " << k << " = " << v << '\n';
    }
    out << (pass() ? "PASS" : "FAIL") << '\n';
    return out.str();
  }

}  // namespace nonleighton
