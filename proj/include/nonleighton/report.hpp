#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nonleighton {

  struct Check {
    std::string                name;
    bool                       pass = true;
    std::optional<std::string> witness;
  };

  // Named pass/fail checks with optional witnesses, plus integer counters.
  // Check order is insertion order; counters are sorted by name.
  class Report {
   public:
    explicit Report(std::string suite = "") : _suite(std::move(suite)) {}

    std::string const& suite() const noexcept {
      return _suite;
    }
    std::vector<Check> const& checks() const noexcept {
      return _checks;
    }
    std::map<std::string, std::int64_t> const& counts() const noexcept {
      return _counts;
    }

    bool pass() const noexcept;

    void add(std::string name, bool pass, std::optional<std::string> witness = {});
    void count(std::string const& name, std::int64_t value) {
      _counts[name] = value;
    }
    // Appends other's checks and counts, names prefixed by "prefix: ".
    void absorb(Report const& other, std::string const& prefix);

    std::optional<Check> first_failure() const;

    std::string to_json() const;
    std::string to_text() const;

   private:
    std::string                         _suite;
    std::vector<Check>                  _checks;
    std::map<std::string, std::int64_t> _counts;
  };

}  // namespace nonleighton
