#include "nonleighton/json_io.hpp"

#include <nlohmann/json.hpp>

#include "nonleighton/errors.hpp"

namespace nonleighton {

  namespace {

    using json = nlohmann::ordered_json;

    json table_json(CosetTable const& t) {
      json j;
      j["n"]      = t.size();
      j["action"] = json::object();
      for (std::size_t g = 0; g < t.generators().size(); ++g) {
        json row = json::array();
        for (int x : t.action(g)) {
          row.push_back(x == CosetTable::undefined ? 0 : x + 1);
        }
        j["action"][std::string(1, t.generators()[g])] = std::move(row);
      }
      return j;
    }

    json hom_json(Homomorphism const& h) {
      json j;
      j["degree"] = h.degree;
      j["images"] = json::object();
      for (std::size_t g = 0; g < h.generators.size(); ++g) {
        json row = json::array();
        for (auto x : h.images[g].images) {
          row.push_back(static_cast<int>(x) + 1);
        }
        j["images"][std::string(1, h.generators[g])] = std::move(row);
      }
      return j;
    }

  }  // namespace

  std::string table_to_json(CosetTable const& t, bool pretty) {
    return pretty ? table_json(t).dump(2) : table_json(t).dump();
  }

  std::string tables_to_json(std::vector<CosetTable> const& ts) {
    json j = json::array();
    for (auto const& t : ts) {
      j.push_back(table_json(t));
    }
    return j.dump(2);
  }

  CosetTable table_from_json(std::string const& text, std::vector<char> generators) {
    json j;
    try {
      j = json::parse(text);
    } catch (json::parse_error const& e) {
      throw InputError(std::string("coset table JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("action")
        || !j["n"].is_number_unsigned() || !j["action"].is_object()) {
      throw InputError("coset table JSON needs \"n\" and \"action\"");
    }
    std::size_t const n = j["n"].get<std::size_t>();
    if (generators.empty()) {
      for (auto const& [key, value] : j["action"].items()) {
        if (key.size() != 1 || !is_generator_symbol(key[0])) {
          throw InputError("bad generator name \"" + key + "\"");
        }
        generators.push_back(key[0]);
      }
    }
    CosetTable t(generators, n);
    for (std::size_t g = 0; g < generators.size(); ++g) {
      std::string const key(1, generators[g]);
      if (!j["action"].contains(key)) {
        throw InputError("no action given for generator " + key);
      }
      auto const& row = j["action"][key];
      if (!row.is_array() || row.size() != n) {
        throw InputError("action of " + key + " must list " + std::to_string(n) + " cosets");
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (!row[i].is_number_integer()) {
          throw InputError("non-integer coset in action of " + key);
        }
        auto x = row[i].get<long long>();
        if (x == 0) {
          continue;
        }
        if (x < 1 || static_cast<std::size_t>(x) > n) {
          throw InputError("coset out of range in action of " + key);
        }
        if (t.preimage(x - 1, g) != CosetTable::undefined) {
          throw InputError("action of " + key + " is not injective");
        }
        t.define(i, g, x - 1);
      }
    }
    return t;
  }

  std::string hom_to_json(Homomorphism const& h, bool pretty) {
    return pretty ? hom_json(h).dump(2) : hom_json(h).dump();
  }

  std::string homs_to_json(std::vector<Homomorphism> const& hs) {
    json j = json::array();
    for (auto const& h : hs) {
      j.push_back(hom_json(h));
    }
    return j.dump(2);
  }

}  // namespace nonleighton
