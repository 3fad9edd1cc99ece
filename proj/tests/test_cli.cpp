#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "nonleighton/cli.hpp"

using namespace nonleighton;

namespace {

  struct Result {
    int         code;
    std::string out, err;
  };

  Result call(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int const          code = run(args, out, err);
    return {code, out.str(), err.str()};
  }

  struct EnvGuard {
    std::string name;
    EnvGuard(std::string n, std::string const& value) : name(std::move(n)) {
      ::setenv(name.c_str(), value.c_str(), 1);
    }
    ~EnvGuard() {
      ::unsetenv(name.c_str());
    }
  };

}  // namespace

TEST_CASE("std prints the standard complex") {
  Result const r = call({"std", "--builtin", "h_minus", "--format", "json"});
  CHECK(r.code == 0);
  auto const j = nlohmann::json::parse(r.out);
  CHECK(j["vertices"].size() == 1);
  CHECK(j["edges"].size() == 3);
  CHECK(j["faces"].size() == 2);

  Result const dot = call({"--format", "dot", "std", "--builtin", "torus"});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("digraph complex {", 0) == 0);

  Result const text = call({"std", "--builtin", "bs35", "--format", "text"});
  CHECK(text.out.find("euler characteristic 0") != std::string::npos);
}

TEST_CASE("lemma commutator at index 6, degree 5") {
  Result const r = call({"lemma", "commutator", "--index", "6", "--degree", "5"});
  CHECK(r.code == 0);
  auto const j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["suite"] == "lemma commutator");
  CHECK(j["counts"]["subgroups"] == 16);
}

TEST_CASE("phi and demo") {
  Result const r = call({"phi", "--radius", "2"});
  CHECK(r.code == 0);
  auto const j = nlohmann::json::parse(r.out);
  for (auto const& c : j["checks"]) {
    CHECK(c["pass"] == true);
  }
  CHECK(call({"demo", "torus-klein"}).code == 0);
  CHECK(call({"demo", "torus-klein", "--radius", "1", "--format", "text"}).code == 0);
}

TEST_CASE("failed checks exit 1 with a witness") {
  Result const r = call({"phi", "--radius", "1", "--perturb"});
  CHECK(r.code == 1);
  CHECK(r.out.find("\"witness\": \"special cell at c^0\"") != std::string::npos);
  CHECK(r.err.find("witness: special cell at c^0") != std::string::npos);

  Result const d = call({"demo", "torus-klein", "--perturb", "--format", "text"});
  CHECK(d.code == 1);
  CHECK(d.out.find("FAIL") != std::string::npos);
  CHECK(d.err.find("witness") != std::string::npos);
}

TEST_CASE("other pipelines") {
  Result const li = call({"low-index", "--builtin", "bs35", "--index", "2"});
  CHECK(li.code == 0);
  CHECK(nlohmann::json::parse(li.out).size() == 4);

  Result const tc = call({"tc", "--subgroup", "c", "dd", "dcD"});
  CHECK(tc.code == 0);
  CHECK(nlohmann::json::parse(tc.out)["n"] == 2);

  Result const homs = call({"homs", "--degree", "3"});
  CHECK(homs.code == 0);
  CHECK(nlohmann::json::parse(homs.out).size() == 12);

  Result const abel = call({"abel", "--builtin", "groupA", "--format", "text"});
  CHECK(abel.code == 0);
  CHECK(abel.out == "[0]\n");

  CHECK(call({"cover", "verify", "--index", "4"}).code == 0);
  CHECK(call({"cover", "verify", "--builtin", "torus", "--index", "4"}).code == 0);
  CHECK(call({"cover", "verify", "--radius", "2", "--epsilon", "-1"}).code == 0);

  Result const cover = call({"cover", "build", "--builtin", "torus", "--subgroup", "a", "bb"});
  CHECK(cover.code == 0);
  auto const cj = nlohmann::json::parse(cover.out);
  CHECK(cj["vertices"].size() == 2);
  CHECK(cj["edges"].size() == 4);
  CHECK(cj["faces"].size() == 2);

  CHECK(nlohmann::json::parse(call({"ball", "--radius", "2"}).out)["vertices"].size() == 17);
  CHECK(call({"lemma", "bottle", "--index", "4"}).code == 0);
  CHECK(call({"lemma", "abelian"}).code == 0);
  CHECK(call({"proptest", "--seed", "3", "--cases", "200"}).code == 0);

  Result const exp = call({"export", "--epsilon", "-1", "--radius", "1", "--format", "dot"});
  CHECK(exp.code == 0);
  CHECK(exp.out.find("[label=\"a\"]") != std::string::npos);
}

TEST_CASE("cover build from a table file") {
  auto const path = std::filesystem::temp_directory_path() / "nonleighton_table.json";
  {
    std::ofstream f(path);
    f << R"({"n": 2, "action": {"a": [1, 2], "b": [2, 1]}})";
  }
  Result const r = call({"cover", "build", "--builtin", "torus", "--table", path.string(),
                         "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("vertices 2\nedges 4\nfaces 2\n", 0) == 0);
  {
    std::ofstream f(path);
    f << R"({"n": 2, "action": {"a": [1, 2], "b": [1, 2]}})";
  }
  CHECK(call({"cover", "build", "--builtin", "torus", "--table", path.string()}).code == 3);
  std::filesystem::remove(path);
}

TEST_CASE("caps exit 2") {
  CHECK(call({"phi", "--radius", "5"}).code == 2);
  CHECK(call({"low-index", "--index", "7"}).code == 2);
  CHECK(call({"homs", "--degree", "7"}).code == 2);
  CHECK(call({"tc", "--subgroup", "c"}).code == 2);
  CHECK(call({"--max-cosets", "50", "tc", "--subgroup", "dd"}).code == 2);
  CHECK(call({"lemma", "commutator", "--index", "3", "--degree", "7"}).code == 2);
  CHECK(call({"ball", "--radius", "5"}).code == 2);
}

TEST_CASE("environment overrides") {
  {
    EnvGuard const g("NL_LOW_INDEX_CAP", "2");
    CHECK(call({"low-index", "--index", "3"}).code == 2);
    CHECK(call({"--low-index-cap", "3", "low-index", "--index", "3"}).code == 0);
  }
  {
    EnvGuard const g("NL_FORMAT", "text");
    CHECK(call({"abel"}).out == "[2, 0]\n");
  }
  {
    EnvGuard const g("NL_BALL_RADIUS_CAP", "1");
    CHECK(call({"phi", "--radius", "2"}).code == 2);
  }
}

TEST_CASE("bad input exits 3") {
  CHECK(call({}).code == 3);
  CHECK(call({"nope"}).code == 3);
  CHECK(call({"std", "--builtin", "nope"}).code == 3);
  CHECK(call({"std", "--presentation", "/nonexistent/file"}).code == 3);
  CHECK(call({"--format", "xml", "std"}).code == 3);
  CHECK(call({"--format", "dot", "lemma", "abelian"}).code == 3);
  CHECK(call({"--max-cosets", "0", "tc"}).code == 3);
  CHECK(call({"export", "--epsilon", "2"}).code == 3);

  auto const path = std::filesystem::temp_directory_path() / "nonleighton_bad.txt";
  {
    std::ofstream f(path);
    f << "< a, b | abc >";
  }
  Result const r = call({"std", "--presentation", path.string()});
  CHECK(r.code == 3);
  CHECK(r.err.find("line 1") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("--out writes the output once") {
  auto const path = std::filesystem::temp_directory_path() / "nonleighton_out.json";
  Result const r  = call({"--out", path.string(), "lemma", "abelian"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream      f(path);
  std::ostringstream s;
  s << f.rdbuf();
  CHECK(nlohmann::json::parse(s.str())["pass"] == true);
  std::filesystem::remove(path);
}

TEST_CASE("identical invocations give identical output") {
  for (auto const& args : std::vector<std::vector<std::string>>{
           {"phi", "--radius", "2"},
           {"lemma", "bottle", "--index", "3"},
           {"export", "--radius", "2", "--epsilon", "1"},
           {"proptest", "--seed", "9", "--cases", "100"}}) {
    CHECK(call(args).out == call(args).out);
  }
}

TEST_CASE("every subcommand has help") {
  for (auto const& args : std::vector<std::vector<std::string>>{
           {"--help"},
           {"std", "--help"},
           {"low-index", "--help"},
           {"tc", "--help"},
           {"homs", "--help"},
           {"abel", "--help"},
           {"cover", "build", "--help"},
           {"cover", "verify", "--help"},
           {"ball", "--help"},
           {"phi", "--help"},
           {"demo", "torus-klein", "--help"},
           {"lemma", "commutator", "--help"},
           {"lemma", "bottle", "--help"},
           {"lemma", "abelian", "--help"},
           {"export", "--help"},
           {"proptest", "--help"}}) {
    Result const r = call(args);
    CHECK(r.code == 0);
    CHECK(r.out.find("Usage") != std::string::npos);
  }
  CHECK(call({"lemma", "commutator", "--help"}).out.find("Commutator lemma") != std::string::npos);
}
