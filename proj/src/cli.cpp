#include "nonleighton/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "nonleighton/bsgroup.hpp"
#include "nonleighton/complex2.hpp"
#include "nonleighton/cover_ball.hpp"
#include "nonleighton/enumerate.hpp"
#include "nonleighton/errors.hpp"
#include "nonleighton/json_io.hpp"
#include "nonleighton/lemmas.hpp"
#include "nonleighton/proptest.hpp"
#include "nonleighton/report.hpp"
#include "nonleighton/words.hpp"

namespace nonleighton {

  namespace {

    using json = nlohmann::ordered_json;

    // What a subcommand produces: the text to write and the exit code.
    struct Output {
      Output() = default;
      Output(std::string t) : text(std::move(t)) {}

      std::string text;
      int         code = exit_code::ok;
      std::string diagnostic;
    };

    std::string read_file(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw InputError("cannot read " + path);
      }
      std::ostringstream s;
      s << in.rdbuf();
      return s.str();
    }

    struct Source {
      std::string builtin_name = "bs35";
      std::string file;

      Presentation load() const {
        return file.empty() ? builtin(builtin_name) : parse_presentation(read_file(file));
      }
    };

    void add_source(CLI::App* cmd, Source& src) {
      auto* b = cmd->add_option("--builtin", src.builtin_name, "Built-in presentation")
                    ->check(CLI::IsMember(builtin_names()))
                    ->capture_default_str();
      auto* f = cmd->add_option("--presentation", src.file,
                                "File holding a presentation such as < c, d | DcccdCCCCC >");
      b->excludes(f);
    }

    void require_format(Config const& cfg, std::initializer_list<OutputFormat> allowed,
                        std::string const& what) {
      for (auto f : allowed) {
        if (cfg.format == f) {
          return;
        }
      }
      throw InputError("format not available for " + what);
    }

    Output report_output(Config const& cfg, Report const& r) {
      require_format(cfg, {OutputFormat::json, OutputFormat::text}, "reports");
      Output o;
      o.text = cfg.format == OutputFormat::json ? r.to_json() + "\n" : r.to_text();
      for (auto const& c : r.checks()) {
        if (!c.pass) {
          o.code = exit_code::check_failed;
          o.diagnostic += "FAIL " + c.name + " [witness: " + c.witness.value_or("none") + "]\n";
        }
      }
      return o;
    }

    std::string complex_text(Complex2 const& c) {
      std::ostringstream s;
      s << "vertices " << c.num_vertices << "\nedges " << c.edges.size() << "\nfaces "
        << c.faces.size() << "\neuler characteristic " << euler_characteristic(c) << '\n';
      for (std::size_t e = 0; e < c.edges.size(); ++e) {
        s << "edge " << e << ": " << c.edges[e].src << " -" << c.edges[e].label << "-> "
          << c.edges[e].dst << '\n';
      }
      for (std::size_t f = 0; f < c.faces.size(); ++f) {
        s << "face " << f << ": " << c.boundary_word(f).str() << '\n';
      }
      return s.str();
    }

    Output complex_output(Config const& cfg, Complex2 const& c) {
      switch (cfg.format) {
        case OutputFormat::json:
          return {export_json(c) + "\n"};
        case OutputFormat::dot:
          return {export_dot(c)};
        case OutputFormat::text:
          return {complex_text(c)};
      }
      return {};
    }

    std::string table_text(CosetTable const& t) {
      std::ostringstream s;
      s << "index " << t.size();
      for (std::size_t g = 0; g < t.generators().size(); ++g) {
        s << "  " << t.generators()[g] << ":";
        for (int x : t.action(g)) {
          s << ' ' << (x + 1);
        }
      }
      s << '\n';
      return s.str();
    }

    std::string hom_text(Homomorphism const& h) {
      std::ostringstream s;
      s << "degree " << h.degree;
      for (std::size_t g = 0; g < h.generators.size(); ++g) {
        s << "  " << h.generators[g] << ":";
        for (auto x : h.images[g].images) {
          s << ' ' << (static_cast<int>(x) + 1);
        }
      }
      s << '\n';
      return s.str();
    }

    void check_cap(std::size_t value, std::size_t cap, std::string const& what) {
      if (value > cap) {
        throw CapExceeded(what + " " + std::to_string(value) + " exceeds cap "
                          + std::to_string(cap));
      }
    }

    std::vector<Word> parse_words(std::vector<std::string> const& ws) {
      std::vector<Word> out;
      for (auto const& w : ws) {
        out.emplace_back(w);
      }
      return out;
    }

    int cover_epsilon(int eps) {
      if (eps != 1 && eps != -1) {
        throw InputError("--epsilon must be 1 or -1");
      }
      return eps;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    Config      cfg;
    std::string format = "json";

    CLI::App app{"Finite computations on two 2-complexes over BS(3,5) with a common universal cover",
                 "nonleighton"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--max-cosets", cfg.max_cosets, "Coset enumeration limit")
        ->envname("NL_MAX_COSETS")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--low-index-cap", cfg.low_index_cap, "Largest index for low-index searches")
        ->envname("NL_LOW_INDEX_CAP")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--hom-degree-cap", cfg.hom_degree_cap, "Largest symmetric-group degree")
        ->envname("NL_HOM_DEGREE_CAP")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--ball-radius-cap", cfg.ball_radius_cap, "Largest cover-ball radius")
        ->envname("NL_BALL_RADIUS_CAP")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--format", format, "Output format")
        ->envname("NL_FORMAT")
        ->check(CLI::IsMember({"json", "dot", "text"}))
        ->capture_default_str();
    app.add_option("--out", cfg.out_path, "Write output to this file")->envname("NL_OUT");

    std::function<Output()> action;
    Source                  src;
    std::size_t             index  = 2;
    std::size_t             degree = 2;
    std::size_t             radius = 1;
    int                     epsilon = 1;
    std::vector<std::string> subgroup;
    std::string             table_file;
    std::uint64_t           seed  = 1;
    std::size_t             cases = 1000;

    // std
    auto* std_cmd = app.add_subcommand(
        "std", "Standard 2-complex of a presentation: one vertex, a loop per generator and a "
               "2-cell per relator (H_+ and H_- give (V,E,F) = (1,3,2))");
    add_source(std_cmd, src);
    std_cmd->callback([&] {
      action = [&] { return complex_output(cfg, standard_complex(src.load())); };
    });

    // low-index
    auto* li = app.add_subcommand(
        "low-index", "Every subgroup of index <= N, as canonical coset tables");
    add_source(li, src);
    li->add_option("--index", index, "Largest index")->capture_default_str();
    li->callback([&] {
      action = [&] {
        check_cap(index, cfg.low_index_cap, "index");
        require_format(cfg, {OutputFormat::json, OutputFormat::text}, "coset tables");
        auto const ts = low_index(src.load(), index);
        if (cfg.format == OutputFormat::json) {
          return Output{tables_to_json(ts) + "\n"};
        }
        std::string s;
        for (auto const& t : ts) {
          s += table_text(t);
        }
        return Output{s};
      };
    });

    // tc
    auto* tc = app.add_subcommand(
        "tc", "Todd-Coxeter coset enumeration of the subgroup generated by --subgroup words");
    add_source(tc, src);
    tc->add_option("--subgroup", subgroup, "Subgroup generators, e.g. c D");
    tc->callback([&] {
      action = [&] {
        require_format(cfg, {OutputFormat::json, OutputFormat::text}, "coset tables");
        auto const t = todd_coxeter(src.load(), parse_words(subgroup), cfg.max_cosets);
        return Output{cfg.format == OutputFormat::json ? table_to_json(t) + "\n"
                                                       : table_text(t)};
      };
    });

    // homs
    auto* homs = app.add_subcommand(
        "homs", "Every homomorphism into the symmetric group of the given degree");
    add_source(homs, src);
    homs->add_option("--degree", degree, "Degree of the symmetric group")
        ->capture_default_str();
    homs->callback([&] {
      action = [&] {
        require_format(cfg, {OutputFormat::json, OutputFormat::text}, "homomorphisms");
        auto const hs = enumerate_homs(src.load(), degree, cfg.hom_degree_cap);
        if (cfg.format == OutputFormat::json) {
          return Output{homs_to_json(hs) + "\n"};
        }
        std::string s;
        for (auto const& h : hs) {
          s += hom_text(h);
        }
        return Output{s};
      };
    });

    // abel
    auto* abel = app.add_subcommand(
        "abel", "Abelianization via Smith normal form; 0 marks an infinite cyclic factor");
    add_source(abel, src);
    abel->callback([&] {
      action = [&] {
        require_format(cfg, {OutputFormat::json, OutputFormat::text}, "abelianization");
        Presentation const p   = src.load();
        auto const         inv = abelianization(p);
        if (cfg.format == OutputFormat::text) {
          return Output{to_string(inv) + "\n"};
        }
        json j;
        j["presentation"] = to_string(p);
        j["invariants"]   = inv;
        return Output{j.dump(2) + "\n"};
      };
    });

    // cover build | verify
    auto* cover = app.add_subcommand("cover", "Finite covers and cover balls");
    cover->require_subcommand(1);
    auto* cover_build = cover->add_subcommand(
        "build", "Cover of the standard complex from a coset table (--table) or from the "
                 "subgroup generated by --subgroup words");
    add_source(cover_build, src);
    auto* tf = cover_build->add_option("--table", table_file, "Coset table JSON file");
    auto* sg = cover_build->add_option("--subgroup", subgroup, "Subgroup generators");
    tf->excludes(sg);
    cover_build->callback([&] {
      action = [&] {
        Presentation const p = src.load();
        CosetTable         t;
        if (!table_file.empty()) {
          t = table_from_json(read_file(table_file), p.generators());
          if (!t.is_complete() || !t.is_transitive() || !t.satisfies(p)) {
            throw InputError("the table is not a complete transitive coset table of "
                             + to_string(p));
          }
        } else {
          t = todd_coxeter(p, parse_words(subgroup), cfg.max_cosets);
        }
        return complex_output(cfg, build_cover_from_table(p, t).first);
      };
    });
    bool  ball_mode     = false;
    auto* cover_verify = cover->add_subcommand(
        "verify", "With --index: every cover of degree <= N is a covering with Euler "
                  "characteristic multiplied by N.  With --radius: the cover ball of K_eps "
                  "over BS(3,5) is a covering at its core vertices");
    add_source(cover_verify, src);
    auto* vi = cover_verify->add_option("--index", index, "Largest degree");
    auto* vr = cover_verify->add_option("--radius", radius, "Cover-ball radius");
    cover_verify->add_option("--epsilon", epsilon, "1 or -1")->needs(vr);
    vi->excludes(vr);
    cover_verify->callback([&] {
      ball_mode = vr->count() > 0;
      action    = [&] {
        if (ball_mode) {
          check_cap(radius, cfg.ball_radius_cap, "radius");
          return report_output(
              cfg,
              verify_partial_cover(
                  build_cover_ball(cover_epsilon(epsilon), radius, cfg.ball_radius_cap)));
        }
        check_cap(index, cfg.low_index_cap, "index");
        return report_output(cfg, cover_soundness_check(src.load(), index));
      };
    });

    // ball
    bool  integers = false;
    auto* ball     = app.add_subcommand(
        "ball", "Ball of the given radius in the Cayley graph of BS(3,5) (or of Z with "
                "--integers), vertices as normal forms");
    ball->add_option("--radius", radius, "Radius")->capture_default_str();
    ball->add_flag("--integers", integers, "Use Z = <b> instead of BS(3,5)");
    ball->callback([&] {
      action = [&] {
        require_format(cfg, {OutputFormat::json, OutputFormat::text}, "balls");
        GroupModel const model =
            integers ? GroupModel::integers('b') : GroupModel::baumslag_solitar(3, 5);
        std::size_t const cap =
            integers ? default_ball_radius_cap(model) : cfg.ball_radius_cap;
        BallGraph const g = cayley_ball(model, radius, cap);
        if (cfg.format == OutputFormat::json) {
          return Output{ball_to_json(g) + "\n"};
        }
        std::ostringstream s;
        s << "vertices " << g.vertices.size() << "\nedges " << g.edges.size() << '\n';
        for (std::size_t v = 0; v < g.vertices.size(); ++v) {
          s << g.distance[v] << ' ' << g.vertices[v].to_string() << '\n';
        }
        return Output{s.str()};
      };
    });

    // phi
    auto* phi = app.add_subcommand(
        "phi", "Builds the cover balls of K_+ and K_- over BS(3,5), the map Phi that flips "
               "every second a-loop along each h-line, and verifies it is an isomorphism of "
               "the balls with one flipped loop per special cell");
    bool perturb = false;
    phi->add_option("--radius", radius, "Radius")->capture_default_str();
    phi->add_flag("--perturb", perturb,
                  "Give h the parity of the identity, so that the check must fail");
    phi->callback([&] {
      action = [&] {
        check_cap(radius, cfg.ball_radius_cap, "radius");
        if (!perturb) {
          return report_output(cfg, phi_check(radius, cfg.ball_radius_cap));
        }
        CoverBall const plus   = build_cover_ball(1, radius, cfg.ball_radius_cap);
        CoverBall const minus  = build_cover_ball(-1, radius, cfg.ball_radius_cap);
        ParityColoring  parity = h_parity(plus.vertices, plus.h_element());
        parity.set(plus.h_element(), 0);
        return report_output(cfg, verify_phi(plus, minus, build_phi(plus, minus, parity)));
      };
    });

    // demo torus-klein
    auto* demo = app.add_subcommand("demo", "Worked examples");
    demo->require_subcommand(1);
    std::size_t demo_radius = 10;
    auto*       tk          = demo->add_subcommand(
        "torus-klein", "The Phi pipeline for the torus and the Klein bottle: strips of "
                       "their covers over the b-line, alternate a-loops flipped");
    tk->add_option("--radius", demo_radius, "Half-length of the strip")
        ->capture_default_str();
    tk->add_flag("--perturb", perturb, "Colour every vertex 0, so that the check must fail");
    tk->callback([&] {
      action = [&] {
        if (!perturb) {
          return report_output(cfg, torus_klein_demo(demo_radius));
        }
        GroupModel const z = GroupModel::integers('b');
        ParityColoring   flat;
        for (auto const& v : cayley_ball(z, demo_radius).vertices) {
          flat.set(v, 0);
        }
        return report_output(cfg, torus_klein_demo(demo_radius, flat));
      };
    });

    // lemma commutator | bottle | abelian
    auto* lemma = app.add_subcommand("lemma", "Finite-index checks of the lemmas");
    lemma->require_subcommand(1);
    auto* comm = lemma->add_subcommand(
        "commutator", "Commutator lemma: every subgroup of BS(3,5) of index <= --index "
                      "contains h = [c^d, c], and every map to S_k, k <= --degree, kills h "
                      "and sends c to an element of order prime to 3");
    comm->add_option("--index", index, "Largest index")->capture_default_str();
    comm->add_option("--degree", degree, "Largest symmetric-group degree")
        ->capture_default_str();
    comm->callback([&] {
      action = [&] {
        check_cap(index, cfg.low_index_cap, "index");
        check_cap(degree, cfg.hom_degree_cap, "degree");
        return report_output(cfg, lemma_commutator_check(index, degree));
      };
    });
    auto* bottle = lemma->add_subcommand(
        "bottle", "Bottle lemma consequence: every subgroup of H_- of index <= --index "
                  "contains h and a^2");
    bottle->add_option("--index", index, "Largest index")->capture_default_str();
    bottle->callback([&] {
      action = [&] {
        check_cap(index, cfg.low_index_cap, "index");
        return report_output(cfg, lemma_bottle_consequence_check(index));
      };
    });
    auto* abelian = lemma->add_subcommand(
        "abelian", "No-bottle lemma: A abelianizes like Z, Q like BS(3,5)");
    abelian->callback(
        [&] { action = [&] { return report_output(cfg, abelian_consistency_check()); }; });

    // export
    auto* exp = app.add_subcommand(
        "export", "Exports the cover ball of K_eps over BS(3,5) as a complex (a-loops are "
                  "self-loops labelled a)");
    exp->add_option("--radius", radius, "Radius")->capture_default_str();
    exp->add_option("--epsilon", epsilon, "1 or -1")->capture_default_str();
    exp->callback([&] {
      action = [&] {
        check_cap(radius, cfg.ball_radius_cap, "radius");
        CoverBall const b =
            build_cover_ball(cover_epsilon(epsilon), radius, cfg.ball_radius_cap);
        if (cfg.format == OutputFormat::json) {
          return Output{cover_ball_to_json(b) + "\n"};
        }
        return complex_output(cfg, b.complex);
      };
    });

    // proptest
    auto* prop = app.add_subcommand(
        "proptest", "Randomised checks: free and cyclic reduction, normal forms under relator "
                    "insertion, associativity, Smith normal form");
    prop->add_option("--seed", seed, "Random seed")->capture_default_str();
    prop->add_option("--cases", cases, "Number of cases")->capture_default_str();
    prop->callback(
        [&] { action = [&] { return report_output(cfg, property_suite(seed, cases)); }; });

    std::vector<std::string> argv_store{"nonleighton"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char const*> argv;
    for (auto const& a : argv_store) {
      argv.push_back(a.c_str());
    }

    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_code::ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return exit_code::ok;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return exit_code::bad_input;
    }

    cfg.format = format == "dot"    ? OutputFormat::dot
                 : format == "text" ? OutputFormat::text
                                    : OutputFormat::json;
    Output o;
    try {
      o = action();
    } catch (CapExceeded const& e) {
      err << "cap exceeded: " << e.what() << '\n';
      return exit_code::cap_exceeded;
    } catch (InputError const& e) {
      err << "input error: " << e.what() << '\n';
      return exit_code::bad_input;
    } catch (std::overflow_error const& e) {
      err << "cap exceeded: " << e.what() << '\n';
      return exit_code::cap_exceeded;
    } catch (InvariantViolation const& e) {
      err << "FAIL invariant [witness: " << e.what() << "]\n";
      return exit_code::check_failed;
    }

    if (cfg.out_path.empty()) {
      out << o.text;
    } else {
      std::ofstream f(cfg.out_path);
      if (!f || !(f << o.text)) {
        err << "input error: cannot write " << cfg.out_path << '\n';
        return exit_code::bad_input;
      }
    }
    err << o.diagnostic;
    return o.code;
  }

}  // namespace nonleighton
