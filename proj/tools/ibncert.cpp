// ibncert: command line front end.
//
// Exit statuses: 0 certified / equivalent / success, 10 refuted /
// not equivalent, 20 unknown, 2 usage error, 3 input error, 1 internal error.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include "CLI11.hpp"

#include "ibncert/certificate.hpp"
#include "ibncert/constructions.hpp"
#include "ibncert/corpus.hpp"
#include "ibncert/decision.hpp"
#include "ibncert/equivalence.hpp"
#include "ibncert/error.hpp"
#include "ibncert/graph.hpp"
#include "ibncert/io.hpp"
#include "ibncert/monoid.hpp"

namespace {

  using namespace ibncert;

  constexpr int exit_ok       = 0;
  constexpr int exit_refuted  = 10;
  constexpr int exit_unknown  = 20;
  constexpr int exit_usage    = 2;
  constexpr int exit_input    = 3;
  constexpr int exit_internal = 1;

  struct Options {
    std::string              input;
    std::string              example;
    std::vector<std::size_t> family;
    std::string              algebra = "cohn";
    std::vector<std::string> x;
    bool                     x_given = false;
    std::size_t              max_m   = default_max_m;
    SearchBounds             bounds;
    std::string              format;
    std::string              output;
    std::string              presentation = "graph";
    std::string              a;
    std::string              b;
    std::string              weights;
    std::string              name;
    std::vector<std::size_t> family_args;
  };

  std::string sha256_hex(std::string const& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int  len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) {
      os << std::hex << std::setw(2) << std::setfill('0')
         << static_cast<int>(digest[i]);
    }
    return os.str();
  }

  std::string read_file(std::string const& path) {
    if (path == "-") {
      std::ostringstream os;
      os << std::cin.rdbuf();
      return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

  struct Input {
    GraphSpec                               spec;
    Graph                                   graph;
    GraphFormat                             format = GraphFormat::Text;
    std::optional<std::vector<std::string>> family_x;
  };

  Input load_input(Options const& o) {
    int const sources = !o.input.empty() + !o.example.empty() + !o.family.empty();
    if (sources != 1) {
      throw CLI::ValidationError(
          "input", "give exactly one of GRAPH, --example or --family");
    }
    Input in;
    if (!o.family.empty()) {
      auto fam    = family(o.family[0], o.family[1]);
      in.spec     = fam.graph.spec();
      in.family_x = fam.x;
    } else if (!o.example.empty()) {
      in.spec = example_graph(o.example);
    } else {
      auto const text = read_file(o.input);
      in.format       = detect_format(text);
      in.spec         = parse_graph(text);
    }
    in.graph = validate(in.spec);
    return in;
  }

  // Reports default to the format of the input graph file, and to text
  // when there is none.
  class Reporter {
   public:
    Reporter(Options const& o,
             std::string    command,
             GraphFormat    fallback = GraphFormat::Text)
        : _opt(o),
          _json(o.format.empty() ? fallback == GraphFormat::Json
                                 : o.format == "json") {
      _envelope["command"] = std::move(command);
    }

    void inputs(json const& j) {
      _envelope["inputs_digest"] = "sha256:" + sha256_hex(j.dump());
    }

    void result(json j) {
      _envelope["result"] = std::move(j);
    }

    std::ostream& text() {
      return _text;
    }

    int finish(int status) {
      _envelope["exit_status"] = status;
      std::string out;
      if (_json) {
        out = _envelope.dump(2) + "\n";
      } else {
        out = _text.str();
      }
      if (_opt.output.empty()) {
        std::cout << out;
      } else {
        std::ofstream f(_opt.output, std::ios::binary);
        if (!f) {
          throw Error(ErrorKind::ParseError,
                      "cannot write '" + _opt.output + "'");
        }
        f << out;
      }
      return status;
    }

    [[nodiscard]] std::string const& digest() const {
      return _envelope["inputs_digest"].get_ref<std::string const&>();
    }

   private:
    Options const&     _opt;
    bool               _json;
    json               _envelope;
    std::ostringstream _text;
  };

  json bounds_json(Options const& o) {
    json j     = to_json(o.bounds);
    j["max_m"] = o.max_m;
    return j;
  }

  std::string bounds_line(Options const& o) {
    std::ostringstream os;
    os << "bounds: max-states=" << o.bounds.max_states
       << " max-coeff=" << o.bounds.max_total_coefficient
       << " max-depth=" << o.bounds.max_depth << " max-m=" << o.max_m;
    return os.str();
  }

  void write_matrix_comment(std::ostream& os, IncidenceMatrix const& a) {
    os << "# incidence matrix, order:";
    for (auto const& v : a.order()) {
      os << ' ' << v;
    }
    os << '\n';
    for (auto const& row : a.entries()) {
      os << "#  ";
      for (auto x : row) {
        os << ' ' << x;
      }
      os << '\n';
    }
  }

  std::string join(std::vector<std::string> const& xs, char const* sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out += (i == 0 ? "" : sep) + xs[i];
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subcommands
  ////////////////////////////////////////////////////////////////////////

  int cmd_companion(Options const& o, std::string const& echo) {
    auto     in = load_input(o);
    Reporter rep(o, echo, in.format);
    rep.inputs({{"command", "companion"},
                {"graph", graph_to_json(in.graph.spec())},
                {"x", o.x_given ? json(o.x) : json(nullptr)}});
    auto const comp = o.x_given ? relative_companion(in.graph, o.x)
                                : cohn_companion(in.graph);
    auto const a    = incidence(comp.graph);
    json       origin = json::object();
    for (auto const& [k, v] : comp.origin) {
      origin[k] = v;
    }
    rep.result({{"graph", graph_to_json(comp.graph.spec())},
                {"incidence", to_json(a)},
                {"origin", std::move(origin)}});
    auto& os = rep.text();
    os << "# ibncert " << echo << '\n';
    os << "# inputs " << rep.digest() << '\n';
    os << "# " << (o.x_given ? "E(X), X = {" + join(o.x, ", ") + "}" : "F(E)")
       << '\n';
    write_matrix_comment(os, a);
    os << emit_graph_text(comp.graph.spec());
    return rep.finish(exit_ok);
  }

  int cmd_ibn_check(Options const& o, std::string const& echo) {
    auto        in = load_input(o);
    AlgebraSpec spec;
    if (o.algebra == "cohn") {
      spec = AlgebraSpec::cohn(in.graph);
    } else if (o.algebra == "leavitt") {
      spec = AlgebraSpec::leavitt(in.graph);
    } else {
      auto x = o.x_given ? o.x : in.family_x.value_or(std::vector<std::string>{});
      spec   = AlgebraSpec::relative_cohn(in.graph, std::move(x));
    }
    Reporter rep(o, echo, in.format);
    rep.inputs({{"command", "ibn-check"},
                {"graph", graph_to_json(in.graph.spec())},
                {"algebra", o.algebra},
                {"x", spec.x},
                {"bounds", bounds_json(o)}});

    auto const v = decide_ibn(spec, o.bounds, o.max_m);
    int        status
        = std::holds_alternative<IbnCertified>(v.ibn) ? exit_ok
          : std::holds_alternative<IbnRefuted>(v.ibn) ? exit_refuted
                                                      : exit_unknown;
    json result       = to_json(v, spec);
    result["audited"] = audit(v, spec);
    rep.result(std::move(result));

    auto& os = rep.text();
    os << "algebra: " << to_string(spec.kind);
    if (spec.kind == AlgebraKind::RelativeCohn) {
      os << " X = {" << join(spec.x, ", ") << "}";
    }
    os << '\n'
       << "inputs: " << rep.digest() << '\n'
       << "target: " << v.target.vertex_count() << " vertices, "
       << v.target.edge_count() << " edges\n"
       << "generators: " << join(v.presentation.generators(), " ") << '\n'
       << bounds_line(o) << '\n'
       << "route: " << to_string(v.route) << '\n';
    if (auto const* c = std::get_if<IbnCertified>(&v.ibn)) {
      std::vector<std::string> w;
      for (auto const& q : c->certificate.weights) {
        w.push_back(to_string(q));
      }
      os << "IBN: certified\n"
         << "weights: " << join(w, " ") << '\n';
    } else if (auto const* r = std::get_if<IbnRefuted>(&v.ibn)) {
      os << "IBN: refuted, " << r->m << " * rho ~ " << r->m_prime << " * rho\n"
         << "common descendant: " << to_string(r->descendant) << '\n'
         << "left:  " << describe(r->left, v.presentation) << '\n'
         << "right: " << describe(r->right, v.presentation) << '\n';
    } else {
      os << "IBN: unknown\n";
    }
    os << "IMN: " << to_string(v.imn) << '\n'
       << "audit: " << (audit(v, spec) ? "pass" : "FAIL") << '\n';
    return rep.finish(status);
  }

  int cmd_monoid_equiv(Options const& o, std::string const& echo) {
    auto       in = load_input(o);
    auto const rs = o.presentation == "cohn" ? cohn_presentation(in.graph)
                                             : monoid_presentation(in.graph);
    auto const a  = parse_element(o.a);
    auto const b  = parse_element(o.b);
    rs.check(a);
    rs.check(b);

    std::optional<WeightCertificate> cert;
    if (!o.weights.empty()) {
      WeightCertificate c{rs.generators(), {}};
      std::string_view  rest = o.weights;
      while (true) {
        auto const comma = rest.find(',');
        c.weights.push_back(parse_rational(rest.substr(0, comma)));
        if (comma == std::string_view::npos) {
          break;
        }
        rest.remove_prefix(comma + 1);
      }
      cert = std::move(c);
    } else {
      cert = solve_exact(build_system(rs));
    }
    bool const cert_valid = cert && verify_certificate(*cert, rs);

    Reporter rep(o, echo, in.format);
    rep.inputs({{"command", "monoid-equiv"},
                {"graph", graph_to_json(in.graph.spec())},
                {"presentation", o.presentation},
                {"a", to_json(a)},
                {"b", to_json(b)},
                {"weights", o.weights},
                {"bounds", bounds_json(o)}});

    auto const r = decide_equivalent(a, b, rs, o.bounds, cert ? &*cert : nullptr);
    int        status = std::holds_alternative<Equivalent>(r)      ? exit_ok
                        : std::holds_alternative<NotEquivalent>(r) ? exit_refuted
                                                                   : exit_unknown;
    json result;
    result["presentation"] = o.presentation;
    result["generators"]   = rs.generators();
    result["a"]            = to_json(a);
    result["b"]            = to_json(b);
    result["invariant"]    = cert_valid ? to_json(*cert) : json(nullptr);
    result["bounds"]       = to_json(o.bounds);
    result["verdict"]      = to_json(r, rs);
    rep.result(std::move(result));

    auto& os = rep.text();
    os << "presentation: " << o.presentation << '\n'
       << "inputs: " << rep.digest() << '\n'
       << "generators: " << join(rs.generators(), " ") << '\n'
       << bounds_line(o) << '\n'
       << "a = " << to_string(a) << ", b = " << to_string(b) << '\n';
    if (auto const* eq = std::get_if<Equivalent>(&r)) {
      os << "equivalent, common descendant " << to_string(eq->descendant) << '\n'
         << "left:  " << describe(eq->left, rs) << '\n'
         << "right: " << describe(eq->right, rs) << '\n';
    } else if (auto const* ne = std::get_if<NotEquivalent>(&r)) {
      if (ne->reason == NotEquivalent::Reason::SeparatedByInvariant) {
        os << "not equivalent: gamma(a) = " << to_string(*ne->gamma_left)
           << ", gamma(b) = " << to_string(*ne->gamma_right) << '\n';
      } else {
        os << "not equivalent: complete forward closures are disjoint\n";
      }
    } else {
      os << "unknown: search bounds reached\n";
    }
    return rep.finish(status);
  }

  int cmd_examples(Options const& o, std::string const& echo) {
    Reporter rep(o, echo);
    rep.inputs({{"command", "examples"}, {"name", o.name}});
    if (o.name.empty()) {
      rep.result({{"examples", example_names()}});
      for (auto const& n : example_names()) {
        rep.text() << n << '\n';
      }
      return rep.finish(exit_ok);
    }
    auto const g = validate(example_graph(o.name));
    rep.result({{"name", o.name}, {"graph", graph_to_json(g.spec())}});
    rep.text() << "# ibncert example " << o.name << '\n'
               << emit_graph_text(g.spec());
    return rep.finish(exit_ok);
  }

  int cmd_family(Options const& o, std::string const& echo) {
    auto const fam = family(o.family_args[0], o.family_args[1]);
    Reporter   rep(o, echo);
    rep.inputs({{"command", "family"}, {"n", o.family_args[0]}, {"m", o.family_args[1]}});
    rep.result({{"graph", graph_to_json(fam.graph.spec())}, {"x", fam.x}});
    rep.text() << "# ibncert family " << o.family_args[0] << ' '
               << o.family_args[1] << '\n'
               << "# x: " << join(fam.x, ",") << '\n'
               << emit_graph_text(fam.graph.spec());
    return rep.finish(exit_ok);
  }

  int exit_status_for(ErrorKind k) {
    return k == ErrorKind::InternalInvariantViolation ? exit_internal
                                                      : exit_input;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify Invariant Basis Number for Cohn, relative Cohn and "
               "Leavitt path algebras of finite graphs"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input) {
      sub->add_option("graph", o.input, "graph file (text or JSON, '-' = stdin)");
      sub->add_option("--example", o.example, "use a built-in example graph");
      sub->add_option("--family", o.family, "use the graph E_N (with X_M)")
          ->expected(2);
    }
    sub->add_option("--max-m", o.max_m, "largest multiple tried by witness search")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
    sub->add_option("--max-states", o.bounds.max_states)
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-coeff", o.bounds.max_total_coefficient)
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-depth", o.bounds.max_depth)->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output", o.output, "write the report here");
  };

  auto* companion = app.add_subcommand("companion", "build F(E), or E(X) with --x");
  add_common(companion, true);
  companion->add_option("--x", o.x, "vertices where (CK2) is imposed")
      ->delimiter(',');

  auto* ibn = app.add_subcommand("ibn-check", "decide IBN and IMN");
  add_common(ibn, true);
  ibn->add_option("--algebra", o.algebra)
      ->check(CLI::IsMember({"cohn", "relative", "leavitt"}));
  ibn->add_option("--x", o.x)->delimiter(',');

  auto* equiv = app.add_subcommand("monoid-equiv", "decide a ~ b in a graph or Cohn monoid");
  add_common(equiv, true);
  equiv->add_option("--presentation", o.presentation)
      ->check(CLI::IsMember({"graph", "cohn"}));
  equiv->add_option("--a", o.a, "coefficients in generator order")->required();
  equiv->add_option("--b", o.b, "coefficients in generator order")->required();
  equiv->add_option("--weights", o.weights, "invariant weights, e.g. 2,-1");

  auto* examples = app.add_subcommand("examples", "list or print built-in graphs");
  add_common(examples, false);
  examples->add_option("name", o.name);

  auto* fam = app.add_subcommand("family", "print E_N and X_M");
  add_common(fam, false);
  fam->add_option("n_m", o.family_args, "N M")->expected(2)->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  std::string echo;
  for (int i = 1; i < argc; ++i) {
    echo += (i == 1 ? "" : " ") + std::string(argv[i]);
  }
  o.x_given = !o.x.empty() || companion->count("--x") > 0 || ibn->count("--x") > 0;

  try {
    if (*companion) {
      return cmd_companion(o, echo);
    }
    if (*ibn) {
      return cmd_ibn_check(o, echo);
    }
    if (*equiv) {
      return cmd_monoid_equiv(o, echo);
    }
    if (*examples) {
      return cmd_examples(o, echo);
    }
    return cmd_family(o, echo);
  } catch (CLI::ValidationError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_status_for(e.kind());
  }
}
