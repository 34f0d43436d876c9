// Acceptance checks, one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "support.hpp"
#include "ibncert/certificate.hpp"
#include "ibncert/constructions.hpp"
#include "ibncert/corpus.hpp"
#include "ibncert/decision.hpp"
#include "ibncert/equivalence.hpp"
#include "ibncert/io.hpp"

using namespace ibncert;
using namespace ibncert::test;

namespace {

  struct Run {
    int         status = -1;
    std::string out;
  };

  Run cli(std::string const& args) {
    std::string const cmd = std::string(IBNCERT_CLI) + " " + args + " 2>/dev/null";
    Run               r;
    FILE*             p = popen(cmd.c_str(), "r");
    if (p == nullptr) {
      return r;
    }
    std::array<char, 4096> buf{};
    std::size_t            n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) {
      r.out.append(buf.data(), n);
    }
    int const st = pclose(p);
    r.status     = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
  }

  json cli_json(std::string const& args, int& status) {
    auto const r = cli(args + " --format json");
    status       = r.status;
    return json::parse(r.out);
  }

  // Each check returns an empty string on success, else what went wrong.
  using Check = std::function<std::string()>;

  std::string fail_if(bool bad, std::string const& what) {
    return bad ? what : std::string();
  }

  MonoidElement unit(std::size_t n, std::size_t i) {
    std::vector<std::uint64_t> c(n, 0);
    c[i] = 1;
    return MonoidElement(std::move(c));
  }

  //! Target graphs of the corpus, with the family taken up to E_3.
  std::vector<std::pair<std::string, Graph>> corpus_targets() {
    std::vector<std::pair<std::string, Graph>> out;
    for (auto const& name : example_names()) {
      if (name != "family-N-M") {
        out.emplace_back(name, validate(example_graph(name)));
      }
    }
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::size_t m = 1; m <= n; ++m) {
        auto const name = "family-" + std::to_string(n) + "-" + std::to_string(m);
        out.emplace_back(name, validate(example_graph(name)));
      }
    }
    return out;
  }

  std::string criterion_1() {
    int  st = 0;
    auto j  = cli_json("companion --example r2", st);
    auto g  = j["result"]["graph"];
    if (st != 0) {
      return "exit status " + std::to_string(st);
    }
    if (g["vertices"].size() != 2 || g["edges"].size() != 4) {
      return "expected 2 vertices and 4 edges";
    }
    auto const expected = json::parse("[[2,2],[0,0]]");
    if (j["result"]["incidence"]["entries"] != expected) {
      return "incidence " + j["result"]["incidence"]["entries"].dump();
    }
    auto const a = incidence(validate(parse_graph_json(g.dump())));
    return fail_if(a.entries() != std::vector<std::vector<std::uint64_t>>{{2, 2}, {0, 0}},
                   "reparsed graph has a different incidence matrix");
  }

  std::string criterion_2() {
    int  st = 0;
    auto j  = cli_json("ibn-check --example r2 --algebra cohn", st);
    auto r  = j["result"];
    if (st != 0 || r["ibn"]["status"] != "certified") {
      return "not certified";
    }
    auto const cert = certificate_from_json(r["ibn"]["certificate"]);
    // By hand: w + w' = 1 and w = 2w + 2w' give w = 2, w' = -1.
    if (cert.weights != std::vector<Rational>{2, -1}) {
      return "weights " + r["ibn"]["certificate"]["weights"].dump();
    }
    auto const rs = monoid_presentation(cohn_companion(validate(r2_spec())).graph);
    if (!verify_certificate(cert, rs)) {
      return "serialized certificate does not verify";
    }
    for (std::uint64_t m = 1; m <= 10; ++m) {
      if (gamma(cert, MonoidElement::ones(2).scaled(m)) != m) {
        return "gamma(m * ones) != m at m = " + std::to_string(m);
      }
    }
    return {};
  }

  std::string criterion_3() {
    auto const leavitt = AlgebraSpec::leavitt(validate(r2_spec()));
    auto const v       = decide_ibn(leavitt);
    auto const* r      = std::get_if<IbnRefuted>(&v.ibn);
    if (r == nullptr || r->m != 1 || r->m_prime != 2 || !audit(v, leavitt)) {
      return "Leavitt(R2) is not Refuted(1, 2) with a passing audit";
    }
    if (!replays(r->left, v.presentation) || !replays(r->right, v.presentation)
        || r->descendant != MonoidElement{2}) {
      return "Leavitt(R2) trace does not replay to (2)";
    }
    auto const f   = family(2, 1);
    auto const rel = AlgebraSpec::relative_cohn(f.graph, f.x);
    auto const w   = decide_ibn(rel);
    auto const* s  = std::get_if<IbnRefuted>(&w.ibn);
    if (s == nullptr || s->m != 1 || s->m_prime != 2 || !audit(w, rel)) {
      return "relative Cohn family(2,1) is not Refuted(1, 2) with a passing audit";
    }
    int  st = 0;
    auto j  = cli_json("ibn-check --family 2 1 --algebra relative", st);
    return fail_if(st != 10 || j["result"]["ibn"]["status"] != "refuted"
                       || j["result"]["audited"] != true,
                   "CLI does not report an audited refutation");
  }

  std::string criterion_4() {
    auto const f = monoid_presentation(cohn_companion(validate(line_spec())).graph);
    if (f.generators() != std::vector<std::string>{"u", "v", "w", "u'", "v'"}) {
      return "unexpected generator order";
    }
    auto const nf = normal_form(MonoidElement::ones(5), f);
    if (nf != MonoidElement{0, 0, 3, 1, 2}) {
      return "F(line): rho -> " + to_string(nf);
    }
    auto const l = normal_form(MonoidElement::ones(3), monoid_presentation(validate(line_spec())));
    return fail_if(l != MonoidElement{0, 0, 3}, "line: rho -> " + to_string(l));
  }

  std::string criterion_5() {
    auto const rs = monoid_presentation(cohn_companion(validate(r2_spec())).graph);
    for (std::uint64_t m = 1; m <= 10; ++m) {
      MonoidElement const b = m % 2 == 0 ? MonoidElement{m / 2, 0}
                                         : MonoidElement{(m + 1) / 2, 1};
      auto const r = decide_equivalent(MonoidElement{m, m}, b, rs);
      auto const* e = std::get_if<Equivalent>(&r);
      if (e == nullptr || !replays(e->left, rs) || !replays(e->right, rs)) {
        return "(m,m) not reduced at m = " + std::to_string(m);
      }
    }
    auto const cert = solve_exact(build_system(rs));
    if (!cert) {
      return "no certificate for F(R2)";
    }
    for (std::uint64_t m = 1; m <= 5; ++m) {
      for (std::uint64_t k = 1; k <= 5; ++k) {
        if (m == k) {
          continue;
        }
        auto const r = decide_equivalent(MonoidElement{m, 0}, MonoidElement{k, 0}, rs, {}, &*cert);
        auto const* n = std::get_if<NotEquivalent>(&r);
        if (n == nullptr || n->reason != NotEquivalent::Reason::SeparatedByInvariant) {
          return "(" + std::to_string(m) + ",0) vs (" + std::to_string(k)
                 + ",0) not separated";
        }
      }
    }
    return {};
  }

  std::string criterion_6() {
    int  st_eq = 0, st_ibn = 0;
    auto eq  = cli_json("monoid-equiv --example f-r2 --a 1,2 --b 2,4", st_eq);
    auto ibn = cli_json("ibn-check --example r2 --algebra cohn", st_ibn);
    auto v   = eq["result"]["verdict"];
    if (st_eq != 0 || v["status"] != "equivalent") {
      return "(1,2) and (2,4) not found equivalent";
    }
    auto const steps = v["left"]["steps"].size() + v["right"]["steps"].size();
    if (steps != 1) {
      return "trace has " + std::to_string(steps) + " steps";
    }
    return fail_if(st_ibn != 0 || ibn["result"]["ibn"]["status"] != "certified",
                   "Cohn(R2) not certified in the same run");
  }

  std::string criterion_7() {
    std::mt19937_64 rng(7001);
    for (int trial = 0; trial < 250; ++trial) {
      auto const g    = validate(random_graph(rng, 6, 12, 3));
      auto const spec = AlgebraSpec::cohn(g);
      auto const v    = decide_ibn(spec);
      if (!std::holds_alternative<IbnCertified>(v.ibn) || !audit(v, spec)) {
        return "Cohn algebra not certified: " + emit_graph_text(g.spec());
      }
      if (!companion_rank_check(incidence(g))) {
        return "rank check failed: " + emit_graph_text(g.spec());
      }
      if (rank(build_system(v.presentation).matrix) != g.regular_count() + 1) {
        return "rank is not t+1: " + emit_graph_text(g.spec());
      }
    }
    return {};
  }

  std::string criterion_8() {
    std::mt19937_64 rng(8001);
    std::vector<RewriteSystem> systems;
    for (auto const& [name, g] : corpus_targets()) {
      systems.push_back(monoid_presentation(g));
    }
    for (int i = 0; i < 40; ++i) {
      systems.push_back(monoid_presentation(cohn_companion(validate(random_graph(rng))).graph));
    }
    std::size_t triples = 0;
    for (int round = 0; round < 20; ++round) {
      for (auto const& rs : systems) {
        auto const cert = solve_exact(build_system(rs));
        if (!cert) {
          continue;
        }
        std::uniform_int_distribution<std::uint64_t> d(0, 4);
        std::vector<std::uint64_t>                   c(rs.size());
        for (auto& x : c) {
          x = d(rng);
        }
        MonoidElement const x(c);
        for (auto const& [gen, y] : successors(x, rs)) {
          if (gamma(*cert, x) != gamma(*cert, y)) {
            return "gamma changed along rule " + rs.generators()[gen];
          }
          ++triples;
        }
      }
    }
    return fail_if(triples < 1000, "only " + std::to_string(triples) + " triples");
  }

  std::string criterion_9() {
    SearchBounds b;
    b.max_states            = 100000;
    b.max_total_coefficient = 64;
    for (auto const& [name, g] : corpus_targets()) {
      auto const rs   = monoid_presentation(g);
      auto const cert = solve_exact(build_system(rs));
      auto const rho  = MonoidElement::ones(rs.size());
      auto const wit  = find_scalar_witness(rho, rs, 4, b);
      if (cert && wit) {
        return name + ": both a certificate and a witness";
      }
      if (!cert) {
        continue;
      }
      // Pairs separated by gamma never meet under bounded search.
      for (std::uint64_t m = 1; m <= 3; ++m) {
        for (std::size_t i = 0; i < rs.size(); ++i) {
          auto const a = unit(rs.size(), i).scaled(m);
          auto const r = decide_equivalent(a, rho, rs, b);
          if (gamma(*cert, a) != gamma(*cert, rho) && std::holds_alternative<Equivalent>(r)) {
            return name + ": separated pair found equivalent";
          }
        }
      }
    }
    return {};
  }

  std::string criterion_10() {
    std::mt19937_64 rng(10001);
    SearchBounds    b;
    b.max_states            = 20000;
    b.max_total_coefficient = 24;
    b.max_depth             = 64;
    std::size_t pairs       = 0;
    for (int trial = 0; trial < 60; ++trial) {
      auto const g  = validate(random_graph(rng, 4, 8, 2));
      auto const rs = cohn_presentation(g);
      auto const n  = g.vertex_count();
      auto       rho_v = MonoidElement::zero(rs.size());
      for (std::size_t i = 0; i < n; ++i) {
        rho_v = rho_v + unit(rs.size(), i);
      }
      auto walk = [&](MonoidElement const& start) {
        ReductionTrace t{start, {}};
        auto const     len = rng() % 5;
        for (std::size_t s = 0; s < len; ++s) {
          auto next = successors(t.final(), rs);
          if (next.empty()) {
            break;
          }
          auto const& [gen, y] = next[rng() % next.size()];
          t.steps.push_back({gen, y});
        }
        return t;
      };
      auto const start = rho_v.scaled(1 + rng() % 3);
      auto const ta    = walk(start);
      auto const tb    = walk(start);
      auto const r     = decide_equivalent(ta.final(), tb.final(), rs, b);
      if (auto const* e = std::get_if<Equivalent>(&r)) {
        auto ka = ta.rule_counts(rs.size());
        auto kb = tb.rule_counts(rs.size());
        auto const ea = e->left.rule_counts(rs.size());
        auto const eb = e->right.rule_counts(rs.size());
        for (std::size_t i = 0; i < g.regular_count(); ++i) {
          if (ka[i] + ea[i] != kb[i] + eb[i]) {
            return "rule counts differ for " + g.vertex_name(i);
          }
        }
        ++pairs;
      }
      if (auto w = find_scalar_witness(rho_v, rs, 4, b)) {
        return "Cohn monoid has " + std::to_string(w->m) + " rho_V ~ "
               + std::to_string(w->m_prime) + " rho_V";
      }
    }
    return fail_if(pairs < 30, "only " + std::to_string(pairs) + " pairs resolved");
  }

  std::string criterion_11() {
    std::vector<AlgebraSpec> specs;
    for (auto const& [name, g] : corpus_targets()) {
      specs.push_back(AlgebraSpec::leavitt(g));
      specs.push_back(AlgebraSpec::cohn(g));
    }
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::size_t m = 1; m <= n; ++m) {
        auto f = family(n, m);
        specs.push_back(AlgebraSpec::relative_cohn(f.graph, f.x));
      }
    }
    SearchBounds b;
    b.max_states            = 20000;
    b.max_total_coefficient = 24;
    int seen_unknown_or_refuted = 0;
    for (auto const& spec : specs) {
      auto const v         = decide_ibn(spec, b, 4);
      bool const certified = std::holds_alternative<IbnCertified>(v.ibn);
      if ((v.imn == ImnStatus::Holds) != certified) {
        return "IMN " + std::string(to_string(v.imn)) + " on a "
               + (certified ? "certified" : "non-certified") + " verdict";
      }
      seen_unknown_or_refuted += certified ? 0 : 1;
    }
    return fail_if(seen_unknown_or_refuted == 0, "no non-certified verdicts exercised");
  }

  std::string criterion_12() {
    std::vector<std::string> runs{"examples --format json"};
    for (auto const& name : example_names()) {
      auto const ex = name == "family-N-M" ? std::string("--family 3 2")
                                           : "--example " + name;
      runs.push_back("examples " + (name == "family-N-M" ? "family-3-2" : name)
                     + " --format json");
      runs.push_back("companion " + ex + " --format json");
      runs.push_back("companion " + ex);
      for (auto alg : {"cohn", "leavitt", "relative"}) {
        runs.push_back("ibn-check " + ex + " --algebra " + alg
                       + " --max-m 4 --max-states 20000 --max-coeff 24 --format json");
      }
      runs.push_back("ibn-check " + ex + " --algebra leavitt --max-m 3");
    }
    runs.push_back("family 3 2");
    runs.push_back("monoid-equiv --example f-r2 --a 1,2 --b 2,4 --format json");
    for (auto const& args : runs) {
      auto const first  = cli(args);
      auto const second = cli(args);
      if (first.out.empty()) {
        return "no output from: " + args;
      }
      if (first.out != second.out || first.status != second.status) {
        return "reports differ for: " + args;
      }
    }
    return {};
  }

}  // namespace

int main() {
  std::vector<std::pair<std::string, Check>> const criteria{
      {"companion of R2 has incidence [[2,2],[0,0]]", criterion_1},
      {"Cohn(R2) certified with weights (2,-1)", criterion_2},
      {"Leavitt(R2) and relative family(2,1) refuted with (1,2)", criterion_3},
      {"normal forms of rho in F(line) and line", criterion_4},
      {"parity reductions and gamma separation in F(R2)", criterion_5},
      {"(1,2) ~ (2,4) in one step while Cohn(R2) stays certified", criterion_6},
      {"Cohn algebras of random graphs are certified, rank t+1", criterion_7},
      {"gamma is invariant on one-step successors", criterion_8},
      {"certificates and witnesses never coexist", criterion_9},
      {"Cohn monoid rule counts agree, no scalar witness", criterion_10},
      {"IMN holds exactly on certified verdicts", criterion_11},
      {"repeated CLI runs are byte-identical", criterion_12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string why;
    try {
      why = criteria[i].second();
    } catch (std::exception const& e) {
      why = std::string("exception: ") + e.what();
    }
    std::cout << (why.empty() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
              << criteria[i].first;
    if (!why.empty()) {
      std::cout << " (" << why << ")";
      ++failed;
    }
    std::cout << "\n";
  }
  return failed;
}
