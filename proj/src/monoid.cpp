#include "ibncert/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "detail/frontier.hpp"
#include "ibncert/error.hpp"

namespace ibncert {

  ////////////////////////////////////////////////////////////////////////
  // MonoidElement
  ////////////////////////////////////////////////////////////////////////

  MonoidElement::value_type MonoidElement::total() const noexcept {
    return std::accumulate(_coeffs.begin(), _coeffs.end(), value_type(0));
  }

  MonoidElement& MonoidElement::operator+=(MonoidElement const& that) {
    if (that.size() != size()) {
      throw Error(ErrorKind::LengthMismatch,
                  "cannot add elements of lengths " + std::to_string(size())
                      + " and " + std::to_string(that.size()));
    }
    for (std::size_t i = 0; i < size(); ++i) {
      _coeffs[i] += that._coeffs[i];
    }
    return *this;
  }

  MonoidElement MonoidElement::scaled(value_type m) const {
    MonoidElement out(*this);
    for (auto& c : out._coeffs) {
      c *= m;
    }
    return out;
  }

  std::string to_string(MonoidElement const& x) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < x.size(); ++i) {
      os << (i == 0 ? "" : ",") << x[i];
    }
    os << ')';
    return os.str();
  }

  std::size_t MonoidElementHash::operator()(MonoidElement const& x) const noexcept {
    std::size_t h = x.size();
    for (auto c : x.coeffs()) {
      h ^= std::hash<MonoidElement::value_type>{}(c) + 0x9e3779b97f4a7c15ULL
           + (h << 6) + (h >> 2);
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // RewriteSystem
  ////////////////////////////////////////////////////////////////////////

  RewriteSystem::RewriteSystem(std::vector<std::string> generators,
                               std::vector<Rule>        rules)
      : _generators(std::move(generators)),
        _rules(std::move(rules)),
        _rule_of(_generators.size()) {
    std::sort(_rules.begin(), _rules.end(), [](Rule const& a, Rule const& b) {
      return a.generator < b.generator;
    });
    for (std::size_t k = 0; k < _rules.size(); ++k) {
      auto const& r = _rules[k];
      if (r.generator >= _generators.size()) {
        throw Error(ErrorKind::OutOfRange,
                    "rule for generator index " + std::to_string(r.generator)
                        + " out of range");
      }
      if (_rule_of[r.generator]) {
        throw Error(ErrorKind::OutOfRange,
                    "two rules for generator " + _generators[r.generator]);
      }
      check(r.replacement);
      if (r.replacement.is_zero()) {
        throw Error(ErrorKind::ZeroElement,
                    "rule for " + _generators[r.generator]
                        + " has an empty replacement");
      }
      _rule_of[r.generator] = k;
    }
  }

  MonoidElement const* RewriteSystem::rule_for(std::size_t generator) const {
    auto const& k = _rule_of.at(generator);
    return k ? &_rules[*k].replacement : nullptr;
  }

  MonoidElement RewriteSystem::apply(MonoidElement const& x,
                                     std::size_t          generator) const {
    auto const* r = rule_for(generator);
    if (r == nullptr || x[generator] == 0) {
      throw Error(ErrorKind::OutOfRange,
                  "rule for generator index " + std::to_string(generator)
                      + " does not apply to " + to_string(x));
    }
    MonoidElement out(x);
    out._coeffs[generator] -= 1;
    out += *r;
    return out;
  }

  void RewriteSystem::check(MonoidElement const& x) const {
    if (x.size() != size()) {
      throw Error(ErrorKind::LengthMismatch,
                  "element " + to_string(x) + " has "
                      + std::to_string(x.size()) + " coefficients, expected "
                      + std::to_string(size()));
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentations
  ////////////////////////////////////////////////////////////////////////

  RewriteSystem monoid_presentation(IncidenceMatrix const& a) {
    std::vector<Rule> rules;
    for (std::size_t i = 0; i < a.regular_count(); ++i) {
      rules.push_back({i, MonoidElement(a.row(i))});
    }
    return RewriteSystem(a.order(), std::move(rules));
  }

  RewriteSystem monoid_presentation(Graph const& graph) {
    return monoid_presentation(incidence(graph));
  }

  std::string cohn_marker_name(std::string const& v) {
    return "q(" + v + ")";
  }

  RewriteSystem cohn_presentation(Graph const& graph) {
    std::size_t const        n = graph.vertex_count();
    std::size_t const        t = graph.regular_count();
    std::vector<std::string> gens = graph.vertices();
    for (std::size_t i = 0; i < t; ++i) {
      gens.push_back(cohn_marker_name(graph.vertex_name(i)));
    }
    std::vector<std::vector<MonoidElement::value_type>> rhs(
        t, std::vector<MonoidElement::value_type>(n + t, 0));
    for (auto const& e : graph.edges()) {
      ++rhs[e.source][e.range];
    }
    std::vector<Rule> rules;
    for (std::size_t i = 0; i < t; ++i) {
      rhs[i][n + i] = 1;
      rules.push_back({i, MonoidElement(std::move(rhs[i]))});
    }
    return RewriteSystem(std::move(gens), std::move(rules));
  }

  ////////////////////////////////////////////////////////////////////////
  // Traces
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::size_t> ReductionTrace::rule_counts(std::size_t n) const {
    std::vector<std::size_t> out(n, 0);
    for (auto const& s : steps) {
      ++out.at(s.generator);
    }
    return out;
  }

  bool replays(ReductionTrace const& trace, RewriteSystem const& rs) {
    if (trace.start.size() != rs.size()) {
      return false;
    }
    MonoidElement const* prev = &trace.start;
    for (auto const& s : trace.steps) {
      if (s.generator >= rs.size() || rs.rule_for(s.generator) == nullptr
          || (*prev)[s.generator] == 0) {
        return false;
      }
      if (rs.apply(*prev, s.generator) != s.result) {
        return false;
      }
      prev = &s.result;
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Search
  ////////////////////////////////////////////////////////////////////////

  void SearchBounds::check() const {
    if (max_states == 0 || max_total_coefficient == 0 || max_depth == 0) {
      throw Error(ErrorKind::OutOfRange, "search bounds must be positive");
    }
  }

  std::vector<std::pair<std::size_t, MonoidElement>>
  successors(MonoidElement const& x, RewriteSystem const& rs) {
    std::vector<std::pair<std::size_t, MonoidElement>> out;
    for (auto const& r : rs.rules()) {
      if (x[r.generator] > 0) {
        out.emplace_back(r.generator, rs.apply(x, r.generator));
      }
    }
    return out;
  }

  std::vector<MonoidElement> one_step(MonoidElement const& x,
                                      RewriteSystem const& rs) {
    rs.check(x);
    std::vector<MonoidElement> out;
    for (auto& [gen, y] : successors(x, rs)) {
      if (std::find(out.begin(), out.end(), y) == out.end()) {
        out.push_back(std::move(y));
      }
    }
    return out;
  }

  Closure forward_closure(MonoidElement const& x,
                          RewriteSystem const& rs,
                          SearchBounds const&  bounds) {
    rs.check(x);
    bounds.check();
    detail::Frontier f(x, rs, bounds);
    while (!f.exhausted()) {
      f.expand();
    }
    return {f.elements(), f.truncated()};
  }

  MonoidElement normal_form(MonoidElement const& x, RewriteSystem const& rs) {
    rs.check(x);
    std::size_t const n = rs.size();
    // consumers[i]: rewritable generators appearing in the replacement of i.
    // pending[j]: number of rules whose replacement involves j.
    std::vector<std::size_t>              pending(n, 0);
    std::vector<std::vector<std::size_t>> consumers(n);
    for (auto const& r : rs.rules()) {
      for (std::size_t j = 0; j < n; ++j) {
        if (r.replacement[j] > 0 && rs.is_rewritable(j)) {
          consumers[r.generator].push_back(j);
          ++pending[j];
        }
      }
    }
    std::vector<std::size_t> order;
    for (auto const& r : rs.rules()) {
      if (pending[r.generator] == 0) {
        order.push_back(r.generator);
      }
    }
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (auto j : consumers[order[k]]) {
        if (--pending[j] == 0) {
          order.push_back(j);
        }
      }
    }
    if (order.size() != rs.rules().size()) {
      throw Error(ErrorKind::NonTerminating,
                  "the rewrite rules have a dependency cycle");
    }

    std::vector<MonoidElement::value_type> c = x.coeffs();
    for (auto i : order) {
      auto const  k = c[i];
      auto const& r = *rs.rule_for(i);
      c[i]          = 0;
      for (std::size_t j = 0; j < n; ++j) {
        c[j] += k * r[j];
      }
    }
    return MonoidElement(std::move(c));
  }

}  // namespace ibncert
