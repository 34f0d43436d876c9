#ifndef IBNCERT_MONOID_HPP_
#define IBNCERT_MONOID_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ibncert/graph.hpp"

namespace ibncert {

  //! An element of a free commutative monoid: one nonnegative coefficient per
  //! generator of the presentation it belongs to.
  class MonoidElement {
   public:
    using value_type = std::uint64_t;

    MonoidElement() = default;
    explicit MonoidElement(std::vector<value_type> coeffs)
        : _coeffs(std::move(coeffs)) {}
    MonoidElement(std::initializer_list<value_type> coeffs) : _coeffs(coeffs) {}

    static MonoidElement zero(std::size_t n) {
      return MonoidElement(std::vector<value_type>(n, 0));
    }
    //! The all-ones element (the class of the free module of rank one).
    static MonoidElement ones(std::size_t n) {
      return MonoidElement(std::vector<value_type>(n, 1));
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _coeffs.size();
    }
    [[nodiscard]] value_type operator[](std::size_t i) const {
      return _coeffs[i];
    }
    [[nodiscard]] std::vector<value_type> const& coeffs() const noexcept {
      return _coeffs;
    }
    [[nodiscard]] value_type total() const noexcept;
    [[nodiscard]] bool       is_zero() const noexcept {
      return total() == 0;
    }

    //! Entrywise sum; throws LengthMismatch.
    MonoidElement& operator+=(MonoidElement const& that);
    //! Entrywise multiple.
    [[nodiscard]] MonoidElement scaled(value_type m) const;

    friend MonoidElement operator+(MonoidElement lhs, MonoidElement const& rhs) {
      lhs += rhs;
      return lhs;
    }

    auto operator<=>(MonoidElement const&) const = default;

   private:
    friend class RewriteSystem;
    std::vector<value_type> _coeffs;
  };

  std::string to_string(MonoidElement const& x);

  struct MonoidElementHash {
    std::size_t operator()(MonoidElement const& x) const noexcept;
  };

  //! b_i -> replacement.
  struct Rule {
    std::size_t   generator;
    MonoidElement replacement;
  };

  //! A commutative monoid presentation in which every relation has a single
  //! generator on one side and each generator has at most one relation. Such
  //! presentations are exactly those for which two nonzero elements are equal
  //! in the quotient iff both rewrite forwards to a common element.
  class RewriteSystem {
   public:
    RewriteSystem() = default;
    //! Rules are stored sorted by generator. Throws LengthMismatch for a
    //! replacement of the wrong length, OutOfRange for a bad or repeated
    //! generator index and ZeroElement for an empty replacement.
    RewriteSystem(std::vector<std::string> generators, std::vector<Rule> rules);

    [[nodiscard]] std::size_t size() const noexcept {
      return _generators.size();
    }
    [[nodiscard]] std::vector<std::string> const& generators() const noexcept {
      return _generators;
    }
    [[nodiscard]] std::vector<Rule> const& rules() const noexcept {
      return _rules;
    }
    [[nodiscard]] bool is_rewritable(std::size_t generator) const {
      return _rule_of.at(generator).has_value();
    }
    //! The replacement of `generator`, or nullptr if it has no rule.
    [[nodiscard]] MonoidElement const* rule_for(std::size_t generator) const;

    //! Fires the rule for `generator` once; the coefficient there must be
    //! positive.
    [[nodiscard]] MonoidElement apply(MonoidElement const& x,
                                      std::size_t          generator) const;

    //! Throws LengthMismatch unless `x` has one coefficient per generator.
    void check(MonoidElement const& x) const;

   private:
    std::vector<std::string>                _generators;
    std::vector<Rule>                       _rules;
    std::vector<std::optional<std::size_t>> _rule_of;
  };

  //! The graph monoid: generators are the vertices in canonical order and each
  //! regular vertex v_i rewrites to row i of the incidence matrix.
  RewriteSystem monoid_presentation(IncidenceMatrix const& a);
  RewriteSystem monoid_presentation(Graph const& graph);

  //! Name of the marker generator attached to regular vertex `v` in the Cohn
  //! monoid.
  std::string cohn_marker_name(std::string const& v);

  //! The Cohn monoid: generators are the vertices followed by one marker q_v
  //! per regular vertex v, and v rewrites to q_v + sum of r(e) over edges e
  //! leaving v.
  RewriteSystem cohn_presentation(Graph const& graph);

  struct TraceStep {
    std::size_t   generator;
    MonoidElement result;

    bool operator==(TraceStep const&) const = default;
  };

  //! A forward rewriting sequence start -> steps[0].result -> ...
  struct ReductionTrace {
    MonoidElement          start;
    std::vector<TraceStep> steps;

    [[nodiscard]] MonoidElement const& final() const {
      return steps.empty() ? start : steps.back().result;
    }
    //! How often each generator's rule fired.
    [[nodiscard]] std::vector<std::size_t> rule_counts(std::size_t n) const;

    bool operator==(ReductionTrace const&) const = default;
  };

  //! True iff every step of `trace` is a legal single forward rewrite of its
  //! predecessor under `rs`.
  bool replays(ReductionTrace const& trace, RewriteSystem const& rs);

  struct SearchBounds {
    std::size_t max_states            = 100000;
    std::size_t max_total_coefficient = 64;
    std::size_t max_depth             = 64;

    //! Throws OutOfRange unless every bound is positive.
    void check() const;

    bool operator==(SearchBounds const&) const = default;
  };

  inline constexpr std::size_t default_max_m = 6;

  //! Every (generator, successor) obtained by firing one rule once, in
  //! generator order.
  std::vector<std::pair<std::size_t, MonoidElement>>
  successors(MonoidElement const& x, RewriteSystem const& rs);

  //! The distinct one-step successors of `x`, in generator order.
  std::vector<MonoidElement> one_step(MonoidElement const& x,
                                      RewriteSystem const& rs);

  struct Closure {
    //! Sorted lexicographically.
    std::vector<MonoidElement> elements;
    //! Set iff some successor was dropped by one of the bounds.
    bool truncated = false;
  };

  //! Breadth-first forward closure of `x`. Successors whose total
  //! coefficient exceeds the bound are dropped, elements at max_depth are not
  //! expanded and exploration stops once max_states elements are known.
  Closure forward_closure(MonoidElement const& x,
                          RewriteSystem const& rs,
                          SearchBounds const&  bounds = {});

  //! The unique element reachable from `x` with zero coefficient at every
  //! rewritable generator. Exists iff the dependency relation (i depends on j
  //! when the replacement of i involves rewritable j) is acyclic; throws
  //! NonTerminating otherwise.
  MonoidElement normal_form(MonoidElement const& x, RewriteSystem const& rs);

}  // namespace ibncert

#endif  // IBNCERT_MONOID_HPP_
