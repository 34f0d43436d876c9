#include "ibncert/equivalence.hpp"

#include <array>
#include <tuple>

#include "detail/frontier.hpp"
#include "ibncert/error.hpp"

namespace ibncert {

  namespace {

    // Elements of the newest level of `grown` that `other` has already seen,
    // ranked by combined depth then lexicographically.
    std::optional<MonoidElement> best_meeting(detail::Frontier const& grown,
                                              detail::Frontier const& other) {
      std::optional<MonoidElement> best;
      std::size_t                  best_depth = 0;
      for (auto const& x : grown.level()) {
        auto const* p = other.find(x);
        if (p == nullptr) {
          continue;
        }
        std::size_t d = grown.find(x)->depth + p->depth;
        if (!best || d < best_depth) {
          best       = x;
          best_depth = d;
        }
      }
      return best;
    }

  }  // namespace

  EquivalenceResult decide_equivalent(MonoidElement const&     a,
                                      MonoidElement const&     b,
                                      RewriteSystem const&     rs,
                                      SearchBounds const&      bounds,
                                      WeightCertificate const* invariant) {
    rs.check(a);
    rs.check(b);
    bounds.check();
    if (a.is_zero() || b.is_zero()) {
      throw Error(ErrorKind::ZeroElement,
                  "equivalence is only decided for nonzero elements");
    }
    if (a == b) {
      return Equivalent{a, {a, {}}, {b, {}}};
    }
    if (invariant != nullptr && verify_certificate(*invariant, rs)) {
      Rational ga = gamma(*invariant, a);
      Rational gb = gamma(*invariant, b);
      if (ga != gb) {
        return NotEquivalent{NotEquivalent::Reason::SeparatedByInvariant,
                             std::move(ga),
                             std::move(gb)};
      }
    }

    std::array<detail::Frontier, 2> side{detail::Frontier(a, rs, bounds),
                                         detail::Frontier(b, rs, bounds)};
    std::size_t turn = 0;
    while (!side[0].exhausted() || !side[1].exhausted()) {
      if (side[turn].exhausted()) {
        turn ^= 1;
      }
      side[turn].expand();
      if (auto meet = best_meeting(side[turn], side[turn ^ 1])) {
        return Equivalent{*meet,
                          side[0].trace_to(*meet),
                          side[1].trace_to(*meet)};
      }
      turn ^= 1;
    }
    if (!side[0].truncated() && !side[1].truncated()) {
      return NotEquivalent{NotEquivalent::Reason::ClosuresDisjoint, {}, {}};
    }
    return EquivalenceUnknown{
        bounds, side[0].state_count(), side[1].state_count()};
  }

  std::optional<ScalarWitness> find_scalar_witness(MonoidElement const& x,
                                                   RewriteSystem const& rs,
                                                   std::size_t          max_m,
                                                   SearchBounds const& bounds) {
    rs.check(x);
    if (x.is_zero()) {
      throw Error(ErrorKind::ZeroElement, "witness search needs x != 0");
    }
    if (max_m < 2) {
      throw Error(ErrorKind::OutOfRange, "witness search needs max_m >= 2");
    }
    for (std::size_t m = 1; m < max_m; ++m) {
      for (std::size_t mp = m + 1; mp <= max_m; ++mp) {
        auto r = decide_equivalent(x.scaled(m), x.scaled(mp), rs, bounds);
        if (auto* eq = std::get_if<Equivalent>(&r)) {
          return ScalarWitness{m, mp, std::move(*eq)};
        }
      }
    }
    return std::nullopt;
  }

}  // namespace ibncert
