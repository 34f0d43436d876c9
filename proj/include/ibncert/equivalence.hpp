#ifndef IBNCERT_EQUIVALENCE_HPP_
#define IBNCERT_EQUIVALENCE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "ibncert/certificate.hpp"
#include "ibncert/monoid.hpp"

namespace ibncert {

  //! Both sides rewrite forwards to `descendant`; the traces are the proof.
  struct Equivalent {
    MonoidElement  descendant;
    ReductionTrace left;
    ReductionTrace right;
  };

  struct NotEquivalent {
    enum class Reason { SeparatedByInvariant, ClosuresDisjoint };
    Reason reason;
    //! The two values of the separating invariant, for SeparatedByInvariant.
    std::optional<Rational> gamma_left;
    std::optional<Rational> gamma_right;
  };

  //! The search hit a bound before finding a common descendant.
  struct EquivalenceUnknown {
    SearchBounds bounds;
    std::size_t  states_left  = 0;
    std::size_t  states_right = 0;
  };

  using EquivalenceResult
      = std::variant<Equivalent, NotEquivalent, EquivalenceUnknown>;

  //! Decides whether `a` and `b` are equal in the monoid presented by `rs`.
  //!
  //! The forward closures of both elements are grown a level at a time,
  //! alternating sides, until they meet; the common descendant reached with
  //! the fewest total steps (least lexicographically among ties) is returned
  //! with both traces. NotEquivalent is returned only when `invariant` is a
  //! valid certificate for `rs` that separates the two elements, or when both
  //! closures were explored completely without meeting. A certificate that
  //! fails verify_certificate is ignored.
  //!
  //! Throws LengthMismatch, and ZeroElement if either side is zero.
  EquivalenceResult
  decide_equivalent(MonoidElement const&            a,
                    MonoidElement const&            b,
                    RewriteSystem const&            rs,
                    SearchBounds const&             bounds    = {},
                    WeightCertificate const*        invariant = nullptr);

  struct ScalarWitness {
    std::size_t m;
    std::size_t m_prime;
    Equivalent  evidence;
  };

  //! The lexicographically least pair m < m' <= max_m with m*x equivalent to
  //! m'*x, or nullopt if none is found within the bounds. Throws ZeroElement
  //! for x = 0 and OutOfRange for max_m < 2.
  std::optional<ScalarWitness> find_scalar_witness(MonoidElement const& x,
                                                   RewriteSystem const& rs,
                                                   std::size_t          max_m,
                                                   SearchBounds const& bounds
                                                   = {});

}  // namespace ibncert

#endif  // IBNCERT_EQUIVALENCE_HPP_
