#ifndef IBNCERT_DECISION_HPP_
#define IBNCERT_DECISION_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ibncert/certificate.hpp"
#include "ibncert/equivalence.hpp"
#include "ibncert/graph.hpp"
#include "ibncert/monoid.hpp"

namespace ibncert {

  enum class AlgebraKind { Cohn, RelativeCohn, Leavitt };

  std::string_view to_string(AlgebraKind kind) noexcept;

  //! Which path algebra of `graph` is being asked about. Each is (isomorphic
  //! to) the Leavitt path algebra of the graph returned by resolve_target.
  struct AlgebraSpec {
    AlgebraKind              kind = AlgebraKind::Leavitt;
    Graph                    graph;
    //! The vertices at which the Cuntz-Krieger relation is imposed; only
    //! meaningful for RelativeCohn.
    std::vector<std::string> x;

    static AlgebraSpec cohn(Graph g) {
      return {AlgebraKind::Cohn, std::move(g), {}};
    }
    static AlgebraSpec relative_cohn(Graph g, std::vector<std::string> x) {
      return {AlgebraKind::RelativeCohn, std::move(g), std::move(x)};
    }
    static AlgebraSpec leavitt(Graph g) {
      return {AlgebraKind::Leavitt, std::move(g), {}};
    }
  };

  //! Cohn -> cohn_companion, RelativeCohn -> relative_companion, Leavitt -> the
  //! graph itself.
  Graph resolve_target(AlgebraSpec const& spec);

  struct IbnCertified {
    WeightCertificate certificate;
  };

  struct IbnRefuted {
    std::size_t    m;
    std::size_t    m_prime;
    MonoidElement  descendant;
    ReductionTrace left;
    ReductionTrace right;
  };

  struct IbnUnknown {
    SearchBounds bounds;
    std::size_t  max_m;
  };

  using IbnStatus = std::variant<IbnCertified, IbnRefuted, IbnUnknown>;

  enum class ImnStatus { Holds, Unknown };

  enum class Route { Certificate, Witness, Exhausted };

  std::string_view to_string(ImnStatus s) noexcept;
  std::string_view to_string(Route r) noexcept;

  struct Verdict {
    IbnStatus     ibn;
    ImnStatus     imn = ImnStatus::Unknown;
    Route         route;
    Graph         target;
    //! The graph monoid presentation of `target` all evidence refers to.
    RewriteSystem presentation;
    SearchBounds  bounds;
    std::size_t   max_m = default_max_m;
    std::vector<std::string> log;
  };

  //! Tries a weight certificate for the target graph first and falls back to
  //! a scalar witness search on the all-ones element. The result has its IMN
  //! field filled in by decide_imn.
  //!
  //! Every Cohn algebra must certify; if one does not, InternalInvariantViolation
  //! is thrown.
  Verdict decide_ibn(AlgebraSpec const&  spec,
                     SearchBounds const& bounds = {},
                     std::size_t         max_m  = default_max_m);

  //! IMN holds when IBN is certified, since then the class of the algebra has
  //! infinite order in K_0. Nothing is concluded otherwise.
  Verdict decide_imn(Verdict v);

  //! Re-checks every piece of evidence in `v` from scratch against `spec`.
  bool audit(Verdict const& v, AlgebraSpec const& spec);

}  // namespace ibncert

#endif  // IBNCERT_DECISION_HPP_
