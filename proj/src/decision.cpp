#include "ibncert/decision.hpp"

#include <utility>

#include "ibncert/constructions.hpp"
#include "ibncert/error.hpp"

namespace ibncert {

  std::string_view to_string(AlgebraKind kind) noexcept {
    switch (kind) {
      case AlgebraKind::Cohn:
        return "cohn";
      case AlgebraKind::RelativeCohn:
        return "relative";
      case AlgebraKind::Leavitt:
        return "leavitt";
    }
    return "?";
  }

  std::string_view to_string(ImnStatus s) noexcept {
    return s == ImnStatus::Holds ? "holds" : "unknown";
  }

  std::string_view to_string(Route r) noexcept {
    switch (r) {
      case Route::Certificate:
        return "certificate";
      case Route::Witness:
        return "witness";
      case Route::Exhausted:
        return "exhausted";
    }
    return "?";
  }

  Graph resolve_target(AlgebraSpec const& spec) {
    switch (spec.kind) {
      case AlgebraKind::Cohn:
        return cohn_companion(spec.graph).graph;
      case AlgebraKind::RelativeCohn:
        return relative_companion(spec.graph, spec.x).graph;
      case AlgebraKind::Leavitt:
        return spec.graph;
    }
    throw Error(ErrorKind::InternalInvariantViolation, "unknown algebra kind");
  }

  Verdict decide_ibn(AlgebraSpec const&  spec,
                     SearchBounds const& bounds,
                     std::size_t         max_m) {
    bounds.check();
    Verdict v{IbnUnknown{bounds, max_m},
              ImnStatus::Unknown,
              Route::Exhausted,
              resolve_target(spec),
              {},
              bounds,
              max_m,
              {}};
    v.presentation = monoid_presentation(v.target);
    v.log.push_back("target graph has "
                    + std::to_string(v.target.vertex_count()) + " vertices, "
                    + std::to_string(v.target.edge_count()) + " edges, "
                    + std::to_string(v.target.regular_count()) + " regular");

    auto cert = solve_exact(build_system(v.presentation));
    if (cert && verify_certificate(*cert, v.presentation)) {
      v.log.push_back("weight system solved; certificate verified");
      v.ibn   = IbnCertified{std::move(*cert)};
      v.route = Route::Certificate;
      return decide_imn(std::move(v));
    }
    v.log.push_back(cert ? "weight system solved but certificate rejected"
                         : "weight system inconsistent");
    if (spec.kind == AlgebraKind::Cohn) {
      throw Error(ErrorKind::InternalInvariantViolation,
                  "no weight certificate for a Cohn path algebra");
    }

    auto const rho = MonoidElement::ones(v.presentation.size());
    if (auto w = find_scalar_witness(rho, v.presentation, max_m, bounds)) {
      v.log.push_back("witness found: " + std::to_string(w->m) + " * ones ~ "
                      + std::to_string(w->m_prime) + " * ones");
      v.ibn   = IbnRefuted{w->m,
                         w->m_prime,
                         std::move(w->evidence.descendant),
                         std::move(w->evidence.left),
                         std::move(w->evidence.right)};
      v.route = Route::Witness;
      return decide_imn(std::move(v));
    }
    v.log.push_back("no witness with m < m' <= " + std::to_string(max_m)
                    + " within the search bounds");
    return decide_imn(std::move(v));
  }

  Verdict decide_imn(Verdict v) {
    v.imn = std::holds_alternative<IbnCertified>(v.ibn) ? ImnStatus::Holds
                                                        : ImnStatus::Unknown;
    return v;
  }

  bool audit(Verdict const& v, AlgebraSpec const& spec) {
    Graph target;
    try {
      target = resolve_target(spec);
    } catch (Error const&) {
      return false;
    }
    if (!(target == v.target)) {
      return false;
    }
    auto const rs = monoid_presentation(target);
    if (rs.generators() != v.presentation.generators()) {
      return false;
    }
    bool const certified = std::holds_alternative<IbnCertified>(v.ibn);
    if ((v.imn == ImnStatus::Holds) != certified) {
      return false;
    }
    auto const rho = MonoidElement::ones(rs.size());

    if (auto const* c = std::get_if<IbnCertified>(&v.ibn)) {
      return verify_certificate(c->certificate, rs)
             && gamma(c->certificate, rho) == 1;
    }
    if (auto const* r = std::get_if<IbnRefuted>(&v.ibn)) {
      return r->m >= 1 && r->m != r->m_prime
             && r->left.start == rho.scaled(r->m)
             && r->right.start == rho.scaled(r->m_prime)
             && replays(r->left, rs) && replays(r->right, rs)
             && r->left.final() == r->descendant
             && r->right.final() == r->descendant;
    }
    return true;
  }

}  // namespace ibncert
