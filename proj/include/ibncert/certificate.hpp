#ifndef IBNCERT_CERTIFICATE_HPP_
#define IBNCERT_CERTIFICATE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ibncert/graph.hpp"
#include "ibncert/monoid.hpp"

namespace ibncert {

  //! Arbitrary precision fraction, always kept in lowest terms.
  using Rational = boost::multiprecision::cpp_rational;

  using RationalMatrix = std::vector<std::vector<Rational>>;

  //! "2", "-1", "5/3".
  std::string to_string(Rational const& q);
  //! Inverse of to_string; throws ParseError on anything else.
  Rational parse_rational(std::string_view text);

  //! The linear system B w = (1, 0, ..., 0) whose solutions are weight
  //! certificates. Row 0 of B is all ones; row k (k >= 1) is r_i - b_i for
  //! the k-th rule b_i -> r_i of the presentation.
  struct CertificateSystem {
    std::vector<std::string> generators;
    RationalMatrix           matrix;
    std::vector<Rational>    target;

    [[nodiscard]] std::size_t rows() const noexcept {
      return matrix.size();
    }
    [[nodiscard]] std::size_t cols() const noexcept {
      return generators.size();
    }
  };

  //! Rational weights on the generators, summing to 1, such that every rule
  //! preserves the weighted sum. The weighted sum (gamma) is then an
  //! invariant of the quotient monoid with gamma(m * ones) = m.
  struct WeightCertificate {
    std::vector<std::string> generators;
    std::vector<Rational>    weights;

    bool operator==(WeightCertificate const&) const = default;
  };

  CertificateSystem build_system(RewriteSystem const& rs);
  CertificateSystem build_system(IncidenceMatrix const& a);

  //! Exact Gauss-Jordan elimination. Pivots are chosen as the leftmost column
  //! with a nonzero entry, topmost such row; free variables are set to zero.
  //! Returns nullopt iff the system is inconsistent.
  std::optional<WeightCertificate> solve_exact(CertificateSystem const& sys);

  //! Rank over the rationals, using the same elimination as solve_exact.
  std::size_t rank(RationalMatrix m);

  //! The weighted sum of the coefficients of `x`; throws LengthMismatch.
  Rational gamma(WeightCertificate const& cert, MonoidElement const& x);

  //! True iff the weights sum to 1 and each rule b_i -> r_i satisfies
  //! w_i = gamma(r_i), over the same generator list as `rs`.
  bool verify_certificate(WeightCertificate const& cert, RewriteSystem const& rs);

  //! For the companion of a graph with incidence matrix `a` (t regular
  //! vertices, n vertices): builds the (t+1) x (n+t) system and checks that
  //! it has rank exactly t+1, and that subtracting column i from column n+i
  //! (i < t) leaves a nonsingular block in the last t+1 columns.
  bool companion_rank_check(IncidenceMatrix const& a);

}  // namespace ibncert

#endif  // IBNCERT_CERTIFICATE_HPP_
