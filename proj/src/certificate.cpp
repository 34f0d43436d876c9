#include "ibncert/certificate.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "ibncert/constructions.hpp"
#include "ibncert/error.hpp"

namespace ibncert {

  namespace {

    using boost::multiprecision::cpp_int;

    // Reduces `m` (optionally augmented by `rhs`) to reduced row echelon form
    // in place and returns the pivot column of each nonzero row.
    std::vector<std::size_t> reduce(RationalMatrix&        m,
                                    std::vector<Rational>* rhs,
                                    std::size_t            cols) {
      std::vector<std::size_t> pivots;
      std::size_t              row = 0;
      for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0) {
          ++p;
        }
        if (p == m.size()) {
          continue;
        }
        std::swap(m[p], m[row]);
        if (rhs != nullptr) {
          std::swap((*rhs)[p], (*rhs)[row]);
        }
        Rational const inv = 1 / m[row][col];
        for (auto& x : m[row]) {
          x *= inv;
        }
        if (rhs != nullptr) {
          (*rhs)[row] *= inv;
        }
        for (std::size_t r = 0; r < m.size(); ++r) {
          if (r == row || m[r][col] == 0) {
            continue;
          }
          Rational const f = m[r][col];
          for (std::size_t c = col; c < cols; ++c) {
            m[r][c] -= f * m[row][c];
          }
          if (rhs != nullptr) {
            (*rhs)[r] -= f * (*rhs)[row];
          }
        }
        pivots.push_back(col);
        ++row;
      }
      return pivots;
    }

    bool parse_integer(std::string_view s, bool allow_sign, cpp_int& out) {
      std::size_t i = 0;
      if (allow_sign && !s.empty() && s[0] == '-') {
        i = 1;
      }
      if (i == s.size()) {
        return false;
      }
      for (std::size_t k = i; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
          return false;
        }
      }
      out = cpp_int(std::string(s.substr(i)));
      if (i == 1) {
        out = -out;
      }
      return true;
    }

  }  // namespace

  std::string to_string(Rational const& q) {
    auto const num = boost::multiprecision::numerator(q);
    auto const den = boost::multiprecision::denominator(q);
    if (den == 1) {
      return num.str();
    }
    return num.str() + "/" + den.str();
  }

  Rational parse_rational(std::string_view text) {
    auto const slash = text.find('/');
    cpp_int    num;
    cpp_int    den = 1;
    bool       ok  = parse_integer(text.substr(0, slash), true, num);
    if (ok && slash != std::string_view::npos) {
      ok = parse_integer(text.substr(slash + 1), false, den) && den != 0;
    }
    if (!ok) {
      throw Error(ErrorKind::ParseError,
                  "'" + std::string(text) + "' is not a fraction");
    }
    return Rational(num, den);
  }

  CertificateSystem build_system(RewriteSystem const& rs) {
    std::size_t const n = rs.size();
    CertificateSystem sys;
    sys.generators = rs.generators();
    sys.matrix.push_back(std::vector<Rational>(n, Rational(1)));
    sys.target.push_back(Rational(1));
    for (auto const& r : rs.rules()) {
      std::vector<Rational> row(n);
      for (std::size_t j = 0; j < n; ++j) {
        row[j] = Rational(r.replacement[j]);
      }
      row[r.generator] -= 1;
      sys.matrix.push_back(std::move(row));
      sys.target.push_back(Rational(0));
    }
    return sys;
  }

  CertificateSystem build_system(IncidenceMatrix const& a) {
    return build_system(monoid_presentation(a));
  }

  std::optional<WeightCertificate> solve_exact(CertificateSystem const& sys) {
    RationalMatrix        m   = sys.matrix;
    std::vector<Rational> rhs = sys.target;
    auto const            pivots = reduce(m, &rhs, sys.cols());
    for (std::size_t r = pivots.size(); r < rhs.size(); ++r) {
      if (rhs[r] != 0) {
        return std::nullopt;
      }
    }
    WeightCertificate cert{sys.generators,
                           std::vector<Rational>(sys.cols(), Rational(0))};
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      cert.weights[pivots[r]] = rhs[r];
    }
    return cert;
  }

  std::size_t rank(RationalMatrix m) {
    std::size_t const cols = m.empty() ? 0 : m.front().size();
    return reduce(m, nullptr, cols).size();
  }

  Rational gamma(WeightCertificate const& cert, MonoidElement const& x) {
    if (x.size() != cert.weights.size()) {
      throw Error(ErrorKind::LengthMismatch,
                  "element " + to_string(x) + " has "
                      + std::to_string(x.size()) + " coefficients but there are "
                      + std::to_string(cert.weights.size()) + " weights");
    }
    Rational out(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] != 0) {
        out += cert.weights[i] * x[i];
      }
    }
    return out;
  }

  bool verify_certificate(WeightCertificate const& cert,
                          RewriteSystem const&     rs) {
    if (cert.weights.size() != rs.size() || cert.generators != rs.generators()) {
      return false;
    }
    Rational sum(0);
    for (auto const& w : cert.weights) {
      sum += w;
    }
    if (sum != 1) {
      return false;
    }
    return std::all_of(rs.rules().begin(), rs.rules().end(), [&](Rule const& r) {
      return cert.weights[r.generator] == gamma(cert, r.replacement);
    });
  }

  bool companion_rank_check(IncidenceMatrix const& a) {
    std::size_t const n   = a.size();
    std::size_t const t   = a.regular_count();
    if (n == 0) {
      return false;
    }
    auto const sys = build_system(companion_incidence(a));
    if (sys.rows() != t + 1 || sys.cols() != n + t) {
      return false;
    }
    if (rank(sys.matrix) != t + 1) {
      return false;
    }
    RationalMatrix c = sys.matrix;
    for (std::size_t i = 0; i < t; ++i) {
      for (auto& row : c) {
        row[n + i] -= row[i];
      }
    }
    // Each shifted column is now the unit vector of its rule's row.
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t r = 0; r <= t; ++r) {
        if (c[r][n + i] != (r == i + 1 ? 1 : 0)) {
          return false;
        }
      }
    }
    RationalMatrix block(t + 1);
    for (std::size_t r = 0; r <= t; ++r) {
      block[r].assign(c[r].end() - static_cast<std::ptrdiff_t>(t + 1),
                      c[r].end());
    }
    return rank(std::move(block)) == t + 1;
  }

}  // namespace ibncert
