// Test-only helpers: fixtures, random graph generation and independent
// oracles. Nothing here calls into the code paths it is used to check.

#ifndef IBNCERT_TESTS_SUPPORT_HPP_
#define IBNCERT_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ibncert/graph.hpp"

namespace ibncert::test {

  inline GraphSpec line_spec() {
    return {{"u", "v", "w"}, {{"e", "u", "v"}, {"f", "v", "w"}}};
  }

  inline GraphSpec r2_spec() {
    return {{"v"}, {{"e", "v", "v"}, {"f", "v", "v"}}};
  }

  inline GraphSpec edgeless_spec(std::size_t n) {
    GraphSpec g;
    for (std::size_t i = 0; i < n; ++i) {
      g.vertices.push_back("a" + std::to_string(i));
    }
    return g;
  }

  //! A random multigraph on 1..max_vertices vertices with at most max_edges
  //! edges and at most max_mult parallel copies of any (source, range) pair.
  inline GraphSpec random_graph(std::mt19937_64& rng,
                                std::size_t      max_vertices = 6,
                                std::size_t      max_edges    = 12,
                                std::size_t      max_mult     = 3) {
    std::uniform_int_distribution<std::size_t> nv(1, max_vertices);
    std::size_t const                          n = nv(rng);
    std::uniform_int_distribution<std::size_t> ne(0, max_edges);
    std::size_t const                          target = ne(rng);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);

    GraphSpec g;
    for (std::size_t i = 0; i < n; ++i) {
      g.vertices.push_back("x" + std::to_string(i));
    }
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> mult;
    for (std::size_t tries = 0; g.edges.size() < target && tries < 10 * target;
         ++tries) {
      auto s = pick(rng);
      auto r = pick(rng);
      if (mult[{s, r}] >= max_mult) {
        continue;
      }
      ++mult[{s, r}];
      g.edges.push_back({"e" + std::to_string(g.edges.size()),
                         g.vertices[s],
                         g.vertices[r]});
    }
    std::shuffle(g.vertices.begin(), g.vertices.end(), rng);
    return g;
  }

  using Vec = std::vector<std::uint64_t>;

  //! Rules as plain (generator, replacement) pairs.
  using PlainRules = std::vector<std::pair<std::size_t, Vec>>;

  //! Straightforward one-step rewriting on raw vectors.
  inline std::set<Vec> oracle_one_step(Vec const& x, PlainRules const& rules) {
    std::set<Vec> out;
    for (auto const& [i, r] : rules) {
      if (x[i] == 0) {
        continue;
      }
      Vec y = x;
      y[i] -= 1;
      for (std::size_t j = 0; j < y.size(); ++j) {
        y[j] += r[j];
      }
      out.insert(y);
    }
    return out;
  }

  //! Depth-first enumeration of everything reachable without exceeding
  //! `max_total`; `truncated` reports whether anything was cut off.
  inline std::set<Vec> oracle_closure(Vec const&        x,
                                      PlainRules const& rules,
                                      std::uint64_t     max_total,
                                      bool&             truncated) {
    std::set<Vec>    seen{x};
    std::vector<Vec> stack{x};
    truncated = false;
    while (!stack.empty()) {
      Vec cur = stack.back();
      stack.pop_back();
      for (auto const& y : oracle_one_step(cur, rules)) {
        std::uint64_t total = 0;
        for (auto c : y) {
          total += c;
        }
        if (total > max_total) {
          truncated = true;
          continue;
        }
        if (seen.insert(y).second) {
          stack.push_back(y);
        }
      }
    }
    return seen;
  }

  //! Fraction-free (Bareiss) elimination over the integers.
  inline std::size_t oracle_rank(std::vector<std::vector<long long>> const& m) {
    using boost::multiprecision::cpp_int;
    if (m.empty()) {
      return 0;
    }
    std::vector<std::vector<cpp_int>> a;
    for (auto const& row : m) {
      a.emplace_back(row.begin(), row.end());
    }
    std::size_t const rows = a.size();
    std::size_t const cols = a[0].size();
    std::size_t       rank = 0;
    cpp_int           prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
      std::size_t p = rank;
      while (p < rows && a[p][c] == 0) {
        ++p;
      }
      if (p == rows) {
        continue;
      }
      std::swap(a[p], a[rank]);
      for (std::size_t r = rank + 1; r < rows; ++r) {
        for (std::size_t k = c + 1; k < cols; ++k) {
          a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
        }
        a[r][c] = 0;
      }
      prev = a[rank][c];
      ++rank;
    }
    return rank;
  }

}  // namespace ibncert::test

#endif  // IBNCERT_TESTS_SUPPORT_HPP_
