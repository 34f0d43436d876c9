#include "ibncert/constructions.hpp"

#include <set>
#include <string>
#include <utility>

#include "ibncert/error.hpp"

namespace ibncert {

  namespace {

    std::string fresh_name(std::string base, std::set<std::string>& taken) {
      do {
        base += prime_marker;
      } while (taken.contains(base));
      taken.insert(base);
      return base;
    }

    CompanionGraph build_companion(Graph const&             graph,
                                   std::vector<bool> const& mirrored) {
      CompanionGraph out;
      GraphSpec      spec = graph.spec();

      std::set<std::string> vertex_names(spec.vertices.begin(),
                                         spec.vertices.end());
      std::set<std::string> edge_names;
      for (auto const& e : spec.edges) {
        edge_names.insert(e.name);
      }

      std::vector<std::string> mirror(graph.vertex_count());
      for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
        if (mirrored[v]) {
          mirror[v] = fresh_name(graph.vertex_name(v), vertex_names);
          out.origin.emplace(mirror[v], graph.vertex_name(v));
          spec.vertices.push_back(mirror[v]);
        }
      }
      for (auto const& e : graph.edges()) {
        if (mirrored[e.range]) {
          auto name = fresh_name(e.name, edge_names);
          out.origin.emplace(name, e.name);
          spec.edges.push_back(
              {std::move(name), graph.vertex_name(e.source), mirror[e.range]});
        }
      }
      out.graph = validate(spec);
      return out;
    }

  }  // namespace

  CompanionGraph cohn_companion(Graph const& graph) {
    std::vector<bool> mirrored(graph.vertex_count(), false);
    for (std::size_t v = 0; v < graph.regular_count(); ++v) {
      mirrored[v] = true;
    }
    return build_companion(graph, mirrored);
  }

  CompanionGraph relative_companion(Graph const&                    graph,
                                    std::vector<std::string> const& x) {
    std::vector<bool> mirrored(graph.vertex_count(), false);
    for (std::size_t v = 0; v < graph.regular_count(); ++v) {
      mirrored[v] = true;
    }
    for (auto const& name : x) {
      auto v = graph.index_of(name);
      if (!v) {
        throw Error(ErrorKind::NotRegular,
                    "'" + name + "' is not a vertex of the graph");
      }
      if (!graph.is_regular(*v)) {
        throw Error(ErrorKind::NotRegular, "'" + name + "' is a sink");
      }
      mirrored[*v] = false;
    }
    return build_companion(graph, mirrored);
  }

  IncidenceMatrix companion_incidence(IncidenceMatrix const& a) {
    std::size_t const n = a.size();
    std::size_t const t = a.regular_count();

    std::set<std::string>    taken(a.order().begin(), a.order().end());
    std::vector<std::string> order = a.order();
    for (std::size_t i = 0; i < t; ++i) {
      order.push_back(fresh_name(a.order()[i], taken));
    }

    std::vector<std::vector<IncidenceMatrix::value_type>> rows(
        n + t, std::vector<IncidenceMatrix::value_type>(n + t, 0));
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        rows[i][j] = a.at(i, j);
      }
      for (std::size_t j = 0; j < t; ++j) {
        rows[i][n + j] = a.at(i, j);
      }
    }
    return IncidenceMatrix(std::move(order), std::move(rows));
  }

  FamilyMember family(std::size_t n, std::size_t m) {
    if (n < 1 || m < 1 || m > n) {
      throw Error(ErrorKind::OutOfRange,
                  "family needs 1 <= m <= n, got n=" + std::to_string(n)
                      + ", m=" + std::to_string(m));
    }
    auto vertex = [](std::size_t i) { return "v" + std::to_string(i); };
    GraphSpec spec;
    for (std::size_t i = 1; i <= n; ++i) {
      spec.vertices.push_back(vertex(i));
    }
    for (std::size_t i = 1; i < n; ++i) {
      spec.edges.push_back({"l" + std::to_string(i), vertex(i), vertex(i)});
    }
    spec.edges.push_back({"l" + std::to_string(n) + "a", vertex(n), vertex(n)});
    spec.edges.push_back({"l" + std::to_string(n) + "b", vertex(n), vertex(n)});
    for (std::size_t i = 1; i < n; ++i) {
      spec.edges.push_back({"c" + std::to_string(i), vertex(n), vertex(i)});
    }
    FamilyMember out{validate(spec), {}};
    for (std::size_t i = n - m + 1; i <= n; ++i) {
      out.x.push_back(vertex(i));
    }
    return out;
  }

}  // namespace ibncert
