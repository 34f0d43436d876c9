#ifndef IBNCERT_GRAPH_HPP_
#define IBNCERT_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ibncert {

  // Unvalidated input, as read from a file or assembled by a caller.
  struct EdgeSpec {
    std::string name;
    std::string source;
    std::string range;

    bool operator==(EdgeSpec const&) const = default;
  };

  struct GraphSpec {
    std::vector<std::string> vertices;
    std::vector<EdgeSpec>    edges;

    bool operator==(GraphSpec const&) const = default;
  };

  struct Edge {
    std::string name;
    std::size_t source;
    std::size_t range;

    bool operator==(Edge const&) const = default;
  };

  //! A validated finite directed multigraph.
  //!
  //! Vertices are stored in canonical order: the regular vertices (those with
  //! at least one outgoing edge) first, then the sinks, each block keeping the
  //! order in which the vertices were declared. Every index handed out by this
  //! class, and by everything downstream of it, refers to that order. Edges
  //! keep their declaration order. Loops and parallel edges are allowed.
  //!
  //! Instances can only be obtained from validate() and are immutable.
  class Graph {
   public:
    Graph() = default;

    [[nodiscard]] std::size_t vertex_count() const noexcept {
      return _vertices.size();
    }
    [[nodiscard]] std::size_t edge_count() const noexcept {
      return _edges.size();
    }
    //! Number of regular vertices; these occupy indices [0, regular_count()).
    [[nodiscard]] std::size_t regular_count() const noexcept {
      return _regular;
    }
    [[nodiscard]] bool is_regular(std::size_t v) const noexcept {
      return v < _regular;
    }

    [[nodiscard]] std::vector<std::string> const& vertices() const noexcept {
      return _vertices;
    }
    [[nodiscard]] std::vector<Edge> const& edges() const noexcept {
      return _edges;
    }
    [[nodiscard]] std::string const& vertex_name(std::size_t v) const {
      return _vertices.at(v);
    }
    [[nodiscard]] std::optional<std::size_t>
    index_of(std::string const& name) const;

    [[nodiscard]] bool has_edge_named(std::string const& name) const {
      return _edge_names.contains(name);
    }

    //! The normalized form as plain data: vertices in canonical order.
    [[nodiscard]] GraphSpec spec() const;

    bool operator==(Graph const& that) const {
      return _vertices == that._vertices && _edges == that._edges;
    }

   private:
    friend Graph validate(GraphSpec const&);

    std::vector<std::string>                     _vertices;
    std::vector<Edge>                            _edges;
    std::size_t                                  _regular = 0;
    std::unordered_map<std::string, std::size_t> _index;
    std::unordered_map<std::string, std::size_t> _edge_names;
  };

  //! Checks names and endpoints and returns the graph in canonical order.
  //!
  //! Throws Error with kind DuplicateName, DanglingEdge or EmptyGraph.
  Graph validate(GraphSpec const& spec);

  struct VertexClassification {
    std::vector<std::string> regular;
    std::vector<std::string> sinks;

    bool operator==(VertexClassification const&) const = default;
  };

  VertexClassification classify(Graph const& graph);

  //! Square matrix of edge multiplicities, rows and columns in canonical
  //! vertex order; row i holds the counts of edges out of order[i].
  class IncidenceMatrix {
   public:
    using value_type = std::uint64_t;

    IncidenceMatrix() = default;
    IncidenceMatrix(std::vector<std::string>              order,
                    std::vector<std::vector<value_type>> entries);

    [[nodiscard]] std::size_t size() const noexcept {
      return _order.size();
    }
    //! The number t of nonzero rows, which are exactly the first t rows.
    [[nodiscard]] std::size_t regular_count() const noexcept {
      return _regular;
    }
    [[nodiscard]] value_type at(std::size_t i, std::size_t j) const {
      return _entries.at(i).at(j);
    }
    [[nodiscard]] std::vector<value_type> const& row(std::size_t i) const {
      return _entries.at(i);
    }
    [[nodiscard]] std::vector<std::string> const& order() const noexcept {
      return _order;
    }
    [[nodiscard]] std::vector<std::vector<value_type>> const&
    entries() const noexcept {
      return _entries;
    }

    bool operator==(IncidenceMatrix const&) const = default;

   private:
    std::vector<std::string>              _order;
    std::vector<std::vector<value_type>> _entries;
    std::size_t                           _regular = 0;
  };

  IncidenceMatrix incidence(Graph const& graph);

}  // namespace ibncert

#endif  // IBNCERT_GRAPH_HPP_
