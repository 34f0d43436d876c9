#include "ibncert/graph.hpp"

#include <string>
#include <unordered_set>
#include <utility>

#include "ibncert/error.hpp"

namespace ibncert {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::DuplicateName:
        return "DuplicateName";
      case ErrorKind::DanglingEdge:
        return "DanglingEdge";
      case ErrorKind::EmptyGraph:
        return "EmptyGraph";
      case ErrorKind::NotRegular:
        return "NotRegular";
      case ErrorKind::OutOfRange:
        return "OutOfRange";
      case ErrorKind::LengthMismatch:
        return "LengthMismatch";
      case ErrorKind::ZeroElement:
        return "ZeroElement";
      case ErrorKind::NonTerminating:
        return "NonTerminating";
      case ErrorKind::ParseError:
        return "ParseError";
      case ErrorKind::UnknownExample:
        return "UnknownExample";
      case ErrorKind::InternalInvariantViolation:
        return "InternalInvariantViolation";
    }
    return "Unknown";
  }

  std::optional<std::size_t> Graph::index_of(std::string const& name) const {
    auto it = _index.find(name);
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  GraphSpec Graph::spec() const {
    GraphSpec out;
    out.vertices = _vertices;
    out.edges.reserve(_edges.size());
    for (auto const& e : _edges) {
      out.edges.push_back({e.name, _vertices[e.source], _vertices[e.range]});
    }
    return out;
  }

  Graph validate(GraphSpec const& spec) {
    if (spec.vertices.empty()) {
      throw Error(ErrorKind::EmptyGraph, "a graph needs at least one vertex");
    }
    std::unordered_map<std::string, std::size_t> input_index;
    for (std::size_t i = 0; i < spec.vertices.size(); ++i) {
      if (!input_index.emplace(spec.vertices[i], i).second) {
        throw Error(ErrorKind::DuplicateName,
                    "vertex '" + spec.vertices[i] + "' declared twice");
      }
    }
    std::unordered_set<std::string> edge_names;
    std::vector<bool>               has_out(spec.vertices.size(), false);
    for (auto const& e : spec.edges) {
      if (!edge_names.insert(e.name).second) {
        throw Error(ErrorKind::DuplicateName,
                    "edge '" + e.name + "' declared twice");
      }
      for (auto const* end : {&e.source, &e.range}) {
        if (!input_index.contains(*end)) {
          throw Error(ErrorKind::DanglingEdge,
                      "edge '" + e.name + "' refers to undeclared vertex '"
                          + *end + "'");
        }
      }
      has_out[input_index[e.source]] = true;
    }

    Graph g;
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < spec.vertices.size(); ++i) {
        if (has_out[i] == (pass == 0)) {
          g._index.emplace(spec.vertices[i], g._vertices.size());
          g._vertices.push_back(spec.vertices[i]);
        }
      }
      if (pass == 0) {
        g._regular = g._vertices.size();
      }
    }
    g._edges.reserve(spec.edges.size());
    for (auto const& e : spec.edges) {
      g._edge_names.emplace(e.name, g._edges.size());
      g._edges.push_back({e.name, g._index[e.source], g._index[e.range]});
    }
    return g;
  }

  VertexClassification classify(Graph const& graph) {
    VertexClassification out;
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
      (graph.is_regular(v) ? out.regular : out.sinks)
          .push_back(graph.vertex_name(v));
    }
    return out;
  }

  IncidenceMatrix::IncidenceMatrix(std::vector<std::string>              order,
                                   std::vector<std::vector<value_type>> entries)
      : _order(std::move(order)), _entries(std::move(entries)) {
    if (_entries.size() != _order.size()) {
      throw Error(ErrorKind::LengthMismatch,
                  "incidence matrix needs one row per vertex");
    }
    bool seen_zero = false;
    for (auto const& r : _entries) {
      if (r.size() != _order.size()) {
        throw Error(ErrorKind::LengthMismatch, "incidence matrix must be square");
      }
      bool zero = true;
      for (auto x : r) {
        zero = zero && x == 0;
      }
      if (zero) {
        seen_zero = true;
      } else if (seen_zero) {
        throw Error(ErrorKind::OutOfRange,
                    "incidence matrix rows must list regular vertices first");
      } else {
        ++_regular;
      }
    }
  }

  IncidenceMatrix incidence(Graph const& graph) {
    std::size_t const n = graph.vertex_count();
    std::vector<std::vector<IncidenceMatrix::value_type>> a(
        n, std::vector<IncidenceMatrix::value_type>(n, 0));
    for (auto const& e : graph.edges()) {
      ++a[e.source][e.range];
    }
    return IncidenceMatrix(graph.vertices(), std::move(a));
  }

}  // namespace ibncert
