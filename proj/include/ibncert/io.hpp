#ifndef IBNCERT_IO_HPP_
#define IBNCERT_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ibncert/certificate.hpp"
#include "ibncert/decision.hpp"
#include "ibncert/equivalence.hpp"
#include "ibncert/graph.hpp"
#include "ibncert/monoid.hpp"

namespace ibncert {

  using json = nlohmann::ordered_json;

  enum class GraphFormat { Text, Json };

  // Text graph grammar:
  //
  //   file      := statement*
  //   statement := "vertex" NAME ";" | "edge" NAME ":" NAME "->" NAME ";"
  //
  // NAME is a run of letters, digits, bytes >= 0x80 and any of _ . ' $ and
  // "#" starts a comment running to the end of the line. Statements may come
  // in any order. Errors are reported as ParseError with line:column.
  GraphSpec parse_graph_text(std::string_view text);
  //! Throws ParseError if a name cannot be written in the text grammar.
  std::string emit_graph_text(GraphSpec const& g);

  //! {"vertices": [...], "edges": [{"name", "from", "to"}, ...]}. A JSON
  //! report whose "result" holds such an object under "graph" is accepted too.
  GraphSpec parse_graph_json(std::string_view text);
  json      graph_to_json(GraphSpec const& g);

  //! Chooses the format by the first significant character ('{' means JSON).
  GraphFormat detect_format(std::string_view text);
  GraphSpec   parse_graph(std::string_view text);

  //! "1,2,0" or "(1,2,0)"; throws ParseError.
  MonoidElement parse_element(std::string_view text);

  json to_json(MonoidElement const& x);
  json to_json(IncidenceMatrix const& a);
  json to_json(ReductionTrace const& t, RewriteSystem const& rs);
  json to_json(WeightCertificate const& c);
  json to_json(SearchBounds const& b);
  json to_json(EquivalenceResult const& r, RewriteSystem const& rs);
  json to_json(Verdict const& v, AlgebraSpec const& spec);

  //! Reads back the "weights" array written by to_json(WeightCertificate).
  WeightCertificate certificate_from_json(json const& j);

  //! "(1,0) --v--> (2,2) --v--> (3,4)".
  std::string describe(ReductionTrace const& t, RewriteSystem const& rs);

}  // namespace ibncert

#endif  // IBNCERT_IO_HPP_
