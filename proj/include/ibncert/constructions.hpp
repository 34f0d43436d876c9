#ifndef IBNCERT_CONSTRUCTIONS_HPP_
#define IBNCERT_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ibncert/graph.hpp"

namespace ibncert {

  //! Suffix marking a mirrored vertex or edge. When the marked name is
  //! already taken the marker is repeated until the name is fresh.
  inline constexpr char prime_marker = '\'';

  //! A graph built from another by adding one mirror sink v' per selected
  //! regular vertex v, plus a mirror edge e' : s(e) -> r(e)' for every edge
  //! e whose range was selected.
  struct CompanionGraph {
    Graph graph;
    //! New vertex or edge name -> the name it mirrors.
    std::map<std::string, std::string> origin;
  };

  //! The companion in which every regular vertex is mirrored. Its Leavitt
  //! path algebra is the Cohn path algebra of `graph`.
  CompanionGraph cohn_companion(Graph const& graph);

  //! Mirrors only the regular vertices outside `x`. Throws NotRegular if `x`
  //! names a sink or an unknown vertex.
  CompanionGraph relative_companion(Graph const&                    graph,
                                    std::vector<std::string> const& x);

  //! Block form of the companion's incidence matrix, computed directly from
  //! the original matrix: each regular row (a_1..a_n) becomes
  //! (a_1..a_n, a_1..a_t) and every other row is zero.
  IncidenceMatrix companion_incidence(IncidenceMatrix const& a);

  struct FamilyMember {
    Graph                    graph;
    std::vector<std::string> x;
  };

  //! The graph E_n on v1..vn with one loop at each v_i (i < n), two loops at
  //! v_n and an edge v_n -> v_i for every i < n, together with the subset
  //! X_m = {v_(n-m+1), ..., v_n}. Requires 1 <= m <= n.
  FamilyMember family(std::size_t n, std::size_t m);

}  // namespace ibncert

#endif  // IBNCERT_CONSTRUCTIONS_HPP_
