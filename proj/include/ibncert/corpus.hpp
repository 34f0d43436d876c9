#ifndef IBNCERT_CORPUS_HPP_
#define IBNCERT_CORPUS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "ibncert/graph.hpp"

namespace ibncert {

  //! Names of the built-in example graphs. "family-N-M" stands for the whole
  //! parametrised family, e.g. "family-3-2".
  std::vector<std::string> example_names();

  //! line          u -> v -> w
  //! r2            one vertex with two loops
  //! f-r2, f-line  their Cohn companions
  //! relative-2-1  E_2(X_1), the smallest relative Cohn counterexample
  //! family-N-M    E_N(X_M)
  //!
  //! Throws UnknownExample.
  GraphSpec example_graph(std::string_view name);

}  // namespace ibncert

#endif  // IBNCERT_CORPUS_HPP_
