#include "ibncert/corpus.hpp"

#include <charconv>

#include "ibncert/constructions.hpp"
#include "ibncert/error.hpp"

namespace ibncert {

  namespace {

    GraphSpec line_graph() {
      return {{"u", "v", "w"}, {{"e", "u", "v"}, {"f", "v", "w"}}};
    }

    GraphSpec rose_with_two_petals() {
      return {{"v"}, {{"e", "v", "v"}, {"f", "v", "v"}}};
    }

    bool parse_size(std::string_view s, std::size_t& out) {
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
      return !s.empty() && ec == std::errc() && ptr == s.data() + s.size();
    }

  }  // namespace

  std::vector<std::string> example_names() {
    return {"line", "r2", "f-r2", "f-line", "relative-2-1", "family-N-M"};
  }

  GraphSpec example_graph(std::string_view name) {
    if (name == "line") {
      return line_graph();
    }
    if (name == "r2") {
      return rose_with_two_petals();
    }
    if (name == "f-r2") {
      return cohn_companion(validate(rose_with_two_petals())).graph.spec();
    }
    if (name == "f-line") {
      return cohn_companion(validate(line_graph())).graph.spec();
    }
    if (name == "relative-2-1") {
      return example_graph("family-2-1");
    }
    constexpr std::string_view prefix = "family-";
    if (name.starts_with(prefix)) {
      auto const rest = name.substr(prefix.size());
      auto const dash = rest.find('-');
      std::size_t n = 0;
      std::size_t m = 0;
      if (dash != std::string_view::npos && parse_size(rest.substr(0, dash), n)
          && parse_size(rest.substr(dash + 1), m)) {
        auto fam = family(n, m);
        return relative_companion(fam.graph, fam.x).graph.spec();
      }
    }
    throw Error(ErrorKind::UnknownExample,
                "no built-in example named '" + std::string(name) + "'");
  }

}  // namespace ibncert
