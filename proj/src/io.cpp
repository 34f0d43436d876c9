#include "ibncert/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "ibncert/error.hpp"

namespace ibncert {

  namespace {

    bool is_name_char(char c) {
      auto const u = static_cast<unsigned char>(c);
      return std::isalnum(u) || u >= 0x80 || c == '_' || c == '.' || c == '\''
             || c == '$';
    }

    class Lexer {
     public:
      explicit Lexer(std::string_view text) : _text(text) {}

      struct Token {
        std::string text;
        std::size_t line;
        std::size_t column;
      };

      // Returns an empty token at end of input.
      Token next() {
        skip_blank();
        Token tok{"", _line, _col};
        if (_pos == _text.size()) {
          return tok;
        }
        char const c = _text[_pos];
        if (is_name_char(c)) {
          while (_pos < _text.size() && is_name_char(_text[_pos])) {
            tok.text += _text[_pos];
            advance();
          }
        } else if (c == '-' && _pos + 1 < _text.size() && _text[_pos + 1] == '>') {
          tok.text = "->";
          advance();
          advance();
        } else if (c == ';' || c == ':') {
          tok.text = std::string(1, c);
          advance();
        } else {
          fail(tok, std::string("unexpected character '") + c + "'");
        }
        return tok;
      }

      [[noreturn]] static void fail(Token const& at, std::string const& what) {
        throw Error(ErrorKind::ParseError,
                    std::to_string(at.line) + ":" + std::to_string(at.column)
                        + ": " + what);
      }

     private:
      void advance() {
        if (_text[_pos] == '\n') {
          ++_line;
          _col = 1;
        } else {
          ++_col;
        }
        ++_pos;
      }

      void skip_blank() {
        while (_pos < _text.size()) {
          char const c = _text[_pos];
          if (c == '#') {
            while (_pos < _text.size() && _text[_pos] != '\n') {
              advance();
            }
          } else if (std::isspace(static_cast<unsigned char>(c))) {
            advance();
          } else {
            break;
          }
        }
      }

      std::string_view _text;
      std::size_t      _pos  = 0;
      std::size_t      _line = 1;
      std::size_t      _col  = 1;
    };

    std::string expect_name(Lexer& lex) {
      auto tok = lex.next();
      if (tok.text.empty() || !is_name_char(tok.text[0])) {
        Lexer::fail(tok, "expected a name, found '" + tok.text + "'");
      }
      return tok.text;
    }

    void expect(Lexer& lex, std::string_view punct) {
      auto tok = lex.next();
      if (tok.text != punct) {
        Lexer::fail(tok,
                    "expected '" + std::string(punct) + "', found '" + tok.text
                        + "'");
      }
    }

    bool representable(std::string const& name) {
      if (name.empty()) {
        return false;
      }
      for (char c : name) {
        if (!is_name_char(c)) {
          return false;
        }
      }
      return true;
    }

    json step_names(ReductionTrace const& t, RewriteSystem const& rs) {
      json steps = json::array();
      for (auto const& s : t.steps) {
        steps.push_back(
            {{"rule", rs.generators().at(s.generator)}, {"result", to_json(s.result)}});
      }
      return steps;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Graph files
  ////////////////////////////////////////////////////////////////////////

  GraphSpec parse_graph_text(std::string_view text) {
    GraphSpec g;
    Lexer     lex(text);
    while (true) {
      auto tok = lex.next();
      if (tok.text.empty()) {
        break;
      }
      if (tok.text == "vertex") {
        g.vertices.push_back(expect_name(lex));
        expect(lex, ";");
      } else if (tok.text == "edge") {
        EdgeSpec e;
        e.name = expect_name(lex);
        expect(lex, ":");
        e.source = expect_name(lex);
        expect(lex, "->");
        e.range = expect_name(lex);
        expect(lex, ";");
        g.edges.push_back(std::move(e));
      } else {
        Lexer::fail(tok, "expected 'vertex' or 'edge', found '" + tok.text + "'");
      }
    }
    return g;
  }

  std::string emit_graph_text(GraphSpec const& g) {
    std::ostringstream os;
    for (auto const& v : g.vertices) {
      if (!representable(v)) {
        throw Error(ErrorKind::ParseError,
                    "vertex name '" + v + "' cannot be written as text");
      }
      os << "vertex " << v << ";\n";
    }
    for (auto const& e : g.edges) {
      if (!representable(e.name)) {
        throw Error(ErrorKind::ParseError,
                    "edge name '" + e.name + "' cannot be written as text");
      }
      os << "edge " << e.name << ": " << e.source << " -> " << e.range << ";\n";
    }
    return os.str();
  }

  GraphSpec parse_graph_json(std::string_view text) {
    json j;
    try {
      j = json::parse(text);
    } catch (json::parse_error const& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
    if (j.is_object() && j.contains("result") && j["result"].is_object()
        && j["result"].contains("graph")) {
      j = j["result"]["graph"];
    }
    try {
      GraphSpec g;
      for (auto const& v : j.at("vertices")) {
        g.vertices.push_back(v.get<std::string>());
      }
      for (auto const& e : j.at("edges")) {
        g.edges.push_back({e.at("name").get<std::string>(),
                           e.at("from").get<std::string>(),
                           e.at("to").get<std::string>()});
      }
      return g;
    } catch (json::exception const& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
  }

  json graph_to_json(GraphSpec const& g) {
    json edges = json::array();
    for (auto const& e : g.edges) {
      edges.push_back({{"name", e.name}, {"from", e.source}, {"to", e.range}});
    }
    return {{"vertices", g.vertices}, {"edges", std::move(edges)}};
  }

  GraphFormat detect_format(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      char const c = text[i];
      if (c == '#') {
        while (i < text.size() && text[i] != '\n') {
          ++i;
        }
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        return c == '{' ? GraphFormat::Json : GraphFormat::Text;
      }
    }
    return GraphFormat::Text;
  }

  GraphSpec parse_graph(std::string_view text) {
    return detect_format(text) == GraphFormat::Json ? parse_graph_json(text)
                                                    : parse_graph_text(text);
  }

  MonoidElement parse_element(std::string_view text) {
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
      text = text.substr(1, text.size() - 2);
    }
    std::vector<MonoidElement::value_type> out;
    while (true) {
      auto const comma = text.find(',');
      auto       field = text.substr(0, comma);
      while (!field.empty() && field.front() == ' ') {
        field.remove_prefix(1);
      }
      while (!field.empty() && field.back() == ' ') {
        field.remove_suffix(1);
      }
      MonoidElement::value_type v = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
        throw Error(ErrorKind::ParseError,
                    "'" + std::string(field)
                        + "' is not a nonnegative integer coefficient");
      }
      out.push_back(v);
      if (comma == std::string_view::npos) {
        break;
      }
      text.remove_prefix(comma + 1);
    }
    return MonoidElement(std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON
  ////////////////////////////////////////////////////////////////////////

  json to_json(MonoidElement const& x) {
    return x.coeffs();
  }

  json to_json(IncidenceMatrix const& a) {
    return {{"order", a.order()},
            {"regular", a.regular_count()},
            {"entries", a.entries()}};
  }

  json to_json(ReductionTrace const& t, RewriteSystem const& rs) {
    return {{"start", to_json(t.start)}, {"steps", step_names(t, rs)}};
  }

  json to_json(WeightCertificate const& c) {
    json w = json::array();
    for (auto const& q : c.weights) {
      w.push_back(to_string(q));
    }
    return {{"generators", c.generators}, {"weights", std::move(w)}};
  }

  WeightCertificate certificate_from_json(json const& j) {
    WeightCertificate c;
    try {
      c.generators = j.at("generators").get<std::vector<std::string>>();
      for (auto const& w : j.at("weights")) {
        c.weights.push_back(parse_rational(w.get<std::string>()));
      }
    } catch (json::exception const& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
    return c;
  }

  json to_json(SearchBounds const& b) {
    return {{"max_states", b.max_states},
            {"max_total_coefficient", b.max_total_coefficient},
            {"max_depth", b.max_depth}};
  }

  json to_json(EquivalenceResult const& r, RewriteSystem const& rs) {
    if (auto const* eq = std::get_if<Equivalent>(&r)) {
      return {{"status", "equivalent"},
              {"descendant", to_json(eq->descendant)},
              {"left", to_json(eq->left, rs)},
              {"right", to_json(eq->right, rs)}};
    }
    if (auto const* ne = std::get_if<NotEquivalent>(&r)) {
      json out = {{"status", "not-equivalent"}};
      if (ne->reason == NotEquivalent::Reason::SeparatedByInvariant) {
        out["reason"]      = "separated-by-invariant";
        out["gamma_left"]  = to_string(*ne->gamma_left);
        out["gamma_right"] = to_string(*ne->gamma_right);
      } else {
        out["reason"] = "closures-disjoint";
      }
      return out;
    }
    auto const& u = std::get<EquivalenceUnknown>(r);
    return {{"status", "unknown"},
            {"states_left", u.states_left},
            {"states_right", u.states_right}};
  }

  json to_json(Verdict const& v, AlgebraSpec const& spec) {
    json ibn;
    if (auto const* c = std::get_if<IbnCertified>(&v.ibn)) {
      ibn = {{"status", "certified"}, {"certificate", to_json(c->certificate)}};
    } else if (auto const* r = std::get_if<IbnRefuted>(&v.ibn)) {
      ibn = {{"status", "refuted"},
             {"m", r->m},
             {"m_prime", r->m_prime},
             {"descendant", to_json(r->descendant)},
             {"left", to_json(r->left, v.presentation)},
             {"right", to_json(r->right, v.presentation)}};
    } else {
      ibn = {{"status", "unknown"}};
    }
    return {{"algebra", to_string(spec.kind)},
            {"x", spec.x},
            {"graph", graph_to_json(spec.graph.spec())},
            {"target", graph_to_json(v.target.spec())},
            {"generators", v.presentation.generators()},
            {"route", to_string(v.route)},
            {"ibn", std::move(ibn)},
            {"imn", to_string(v.imn)},
            {"bounds", to_json(v.bounds)},
            {"max_m", v.max_m},
            {"log", v.log}};
  }

  std::string describe(ReductionTrace const& t, RewriteSystem const& rs) {
    std::ostringstream os;
    os << to_string(t.start);
    for (auto const& s : t.steps) {
      os << " --" << rs.generators().at(s.generator) << "--> "
         << to_string(s.result);
    }
    return os.str();
  }

}  // namespace ibncert
