#include "artin/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "artin/error.hpp"

namespace artin {

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r' && line[i] != '#')
      ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

long integer(const Token& t, int line) {
  long v = 0;
  const char* b = t.text.data();
  const char* e = b + t.text.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e)
    throw ParseError(line, t.column, "expected an integer, got '" + t.text + "'");
  return v;
}

}  // namespace

ParsedInput parse_input(const std::string& text) {
  ParsedInput in;
  std::vector<long> weights;
  std::set<std::pair<int, int>> seen_edges;
  std::istringstream ss(text);
  std::string line;
  int lineno = 0;
  bool field_seen = false;
  while (std::getline(ss, line)) {
    ++lineno;
    auto tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string& kw = tok[0].text;
    auto arity = [&](std::size_t n) {
      if (tok.size() < n)
        throw ParseError(lineno, static_cast<int>(line.size()) + 1,
                         "'" + kw + "' needs " + std::to_string(n - 1) + " arguments");
      if (tok.size() > n)
        throw ParseError(lineno, tok[n].column, "unexpected '" + tok[n].text + "'");
    };
    if (kw == "field") {
      if (field_seen) throw ParseError(lineno, tok[0].column, "duplicate field line");
      field_seen = true;
      if (tok.size() >= 2 && tok[1].text == "q") {
        arity(2);
        in.field = FieldSpec::rationals();
      } else if (tok.size() >= 2 && tok[1].text == "p") {
        arity(3);
        long p = integer(tok[2], lineno);
        if (p < 2 || p > 2147483647L || !is_prime(static_cast<std::uint64_t>(p)))
          throw ParseError(lineno, tok[2].column, tok[2].text + " is not a prime");
        in.field = FieldSpec::prime(static_cast<std::uint32_t>(p));
      } else {
        throw ParseError(lineno, tok.size() >= 2 ? tok[1].column : tok[0].column,
                         "expected 'field q' or 'field p <prime>'");
      }
    } else if (kw == "vertex") {
      arity(3);
      if (in.graph.index_of(tok[1].text) >= 0)
        throw ParseError(lineno, tok[1].column, "duplicate vertex '" + tok[1].text + "'");
      in.graph.add_vertex(tok[1].text);
      weights.push_back(integer(tok[2], lineno));
    } else if (kw == "edge") {
      arity(4);
      int u = in.graph.index_of(tok[1].text);
      int v = in.graph.index_of(tok[2].text);
      if (u < 0) throw ParseError(lineno, tok[1].column, "unknown vertex '" + tok[1].text + "'");
      if (v < 0) throw ParseError(lineno, tok[2].column, "unknown vertex '" + tok[2].text + "'");
      if (u == v) throw ParseError(lineno, tok[2].column, "loop at '" + tok[1].text + "'");
      long label = integer(tok[3], lineno);
      if (label < 2) throw ParseError(lineno, tok[3].column, "label must be at least 2");
      if (label % 2 != 0) throw ParseError(lineno, tok[3].column, "odd label " + tok[3].text);
      if (!seen_edges.insert(std::minmax(u, v)).second)
        throw ParseError(lineno, tok[1].column, "duplicate edge");
      in.graph.add_edge(u, v, label);
    } else {
      throw ParseError(lineno, tok[0].column, "unknown keyword '" + kw + "'");
    }
  }
  if (in.graph.vertex_count() == 0) throw ParseError(lineno + 1, 1, "empty graph");
  in.character = Character(in.graph, weights);
  return in;
}

std::string serialize(const ParsedInput& in) {
  std::string out;
  if (in.field) {
    out += in.field->is_rational()
               ? "field q\n"
               : "field p " + std::to_string(in.field->characteristic()) + "\n";
  }
  for (std::size_t v = 0; v < in.graph.vertex_count(); ++v)
    out += "vertex " + in.graph.name(static_cast<int>(v)) + " " +
           std::to_string(in.character.m(static_cast<int>(v))) + "\n";
  for (auto& e : in.graph.edges())
    out += "edge " + in.graph.name(e.u) + " " + in.graph.name(e.v) + " " +
           std::to_string(e.label) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Parse, "cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace artin
