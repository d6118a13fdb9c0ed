#include "patgrid/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace patgrid {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line), column_(column) {}

namespace {

template <class Seq, class Fmt>
std::string join(const Seq& items, char sep, Fmt&& fmt) {
  std::string out;
  bool first = true;
  for (const auto& it : items) {
    if (!first) out += sep;
    first = false;
    out += fmt(it);
  }
  return out;
}

std::string int_list(const std::vector<int>& v) {
  return join(v, ',', [](int x) { return std::to_string(x); });
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  // Keywords may themselves be split by whitespace; match letter by letter.
  bool accept_word(std::string_view w) {
    const auto save = *this;
    for (char c : w) {
      if (peek() != c) {
        *this = save;
        return false;
      }
      advance();
    }
    return true;
  }

  void expect_word(std::string_view w) {
    if (!accept_word(w)) fail("expected '" + std::string(w) + "'");
  }

  int integer() {
    skip_ws();
    const int l = line_, c = col_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected integer");
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000'000) throw ParseError(l, c, "integer too large");
      advance();
    }
    return static_cast<int>(v);
  }

  std::vector<int> int_list() {
    std::vector<int> out{integer()};
    while (accept(',')) out.push_back(integer());
    return out;
  }

  [[noreturn]] void fail(const std::string& what) {
    skip_ws();
    throw ParseError(line_, col_, what);
  }

  int line() const { return line_; }
  int column() const { return col_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// Parses `item(;item)*` where each item is open int_list close, or nothing.
std::vector<std::vector<int>> bracketed_lists(Cursor& cur, char open, char close) {
  std::vector<std::vector<int>> out;
  if (cur.peek() != open) return out;
  do {
    cur.expect(open);
    out.push_back(cur.int_list());
    cur.expect(close);
  } while (cur.accept(';'));
  return out;
}

DMatrix parse_dmatrix_body(Cursor& cur) {
  cur.expect_word("d");
  cur.expect('=');
  const int d = cur.integer();
  cur.expect_word("sides");
  cur.expect('=');
  const int l = cur.line(), c = cur.column();
  auto sides = cur.int_list();
  if (static_cast<int>(sides.size()) != d)
    throw ParseError(l, c, "expected " + std::to_string(d) + " sides");
  cur.expect_word("edges");
  cur.expect('=');
  const int el = cur.line(), ec = cur.column();
  auto edges = bracketed_lists(cur, '(', ')');
  DMatrix m(std::move(sides), std::move(edges));
  if (auto v = validate(m)) throw ParseError(el, ec, *v);
  return m;
}

OrderedHypergraph parse_hypergraph_body(Cursor& cur) {
  cur.expect_word("n");
  cur.expect('=');
  const int n = cur.integer();
  cur.expect_word("edges");
  cur.expect('=');
  const int l = cur.line(), c = cur.column();
  OrderedHypergraph h(n, bracketed_lists(cur, '{', '}'));
  if (auto v = validate(h)) throw ParseError(l, c, *v);
  return h;
}

OrderedGraph parse_graph_body(Cursor& cur) {
  cur.expect_word("n");
  cur.expect('=');
  const int n = cur.integer();
  cur.expect_word("edges");
  cur.expect('=');
  const int l = cur.line(), c = cur.column();
  std::vector<std::pair<int, int>> edges;
  for (auto& e : bracketed_lists(cur, '{', '}')) {
    if (e.size() != 2) throw ParseError(l, c, "graph edges must have exactly two vertices");
    edges.emplace_back(e[0], e[1]);
  }
  OrderedGraph g(n, std::move(edges));
  if (auto v = validate(g)) throw ParseError(l, c, *v);
  return g;
}

}  // namespace

std::string serialize(const DMatrix& m) {
  return "dmatrix d=" + std::to_string(m.dims()) + " sides=" + int_list(m.sides()) +
         " edges=" + join(m.edges(), ';', [](const Point& p) { return "(" + int_list(p) + ")"; });
}

std::string serialize(const DPermutation& p) { return serialize(p.matrix()); }

std::string serialize(const OrderedGraph& g) {
  return "graph n=" + std::to_string(g.vertex_count()) + " edges=" +
         join(g.edges(), ';', [](const std::pair<int, int>& e) {
           return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
         });
}

std::string serialize(const OrderedHypergraph& h) {
  return "hypergraph n=" + std::to_string(h.vertex_count()) + " edges=" +
         join(h.edges(), ';', [](const Edge& e) { return "{" + int_list(e) + "}"; });
}

std::string serialize(const Structure& s) {
  return std::visit([](const auto& v) { return serialize(v); }, s);
}

Structure deserialize(std::string_view text) {
  Cursor cur(text);
  Structure out;
  if (cur.accept_word("dmatrix")) {
    out = parse_dmatrix_body(cur);
  } else if (cur.accept_word("hypergraph")) {
    out = parse_hypergraph_body(cur);
  } else if (cur.accept_word("graph")) {
    out = parse_graph_body(cur);
  } else {
    cur.fail("expected 'dmatrix', 'graph' or 'hypergraph'");
  }
  if (!cur.at_end()) cur.fail("trailing input");
  return out;
}

namespace {

template <class T>
T deserialize_as(std::string_view text, const char* kind) {
  auto s = deserialize(text);
  if (auto* v = std::get_if<T>(&s)) return std::move(*v);
  throw ParseError(1, 1, std::string("expected a ") + kind);
}

}  // namespace

DMatrix deserialize_dmatrix(std::string_view text) {
  return deserialize_as<DMatrix>(text, "dmatrix");
}

OrderedGraph deserialize_graph(std::string_view text) {
  return deserialize_as<OrderedGraph>(text, "graph");
}

OrderedHypergraph deserialize_hypergraph(std::string_view text) {
  return deserialize_as<OrderedHypergraph>(text, "hypergraph");
}

std::vector<Structure> deserialize_lines(std::string_view text) {
  std::vector<Structure> out;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto line = text.substr(start, end - start);
    if (std::any_of(line.begin(), line.end(),
                    [](char c) { return !std::isspace(static_cast<unsigned char>(c)); })) {
      try {
        out.push_back(deserialize(line));
      } catch (const ParseError& e) {
        throw ParseError(line_no, e.column(), std::string(e.what()).substr(
                                                  std::string(e.what()).find(": ") + 2));
      }
    }
    start = end + 1;
  }
  return out;
}

}  // namespace patgrid
