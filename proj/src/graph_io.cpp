#include "rootpoly/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

namespace rootpoly {

ParseError::ParseError(std::string message, std::string input, std::size_t column)
    : std::runtime_error(std::move(message)), input_(std::move(input)), column_(column) {}

std::string ParseError::annotated() const {
  std::string out = "error: ";
  out += what();
  out += "\n  ";
  out += input_;
  out += "\n  ";
  out += std::string(std::min(column_, input_.size()), ' ');
  out += "^";
  return out;
}

namespace {

struct RawEdge {
  Edge edge;
  std::optional<int> label;
};

struct RawGraph {
  int vertex_count = 0;
  std::vector<RawEdge> edges;
};

class GraphLexer {
 public:
  explicit GraphLexer(std::string_view text) : text_(text) {}

  RawGraph parse() {
    RawGraph raw;
    skip_space();
    expect_word("n");
    expect_char('=');
    raw.vertex_count = integer();
    expect_char(';');
    expect_word("edges");
    expect_char('=');
    skip_space();
    if (!at_end() && text_[pos_] != ';') {
      raw.edges.push_back(edge());
      while (peek_char(',')) {
        ++pos_;
        raw.edges.push_back(edge());
      }
    }
    if (peek_char(';')) ++pos_;
    skip_space();
    if (!at_end()) fail("unexpected trailing input");
    return raw;
  }

 private:
  RawEdge edge() {
    RawEdge raw;
    const std::size_t start = skip_space();
    raw.edge.i = integer();
    expect_char('-');
    raw.edge.j = integer();
    if (raw.edge.i >= raw.edge.j) fail_at("edge must satisfy i < j", start);
    if (peek_char(':')) {
      ++pos_;
      raw.label = integer();
    }
    return raw;
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer");
    if (pos_ - start > 6) fail_at("integer too large", start);
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  void expect_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) fail("expected '" + std::string(word) + "'");
    pos_ += word.size();
  }

  void expect_char(char c) {
    if (!peek_char(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool peek_char(char c) {
    skip_space();
    return !at_end() && text_[pos_] == c;
  }

  std::size_t skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t column) const {
    throw ParseError(message, std::string(text_), column);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool looks_like_json(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string_view::npos && text[first] == '{';
}

RawGraph raw_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), std::string(text), e.byte == 0 ? 0 : e.byte - 1);
  }
  RawGraph raw;
  try {
    raw.vertex_count = j.at("n").get<int>();
    const auto& edges = j.at("edges");
    for (const auto& e : edges) raw.edges.push_back({e.get<Edge>(), std::nullopt});
    if (j.contains("labels")) {
      const auto labels = j.at("labels").get<std::vector<int>>();
      if (labels.size() != raw.edges.size())
        throw ParseError("labels and edges differ in length", std::string(text), 0);
      for (std::size_t a = 0; a < labels.size(); ++a) raw.edges[a].label = labels[a];
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), std::string(text), 0);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), std::string(text), 0);
  }
  return raw;
}

RawGraph parse_raw(std::string_view text) {
  if (looks_like_json(text)) return raw_from_json(text);
  return GraphLexer(text).parse();
}

template <typename Build>
auto build_or_throw(std::string_view text, Build build) {
  try {
    return build();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), std::string(text), 0);
  }
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const RawGraph raw = parse_raw(text);
  std::vector<Edge> edges;
  for (const RawEdge& e : raw.edges) edges.push_back(e.edge);
  return build_or_throw(text, [&] { return Graph(raw.vertex_count, std::move(edges)); });
}

LabeledGraph parse_labeled_graph(std::string_view text) {
  const RawGraph raw = parse_raw(text);
  const std::size_t m = raw.edges.size();
  std::vector<Edge> by_label(m);
  std::vector<bool> seen(m + 1, false);
  for (const RawEdge& e : raw.edges) {
    if (!e.label) throw ParseError("every edge needs a label", std::string(text), 0);
    const int a = *e.label;
    if (a < 1 || a > static_cast<int>(m) || seen[a])
      throw ParseError("labels must be a permutation of 1..|E|", std::string(text), 0);
    seen[a] = true;
    by_label[a - 1] = e.edge;
  }
  return build_or_throw(text,
                        [&] { return LabeledGraph(raw.vertex_count, std::move(by_label)); });
}

std::string format_graph(const Graph& g) {
  std::string out = "n=" + std::to_string(g.vertex_count()) + "; edges=";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(e.i) + "-" + std::to_string(e.j);
  }
  return out;
}

std::string format_labeled_graph(const LabeledGraph& g) {
  std::string out = "n=" + std::to_string(g.vertex_count()) + "; edges=";
  for (std::size_t a = 0; a < g.edge_count(); ++a) {
    if (a) out += ',';
    const Edge e = g.by_label()[a];
    out += std::to_string(e.i) + "-" + std::to_string(e.j) + ":" + std::to_string(a + 1);
  }
  return out;
}

void to_json(nlohmann::json& j, const Edge& e) { j = nlohmann::json::array({e.i, e.j}); }

void from_json(const nlohmann::json& j, Edge& e) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("edge must be [i, j]");
  e.i = j[0].get<int>();
  e.j = j[1].get<int>();
}

void to_json(nlohmann::json& j, const Graph& g) {
  j = nlohmann::json{{"n", g.vertex_count()}, {"edges", g.edges()}};
}

void from_json(const nlohmann::json& j, Graph& g) {
  g = Graph(j.at("n").get<int>(), j.at("edges").get<std::vector<Edge>>());
}

void to_json(nlohmann::json& j, const LabeledGraph& g) {
  std::vector<int> labels(g.edge_count());
  for (std::size_t a = 0; a < labels.size(); ++a) labels[a] = static_cast<int>(a) + 1;
  j = nlohmann::json{{"n", g.vertex_count()}, {"edges", g.by_label()}, {"labels", labels}};
}

void from_json(const nlohmann::json& j, LabeledGraph& g) {
  g = parse_labeled_graph(j.dump());
}

}  // namespace rootpoly
