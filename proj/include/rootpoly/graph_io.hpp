#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rootpoly/graph.hpp"

namespace rootpoly {

/// Literal parse failure; `column` is a 0-based offset into `input`.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::string input, std::size_t column);

  const std::string& input() const { return input_; }
  std::size_t column() const { return column_; }
  /// Message, the offending input, and a caret under the failing column.
  std::string annotated() const;

 private:
  std::string input_;
  std::size_t column_;
};

// Text format: `n=<vertex count>; edges=<i>-<j>,<i>-<j>:<label>,...`
// JSON mirror:  {"n": 4, "edges": [[1,2],[2,3]], "labels": [1,2]}
// Either format is accepted by the parse functions; JSON is detected by a
// leading '{'.
Graph parse_graph(std::string_view text);
LabeledGraph parse_labeled_graph(std::string_view text);

std::string format_graph(const Graph& g);
std::string format_labeled_graph(const LabeledGraph& g);

void to_json(nlohmann::json& j, const Edge& e);
void from_json(const nlohmann::json& j, Edge& e);
void to_json(nlohmann::json& j, const Graph& g);
void from_json(const nlohmann::json& j, Graph& g);
void to_json(nlohmann::json& j, const LabeledGraph& g);
void from_json(const nlohmann::json& j, LabeledGraph& g);

}  // namespace rootpoly
