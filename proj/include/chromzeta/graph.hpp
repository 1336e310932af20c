#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chromzeta/errors.hpp"

namespace chromzeta {

inline constexpr int kDefaultMaxVertices = 16;

/// Unordered edge {u, v}, stored with u < v. Vertices are 1-based.
struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

enum class GraphErrorKind {
  malformed,
  vertex_out_of_range,
  self_loop,
  duplicate_edge,
  too_many_vertices,
  unknown_family,
  bad_parameter,
};

std::string_view to_string(GraphErrorKind kind);

class GraphError : public UsageError {
 public:
  GraphError(GraphErrorKind kind, const std::string& message, int line = 0);
  GraphErrorKind kind() const noexcept { return kind_; }
  // 1-based line in the source document, 0 when not parsing text.
  int line() const noexcept { return line_; }

 private:
  GraphErrorKind kind_;
  int line_;
};

/// Simple labeled graph on vertices 1..k. Immutable once constructed.
class Graph {
 public:
  // Validates every invariant: endpoints in [1,k], no loops, no duplicates.
  Graph(int order, std::vector<Edge> edges);

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return edges_.size(); }
  // Sorted lexicographically, each with u < v.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool has_edge(int u, int v) const;
  int degree(int v) const;

  bool operator==(const Graph&) const = default;

 private:
  int order_;
  std::vector<Edge> edges_;
};

// Edge-list document: first non-comment line is k, then one "u v" per line.
// Lines starting with '#' and blank lines are skipped; LF or CRLF.
Graph parse_graph(std::string_view text, int max_vertices = kDefaultMaxVertices);

// Canonical edge-list rendering; parse_graph(render_graph(g)) == g.
std::string render_graph(const Graph& g);

// Built-in families: path:k, cycle:k, complete:k, empty:k, star:k.
Graph family(std::string_view label, int max_vertices = kDefaultMaxVertices);

// Returns "cycle:5" etc. when g equals a built-in family under the canonical labeling.
std::optional<std::string> identify_family(const Graph& g);

struct Component {
  Graph graph;
  // original_label[i] is the label in the parent graph of component vertex i + 1.
  std::vector<int> original_label;
};

std::vector<Component> connected_components(const Graph& g);

// True iff every edge of sub is an edge of g. Both must have the same order.
bool is_subgraph(const Graph& sub, const Graph& g);

}  // namespace chromzeta
