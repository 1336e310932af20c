#include "chromzeta/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

namespace chromzeta {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> parse_int(std::string_view s) {
  long long value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

std::string at_line(int line) { return "line " + std::to_string(line) + ": "; }

}  // namespace

std::string_view to_string(GraphErrorKind kind) {
  switch (kind) {
    case GraphErrorKind::malformed: return "malformed";
    case GraphErrorKind::vertex_out_of_range: return "vertex out of range";
    case GraphErrorKind::self_loop: return "self-loop";
    case GraphErrorKind::duplicate_edge: return "duplicate edge";
    case GraphErrorKind::too_many_vertices: return "too many vertices";
    case GraphErrorKind::unknown_family: return "unknown family";
    case GraphErrorKind::bad_parameter: return "bad parameter";
  }
  return "unknown";
}

GraphError::GraphError(GraphErrorKind kind, const std::string& message, int line)
    : UsageError(message), kind_(kind), line_(line) {}

Graph::Graph(int order, std::vector<Edge> edges) : order_(order), edges_(std::move(edges)) {
  if (order_ < 1) {
    throw GraphError(GraphErrorKind::bad_parameter,
                     "vertex count must be positive, got " + std::to_string(order_));
  }
  for (auto& e : edges_) {
    if (e.u < 1 || e.u > order_ || e.v < 1 || e.v > order_) {
      throw GraphError(GraphErrorKind::vertex_out_of_range,
                       "edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                           " has an endpoint outside [1, " + std::to_string(order_) + "]");
    }
    if (e.u == e.v) {
      throw GraphError(GraphErrorKind::self_loop, "self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw GraphError(GraphErrorKind::duplicate_edge, "duplicate edge " + std::to_string(dup->u) +
                                                         " " + std::to_string(dup->v));
  }
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

int Graph::degree(int v) const {
  return static_cast<int>(
      std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.u == v || e.v == v; }));
}

Graph parse_graph(std::string_view text, int max_vertices) {
  std::optional<int> order;
  std::vector<Edge> edges;
  std::vector<int> edge_line;
  int line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    auto fields = split_ws(line);
    if (!order) {
      std::optional<long long> k;
      if (fields.size() == 1) k = parse_int(fields[0]);
      if (!k) {
        throw GraphError(GraphErrorKind::malformed,
                         at_line(line_no) + "expected vertex count, got '" + std::string(line) + "'",
                         line_no);
      }
      if (*k < 1) {
        throw GraphError(GraphErrorKind::bad_parameter,
                         at_line(line_no) + "vertex count must be positive", line_no);
      }
      if (*k > max_vertices) {
        throw GraphError(GraphErrorKind::too_many_vertices,
                         at_line(line_no) + "vertex count " + std::to_string(*k) +
                             " exceeds the limit " + std::to_string(max_vertices),
                         line_no);
      }
      order = static_cast<int>(*k);
      continue;
    }

    std::optional<long long> u, v;
    if (fields.size() == 2) {
      u = parse_int(fields[0]);
      v = parse_int(fields[1]);
    }
    if (!u || !v) {
      throw GraphError(GraphErrorKind::malformed,
                       at_line(line_no) + "expected 'u v', got '" + std::string(line) + "'", line_no);
    }
    if (*u < 1 || *u > *order || *v < 1 || *v > *order) {
      throw GraphError(GraphErrorKind::vertex_out_of_range,
                       at_line(line_no) + "endpoint outside [1, " + std::to_string(*order) + "]",
                       line_no);
    }
    if (*u == *v) {
      throw GraphError(GraphErrorKind::self_loop,
                       at_line(line_no) + "self-loop at vertex " + std::to_string(*u), line_no);
    }
    Edge e{static_cast<int>(std::min(*u, *v)), static_cast<int>(std::max(*u, *v))};
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i] == e) {
        throw GraphError(GraphErrorKind::duplicate_edge,
                         at_line(line_no) + "duplicate edge " + std::to_string(e.u) + " " +
                             std::to_string(e.v) + " (first on line " +
                             std::to_string(edge_line[i]) + ")",
                         line_no);
      }
    }
    edges.push_back(e);
    edge_line.push_back(line_no);
  }

  if (!order) throw GraphError(GraphErrorKind::malformed, "missing vertex count");
  return Graph(*order, std::move(edges));
}

std::string render_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph family(std::string_view label, int max_vertices) {
  const auto colon = label.find(':');
  if (colon == std::string_view::npos) {
    throw GraphError(GraphErrorKind::malformed,
                     "family label must look like name:k, got '" + std::string(label) + "'");
  }
  const std::string name(label.substr(0, colon));
  const auto k_parsed = parse_int(label.substr(colon + 1));
  if (!k_parsed) {
    throw GraphError(GraphErrorKind::malformed,
                     "family size is not an integer in '" + std::string(label) + "'");
  }
  const long long k = *k_parsed;

  if (name != "path" && name != "cycle" && name != "complete" && name != "empty" && name != "star") {
    throw GraphError(GraphErrorKind::unknown_family, "unknown graph family '" + name + "'");
  }
  if (k < 1) {
    throw GraphError(GraphErrorKind::bad_parameter, "family size must be positive");
  }
  if (name == "cycle" && k < 3) {
    throw GraphError(GraphErrorKind::bad_parameter, "cycle:k requires k >= 3");
  }
  if (name == "star" && k < 2) {
    throw GraphError(GraphErrorKind::bad_parameter, "star:k requires k >= 2");
  }
  if (k > max_vertices) {
    throw GraphError(GraphErrorKind::too_many_vertices,
                     "family size " + std::to_string(k) + " exceeds the limit " +
                         std::to_string(max_vertices));
  }

  const int n = static_cast<int>(k);
  std::vector<Edge> edges;
  if (name == "path" || name == "cycle") {
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    if (name == "cycle") edges.push_back({1, n});
  } else if (name == "complete") {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
  } else if (name == "star") {
    for (int i = 2; i <= n; ++i) edges.push_back({1, i});
  }
  return Graph(n, std::move(edges));
}

std::optional<std::string> identify_family(const Graph& g) {
  const int k = g.order();
  const std::string suffix = ":" + std::to_string(k);
  // Order matters for the small coincidences: path:2 == complete:2, cycle:3 == complete:3.
  for (const char* name : {"empty", "path", "cycle", "complete", "star"}) {
    try {
      if (family(name + suffix, k) == g) return name + suffix;
    } catch (const GraphError&) {
    }
  }
  return std::nullopt;
}

std::vector<Component> connected_components(const Graph& g) {
  const int k = g.order();
  std::vector<int> parent(k + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges()) parent[find(e.u)] = find(e.v);

  // Components ordered by their smallest vertex.
  std::vector<int> component_of(k + 1, -1);
  std::vector<std::vector<int>> members;
  for (int v = 1; v <= k; ++v) {
    const int root = find(v);
    if (component_of[root] < 0) {
      component_of[root] = static_cast<int>(members.size());
      members.emplace_back();
    }
    members[component_of[root]].push_back(v);
  }

  std::vector<Component> out;
  out.reserve(members.size());
  for (const auto& labels : members) {
    std::vector<int> local(k + 1, 0);
    for (std::size_t i = 0; i < labels.size(); ++i) local[labels[i]] = static_cast<int>(i) + 1;
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
      if (local[e.u] != 0 && local[e.v] != 0) edges.push_back({local[e.u], local[e.v]});
    }
    out.push_back({Graph(static_cast<int>(labels.size()), std::move(edges)), labels});
  }
  return out;
}

bool is_subgraph(const Graph& sub, const Graph& g) {
  if (sub.order() != g.order()) {
    throw UsageError("is_subgraph: vertex counts differ (" + std::to_string(sub.order()) + " vs " +
                     std::to_string(g.order()) + ")");
  }
  return std::includes(g.edges().begin(), g.edges().end(), sub.edges().begin(), sub.edges().end());
}

}  // namespace chromzeta
