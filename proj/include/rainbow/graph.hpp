#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rainbow/errors.hpp"

namespace rainbow {

using Vertex = int;
using Color = int;  // valid color ids are >= 1; 0 marks an absent edge internally

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Color color = 0;
};

inline bool operator==(const Edge& a, const Edge& b) {
  return a.u == b.u && a.v == b.v && a.color == b.color;
}

/// A triangle whose three edges carry pairwise distinct colors.
/// `vertices` is sorted ascending; `colors` follows edge order
/// (v0v1, v0v2, v1v2).
struct RainbowTriple {
  std::array<Vertex, 3> vertices{};
  std::array<Color, 3> colors{};
};

inline bool operator==(const RainbowTriple& a, const RainbowTriple& b) {
  return a.vertices == b.vertices && a.colors == b.colors;
}

/// Edge-colored simple graph on vertices 0..n-1.
///
/// Values are immutable after construction: editing operations return a new
/// graph, so one instance can be shared freely across search workers.
class EdgeColoredGraph {
 public:
  EdgeColoredGraph(int n, const std::vector<Edge>& edges) : n_(n) {
    require(n >= 1, Errc::invalid_params, "vertex count must be >= 1");
    cells_.assign(static_cast<size_t>(n_) * n_, 0);
    for (const Edge& e : edges) {
      require(e.u >= 0 && e.u < n_ && e.v >= 0 && e.v < n_, Errc::out_of_range,
              "edge endpoint outside [0," + std::to_string(n_) + ")");
      require(e.u != e.v, Errc::self_loop,
              "self-loop at vertex " + std::to_string(e.u));
      require(e.color >= 1, Errc::bad_color,
              "color must be >= 1, got " + std::to_string(e.color));
      Color& cell = at(e.u, e.v);
      require(cell == 0, Errc::duplicate_edge,
              "duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
      cell = e.color;
      at(e.v, e.u) = e.color;
      ++m_;
    }
  }

  int order() const { return n_; }
  long long edge_count() const { return m_; }

  bool has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && at(u, v) != 0;
  }

  /// Color of an existing edge; throws NoSuchEdge otherwise.
  Color color(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    Color c = (u == v) ? 0 : at(u, v);
    require(c != 0, Errc::no_such_edge,
            "no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    return c;
  }

  std::optional<Color> color_if(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return std::nullopt;
    Color c = at(u, v);
    if (c == 0) return std::nullopt;
    return c;
  }

  /// Unchecked cell access for hot loops. 0 = absent.
  Color cell(Vertex u, Vertex v) const { return at(u, v); }

  int degree(Vertex v) const {
    check_vertex(v);
    int d = 0;
    for (Vertex u = 0; u < n_; ++u)
      if (u != v && at(v, u) != 0) ++d;
    return d;
  }

  /// Number of distinct colors on edges incident to v.
  int color_degree(Vertex v) const {
    check_vertex(v);
    std::vector<Color> cs;
    cs.reserve(n_);
    for (Vertex u = 0; u < n_; ++u) {
      Color c = at(v, u);
      if (u != v && c != 0) cs.push_back(c);
    }
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    return static_cast<int>(cs.size());
  }

  int min_color_degree() const {
    int mn = n_ == 0 ? 0 : color_degree(0);
    for (Vertex v = 1; v < n_; ++v) mn = std::min(mn, color_degree(v));
    return mn;
  }

  /// Number of distinct colors used on the whole edge set.
  int color_number() const {
    std::vector<Color> cs;
    cs.reserve(static_cast<size_t>(m_));
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (Color c = at(u, v); c != 0) cs.push_back(c);
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    return static_cast<int>(cs.size());
  }

  bool is_rainbow_triple(Vertex u, Vertex v, Vertex w) const {
    check_vertex(u);
    check_vertex(v);
    check_vertex(w);
    require(u != v && u != w && v != w, Errc::invalid_params,
            "rainbow triple needs three distinct vertices");
    Color a = at(u, v), b = at(u, w), c = at(v, w);
    return a != 0 && b != 0 && c != 0 && a != b && a != c && b != c;
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    for (Vertex u = 0; u < n_; ++u)
      if (u != v && at(v, u) != 0) out.push_back(u);
    return out;
  }

  /// Edges sorted lexicographically with u < v.
  std::vector<Edge> edges_sorted() const {
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(m_));
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (Color c = at(u, v); c != 0) out.push_back({u, v, c});
    return out;
  }

  EdgeColoredGraph without_edge(Vertex u, Vertex v) const {
    color(u, v);  // raises OutOfRange / NoSuchEdge
    EdgeColoredGraph g = *this;
    g.at(u, v) = 0;
    g.at(v, u) = 0;
    --g.m_;
    return g;
  }

  /// Subgraph induced by a nonempty set of distinct vertices, re-indexed in
  /// the order given.
  EdgeColoredGraph induced_subgraph(const std::vector<Vertex>& vs) const {
    require(!vs.empty(), Errc::out_of_range, "induced subgraph needs at least one vertex");
    std::vector<char> seen(n_, 0);
    for (Vertex v : vs) {
      check_vertex(v);
      require(!seen[v], Errc::invalid_params,
              "vertex " + std::to_string(v) + " repeated in induced set");
      seen[v] = 1;
    }
    std::vector<Edge> es;
    const int k = static_cast<int>(vs.size());
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (Color c = at(vs[i], vs[j]); c != 0) es.push_back({i, j, c});
    return EdgeColoredGraph(k, es);
  }

  /// Relabels colors 1..c(G) by first appearance in lexicographic edge order.
  EdgeColoredGraph with_canonical_colors() const {
    std::unordered_map<Color, Color> remap;
    remap.reserve(static_cast<size_t>(m_));
    std::vector<Edge> es;
    es.reserve(static_cast<size_t>(m_));
    Color next = 1;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (Color c = at(u, v); c != 0) {
          auto [it, fresh] = remap.emplace(c, next);
          if (fresh) ++next;
          es.push_back({u, v, it->second});
        }
    return EdgeColoredGraph(n_, es);
  }

  bool operator==(const EdgeColoredGraph& other) const {
    return n_ == other.n_ && cells_ == other.cells_;
  }

 private:
  Color& at(Vertex u, Vertex v) { return cells_[static_cast<size_t>(u) * n_ + v]; }
  Color at(Vertex u, Vertex v) const { return cells_[static_cast<size_t>(u) * n_ + v]; }

  void check_vertex(Vertex v) const {
    require(v >= 0 && v < n_, Errc::out_of_range,
            "vertex " + std::to_string(v) + " outside [0," + std::to_string(n_) + ")");
  }

  int n_;
  long long m_ = 0;
  std::vector<Color> cells_;
};

inline EdgeColoredGraph build_graph(int n, const std::vector<Edge>& edges) {
  return EdgeColoredGraph(n, edges);
}

}  // namespace rainbow
