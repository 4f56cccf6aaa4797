#pragma once

#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// All rainbow triangles, each once, lexicographically ordered by vertex
/// triple.
inline std::vector<RainbowTriple> enumerate_rainbow_triangles(const EdgeColoredGraph& g) {
  const int n = g.order();
  std::vector<RainbowTriple> out;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      Color a = g.cell(u, v);
      if (a == 0) continue;
      for (Vertex w = v + 1; w < n; ++w) {
        Color b = g.cell(u, w), c = g.cell(v, w);
        if (b != 0 && c != 0 && a != b && a != c && b != c)
          out.push_back({{u, v, w}, {a, b, c}});
      }
    }
  return out;
}

inline long long rt_total(const EdgeColoredGraph& g) {
  return static_cast<long long>(enumerate_rainbow_triangles(g).size());
}

/// Number of rainbow triangles containing v.
inline long long rt_vertex(const EdgeColoredGraph& g, Vertex v) {
  const int n = g.order();
  require(v >= 0 && v < n, Errc::out_of_range, "rt_vertex: bad vertex");
  long long count = 0;
  for (Vertex u = 0; u < n; ++u) {
    if (u == v) continue;
    Color a = g.cell(v, u);
    if (a == 0) continue;
    for (Vertex w = u + 1; w < n; ++w) {
      if (w == v) continue;
      Color b = g.cell(v, w), c = g.cell(u, w);
      if (b != 0 && c != 0 && a != b && a != c && b != c) ++count;
    }
  }
  return count;
}

/// Number of rainbow triangles containing the edge {u,v}.
inline long long rt_edge(const EdgeColoredGraph& g, Vertex u, Vertex v) {
  Color a = g.color(u, v);  // raises OutOfRange / NoSuchEdge
  long long count = 0;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (w == u || w == v) continue;
    Color b = g.cell(u, w), c = g.cell(v, w);
    if (b != 0 && c != 0 && a != b && a != c && b != c) ++count;
  }
  return count;
}

/// The link graph (N(v), E_v): vertices are the neighbors of v, edges are
/// the pairs uw that close a rainbow triangle with v. |E_v| = rt(v).
struct LinkGraph {
  std::vector<Vertex> vertices;                    // original vertex ids, sorted
  std::vector<std::pair<Vertex, Vertex>> edges;    // original vertex ids, u < w
};

inline LinkGraph link_graph(const EdgeColoredGraph& g, Vertex v) {
  LinkGraph lg;
  lg.vertices = g.neighbors(v);
  for (size_t i = 0; i < lg.vertices.size(); ++i)
    for (size_t j = i + 1; j < lg.vertices.size(); ++j) {
      Vertex u = lg.vertices[i], w = lg.vertices[j];
      Color a = g.cell(v, u), b = g.cell(v, w), c = g.cell(u, w);
      if (c != 0 && a != b && a != c && b != c) lg.edges.emplace_back(u, w);
    }
  return lg;
}

}  // namespace rainbow
