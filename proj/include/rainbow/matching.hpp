#pragma once

#include <queue>
#include <vector>

namespace rainbow {

/// Maximum cardinality matching in a general graph (blossom algorithm,
/// O(V^3)). Input is an adjacency structure over 0..n-1; output is the mate
/// array with -1 for exposed vertices.
///
/// This is the workhorse behind friendship-number computations: an RF_s
/// witness at v is exactly a matching of size s in the link graph of v.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(int n) : n_(n), adj_(n) {}

  void add_edge(int u, int v) {
    if (u == v) return;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }

  /// Runs the augmenting search from every exposed vertex.
  std::vector<int> solve() {
    mate_.assign(n_, -1);
    p_.assign(n_, 0);
    base_.assign(n_, 0);
    // Greedy seed keeps the number of augmenting phases low.
    for (int v = 0; v < n_; ++v)
      if (mate_[v] == -1)
        for (int u : adj_[v])
          if (mate_[u] == -1) {
            mate_[v] = u;
            mate_[u] = v;
            break;
          }
    for (int v = 0; v < n_; ++v)
      if (mate_[v] == -1) augment_from(v);
    return mate_;
  }

  static int matching_size(const std::vector<int>& mate) {
    int cnt = 0;
    for (size_t v = 0; v < mate.size(); ++v)
      if (mate[v] > static_cast<int>(v)) ++cnt;
    return cnt;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> used(n_, 0);
    for (;;) {
      a = base_[a];
      used[a] = 1;
      if (mate_[a] == -1) break;
      a = p_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (used[b]) return b;
      b = p_[mate_[b]];
    }
  }

  void mark_path(std::vector<char>& blossom, int v, int b, int child) {
    for (; base_[v] != b; v = p_[mate_[v]]) {
      blossom[base_[v]] = 1;
      blossom[base_[mate_[v]]] = 1;
      p_[v] = child;
      child = mate_[v];
    }
  }

  int find_path(int root) {
    std::vector<char> used(n_, 0);
    p_.assign(n_, -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && p_[mate_[to]] != -1)) {
          // Odd cycle: contract the blossom around the common base.
          int curbase = lca(v, to);
          std::vector<char> blossom(n_, 0);
          mark_path(blossom, v, curbase, to);
          mark_path(blossom, to, curbase, v);
          for (int i = 0; i < n_; ++i)
            if (blossom[base_[i]]) {
              base_[i] = curbase;
              if (!used[i]) {
                used[i] = 1;
                q.push(i);
              }
            }
        } else if (p_[to] == -1) {
          p_[to] = v;
          if (mate_[to] == -1) return to;
          used[mate_[to]] = 1;
          q.push(mate_[to]);
        }
      }
    }
    return -1;
  }

  void augment_from(int root) {
    int v = find_path(root);
    if (v == -1) return;
    while (v != -1) {
      int pv = p_[v], ppv = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = ppv;
    }
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> mate_, p_, base_;
};

/// Convenience wrapper: maximum matching size plus one witness matching.
struct MatchingResult {
  int size = 0;
  std::vector<std::pair<int, int>> pairs;
};

inline MatchingResult max_matching(int n, const std::vector<std::pair<int, int>>& edges) {
  BlossomMatcher bm(n);
  for (auto [u, v] : edges) bm.add_edge(u, v);
  std::vector<int> mate = bm.solve();
  MatchingResult res;
  for (int v = 0; v < n; ++v)
    if (mate[v] > v) {
      res.pairs.emplace_back(v, mate[v]);
      ++res.size;
    }
  return res;
}

}  // namespace rainbow
