#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <climits>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/triangles.hpp"

namespace rainbow {

/// EACH_RAINBOW packs triangles that are individually rainbow (colors may
/// repeat across triangles); GLOBALLY_RAINBOW additionally requires all 3k
/// edge colors pairwise distinct.
enum class PackingMode { each_rainbow, globally_rainbow };

inline const char* packing_mode_name(PackingMode m) {
  return m == PackingMode::each_rainbow ? "each" : "global";
}

inline std::optional<PackingMode> packing_mode_from_string(const std::string& s) {
  if (s == "each") return PackingMode::each_rainbow;
  if (s == "global") return PackingMode::globally_rainbow;
  return std::nullopt;
}

enum class SearchStatus { found, none, budget_exceeded };

inline const char* search_status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "FOUND";
    case SearchStatus::none: return "NONE";
    case SearchStatus::budget_exceeded: return "BUDGET_EXCEEDED";
  }
  return "?";
}

struct TrianglePacking {
  PackingMode mode = PackingMode::each_rainbow;
  std::vector<std::array<Vertex, 3>> triples;
  std::vector<std::array<Color, 3>> colors;  // per triple: (uv, uw, vw)
};

struct SearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<TrianglePacking> witness;
  long long nodes_explored = 0;
};

struct SearchOptions {
  long long budget = 1'000'000'000;
  int workers = 1;
  bool greedy_bound = true;
};

/// Independent recheck of a claimed packing: disjointness, per-triple
/// rainbowness, and (in global mode) freshness of all 3k colors.
inline bool validate_packing(const EdgeColoredGraph& g, const TrianglePacking& p) {
  std::vector<char> used_v(g.order(), 0);
  std::vector<Color> seen_colors;
  for (size_t i = 0; i < p.triples.size(); ++i) {
    auto [a, b, c] = p.triples[i];
    if (a < 0 || b < 0 || c < 0 || a >= g.order() || b >= g.order() || c >= g.order())
      return false;
    if (a == b || a == c || b == c) return false;
    if (used_v[a] || used_v[b] || used_v[c]) return false;
    used_v[a] = used_v[b] = used_v[c] = 1;
    if (!g.is_rainbow_triple(a, b, c)) return false;
    std::array<Color, 3> cs = {g.color(a, b), g.color(a, c), g.color(b, c)};
    if (i < p.colors.size() && cs != p.colors[i]) return false;
    for (Color col : cs) seen_colors.push_back(col);
  }
  if (p.mode == PackingMode::globally_rainbow) {
    std::vector<Color> sorted = seen_colors;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  }
  return true;
}

namespace detail {

struct PackingCandidate {
  std::array<Vertex, 3> vs;
  std::array<Color, 3> colors;
  std::array<int, 3> dense;  // dense color indices for the global-mode set
};

struct PackingProblem {
  const EdgeColoredGraph* g = nullptr;
  PackingMode mode{};
  int k = 0;
  int n = 0;
  int num_colors = 0;
  std::vector<PackingCandidate> cand;
  std::vector<std::vector<int>> by_min;

  void init(const EdgeColoredGraph& graph, PackingMode m, int kk) {
    g = &graph;
    mode = m;
    k = kk;
    n = graph.order();
    std::unordered_map<Color, int> dense_map;
    for (const Edge& e : graph.edges_sorted())
      dense_map.emplace(e.color, static_cast<int>(dense_map.size()));
    num_colors = static_cast<int>(dense_map.size());
    by_min.assign(n, {});
    for (const RainbowTriple& t : enumerate_rainbow_triangles(graph)) {
      PackingCandidate c{t.vertices, t.colors, {}};
      for (int i = 0; i < 3; ++i) c.dense[i] = dense_map.at(t.colors[i]);
      by_min[t.vertices[0]].push_back(static_cast<int>(cand.size()));
      cand.push_back(c);
    }
  }
};

/// Search state over a PackingProblem. Branches at the lowest unused vertex:
/// either one of its candidate triples or "this vertex stays unpacked".
/// Exhausting this tree is a complete proof of NONE.
struct PackingState {
  std::vector<uint8_t> used;
  std::vector<uint8_t> used_color;
  std::vector<int> chosen;  // candidate indices
  int free_count = 0;
  int v_from = 0;

  static PackingState root(const PackingProblem& p) {
    PackingState s;
    s.used.assign(p.n, 0);
    s.used_color.assign(p.num_colors, 0);
    s.free_count = p.n;
    s.v_from = 0;
    return s;
  }
};

class PackingSearch {
 public:
  PackingSearch(const PackingProblem& p, const SearchOptions& opt,
                std::atomic<long long>* shared_nodes, std::atomic<int>* winner_idx,
                int my_idx)
      : p_(p), opt_(opt), shared_nodes_(shared_nodes), winner_(winner_idx),
        my_idx_(my_idx) {}

  bool exceeded = false;
  bool aborted = false;
  long long nodes = 0;
  std::vector<int> witness;

  bool run(PackingState& s) { return dfs(s); }

 private:
  bool count_node() {
    ++nodes;
    if (shared_nodes_) {
      long long total = shared_nodes_->fetch_add(1, std::memory_order_relaxed) + 1;
      if (total > opt_.budget) {
        exceeded = true;
        return false;
      }
    } else if (nodes > opt_.budget) {
      exceeded = true;
      return false;
    }
    if (winner_ && winner_->load(std::memory_order_relaxed) < my_idx_) {
      aborted = true;  // a lower-indexed subproblem already holds a witness
      return false;
    }
    return true;
  }

  // Any disjoint family among the remaining candidates has size at most
  // 3 * |maximal disjoint set|, since each member must touch the set.
  bool bound_prunes(const PackingState& s, int v) const {
    int need = p_.k - static_cast<int>(s.chosen.size());
    std::vector<uint8_t> tmp(s.used);
    int g = 0;
    for (int w = v; w < p_.n && 3 * g < need; ++w) {
      if (tmp[w]) continue;
      for (int idx : p_.by_min[w]) {
        const auto& c = p_.cand[idx];
        if (tmp[c.vs[1]] || tmp[c.vs[2]]) continue;
        tmp[c.vs[0]] = tmp[c.vs[1]] = tmp[c.vs[2]] = 1;
        ++g;
        break;
      }
    }
    return 3 * g < need;
  }

  bool dfs(PackingState& s) {
    if (!count_node()) return false;
    if (static_cast<int>(s.chosen.size()) == p_.k) {
      witness = s.chosen;
      return true;
    }
    int v = s.v_from;
    while (v < p_.n && s.used[v]) ++v;
    if (v >= p_.n) return false;
    if (s.free_count < 3 * (p_.k - static_cast<int>(s.chosen.size()))) return false;
    if (opt_.greedy_bound && bound_prunes(s, v)) return false;

    int saved_from = s.v_from;
    for (int idx : p_.by_min[v]) {
      const auto& c = p_.cand[idx];
      if (s.used[c.vs[1]] || s.used[c.vs[2]]) continue;
      if (p_.mode == PackingMode::globally_rainbow &&
          (s.used_color[c.dense[0]] || s.used_color[c.dense[1]] || s.used_color[c.dense[2]]))
        continue;
      apply(s, idx);
      s.v_from = v + 1;
      if (dfs(s)) return true;
      s.v_from = saved_from;
      undo(s, idx);
      if (exceeded || aborted) return false;
    }
    // skip branch: v joins no triangle
    s.used[v] = 1;
    --s.free_count;
    s.v_from = v + 1;
    bool r = dfs(s);
    s.v_from = saved_from;
    s.used[v] = 0;
    ++s.free_count;
    return r;
  }

  void apply(PackingState& s, int idx) {
    const auto& c = p_.cand[idx];
    for (Vertex w : c.vs) s.used[w] = 1;
    s.free_count -= 3;
    if (p_.mode == PackingMode::globally_rainbow)
      for (int d : c.dense) s.used_color[d] = 1;
    s.chosen.push_back(idx);
  }

  void undo(PackingState& s, int idx) {
    const auto& c = p_.cand[idx];
    for (Vertex w : c.vs) s.used[w] = 0;
    s.free_count += 3;
    if (p_.mode == PackingMode::globally_rainbow)
      for (int d : c.dense) s.used_color[d] = 0;
    s.chosen.pop_back();
  }

  const PackingProblem& p_;
  const SearchOptions& opt_;
  std::atomic<long long>* shared_nodes_;
  std::atomic<int>* winner_;
  int my_idx_;
};

inline TrianglePacking packing_from_indices(const PackingProblem& p,
                                            const std::vector<int>& idxs) {
  TrianglePacking out;
  out.mode = p.mode;
  for (int idx : idxs) {
    out.triples.push_back(p.cand[idx].vs);
    out.colors.push_back(p.cand[idx].colors);
  }
  return out;
}

// Expands the root into independent subtrees (the first branching levels),
// preserving branch order so multi-worker results stay reproducible.
inline void expand_subproblems(const PackingProblem& p, std::vector<PackingState>& out,
                               long long& expansion_nodes, int target) {
  out.push_back(PackingState::root(p));
  bool grown = true;
  int depth = 0;
  while (static_cast<int>(out.size()) < target && grown && depth < 3) {
    ++depth;
    grown = false;
    std::vector<PackingState> next;
    for (PackingState& s : out) {
      ++expansion_nodes;
      if (static_cast<int>(s.chosen.size()) == p.k) {
        next.push_back(std::move(s));  // already a solution; keep as-is
        continue;
      }
      int v = s.v_from;
      while (v < p.n && s.used[v]) ++v;
      if (v >= p.n || s.free_count < 3 * (p.k - static_cast<int>(s.chosen.size())))
        continue;  // dead branch
      for (int idx : p.by_min[v]) {
        const auto& c = p.cand[idx];
        if (s.used[c.vs[1]] || s.used[c.vs[2]]) continue;
        if (p.mode == PackingMode::globally_rainbow &&
            (s.used_color[c.dense[0]] || s.used_color[c.dense[1]] ||
             s.used_color[c.dense[2]]))
          continue;
        PackingState t = s;
        for (Vertex w : c.vs) t.used[w] = 1;
        t.free_count -= 3;
        if (p.mode == PackingMode::globally_rainbow)
          for (int d : c.dense) t.used_color[d] = 1;
        t.chosen.push_back(idx);
        t.v_from = v + 1;
        next.push_back(std::move(t));
        grown = true;
      }
      PackingState t = std::move(s);
      t.used[v] = 1;
      --t.free_count;
      t.v_from = v + 1;
      next.push_back(std::move(t));
    }
    out = std::move(next);
  }
}

}  // namespace detail

/// Exact decision search for k vertex-disjoint rainbow triangles.
/// FOUND returns a validated witness; NONE is certified by exhausting the
/// branch tree; BUDGET_EXCEEDED reports the node limit was hit first.
inline SearchResult find_packing(const EdgeColoredGraph& g, int k, PackingMode mode,
                                 const SearchOptions& opt = {}) {
  require(k >= 1, Errc::invalid_params, "find_packing requires k >= 1");
  detail::PackingProblem p;
  p.init(g, mode, k);

  SearchResult res;
  if (opt.workers <= 1) {
    detail::PackingState s = detail::PackingState::root(p);
    detail::PackingSearch search(p, opt, nullptr, nullptr, 0);
    bool found = search.run(s);
    res.nodes_explored = search.nodes;
    if (found) {
      res.status = SearchStatus::found;
      res.witness = detail::packing_from_indices(p, search.witness);
    } else {
      res.status = search.exceeded ? SearchStatus::budget_exceeded : SearchStatus::none;
    }
    return res;
  }

  std::vector<detail::PackingState> subs;
  long long expansion_nodes = 0;
  detail::expand_subproblems(p, subs, expansion_nodes, 4 * opt.workers);

  std::atomic<long long> shared_nodes{0};
  std::atomic<int> winner{INT_MAX};
  std::atomic<size_t> next_sub{0};
  std::vector<std::vector<int>> witnesses(subs.size());
  std::vector<char> found_flags(subs.size(), 0);
  std::atomic<bool> any_exceeded{false};

  auto work = [&]() {
    for (;;) {
      size_t i = next_sub.fetch_add(1);
      if (i >= subs.size()) return;
      if (static_cast<int>(subs[i].chosen.size()) == p.k) {
        // solved during expansion
        witnesses[i] = subs[i].chosen;
        found_flags[i] = 1;
        int expect = winner.load();
        while (static_cast<int>(i) < expect &&
               !winner.compare_exchange_weak(expect, static_cast<int>(i))) {
        }
        continue;
      }
      detail::PackingSearch search(p, opt, &shared_nodes, &winner, static_cast<int>(i));
      if (search.run(subs[i])) {
        witnesses[i] = search.witness;
        found_flags[i] = 1;
        int expect = winner.load();
        while (static_cast<int>(i) < expect &&
               !winner.compare_exchange_weak(expect, static_cast<int>(i))) {
        }
      }
      if (search.exceeded) any_exceeded = true;
    }
  };

  std::vector<std::thread> threads;
  for (int t = 0; t < opt.workers; ++t) threads.emplace_back(work);
  for (auto& t : threads) t.join();

  res.nodes_explored = expansion_nodes + shared_nodes.load();
  for (size_t i = 0; i < subs.size(); ++i)
    if (found_flags[i]) {
      res.status = SearchStatus::found;
      res.witness = detail::packing_from_indices(p, witnesses[i]);
      return res;
    }
  res.status = any_exceeded ? SearchStatus::budget_exceeded : SearchStatus::none;
  return res;
}

struct MaxPackingResult {
  int k_max = 0;
  std::optional<TrianglePacking> witness;
  bool complete = true;  // false when the ascent stopped on a budget, not a NONE
  long long nodes_explored = 0;
};

/// Largest k with a FOUND packing; each level is decided exactly.
inline MaxPackingResult max_packing(const EdgeColoredGraph& g, PackingMode mode,
                                    const SearchOptions& opt = {}) {
  MaxPackingResult out;
  for (int k = 1; 3 * k <= g.order(); ++k) {
    SearchResult r = find_packing(g, k, mode, opt);
    out.nodes_explored += r.nodes_explored;
    if (r.status == SearchStatus::found) {
      out.k_max = k;
      out.witness = r.witness;
    } else {
      out.complete = (r.status == SearchStatus::none);
      break;
    }
  }
  return out;
}

/// Checks the color-degree packing theorem on one instance: with
/// delta^c(G) >= (n+k)/2 and n >= 42.5k+48, k disjoint rainbow triangles
/// must exist, so a certified NONE under both hypotheses is flagged.
struct DiracReport {
  int n = 0;
  int k = 0;
  int min_color_degree = 0;
  bool delta_hypothesis = false;  // 2*delta^c >= n+k
  bool n_hypothesis = false;      // 2n >= 85k+96
  SearchResult search;
  bool theorem_violation = false;
};

inline DiracReport dirac_rainbow_check(const EdgeColoredGraph& g, int k,
                                       const SearchOptions& opt = {}) {
  DiracReport rep;
  rep.n = g.order();
  rep.k = k;
  rep.min_color_degree = g.min_color_degree();
  rep.delta_hypothesis = 2LL * rep.min_color_degree >= rep.n + k;
  rep.n_hypothesis = 2LL * rep.n >= 85LL * k + 96;
  rep.search = find_packing(g, k, PackingMode::each_rainbow, opt);
  rep.theorem_violation = rep.delta_hypothesis && rep.n_hypothesis &&
                          rep.search.status == SearchStatus::none;
  return rep;
}

}  // namespace rainbow
