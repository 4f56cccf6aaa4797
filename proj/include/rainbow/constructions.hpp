#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/rational.hpp"

namespace rainbow {

// The four extremal colorings G1(n,k)..G4(n,k) of K_n. Each one colors a
// designated "rainbow part" with fresh pairwise-distinct colors; G1-G3 give
// all remaining edges one extra shared color, while G4 spends one fresh
// color per vertex of Y.
enum class Family { G1, G2, G3, G4 };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::G1: return "G1";
    case Family::G2: return "G2";
    case Family::G3: return "G3";
    case Family::G4: return "G4";
  }
  return "?";
}

inline std::optional<Family> family_from_string(const std::string& s) {
  if (s == "G1" || s == "g1") return Family::G1;
  if (s == "G2" || s == "g2") return Family::G2;
  if (s == "G3" || s == "g3") return Family::G3;
  if (s == "G4" || s == "g4") return Family::G4;
  return std::nullopt;
}

/// Part sizes and index ranges of a construction. Vertices are laid out as
/// X = [0, x), Y1 = [x, x+y1), Y2 = [x+y1, n); for G3/G4 the whole of Y is
/// stored in y1 and y2 = 0.
struct ConstructionSpec {
  Family family{};
  int n = 0;
  int k = 0;
  int x = 0;
  int y1 = 0;
  int y2 = 0;
};

inline ConstructionSpec construction_layout(Family family, int n, int k) {
  ConstructionSpec s{family, n, k, 0, 0, 0};
  switch (family) {
    case Family::G1:
      require(k >= 2, Errc::invalid_params, "G1 requires k >= 2");
      require(n >= 3 * k, Errc::invalid_params, "G1 requires n >= 3k");
      s.x = k - 2;
      s.y1 = (n - k + 2) / 2;
      s.y2 = (n - k + 2) - s.y1;  // ceil
      break;
    case Family::G2:
      require(k >= 2, Errc::invalid_params, "G2 requires k >= 2");
      require(n >= 3 * k, Errc::invalid_params, "G2 requires n >= 3k");
      require(n >= 4 * k - 6, Errc::invalid_params, "G2 requires n >= 4k-6 (|Y2| >= 0)");
      s.x = 2 * k - 3;
      s.y1 = n / 2;
      s.y2 = (n + 1) / 2 - (2 * k - 3);
      break;
    case Family::G3:
      require(k >= 2, Errc::invalid_params, "G3 requires k >= 2");
      require(n >= 3 * k, Errc::invalid_params, "G3 requires n >= 3k");
      s.x = 2 * k - 3;
      s.y1 = n - 2 * k + 3;
      break;
    case Family::G4:
      require(k >= 1, Errc::invalid_params, "G4 requires k >= 1");
      require(n >= 3 * k - 1, Errc::invalid_params, "G4 requires n >= 3k-1");
      s.x = 3 * k - 1;
      s.y1 = n - 3 * k + 1;
      break;
  }
  return s;
}

inline bool construction_valid(Family family, int n, int k) noexcept {
  switch (family) {
    case Family::G1: return k >= 2 && n >= 3 * k;
    case Family::G2: return k >= 2 && n >= 3 * k && n >= 4 * k - 6;
    case Family::G3: return k >= 2 && n >= 3 * k;
    case Family::G4: return k >= 1 && n >= 3 * k - 1;
  }
  return false;
}

namespace detail {

inline long long binom2(long long a) { return a < 2 ? 0 : a * (a - 1) / 2; }

}  // namespace detail

/// Exact closed form for the number of colors of the given construction.
inline long long color_count_formula(Family family, int n, int k) {
  construction_layout(family, n, k);  // parameter validation
  long long N = n, K = k;
  switch (family) {
    case Family::G1: {
      long long m = N - K + 2;
      return detail::binom2(K - 2) + (K - 2) * m + m * m / 4 + 1;
    }
    case Family::G2:
      return detail::binom2(2 * K - 3) + N * N / 4 + 1;
    case Family::G3:
      return detail::binom2(2 * K - 3) + (N - 2 * K + 3) * (2 * K - 3) + 1;
    case Family::G4:
      return detail::binom2(3 * K - 1) + N - 3 * K + 1;
  }
  return 0;
}

/// Generates the construction as a complete edge-colored graph. Fresh colors
/// are assigned in lexicographic order over the rainbow part, so the output
/// is deterministic.
inline EdgeColoredGraph build_construction(Family family, int n, int k) {
  ConstructionSpec s = construction_layout(family, n, k);
  const int xe = s.x;            // end of X
  const int y1e = s.x + s.y1;    // end of Y1
  std::vector<Edge> es;
  es.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  Color next = 1;

  auto in_x = [&](Vertex v) { return v < xe; };
  auto in_y1 = [&](Vertex v) { return v >= xe && v < y1e; };

  if (family == Family::G4) {
    // Rainbow clique on X; y_j spends one fresh color on all edges to
    // X u {y_1..y_{j-1}}.
    for (Vertex u = 0; u < xe; ++u)
      for (Vertex v = u + 1; v < xe; ++v) es.push_back({u, v, next++});
    for (Vertex j = xe; j < n; ++j) {
      Color cj = next++;
      for (Vertex u = 0; u < j; ++u) es.push_back({u, j, cj});
    }
    return EdgeColoredGraph(n, es);
  }

  // G1-G3: rainbow part gets distinct colors, the rest one shared color.
  auto rainbow_pair = [&](Vertex u, Vertex v) {
    switch (family) {
      case Family::G1:
        // K_X join K_{Y1,Y2}: inside X, X-Y, and Y1-Y2.
        if (in_x(u) || in_x(v)) return true;
        return in_y1(u) != in_y1(v);
      case Family::G2:
        // Y1 joined to (K_X u Y2): inside X, X-Y1, and Y1-Y2.
        if (in_x(u) && in_x(v)) return true;
        return (in_y1(u) && !in_y1(v)) || (in_y1(v) && !in_y1(u));
      case Family::G3:
        // Y joined to K_X: inside X and X-Y.
        return in_x(u) || in_x(v);
      default: return false;
    }
  };

  std::vector<std::pair<Vertex, Vertex>> shared;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rainbow_pair(u, v))
        es.push_back({u, v, next++});
      else
        shared.emplace_back(u, v);
  Color extra = next;
  for (auto [u, v] : shared) es.push_back({u, v, extra});
  return EdgeColoredGraph(n, es);
}

constexpr std::array<Family, 4> kAllFamilies = {Family::G1, Family::G2, Family::G3,
                                                Family::G4};

struct BestConstruction {
  Family family{};
  long long value = 0;
};

/// Family attaining max c(G_i(n,k)) over the valid families. Ties break in
/// the order G4 < G3 < G2 < G1 (the top-to-bottom reading of the transition
/// table).
inline BestConstruction best_construction(int n, int k) {
  require(k >= 2, Errc::invalid_params, "best_construction requires k >= 2");
  require(n >= 3 * k, Errc::invalid_params, "best_construction requires n >= 3k");
  constexpr std::array<Family, 4> order = {Family::G4, Family::G3, Family::G2,
                                           Family::G1};
  std::optional<BestConstruction> best;
  for (Family f : order) {
    if (!construction_valid(f, n, k)) continue;
    long long v = color_count_formula(f, n, k);
    if (!best || v > best->value) best = BestConstruction{f, v};
  }
  return *best;  // G4 and G1 are always valid here
}

/// max{ C(3k-1,2)+n-3k+1, floor((n-k+2)^2/4)+(k-2)(n-k+2)+C(k-2,2)+1 } --
/// the two branches are exactly c(G4) and c(G1).
inline long long conjecture1_value(int n, int k) {
  require(k >= 2, Errc::invalid_params, "conjecture1_value requires k >= 2");
  require(n >= 3 * k, Errc::invalid_params, "conjecture1_value requires n >= 3k");
  return std::max(color_count_formula(Family::G4, n, k),
                  color_count_formula(Family::G1, n, k));
}

struct CounterexampleRow {
  int n = 0;
  int k = 0;
  std::array<std::optional<long long>, 4> family_values{};  // indexed G1..G4
  long long conjecture1 = 0;
  Family best_family{};
  long long best_value = 0;
  bool violated = false;
};

inline CounterexampleRow counterexample_row(int n, int k) {
  CounterexampleRow row;
  row.n = n;
  row.k = k;
  for (size_t i = 0; i < kAllFamilies.size(); ++i)
    if (construction_valid(kAllFamilies[i], n, k))
      row.family_values[i] = color_count_formula(kAllFamilies[i], n, k);
  row.conjecture1 = conjecture1_value(n, k);
  BestConstruction b = best_construction(n, k);
  row.best_family = b.family;
  row.best_value = b.value;
  row.violated = b.value > row.conjecture1;
  return row;
}

/// One row per n in [n_min, n_max]; violated rows witness that the
/// conjectured formula undercounts the best construction.
inline std::vector<CounterexampleRow> counterexample_report(int k, int n_min, int n_max) {
  require(k >= 2, Errc::invalid_params, "counterexample_report requires k >= 2");
  require(n_min >= 3 * k, Errc::invalid_params, "counterexample_report requires n >= 3k");
  require(n_max >= n_min, Errc::invalid_params, "empty n range");
  std::vector<CounterexampleRow> rows;
  rows.reserve(static_cast<size_t>(n_max - n_min + 1));
  for (int n = n_min; n <= n_max; ++n) rows.push_back(counterexample_row(n, k));
  return rows;
}

struct TransitionRow {
  Family family{};
  Rational n_low;
  std::optional<Rational> n_high;  // empty for the final unbounded range
};

/// The four claimed transition ranges with exact rational boundaries:
/// G4 on [3k, (13k^2-25k+8)/(4k-8)], G3 up to 4k-6, G2 up to
/// (9k^2-6k)/(2k-4), G1 beyond. Both quadratic thresholds are stored with
/// positive denominators. Note the G2->G1 threshold is the claimed value;
/// exact arithmetic puts the true crossing of c(G1) and c(G2) at (9k-12)/2
/// (see corrected_g2_g1_crossing).
inline std::vector<TransitionRow> transition_table(int k) {
  require(k >= 3, Errc::invalid_params,
          "transition_table requires k >= 3 (boundaries degenerate at k = 2)");
  long long K = k;
  Rational b1(13 * K * K - 25 * K + 8, 4 * K - 8);
  Rational b2(4 * K - 6);
  Rational b3(9 * K * K - 6 * K, 2 * K - 4);
  return {
      {Family::G4, Rational(3 * K), b1},
      {Family::G3, b1, b2},
      {Family::G2, b2, b3},
      {Family::G1, b3, std::nullopt},
  };
}

/// Where c(G1) actually overtakes c(G2): c(G1)-c(G2) = (k-2)(2n-9k+12)/4 up
/// to floor terms, so the exact crossing sits at n = (9k-12)/2.
inline Rational corrected_g2_g1_crossing(int k) {
  require(k >= 3, Errc::invalid_params, "crossing defined for k >= 3");
  return Rational(9LL * k - 12, 2);
}

/// floor((n-k+1)^2/4)+(k-2)(n-k+2)+C(k-2,2)+1, valid for n >= 15k+27.
/// Differs from c(G1) (which uses n-k+2 inside the floor); both are exposed
/// so the discrepancy can be inspected rather than hidden.
inline long long lu_luo_ma_value(int n, int k) {
  require(k >= 2, Errc::invalid_params, "lu_luo_ma_value requires k >= 2");
  require(n >= 15 * k + 27, Errc::invalid_params, "lu_luo_ma_value requires n >= 15k+27");
  long long N = n, K = k;
  long long m = N - K + 1;
  return m * m / 4 + (K - 2) * (N - K + 2) + detail::binom2(K - 2) + 1;
}

struct CurveRow {
  int n = 0;
  std::array<std::optional<long long>, 4> values{};  // indexed G1..G4
};

/// Per-n color counts of all four families, for plotting the crossing
/// pattern; invalid families yield empty cells.
inline std::vector<CurveRow> figure5_curves(int k, int n_max) {
  require(k >= 3, Errc::invalid_params, "figure5_curves requires k >= 3");
  require(n_max >= 3 * k, Errc::invalid_params, "figure5_curves requires n_max >= 3k");
  std::vector<CurveRow> rows;
  for (int n = 3 * k; n <= n_max; ++n) {
    CurveRow row;
    row.n = n;
    for (size_t i = 0; i < kAllFamilies.size(); ++i)
      if (construction_valid(kAllFamilies[i], n, k))
        row.values[i] = color_count_formula(kAllFamilies[i], n, k);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace rainbow
