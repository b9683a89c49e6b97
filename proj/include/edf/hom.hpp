#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "edf/crg.hpp"
#include "edf/small_graph.hpp"

namespace edf {

struct HomOptions {
  long long node_budget = 100'000'000;  // assignments explored before giving up
};

namespace detail {

struct HomTables {
  int k = 0;
  // ok[edge?][a][b]: vertices u,v of G with that adjacency may map to CRG
  // vertices a,b (a == b uses the vertex color rule).
  bool ok[2][Crg::kMaxVertices][Crg::kMaxVertices] = {};

  explicit HomTables(const Crg& K) : k(K.vertex_count()) {
    for (int a = 0; a < k; ++a) {
      ok[0][a][a] = K.vertex_color(a) == VColor::White;
      ok[1][a][a] = K.vertex_color(a) == VColor::Black;
      for (int b = 0; b < k; ++b) {
        if (a == b) continue;
        EColor c = K.edge_color(a, b);
        ok[0][a][b] = c == EColor::White || c == EColor::Gray;
        ok[1][a][b] = c == EColor::Black || c == EColor::Gray;
      }
    }
  }
};

inline bool hom_rec(const SmallGraph& g, const HomTables& t, const std::vector<int>& order,
                    size_t depth, int* image, long long& budget) {
  if (depth == order.size()) return true;
  const int u = order[depth];
  for (int a = 0; a < t.k; ++a) {
    if (--budget < 0) throw BudgetError("exists_hom: node budget exceeded");
    bool fits = true;
    for (size_t d = 0; d < depth; ++d) {
      const int w = order[d];
      if (!t.ok[g.has_edge(u, w) ? 1 : 0][a][image[w]]) {
        fits = false;
        break;
      }
    }
    if (!fits) continue;
    image[u] = a;
    if (hom_rec(g, t, order, depth + 1, image, budget)) return true;
  }
  return false;
}

}  // namespace detail

/// Colored homomorphism decision G -> K: a vertex map where edges land on
/// black/gray pairs or a shared black vertex and non-edges land on
/// white/gray pairs or a shared white vertex. Backtracking over vertices in
/// highest-degree-first order with pairwise compatibility tables.
inline bool exists_hom(const SmallGraph& g, const Crg& K, const HomOptions& opt = {}) {
  detail::HomTables tables(K);
  std::vector<int> order(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
  });
  int image[SmallGraph::kMaxVertices] = {};
  long long budget = opt.node_budget;
  return detail::hom_rec(g, tables, order, 0, image, budget);
}

/// Forbidden family of one hereditary property. The finite members are
/// listed explicitly; the comparability family adds the complements of
/// cycles C_t, t >= 5, truncated per admissibility query.
struct ForbiddenFamily {
  std::string name;
  std::vector<SmallGraph> finite_members;
  std::vector<std::string> finite_names;
  bool cycle_complements = false;

  static ForbiddenFamily word() {
    return {"word",
            {make_named("F1"), make_named("F2"), make_named("W5")},
            {"F1", "F2", "W5"},
            false};
  }

  /// k-uniform representability, k >= 2: F1, F2 and the crown on 2k+2
  /// vertices per side.
  static ForbiddenFamily kword(int k) {
    if (k < 2) throw std::invalid_argument("ForbiddenFamily::kword: k must be >= 2");
    int side = 2 * k + 2;
    return {"kword:" + std::to_string(k),
            {make_named("F1"), make_named("F2"), make_named("crown", side)},
            {"F1", "F2", "crown" + std::to_string(side)},
            false};
  }

  static ForbiddenFamily comp() {
    return {"comp", {make_named("F1p"), make_named("F2p")}, {"F1p", "F2p"}, true};
  }
};

/// Outcome of checking one CRG against a family. Admissibility of the
/// comparability family is decided up to the recorded truncation bound:
/// cycle complements are checked for 5 <= t <= min(2|V(K)|+2, 32).
struct AdmissibilityReport {
  bool admissible = true;
  std::vector<int> witnesses;  // indices into the checked member sequence
  std::vector<std::string> witness_names;
  int truncation_bound = 0;  // largest cycle length checked; 0 when none
};

inline AdmissibilityReport admissible(const Crg& K, const ForbiddenFamily& family,
                                      const HomOptions& opt = {}) {
  AdmissibilityReport report;
  int index = 0;
  for (size_t i = 0; i < family.finite_members.size(); ++i, ++index) {
    if (exists_hom(family.finite_members[i], K, opt)) {
      report.admissible = false;
      report.witnesses.push_back(index);
      report.witness_names.push_back(family.finite_names[i]);
    }
  }
  if (family.cycle_complements) {
    int bound = std::min(2 * K.vertex_count() + 2, SmallGraph::kMaxVertices);
    report.truncation_bound = bound;
    for (int t = 5; t <= bound; ++t, ++index) {
      if (exists_hom(complement(make_named("cycle", t)), K, opt)) {
        report.admissible = false;
        report.witnesses.push_back(index);
        report.witness_names.push_back("coC" + std::to_string(t));
      }
    }
  }
  return report;
}

}  // namespace edf
