#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace edf {

/// Search budgets are hard limits; exceeding one is an error, never a
/// silent approximation.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Undirected labeled graph on 1..32 vertices, one adjacency bitmask row per
/// vertex. Adjacency is symmetric and irreflexive. Treated as a value: built
/// once by a constructor function, then shared freely across threads.
class SmallGraph {
 public:
  static constexpr int kMaxVertices = 32;

  explicit SmallGraph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices)
      throw std::invalid_argument("SmallGraph: vertex count out of 1..32");
    adj_.fill(0);
  }

  int vertex_count() const { return n_; }

  bool has_edge(int u, int v) const {
    check(u);
    check(v);
    return u != v && ((adj_[u] >> v) & 1u) != 0;
  }

  void add_edge(int u, int v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("SmallGraph: loops not allowed");
    adj_[u] |= 1u << v;
    adj_[v] |= 1u << u;
  }

  /// Neighborhood of v as a bitmask over vertex indices.
  uint32_t neighbors(int v) const {
    check(v);
    return adj_[v];
  }

  int degree(int v) const { return std::popcount(neighbors(v)); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
  }

  bool operator==(const SmallGraph&) const = default;

 private:
  void check(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("SmallGraph: vertex index");
  }

  int n_;
  std::array<uint32_t, kMaxVertices> adj_;
};

inline SmallGraph complement(const SmallGraph& g) {
  SmallGraph h(g.vertex_count());
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (!g.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

/// Named constructors for the graphs the library works with. Labelings are
/// fixed 0-based and deterministic; downstream use is label-invariant.
///
///   F1   7 vertices: hub 0 joined to a triangle {1,2,3} with spikes 4,5,6
///        attached to 1,2,3 respectively.
///   F2   F1 plus the triangle {4,5,6} (hub joined to a triangular prism).
///   F1p  F1 minus the hub (triangle with three pendant vertices).
///   F2p  F2 minus the hub (the triangular prism).
///   W5   wheel(5).
///   cycle(t), path(n), complete(n), empty(n)  the usual graphs.
///   crown(n)  complete bipartite K_{n,n} minus a perfect matching; vertex i
///             on the first side matches vertex n+i.
///   wheel(t)  cycle 1..t plus dominating hub 0.
inline SmallGraph make_named(std::string_view name, int param = 0) {
  auto need = [&](bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(std::string("make_named: ") + msg);
  };
  if (name == "F1" || name == "F2") {
    SmallGraph g(7);
    for (int v = 1; v <= 6; ++v) g.add_edge(0, v);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(1, 3);
    g.add_edge(1, 4);
    g.add_edge(2, 5);
    g.add_edge(3, 6);
    if (name == "F2") {
      g.add_edge(4, 5);
      g.add_edge(5, 6);
      g.add_edge(4, 6);
    }
    return g;
  }
  if (name == "F1p" || name == "F2p") {
    SmallGraph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 4);
    g.add_edge(2, 5);
    if (name == "F2p") {
      g.add_edge(3, 4);
      g.add_edge(4, 5);
      g.add_edge(3, 5);
    }
    return g;
  }
  if (name == "W5") return make_named("wheel", 5);
  if (name == "wheel") {
    need(param >= 3, "wheel rim length must be >= 3");
    need(param + 1 <= SmallGraph::kMaxVertices, "result exceeds 32 vertices");
    SmallGraph g(param + 1);
    for (int i = 1; i <= param; ++i) {
      g.add_edge(0, i);
      g.add_edge(i, i % param + 1);
    }
    return g;
  }
  if (name == "cycle") {
    need(param >= 3, "cycle length must be >= 3");
    need(param <= SmallGraph::kMaxVertices, "result exceeds 32 vertices");
    SmallGraph g(param);
    for (int i = 0; i < param; ++i) g.add_edge(i, (i + 1) % param);
    return g;
  }
  if (name == "path") {
    need(param >= 1, "path needs >= 1 vertex");
    need(param <= SmallGraph::kMaxVertices, "result exceeds 32 vertices");
    SmallGraph g(param);
    for (int i = 0; i + 1 < param; ++i) g.add_edge(i, i + 1);
    return g;
  }
  if (name == "complete" || name == "empty") {
    need(param >= 1, "graph needs >= 1 vertex");
    need(param <= SmallGraph::kMaxVertices, "result exceeds 32 vertices");
    SmallGraph g(param);
    if (name == "complete")
      for (int u = 0; u < param; ++u)
        for (int v = u + 1; v < param; ++v) g.add_edge(u, v);
    return g;
  }
  if (name == "crown") {
    need(param >= 1, "crown needs >= 1 vertex per side");
    need(2 * param <= SmallGraph::kMaxVertices, "result exceeds 32 vertices");
    SmallGraph g(2 * param);
    for (int i = 0; i < param; ++i)
      for (int j = 0; j < param; ++j)
        if (i != j) g.add_edge(i, param + j);
    return g;
  }
  throw std::invalid_argument("make_named: unknown graph name: " + std::string(name));
}

/// CLI graph token: F1|F2|W5|F1p|F2p|C<t>|K<n>|E<n>|P<n>|crown<n>.
inline SmallGraph parse_graph_token(std::string_view token) {
  if (token == "F1" || token == "F2" || token == "W5" || token == "F1p" || token == "F2p")
    return make_named(token);
  auto tail_number = [&](size_t offset) -> int {
    if (offset >= token.size()) throw std::invalid_argument("graph token: missing size: " + std::string(token));
    int value = 0;
    for (size_t i = offset; i < token.size(); ++i) {
      char c = token[i];
      if (c < '0' || c > '9') throw std::invalid_argument("graph token: bad size: " + std::string(token));
      value = value * 10 + (c - '0');
      if (value > 1000) throw std::invalid_argument("graph token: size out of range: " + std::string(token));
    }
    return value;
  };
  if (token.substr(0, 5) == "crown") return make_named("crown", tail_number(5));
  if (!token.empty()) {
    switch (token[0]) {
      case 'C': return make_named("cycle", tail_number(1));
      case 'K': return make_named("complete", tail_number(1));
      case 'E': return make_named("empty", tail_number(1));
      case 'P': return make_named("path", tail_number(1));
      default: break;
    }
  }
  throw std::invalid_argument("graph token: unknown: " + std::string(token));
}

/// Graph text format: first line `n`, then `i j` edge pairs, 0-based,
/// whitespace-separated.
inline SmallGraph read_graph_text(std::istream& in) {
  int n = 0;
  if (!(in >> n)) throw std::invalid_argument("graph text: missing vertex count");
  SmallGraph g(n);
  int u = 0, v = 0;
  while (in >> u) {
    if (!(in >> v)) throw std::invalid_argument("graph text: dangling edge endpoint");
    if (u < 0 || u >= n || v < 0 || v >= n || u == v)
      throw std::invalid_argument("graph text: bad edge pair");
    g.add_edge(u, v);
  }
  if (!in.eof()) throw std::invalid_argument("graph text: trailing garbage");
  return g;
}

inline SmallGraph read_graph_text(const std::string& text) {
  std::istringstream in(text);
  return read_graph_text(in);
}

inline std::string write_graph_text(const SmallGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

namespace detail {

inline bool colorable_rec(const SmallGraph& g, const std::vector<int>& order, size_t depth,
                          int max_colors, int used, std::array<uint32_t, 16>& classes) {
  if (depth == order.size()) return true;
  int v = order[depth];
  // allowing at most one fresh color per level kills color-permutation symmetry
  int limit = std::min(max_colors - 1, used);
  for (int c = 0; c <= limit; ++c) {
    if (classes[c] & g.neighbors(v)) continue;
    classes[c] |= 1u << v;
    if (colorable_rec(g, order, depth + 1, max_colors, std::max(used, c + 1), classes))
      return true;
    classes[c] &= ~(1u << v);
  }
  return false;
}

}  // namespace detail

/// Minimum number of colors in a proper coloring, by exhaustive branching.
/// Budget: n <= 16.
inline int chromatic_number(const SmallGraph& g) {
  const int n = g.vertex_count();
  if (n > 16) throw BudgetError("chromatic_number: budget is 16 vertices");
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b; });
  for (int k = 1; k <= n; ++k) {
    std::array<uint32_t, 16> classes{};
    if (detail::colorable_rec(g, order, 0, k, 0, classes)) return k;
  }
  return n;
}

namespace detail {

// Edge list ordered so that each edge shares a vertex with an earlier one
// whenever the graph is connected; improves propagation in the orientation
// searches.
inline std::vector<std::pair<int, int>> connectivity_ordered_edges(const SmallGraph& g) {
  auto all = g.edges();
  std::vector<std::pair<int, int>> out;
  std::vector<bool> used(all.size(), false);
  uint32_t touched = 0;
  while (out.size() < all.size()) {
    int pick = -1;
    for (size_t e = 0; e < all.size(); ++e) {
      if (used[e]) continue;
      uint32_t ends = (1u << all[e].first) | (1u << all[e].second);
      if (touched & ends) {
        pick = static_cast<int>(e);
        break;
      }
      if (pick < 0) pick = static_cast<int>(e);
    }
    used[pick] = true;
    touched |= (1u << all[pick].first) | (1u << all[pick].second);
    out.push_back(all[pick]);
  }
  return out;
}

struct OrientationState {
  std::vector<std::pair<int, int>> edges;
  std::array<std::array<int16_t, 32>, 32> edge_id{};
  std::vector<int8_t> dir;  // 0 unset, +1 first->second, -1 second->first
  std::array<uint32_t, 32> out{};
  std::array<uint32_t, 32> in{};

  explicit OrientationState(const SmallGraph& g) : edges(connectivity_ordered_edges(g)) {
    for (auto& row : edge_id) row.fill(-1);
    for (size_t e = 0; e < edges.size(); ++e) {
      edge_id[edges[e].first][edges[e].second] = static_cast<int16_t>(e);
      edge_id[edges[e].second][edges[e].first] = static_cast<int16_t>(e);
    }
    dir.assign(edges.size(), 0);
  }

  std::pair<int, int> arc_of(int e, int8_t d) const {
    return d > 0 ? edges[e] : std::pair<int, int>{edges[e].second, edges[e].first};
  }

  void place(int e, int8_t d) {
    auto [a, b] = arc_of(e, d);
    dir[e] = d;
    out[a] |= 1u << b;
    in[b] |= 1u << a;
  }

  void unplace(int e) {
    auto [a, b] = arc_of(e, dir[e]);
    dir[e] = 0;
    out[a] &= ~(1u << b);
    in[b] &= ~(1u << a);
  }
};

// Assigns arc e:d and unit-propagates the transitive-closure constraints;
// on conflict returns false with all placements recorded on the trail.
inline bool propagate_transitive(const SmallGraph& g, OrientationState& st, int e0, int8_t d0,
                                 std::vector<int>& trail) {
  std::vector<std::pair<int, int8_t>> queue{{e0, d0}};
  while (!queue.empty()) {
    auto [e, d] = queue.back();
    queue.pop_back();
    if (st.dir[e] == d) continue;
    if (st.dir[e] != 0) return false;
    st.place(e, d);
    trail.push_back(e);
    auto [a, b] = st.arc_of(e, d);
    // c->a and a->b force c->b
    for (uint32_t m = st.in[a]; m; m &= m - 1) {
      int c = std::countr_zero(m);
      if (!g.has_edge(c, b)) return false;
      int f = st.edge_id[c][b];
      int8_t want = st.edges[f].first == c ? int8_t{1} : int8_t{-1};
      if (st.dir[f] == -want) return false;
      if (st.dir[f] == 0) queue.emplace_back(f, want);
    }
    // a->b and b->c force a->c
    for (uint32_t m = st.out[b]; m; m &= m - 1) {
      int c = std::countr_zero(m);
      if (!g.has_edge(a, c)) return false;
      int f = st.edge_id[a][c];
      int8_t want = st.edges[f].first == a ? int8_t{1} : int8_t{-1};
      if (st.dir[f] == -want) return false;
      if (st.dir[f] == 0) queue.emplace_back(f, want);
    }
  }
  return true;
}

inline bool orient_transitive_rec(const SmallGraph& g, OrientationState& st, size_t next) {
  while (next < st.edges.size() && st.dir[next] != 0) ++next;
  if (next == st.edges.size()) return true;
  for (int8_t d : {int8_t{1}, int8_t{-1}}) {
    std::vector<int> trail;
    bool ok = propagate_transitive(g, st, static_cast<int>(next), d, trail);
    if (ok && orient_transitive_rec(g, st, next + 1)) return true;
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) st.unplace(*it);
  }
  return false;
}

}  // namespace detail

/// True iff some orientation of the edges is transitive (x->y and y->z imply
/// the edge x->z is present and so oriented). Budget: |E| <= 24.
inline bool is_comparability(const SmallGraph& g) {
  if (g.edge_count() > 24) throw BudgetError("is_comparability: budget is 24 edges");
  detail::OrientationState st(g);
  if (st.edges.empty()) return true;
  return detail::orient_transitive_rec(g, st, 0);
}

namespace detail {

inline bool reaches(const OrientationState& st, int from, int to) {
  uint32_t seen = st.out[from];
  for (;;) {
    if ((seen >> to) & 1u) return true;
    uint32_t grown = seen;
    for (uint32_t m = seen; m; m &= m - 1) grown |= st.out[std::countr_zero(m)];
    if (grown == seen) return false;
    seen = grown;
  }
}

// Semi-transitivity of a complete acyclic orientation. A violation is a
// directed path u .. a .. b .. w together with the arc u->w where the pair
// (a, b) is a non-edge of g; scanning non-adjacent reachable pairs against
// ancestor/descendant cones finds one iff it exists.
inline bool semi_transitive(const SmallGraph& g, const OrientationState& st) {
  const int n = g.vertex_count();
  std::array<uint32_t, 32> reach{};
  for (int v = n - 1; v >= 0; --v) {
    // vertices are not topologically sorted, so iterate to a fixpoint
    uint32_t seen = st.out[v];
    for (;;) {
      uint32_t grown = seen;
      for (uint32_t m = seen; m; m &= m - 1) grown |= st.out[std::countr_zero(m)];
      if (grown == seen) break;
      seen = grown;
    }
    reach[v] = seen;
  }
  std::array<uint32_t, 32> anc{};
  for (int u = 0; u < n; ++u)
    for (uint32_t m = reach[u]; m; m &= m - 1) anc[std::countr_zero(m)] |= 1u << u;

  for (int a = 0; a < n; ++a) {
    for (uint32_t m = reach[a] & ~g.neighbors(a) & ~(1u << a); m; m &= m - 1) {
      int b = std::countr_zero(m);
      uint32_t sources = anc[a] | (1u << a);
      uint32_t sinks = reach[b] | (1u << b);
      for (uint32_t s = sources; s; s &= s - 1)
        if (st.out[std::countr_zero(s)] & sinks) return false;
    }
  }
  return true;
}

inline bool orient_semi_transitive_rec(const SmallGraph& g, OrientationState& st, size_t next) {
  if (next == st.edges.size()) return semi_transitive(g, st);
  for (int8_t d : {int8_t{1}, int8_t{-1}}) {
    auto [a, b] = st.arc_of(static_cast<int>(next), d);
    if (reaches(st, b, a)) continue;  // directed cycle
    st.place(static_cast<int>(next), d);
    if (orient_semi_transitive_rec(g, st, next + 1)) return true;
    st.unplace(static_cast<int>(next));
  }
  return false;
}

}  // namespace detail

/// True iff some acyclic orientation is semi-transitive: along every directed
/// path v_0 -> ... -> v_k, either v_0 v_k is a non-edge or every v_i v_j with
/// i < j is an edge oriented forward. Budget: |E| <= 22.
inline bool is_word_representable(const SmallGraph& g) {
  if (g.edge_count() > 22) throw BudgetError("is_word_representable: budget is 22 edges");
  detail::OrientationState st(g);
  if (st.edges.empty()) return true;
  return detail::orient_semi_transitive_rec(g, st, 0);
}

}  // namespace edf
