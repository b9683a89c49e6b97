#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "edf/small_graph.hpp"

namespace edf {

enum class VColor : uint8_t { White = 0, Black = 1 };
enum class EColor : uint8_t { White = 0, Black = 1, Gray = 2 };

/// Colored regularity graph: a complete graph on 1..16 vertices with a
/// white/black vertex coloring and a white/black/gray edge coloring. Value
/// type; equality is exact field equality (constructors are canonical, no
/// isomorphism quotient).
class Crg {
 public:
  static constexpr int kMaxVertices = 16;

  Crg(std::vector<VColor> vcolor, std::vector<EColor> ecolor)
      : k_(static_cast<int>(vcolor.size())), vc_(std::move(vcolor)), ec_(std::move(ecolor)) {
    if (k_ < 1 || k_ > kMaxVertices)
      throw std::invalid_argument("Crg: vertex count out of 1..16");
    if (static_cast<int>(ec_.size()) != k_ * (k_ - 1) / 2)
      throw std::invalid_argument("Crg: edge color count does not match vertex count");
  }

  /// Uniformly colored CRG; edge colors are then adjusted by the builders.
  Crg(int k, VColor vfill, EColor efill)
      : Crg(std::vector<VColor>(check_size(k), vfill),
            std::vector<EColor>(static_cast<size_t>(k) * (k - 1) / 2, efill)) {}

  int vertex_count() const { return k_; }

  VColor vertex_color(int v) const {
    check(v);
    return vc_[v];
  }

  EColor edge_color(int i, int j) const { return ec_[pair_index(i, j, k_)]; }

  void set_vertex_color(int v, VColor c) {
    check(v);
    vc_[v] = c;
  }

  void set_edge_color(int i, int j, EColor c) { ec_[pair_index(i, j, k_)] = c; }

  /// Row-major upper-triangle position of the unordered pair (i, j).
  static int pair_index(int i, int j, int k) {
    if (i > j) std::swap(i, j);
    if (i < 0 || i == j || j >= k) throw std::out_of_range("Crg: pair index");
    return i * k - i * (i + 1) / 2 + (j - i - 1);
  }

  /// Induced sub-CRG on the vertices of `mask`, kept in ascending order.
  Crg induced(uint32_t mask) const {
    std::vector<int> keep;
    for (int v = 0; v < k_; ++v)
      if ((mask >> v) & 1u) keep.push_back(v);
    if (keep.empty()) throw std::invalid_argument("Crg: induced sub-CRG must be nonempty");
    std::vector<VColor> vc(keep.size());
    std::vector<EColor> ec(keep.size() * (keep.size() - 1) / 2);
    for (size_t a = 0; a < keep.size(); ++a) vc[a] = vc_[keep[a]];
    for (size_t a = 0; a < keep.size(); ++a)
      for (size_t b = a + 1; b < keep.size(); ++b)
        ec[pair_index(static_cast<int>(a), static_cast<int>(b), static_cast<int>(keep.size()))] =
            edge_color(keep[a], keep[b]);
    return Crg(std::move(vc), std::move(ec));
  }

  bool operator==(const Crg&) const = default;

 private:
  static int check_size(int k) {
    if (k < 1 || k > kMaxVertices) throw std::invalid_argument("Crg: vertex count out of 1..16");
    return k;
  }
  void check(int v) const {
    if (v < 0 || v >= k_) throw std::out_of_range("Crg: vertex index");
  }

  int k_;
  std::vector<VColor> vc_;
  std::vector<EColor> ec_;
};

/// K(r,s): r white and s black vertices, every edge gray.
inline Crg k_rs(int r, int s) {
  if (r < 0 || s < 0 || r + s < 1) throw std::invalid_argument("k_rs: CRG must be nonempty");
  if (r + s > Crg::kMaxVertices) throw std::invalid_argument("k_rs: more than 16 vertices");
  Crg k(r + s, VColor::White, EColor::Gray);
  for (int v = r; v < r + s; ++v) k.set_vertex_color(v, VColor::Black);
  return k;
}

/// k white vertices, gray spanning path v_0 v_1 ... v_{k-1}, all other edges
/// black.
inline Crg path_crg(int k) {
  if (k < 2 || k > Crg::kMaxVertices) throw std::invalid_argument("path_crg: k out of 2..16");
  Crg out(k, VColor::White, EColor::Black);
  for (int i = 0; i + 1 < k; ++i) out.set_edge_color(i, i + 1, EColor::Gray);
  return out;
}

/// k white vertices, gray spanning cycle, all other edges black. For k = 3
/// the cycle covers every pair, which coincides with K(3,0).
inline Crg cycle_crg(int k) {
  if (k < 3 || k > Crg::kMaxVertices) throw std::invalid_argument("cycle_crg: k out of 3..16");
  Crg out(k, VColor::White, EColor::Black);
  for (int i = 0; i < k; ++i) out.set_edge_color(i, (i + 1) % k, EColor::Gray);
  return out;
}

/// Photographic negative: white and black swap on vertices and edges, gray
/// stays fixed.
inline Crg negative(const Crg& k) {
  Crg out = k;
  for (int v = 0; v < k.vertex_count(); ++v)
    out.set_vertex_color(v, k.vertex_color(v) == VColor::White ? VColor::Black : VColor::White);
  for (int i = 0; i < k.vertex_count(); ++i)
    for (int j = i + 1; j < k.vertex_count(); ++j) {
      EColor c = k.edge_color(i, j);
      if (c == EColor::White)
        out.set_edge_color(i, j, EColor::Black);
      else if (c == EColor::Black)
        out.set_edge_color(i, j, EColor::White);
    }
  return out;
}

/// CrgSpec text: line 1 `k`, line 2 vertex colors over {w,b}, line 3 edge
/// colors over {w,b,g} in row-major upper-triangle order. Line 3 is absent
/// for k = 1.
inline Crg parse_crg_spec(std::string_view text) {
  std::istringstream in{std::string(text)};
  long k = 0;
  if (!(in >> k)) throw std::invalid_argument("CrgSpec: missing vertex count");
  if (k < 1 || k > Crg::kMaxVertices) throw std::invalid_argument("CrgSpec: vertex count out of 1..16");
  std::string vline, eline;
  if (!(in >> vline)) throw std::invalid_argument("CrgSpec: missing vertex colors");
  if (static_cast<long>(vline.size()) != k) throw std::invalid_argument("CrgSpec: vertex color count mismatch");
  const long pairs = k * (k - 1) / 2;
  if (pairs > 0) {
    if (!(in >> eline)) throw std::invalid_argument("CrgSpec: missing edge colors");
    if (static_cast<long>(eline.size()) != pairs)
      throw std::invalid_argument("CrgSpec: edge color count mismatch");
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("CrgSpec: trailing garbage");
  std::vector<VColor> vc(k);
  for (long i = 0; i < k; ++i) {
    if (vline[i] == 'w')
      vc[i] = VColor::White;
    else if (vline[i] == 'b')
      vc[i] = VColor::Black;
    else
      throw std::invalid_argument("CrgSpec: vertex colors must be w or b");
  }
  std::vector<EColor> ec(pairs);
  for (long i = 0; i < pairs; ++i) {
    switch (eline[i]) {
      case 'w': ec[i] = EColor::White; break;
      case 'b': ec[i] = EColor::Black; break;
      case 'g': ec[i] = EColor::Gray; break;
      default: throw std::invalid_argument("CrgSpec: edge colors must be w, b or g");
    }
  }
  return Crg(std::move(vc), std::move(ec));
}

inline std::string write_crg_spec(const Crg& k) {
  std::ostringstream out;
  out << k.vertex_count() << "\n";
  for (int v = 0; v < k.vertex_count(); ++v)
    out << (k.vertex_color(v) == VColor::White ? 'w' : 'b');
  out << "\n";
  for (int i = 0; i < k.vertex_count(); ++i)
    for (int j = i + 1; j < k.vertex_count(); ++j) {
      EColor c = k.edge_color(i, j);
      out << (c == EColor::White ? 'w' : c == EColor::Black ? 'b' : 'g');
    }
  if (k.vertex_count() > 1) out << "\n";
  return out.str();
}

/// Inline CLI constructors: Krs:r,s | Path:k | Cycle:k.
inline Crg parse_crg_token(std::string_view token) {
  auto number = [&](std::string_view s) -> int {
    if (s.empty()) throw std::invalid_argument("CRG token: missing number");
    int value = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw std::invalid_argument("CRG token: bad number");
      value = value * 10 + (c - '0');
      if (value > 1000) throw std::invalid_argument("CRG token: number out of range");
    }
    return value;
  };
  if (token.substr(0, 4) == "Krs:") {
    std::string_view rest = token.substr(4);
    size_t comma = rest.find(',');
    if (comma == std::string_view::npos) throw std::invalid_argument("CRG token: Krs wants r,s");
    return k_rs(number(rest.substr(0, comma)), number(rest.substr(comma + 1)));
  }
  if (token.substr(0, 5) == "Path:") return path_crg(number(token.substr(5)));
  if (token.substr(0, 6) == "Cycle:") return cycle_crg(number(token.substr(6)));
  throw std::invalid_argument("CRG token: unknown: " + std::string(token));
}

/// Components are connected components of the graph induced by non-gray
/// edges, returned as induced sub-CRGs ordered by smallest vertex index.
inline std::vector<Crg> components(const Crg& k) {
  const int n = k.vertex_count();
  std::array<uint32_t, Crg::kMaxVertices> adj{};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (k.edge_color(i, j) != EColor::Gray) {
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
      }
  std::vector<Crg> out;
  uint32_t seen = 0;
  for (int v = 0; v < n; ++v) {
    if ((seen >> v) & 1u) continue;
    uint32_t comp = 1u << v;
    for (;;) {
      uint32_t grown = comp;
      for (uint32_t m = comp; m; m &= m - 1) grown |= adj[std::countr_zero(m)];
      if (grown == comp) break;
      comp = grown;
    }
    seen |= comp;
    out.push_back(k.induced(comp));
  }
  return out;
}

/// All proper nonempty induced sub-CRGs (2^k - 2 of them), in ascending
/// vertex-mask order; pass include_self to append K itself.
inline std::vector<Crg> sub_crgs(const Crg& k, bool include_self = false) {
  const uint32_t full = (1u << k.vertex_count()) - 1;
  std::vector<Crg> out;
  out.reserve(full > 1 ? full - 1 : 1);
  for (uint32_t mask = 1; mask < full; ++mask) out.push_back(k.induced(mask));
  if (include_self) out.push_back(k);
  return out;
}

/// Dense symmetric matrix sized for CRG work; lives on the stack.
struct CostMatrix {
  int n = 0;
  std::array<double, Crg::kMaxVertices * Crg::kMaxVertices> a{};

  double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
  double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
};

/// M_K(p): diagonal p for white vertices, 1-p for black; off-diagonal p for
/// white pairs, 0 for gray, 1-p for black.
inline CostMatrix cost_matrix(const Crg& k, double p) {
  CostMatrix m;
  m.n = k.vertex_count();
  for (int i = 0; i < m.n; ++i)
    m.at(i, i) = k.vertex_color(i) == VColor::White ? p : 1 - p;
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j) {
      EColor c = k.edge_color(i, j);
      double v = c == EColor::White ? p : c == EColor::Black ? 1 - p : 0.0;
      m.at(i, j) = v;
      m.at(j, i) = v;
    }
  return m;
}

/// f_K(p) = (1/k^2) 1^T M_K(p) 1, the uniform-weight edit cost.
inline double f_value(const Crg& k, double p) {
  CostMatrix m = cost_matrix(k, p);
  double total = 0;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) total += m.at(i, j);
  return total / (static_cast<double>(m.n) * m.n);
}

}  // namespace edf
