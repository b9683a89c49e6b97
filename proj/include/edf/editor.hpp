#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "edf/curves.hpp"
#include "edf/spectral.hpp"

namespace edf {

/// Undirected graph on up to 4096 vertices, packed symmetric bit rows.
class DenseGraph {
 public:
  static constexpr int kMaxVertices = 4096;

  explicit DenseGraph(int n) : n_(n), stride_((n + 63) / 64), bits_(static_cast<size_t>(n) * stride_, 0) {
    if (n < 1 || n > kMaxVertices)
      throw std::invalid_argument("DenseGraph: vertex count out of 1..4096");
  }

  int vertex_count() const { return n_; }

  bool has_edge(int u, int v) const {
    return u != v && ((bits_[static_cast<size_t>(u) * stride_ + v / 64] >> (v % 64)) & 1u) != 0;
  }

  void set_edge(int u, int v, bool present) {
    if (u == v) throw std::invalid_argument("DenseGraph: loops not allowed");
    uint64_t bu = 1ull << (v % 64), bv = 1ull << (u % 64);
    if (present) {
      bits_[static_cast<size_t>(u) * stride_ + v / 64] |= bu;
      bits_[static_cast<size_t>(v) * stride_ + u / 64] |= bv;
    } else {
      bits_[static_cast<size_t>(u) * stride_ + v / 64] &= ~bu;
      bits_[static_cast<size_t>(v) * stride_ + u / 64] &= ~bv;
    }
  }

  long long edge_count() const {
    long long twice = 0;
    for (size_t i = 0; i < bits_.size(); ++i) twice += std::popcount(bits_[i]);
    return twice / 2;
  }

  static double pair_count(int n) { return 0.5 * n * (n - 1.0); }

 private:
  int n_;
  int stride_;
  std::vector<uint64_t> bits_;
};

/// Deterministic splittable pseudorandom stream. The contract is fixed so
/// runs reproduce across platforms and languages:
///   mix(z): z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///           z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///           return z ^ (z >> 31)
///   substream state: mix(mix(seed + GOLDEN * (trial + 1)) ^ (purpose + 1))
///   draw: state += GOLDEN; return mix(state)        (GOLDEN = 0x9E3779B97F4A7C15)
/// Doubles take the top 53 bits into [0, 1). Trials are order-independent:
/// each (seed, trial, purpose) triple names its own stream.
class RandomStream {
 public:
  static constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;

  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  static RandomStream from(uint64_t seed, uint64_t trial, uint64_t purpose) {
    return RandomStream(mix(mix(seed + kGolden * (trial + 1)) ^ (purpose + 1)));
  }

  explicit RandomStream(uint64_t state) : state_(state) {}

  uint64_t next_u64() {
    state_ += kGolden;
    return mix(state_);
  }

  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Categorical draw from nonnegative weights summing to ~1.
  int next_class(const std::vector<double>& weights) {
    double u = next_double();
    double acc = 0.0;
    for (size_t i = 0; i + 1 < weights.size(); ++i) {
      acc += weights[i];
      if (u < acc) return static_cast<int>(i);
    }
    return static_cast<int>(weights.size()) - 1;
  }

 private:
  uint64_t state_;
};

enum class Purpose : uint64_t { Gnp = 1, ThreeColor = 2, Layered = 3, Verify = 4 };

namespace detail {

inline DenseGraph sample_gnp_stream(int n, double p, RandomStream rng) {
  DenseGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_double() < p) g.set_edge(u, v, true);
  return g;
}

}  // namespace detail

/// G(n, p) with each pair included independently; same seed, same graph.
inline DenseGraph sample_gnp(int n, double p, uint64_t seed, uint64_t trial = 0) {
  if (n < 1 || n > DenseGraph::kMaxVertices)
    throw std::invalid_argument("sample_gnp: vertex count out of 1..4096");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_gnp: p outside [0,1]");
  return detail::sample_gnp_stream(n, p, RandomStream::from(seed, trial, static_cast<uint64_t>(Purpose::Gnp)));
}

/// Membership evidence attached to an edit: the 3-coloring classes or the
/// layer order, one value per vertex.
struct EditCertificate {
  enum class Kind { ThreeColoring, LayerOrder, Completion } kind = Kind::ThreeColoring;
  std::vector<uint16_t> classes;
};

struct EditReport {
  long long added = 0;
  long long deleted = 0;
  double fraction = 0.0;  // (added + deleted) / C(n,2)
  EditCertificate certificate;
};

/// Recipe: color vertices uniformly in three colors and delete the
/// monochromatic edges; the result is 3-colorable.
inline EditReport edit_word_threecolor(const DenseGraph& g, uint64_t seed, uint64_t trial = 0) {
  const int n = g.vertex_count();
  RandomStream rng = RandomStream::from(seed, trial, static_cast<uint64_t>(Purpose::ThreeColor));
  EditReport report;
  report.certificate.kind = EditCertificate::Kind::ThreeColoring;
  report.certificate.classes.resize(n);
  const std::vector<double> uniform3(3, 1.0 / 3);
  for (int v = 0; v < n; ++v)
    report.certificate.classes[v] = static_cast<uint16_t>(rng.next_class(uniform3));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.has_edge(u, v) && report.certificate.classes[u] == report.certificate.classes[v])
        ++report.deleted;
  report.fraction = (report.added + report.deleted) / DenseGraph::pair_count(n);
  return report;
}

/// Recipe: draw a layer for every vertex i.i.d. from `weights`, delete
/// within-layer edges and add the missing pairs between layers at distance
/// >= 2; pairs in consecutive layers stay untouched. Orienting all edited
/// edges from lower to higher layer is transitive.
inline EditReport edit_layered(const DenseGraph& g, const std::vector<double>& weights,
                               uint64_t seed, uint64_t trial = 0) {
  if (weights.empty()) throw std::invalid_argument("edit_layered: empty weight vector");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= -1e-12)) throw std::invalid_argument("edit_layered: negative weight");
    total += w;
  }
  if (std::fabs(total - 1.0) > 1e-9) throw std::invalid_argument("edit_layered: weights must sum to 1");
  const int n = g.vertex_count();
  RandomStream rng = RandomStream::from(seed, trial, static_cast<uint64_t>(Purpose::Layered));
  EditReport report;
  report.certificate.kind = EditCertificate::Kind::LayerOrder;
  report.certificate.classes.resize(n);
  for (int v = 0; v < n; ++v)
    report.certificate.classes[v] = static_cast<uint16_t>(rng.next_class(weights));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int du = report.certificate.classes[u], dv = report.certificate.classes[v];
      if (du == dv) {
        if (g.has_edge(u, v)) ++report.deleted;
      } else if (std::abs(du - dv) >= 2) {
        if (!g.has_edge(u, v)) ++report.added;
      }
    }
  report.fraction = (report.added + report.deleted) / DenseGraph::pair_count(n);
  return report;
}

/// Recipe: add every nonedge; a complete graph carries a transitive
/// tournament.
inline EditReport edit_complete(const DenseGraph& g) {
  const int n = g.vertex_count();
  EditReport report;
  report.certificate.kind = EditCertificate::Kind::Completion;
  report.certificate.classes.resize(n);
  for (int v = 0; v < n; ++v) report.certificate.classes[v] = static_cast<uint16_t>(v);
  report.added = static_cast<long long>(DenseGraph::pair_count(n)) - g.edge_count();
  report.fraction = (report.added + report.deleted) / DenseGraph::pair_count(n);
  return report;
}

/// Re-derives the edited graph from (original, certificate) and checks the
/// report counts plus the membership evidence: a proper 3-coloring, or a
/// transitive layer orientation (triples checked exhaustively for n <= 300,
/// otherwise a deterministic subsample).
inline bool verify_edit_report(const DenseGraph& g, const EditReport& report,
                               uint64_t seed = 0) {
  const int n = g.vertex_count();
  if (static_cast<int>(report.certificate.classes.size()) != n) return false;
  const auto& cls = report.certificate.classes;

  if (report.certificate.kind == EditCertificate::Kind::ThreeColoring) {
    if (report.added != 0) return false;
    for (int v = 0; v < n; ++v)
      if (cls[v] > 2) return false;
    long long deleted = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (g.has_edge(u, v) && cls[u] == cls[v]) ++deleted;
    if (deleted != report.deleted) return false;
    // the edited graph keeps exactly the bichromatic edges, so the classes
    // are a proper coloring of it
    return std::fabs(report.fraction - (report.added + report.deleted) / DenseGraph::pair_count(n)) < 1e-12;
  }

  if (report.certificate.kind == EditCertificate::Kind::Completion) {
    if (report.deleted != 0) return false;
    for (int v = 0; v < n; ++v)
      if (cls[v] != v) return false;  // chain order
    long long added = static_cast<long long>(DenseGraph::pair_count(n)) - g.edge_count();
    if (added != report.added) return false;
    // complete graph ordered by the chain is a transitive tournament
    return std::fabs(report.fraction - added / DenseGraph::pair_count(n)) < 1e-12;
  }

  // layer order: recount edits and check the canonical orientation
  long long added = 0, deleted = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int du = cls[u], dv = cls[v];
      if (du == dv) {
        if (g.has_edge(u, v)) ++deleted;
      } else if (std::abs(du - dv) >= 2) {
        if (!g.has_edge(u, v)) ++added;
      }
    }
  if (added != report.added || deleted != report.deleted) return false;
  if (std::fabs(report.fraction - (added + deleted) / DenseGraph::pair_count(n)) >= 1e-12) return false;

  // edited adjacency, as a predicate
  auto edited = [&](int u, int v) {
    if (u == v) return false;
    int du = cls[u], dv = cls[v];
    if (du == dv) return false;
    if (std::abs(du - dv) >= 2) return true;
    return g.has_edge(u, v);
  };
  auto arc = [&](int u, int v) { return edited(u, v) && cls[u] < cls[v]; };
  auto check_triple = [&](int u, int v, int w) {
    // transitivity of the canonical orientation
    if (arc(u, v) && arc(v, w) && !arc(u, w)) return false;
    if (arc(u, w) && arc(w, v) && !arc(u, v)) return false;
    if (arc(v, u) && arc(u, w) && !arc(v, w)) return false;
    return true;
  };
  if (n <= 300) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        for (int w = v + 1; w < n; ++w)
          if (!check_triple(u, v, w)) return false;
  } else {
    RandomStream rng = RandomStream::from(seed, 0, static_cast<uint64_t>(Purpose::Verify));
    for (int s = 0; s < 500000; ++s) {
      int u = static_cast<int>(rng.next_double() * n);
      int v = static_cast<int>(rng.next_double() * n);
      int w = static_cast<int>(rng.next_double() * n);
      if (u == v || v == w || u == w) continue;
      if (!check_triple(u, v, w)) return false;
    }
  }
  return true;
}

struct CurvePoint {
  double p = 0.0;
  double mean_fraction = 0.0;
  double closed_form = 0.0;
};

/// Empirical upper-bound harness: for each p, the best recipe's mean edit
/// fraction over `trials` seeded trials, next to the closed form. word uses
/// the 3-coloring and completion recipes; comp uses the layered recipe with
/// the path weights of the active piece (completion only, at p >= 3/4).
inline std::vector<CurvePoint> estimate_curve(Property prop, int n,
                                              const std::vector<double>& p_grid, int trials,
                                              uint64_t seed) {
  if (prop == Property::KWord)
    throw std::invalid_argument("estimate_curve: recipes exist for word and comp only");
  if (trials < 1) throw std::invalid_argument("estimate_curve: trials must be >= 1");
  std::vector<CurvePoint> out(p_grid.size());
  for (size_t i = 0; i < p_grid.size(); ++i) {
    const double p = p_grid[i];
    std::vector<double> weights;
    if (prop == Property::Comp && p < 0.75) {
      int k = p <= 0.5 ? 2 : comp_path_index(p);
      weights = path_weights(k, p);
    }
    double recipe_sum = 0.0, complete_sum = 0.0;
    std::vector<double> recipe(trials, 0.0), complete(trials, 0.0);
    parallel_for(0, trials, [&](int t) {
      DenseGraph g = sample_gnp(n, p, seed, static_cast<uint64_t>(t));
      complete[t] = edit_complete(g).fraction;
      if (prop == Property::Word)
        recipe[t] = edit_word_threecolor(g, seed, static_cast<uint64_t>(t)).fraction;
      else if (!weights.empty())
        recipe[t] = edit_layered(g, weights, seed, static_cast<uint64_t>(t)).fraction;
      else
        recipe[t] = 2.0;  // no layered recipe at this density
    });
    for (int t = 0; t < trials; ++t) {
      recipe_sum += recipe[t];
      complete_sum += complete[t];
    }
    double best = std::min(recipe_sum, complete_sum) / trials;
    out[i] = {p, best, ed_closed(prop, p)};
  }
  return out;
}

}  // namespace edf
