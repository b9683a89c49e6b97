#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "edf/parallel.hpp"
#include "edf/simplex_qp.hpp"
#include "edf/spectral.hpp"

namespace edf {

enum class Property { Word, KWord, Comp };

inline Property parse_property(std::string_view name) {
  if (name == "word") return Property::Word;
  if (name == "kword") return Property::KWord;
  if (name == "comp") return Property::Comp;
  throw std::invalid_argument("property must be word, kword or comp");
}

inline std::string property_name(Property p) {
  switch (p) {
    case Property::Word: return "word";
    case Property::KWord: return "kword";
    default: return "comp";
  }
}

/// Index k of the path piece containing p for the comparability curve,
/// i.e. the k >= 2 with p in (p_k, p_{k+1}]. Defined for p in (1/2, 3/4).
inline int comp_path_index(double p) {
  if (!(p > 0.5 && p < 0.75))
    throw std::domain_error("comp_path_index: defined on (1/2, 3/4)");
  double theta = 2.0 * std::atan(std::sqrt(3.0 - 4.0 * p));
  int k = static_cast<int>(std::ceil(2.0 * std::numbers::pi / theta)) - 2;
  if (k < 2) k = 2;
  while (k > 2 && p <= transition_point(k)) --k;
  while (p > transition_point(k + 1)) ++k;
  return k;
}

/// Closed-form edit distance function:
///   word   min{p/3, 1-p}
///   kword  min{p, 1-p}          (any multiplicity >= 2)
///   comp   p/2 on [0,1/2], the path closed form on (p_k, p_{k+1}],
///          1-p on [3/4, 1]
/// The comp piece index is computed directly from p, so there is no
/// truncation error anywhere in [0, 1].
inline double ed_closed(Property prop, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("ed_closed: p outside [0,1]");
  switch (prop) {
    case Property::Word: return std::min(p / 3.0, 1.0 - p);
    case Property::KWord: return std::min(p, 1.0 - p);
    default: break;
  }
  if (p <= 0.5) return p / 2.0;
  if (p >= 0.75) return 1.0 - p;
  return path_g(comp_path_index(p), p);
}

/// Name of the piece active at p: p/3, 1-p, p, p/2 or path:k.
inline std::string ed_piece_name(Property prop, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("ed_piece_name: p outside [0,1]");
  switch (prop) {
    case Property::Word: return p <= 0.75 ? "p/3" : "1-p";
    case Property::KWord: return p <= 0.5 ? "p" : "1-p";
    default: break;
  }
  if (p <= 0.5) return "p/2";
  if (p >= 0.75) return "1-p";
  return "path:" + std::to_string(comp_path_index(p));
}

/// One piece of a piecewise edit distance curve on the interval (lo, hi]
/// (the first piece is closed on the left).
struct EdfPiece {
  double lo = 0.0;
  double hi = 0.0;
  std::string descriptor;
};

struct PiecewiseEdf {
  Property property = Property::Word;
  std::vector<EdfPiece> pieces;
};

/// Materialized piece list over [0, 1]. The comparability curve has
/// infinitely many path pieces accumulating at 3/4; pieces up to
/// max_path_k are listed individually and the remainder is summarized as
/// path:* (evaluation via ed_closed never truncates).
inline PiecewiseEdf piecewise_edf(Property prop, int max_path_k = 16) {
  PiecewiseEdf out;
  out.property = prop;
  switch (prop) {
    case Property::Word:
      out.pieces = {{0.0, 0.75, "p/3"}, {0.75, 1.0, "1-p"}};
      return out;
    case Property::KWord:
      out.pieces = {{0.0, 0.5, "p"}, {0.5, 1.0, "1-p"}};
      return out;
    default: break;
  }
  out.pieces.push_back({0.0, 0.5, "p/2"});
  for (int k = 3; k <= max_path_k; ++k)
    out.pieces.push_back({transition_point(k), transition_point(k + 1), "path:" + std::to_string(k)});
  out.pieces.push_back({transition_point(max_path_k + 1), 0.75, "path:*"});
  out.pieces.push_back({0.75, 1.0, "1-p"});
  return out;
}

struct EnvelopePoint {
  double p = 0.0;
  double value = 0.0;
  int argmin = 0;
};

/// Pointwise minimum of g over a CRG library on a p-grid. Ties go to the
/// lowest library index; evaluation is grid-parallel with a deterministic
/// result.
inline std::vector<EnvelopePoint> envelope(const std::vector<Crg>& library,
                                           const std::vector<double>& grid) {
  if (library.empty()) throw std::invalid_argument("envelope: library must be nonempty");
  std::vector<EnvelopePoint> out(grid.size());
  parallel_for(0, static_cast<int>(grid.size()), [&](int i) {
    double p = grid[i];
    double best = std::numeric_limits<double>::infinity();
    int arg = 0;
    for (size_t j = 0; j < library.size(); ++j) {
      double g = g_value(library[j], p).g;
      if (g < best - 1e-12) {
        best = g;
        arg = static_cast<int>(j);
      }
    }
    out[i] = {p, best, arg};
  });
  return out;
}

/// Analytic maximizer (p*, value) of the closed-form curve.
inline std::pair<double, double> max_point(Property prop) {
  switch (prop) {
    case Property::Word: return {0.75, 0.25};
    case Property::KWord: return {0.5, 0.5};
    default: return {2.0 / 3.0, 5.0 / 18.0};
  }
}

}  // namespace edf
