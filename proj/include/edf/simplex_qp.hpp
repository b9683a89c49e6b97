#pragma once

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <vector>

#include "edf/crg.hpp"

namespace edf {

/// Optimum of the simplex quadratic program min x^T M x, x >= 0, sum x = 1.
struct WeightSolution {
  double g = 0.0;
  std::vector<double> x;     // on the simplex
  std::vector<int> support;  // indices with x > 0
  double kkt_residual = 0.0;
};

namespace detail {

constexpr double kSimplexFeasTol = 1e-12;
constexpr double kKktSlackTol = 1e-9;
constexpr double kLinearResidualTol = 1e-9;
constexpr double kTieTol = 1e-12;
constexpr int kAugMax = Crg::kMaxVertices + 1;

// Full-pivot Gaussian elimination on an n x n system. Rank-deficient steps
// pin the free variables to zero; returns the max-norm residual of the
// returned solution against the untouched copies a0/b0.
inline double solve_full_pivot(int n, double* a, double* b, const double* a0, const double* b0,
                               double* y) {
  int colperm[kAugMax];
  for (int j = 0; j < n; ++j) colperm[j] = j;
  int rank = n;
  for (int s = 0; s < n; ++s) {
    int pr = s, pc = s;
    double best = 0.0;
    for (int i = s; i < n; ++i)
      for (int j = s; j < n; ++j) {
        double v = std::fabs(a[i * n + j]);
        if (v > best) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    if (best < 1e-13) {
      rank = s;
      break;
    }
    if (pr != s) {
      for (int j = 0; j < n; ++j) std::swap(a[s * n + j], a[pr * n + j]);
      std::swap(b[s], b[pr]);
    }
    if (pc != s) {
      for (int i = 0; i < n; ++i) std::swap(a[i * n + s], a[i * n + pc]);
      std::swap(colperm[s], colperm[pc]);
    }
    double piv = a[s * n + s];
    for (int i = s + 1; i < n; ++i) {
      double f = a[i * n + s] / piv;
      if (f == 0.0) continue;
      a[i * n + s] = 0.0;
      for (int j = s + 1; j < n; ++j) a[i * n + j] -= f * a[s * n + j];
      b[i] -= f * b[s];
    }
  }
  double yp[kAugMax];
  for (int j = rank; j < n; ++j) yp[j] = 0.0;
  for (int i = rank - 1; i >= 0; --i) {
    double acc = b[i];
    for (int j = i + 1; j < n; ++j) acc -= a[i * n + j] * yp[j];
    yp[i] = acc / a[i * n + i];
  }
  for (int j = 0; j < n; ++j) y[colperm[j]] = yp[j];
  double residual = 0.0;
  for (int i = 0; i < n; ++i) {
    double acc = -b0[i];
    for (int j = 0; j < n; ++j) acc += a0[i * n + j] * y[j];
    residual = std::max(residual, std::fabs(acc));
  }
  return residual;
}

}  // namespace detail

/// Global minimum of x^T M x over the probability simplex by support
/// enumeration. For every nonempty support S the augmented stationarity
/// system [M_S, -1; 1^T, 0] [x_S; g] = [0; 1] is solved; a candidate is
/// accepted when x_S >= -1e-12, every off-support coordinate satisfies
/// (M x)_i >= g - 1e-9, and the linear residual is at most 1e-9 (singular
/// systems are solved with free variables pinned to zero). The minimum-g
/// candidate wins; ties prefer the smaller support, then the
/// lexicographically least index set, so the result is deterministic. The
/// returned x is clamped to the simplex and the KKT residual recorded.
inline WeightSolution minimize_on_simplex(const CostMatrix& m) {
  using namespace detail;
  const int k = m.n;
  double bestG = std::numeric_limits<double>::infinity();
  double bestX[Crg::kMaxVertices];
  bool found = false;

  int idx[Crg::kMaxVertices];
  double a[kAugMax * kAugMax], b[kAugMax], a0[kAugMax * kAugMax], b0[kAugMax], y[kAugMax];
  double xfull[Crg::kMaxVertices], mx[Crg::kMaxVertices];

  for (int size = 1; size <= k; ++size) {
    // lexicographic combinations of the given size
    for (int i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      const int n = size + 1;
      for (int r = 0; r < size; ++r) {
        for (int c = 0; c < size; ++c) a[r * n + c] = m.at(idx[r], idx[c]);
        a[r * n + size] = -1.0;
        b[r] = 0.0;
      }
      for (int c = 0; c < size; ++c) a[size * n + c] = 1.0;
      a[size * n + size] = 0.0;
      b[size] = 1.0;
      std::memcpy(a0, a, sizeof(double) * n * n);
      std::memcpy(b0, b, sizeof(double) * n);

      double residual = solve_full_pivot(n, a, b, a0, b0, y);
      if (residual <= kLinearResidualTol) {
        bool feasible = true;
        for (int i = 0; i < size; ++i)
          if (y[i] < -kSimplexFeasTol) {
            feasible = false;
            break;
          }
        if (feasible) {
          double g = y[size];
          for (int v = 0; v < k; ++v) xfull[v] = 0.0;
          for (int i = 0; i < size; ++i) xfull[idx[i]] = y[i];
          bool dual_ok = true;
          for (int v = 0; v < k && dual_ok; ++v) {
            double acc = 0.0;
            for (int w = 0; w < k; ++w) acc += m.at(v, w) * xfull[w];
            mx[v] = acc;
          }
          for (int v = 0; v < k; ++v)
            if (xfull[v] == 0.0 && mx[v] < g - kKktSlackTol) {
              dual_ok = false;
              break;
            }
          if (dual_ok && g < bestG - kTieTol) {
            bestG = g;
            for (int v = 0; v < k; ++v) bestX[v] = xfull[v];
            found = true;
          }
        }
      }

      // advance the combination
      int pos = size - 1;
      while (pos >= 0 && idx[pos] == k - size + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }

  if (!found) throw std::runtime_error("minimize_on_simplex: no accepted candidate");

  WeightSolution sol;
  sol.g = bestG;
  sol.x.assign(bestX, bestX + k);
  double total = 0.0;
  for (double& v : sol.x) {
    if (v < 0.0) v = 0.0;
    total += v;
  }
  for (double& v : sol.x) v /= total;
  double residual = 0.0;
  for (int v = 0; v < k; ++v) {
    double acc = 0.0;
    for (int w = 0; w < k; ++w) acc += m.at(v, w) * sol.x[w];
    if (sol.x[v] > 0.0)
      residual = std::max(residual, std::fabs(acc - sol.g));
    else
      residual = std::max(residual, std::max(0.0, sol.g - acc));
  }
  sol.kkt_residual = residual;
  for (int v = 0; v < k; ++v)
    if (sol.x[v] > 0.0) sol.support.push_back(v);
  return sol;
}

/// g_K(p) with its optimal weight vector.
inline WeightSolution g_value(const Crg& k, double p) {
  return minimize_on_simplex(cost_matrix(k, p));
}

/// True iff every proper sub-CRG has strictly larger g (margin 1e-9).
/// g is monotone under vertex deletion, so checking the k one-vertex
/// deletions covers all proper sub-CRGs. Budget: k <= 12.
inline bool is_p_core(const Crg& k, double p) {
  const int n = k.vertex_count();
  if (n > 12) throw BudgetError("is_p_core: budget is 12 vertices");
  if (n == 1) return true;
  const double g = g_value(k, p).g;
  const uint32_t full = (1u << n) - 1;
  for (int v = 0; v < n; ++v) {
    double gv = g_value(k.induced(full & ~(1u << v)), p).g;
    if (gv <= g + 1e-9) return false;
  }
  return true;
}

}  // namespace edf
