#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace edf {

enum class ChebyshevKind { First, Second };

/// T_n(x) or U_n(x) by the three-term recurrence.
inline double chebyshev(ChebyshevKind kind, int n, double x) {
  if (n < 0) throw std::invalid_argument("chebyshev: degree must be >= 0");
  double prev = 1.0;                                         // T_0 = U_0 = 1
  double cur = kind == ChebyshevKind::First ? x : 2.0 * x;   // T_1 or U_1
  if (n == 0) return prev;
  for (int i = 1; i < n; ++i) {
    double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

inline double chebyshev_t(int n, double x) { return chebyshev(ChebyshevKind::First, n, x); }
inline double chebyshev_u(int n, double x) { return chebyshev(ChebyshevKind::Second, n, x); }

/// Transition density p_k = 1 - 1/(2 cos(2 pi/(k+1)) + 2); strictly
/// increasing in k with limit 3/4.
inline double transition_point(int k) {
  if (k < 2) throw std::invalid_argument("transition_point: k must be >= 2");
  return 1.0 - 1.0 / (2.0 * std::cos(2.0 * std::numbers::pi / (k + 1)) + 2.0);
}

/// Change of variables shared by the path-CRG closed forms:
/// P = (2p-1)/(1-p), theta with P = 2 cos(theta), and the reduced objective
/// G = 1 - g/(1-p).
struct PathParams {
  int k = 0;
  double p = 0.0;
  double P = 0.0;
  double theta = 0.0;
  double G = 0.0;
};

/// One eigenpair of the tridiagonal Toeplitz matrix with diagonal -P and
/// unit off-diagonals, in closed form.
struct EigenPair {
  double lambda = 0.0;
  std::vector<double> w;  // unit eigenvector
  double wdot1 = 0.0;     // inner product with the all-ones vector
};

/// All k eigenpairs, a = 1..k: lambda_a = 2 cos(a pi/(k+1)) - P with
/// eigenvector entries sqrt(2/(k+1)) sin(a pi b/(k+1)); w.1 vanishes for
/// even a and equals sqrt(2/(k+1)) (1+cos(a pi/(k+1)))/sin(a pi/(k+1)) for
/// odd a.
inline std::vector<EigenPair> toeplitz_eigs(int k, double P) {
  if (k < 1) throw std::invalid_argument("toeplitz_eigs: k must be >= 1");
  std::vector<EigenPair> out(k);
  const double scale = std::sqrt(2.0 / (k + 1));
  for (int a = 1; a <= k; ++a) {
    double angle = a * std::numbers::pi / (k + 1);
    EigenPair& e = out[a - 1];
    e.lambda = 2.0 * std::cos(angle) - P;
    e.w.resize(k);
    for (int b = 1; b <= k; ++b) e.w[b - 1] = scale * std::sin(angle * b);
    e.wdot1 = (a % 2 == 0) ? 0.0 : scale * (1.0 + std::cos(angle)) / std::sin(angle);
  }
  return out;
}

namespace detail {

inline void check_path_window(int k, double p) {
  if (k < 2) throw std::invalid_argument("path closed form: k must be >= 2");
  if (!(p > transition_point(k) - 1e-12 && p < 0.75))
    throw std::domain_error("path closed form: p outside (p_k, 3/4)");
}

// Everything below is rational in P once the Chebyshev values are in:
//   D   = (k+1)(2-P) U_k - 2 (1 - T_{k+1})
//   G   = (2-P)^2 U_k / D
//   x_a = (2-P) [U_k (1 - T_a) - U_{a-1} (1 - T_{k+1})] / D
// evaluated at x = P/2. The shared denominator keeps the transition
// endpoints (where U_k and 1 - T_{k+1} vanish together) cancellation-free.
inline double path_g_reduced_cheb(int k, double p) {
  const double twoMinusP = (3.0 - 4.0 * p) / (1.0 - p);
  const double x = (2.0 * p - 1.0) / (2.0 * (1.0 - p));
  const double uk = chebyshev_u(k, x);
  const double tk1 = chebyshev_t(k + 1, x);
  const double d = (k + 1) * twoMinusP * uk - 2.0 * (1.0 - tk1);
  // d vanishes exactly only when p hits p_k itself (U_k and 1 - T_{k+1}
  // share that root inside the window); the limit there is (2-P)/(k+1)
  if (d == 0.0) return twoMinusP / (k + 1);
  return twoMinusP * twoMinusP * uk / d;
}

// Trigonometric form, stable for large k: theta = 2 atan(sqrt(3-4p)) solves
// 2 cos(theta) = P exactly in terms of p, and (k+1) theta/2 stays below pi
// inside the window.
inline double path_g_reduced_trig(int k, double p) {
  const double half_tan = std::sqrt(3.0 - 4.0 * p);
  const double half = std::atan(half_tan);
  const double twoMinusP = (3.0 - 4.0 * p) / (1.0 - p);
  const double bracket = (k + 1) - std::tan((k + 1) * half) / half_tan;
  return twoMinusP / bracket;
}

inline double path_g_reduced(int k, double p) {
  return k <= 64 ? path_g_reduced_cheb(k, p) : path_g_reduced_trig(k, p);
}

}  // namespace detail

inline PathParams path_params(int k, double p) {
  detail::check_path_window(k, p);
  PathParams out;
  out.k = k;
  out.p = p;
  out.P = (2.0 * p - 1.0) / (1.0 - p);
  out.theta = 2.0 * std::atan(std::sqrt(3.0 - 4.0 * p));
  out.G = detail::path_g_reduced(k, p);
  return out;
}

/// g of the path CRG on k white vertices in closed form; agrees with the
/// simplex program on (p_k, p_{k+1}] and continuously extends to p = p_k.
inline double path_g(int k, double p) {
  detail::check_path_window(k, p);
  return (1.0 - detail::path_g_reduced(k, p)) * (1.0 - p);
}

/// Optimal weight vector of the path CRG in closed form; symmetric,
/// unimodal, and satisfies M x = g 1 on the window.
inline std::vector<double> path_weights(int k, double p) {
  detail::check_path_window(k, p);
  std::vector<double> out(k);
  if (k <= 64) {
    const double twoMinusP = (3.0 - 4.0 * p) / (1.0 - p);
    const double x = (2.0 * p - 1.0) / (2.0 * (1.0 - p));
    std::vector<double> t(k + 2), u(k + 2);
    t[0] = 1.0;
    t[1] = x;
    u[0] = 1.0;
    u[1] = 2.0 * x;
    for (int i = 2; i <= k + 1; ++i) {
      t[i] = 2.0 * x * t[i - 1] - t[i - 2];
      u[i] = 2.0 * x * u[i - 1] - u[i - 2];
    }
    const double d = (k + 1) * twoMinusP * u[k] - 2.0 * (1.0 - t[k + 1]);
    for (int a = 1; a <= k; ++a) {
      if (d == 0.0)  // exactly at p_k; see path_g_reduced_cheb
        out[a - 1] = (1.0 - t[a]) / (k + 1);
      else
        out[a - 1] = twoMinusP * (u[k] * (1.0 - t[a]) - u[a - 1] * (1.0 - t[k + 1])) / d;
    }
  } else {
    const double half_tan = std::sqrt(3.0 - 4.0 * p);
    const double half = std::atan(half_tan);
    const double theta = 2.0 * half;
    const double tail = std::tan((k + 1) * half);
    const double g = detail::path_g_reduced_trig(k, p);
    const double twoMinusP = (3.0 - 4.0 * p) / (1.0 - p);
    for (int a = 1; a <= k; ++a)
      out[a - 1] = g / twoMinusP * (1.0 - std::cos(a * theta) - std::sin(a * theta) * tail);
  }
  return out;
}

}  // namespace edf
