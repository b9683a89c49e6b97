#include <catch2/catch_amalgamated.hpp>

#include "edf/simplex_qp.hpp"
#include "edf/spectral.hpp"
#include "edf/verify.hpp"
#include "test_util.hpp"

using namespace edf;
using testutil::near;

TEST_CASE("chebyshev basics") {
  CHECK(near(chebyshev(ChebyshevKind::First, 3, 0.5), -1.0, 1e-15));
  CHECK(near(chebyshev(ChebyshevKind::Second, 1, 0.7), 1.4, 1e-15));
  for (double x : {-0.9, 0.0, 0.31, 1.0}) CHECK(chebyshev(ChebyshevKind::First, 0, x) == 1.0);
  CHECK_THROWS_AS(chebyshev(ChebyshevKind::First, -1, 0.0), std::invalid_argument);
}

TEST_CASE("chebyshev table rows") {
  // explicit polynomials, degree 0..6, both kinds
  auto t_poly = [](int n, double x) -> double {
    double x2 = x * x, x3 = x2 * x, x4 = x3 * x, x5 = x4 * x, x6 = x5 * x;
    switch (n) {
      case 0: return 1;
      case 1: return x;
      case 2: return 2 * x2 - 1;
      case 3: return 4 * x3 - 3 * x;
      case 4: return 8 * x4 - 8 * x2 + 1;
      case 5: return 16 * x5 - 20 * x3 + 5 * x;
      default: return 32 * x6 - 48 * x4 + 18 * x2 - 1;
    }
  };
  auto u_poly = [](int n, double x) -> double {
    double x2 = x * x, x3 = x2 * x, x4 = x3 * x, x5 = x4 * x, x6 = x5 * x;
    switch (n) {
      case 0: return 1;
      case 1: return 2 * x;
      case 2: return 4 * x2 - 1;
      case 3: return 8 * x3 - 4 * x;
      case 4: return 16 * x4 - 12 * x2 + 1;
      case 5: return 32 * x5 - 32 * x3 + 6 * x;
      default: return 64 * x6 - 80 * x4 + 24 * x2 - 1;
    }
  };
  for (int n = 0; n <= 6; ++n)
    for (int s = 0; s < 10; ++s) {
      double x = -1.0 + 2.0 * s / 9.0;
      CHECK(near(chebyshev(ChebyshevKind::First, n, x), t_poly(n, x), 1e-12));
      CHECK(near(chebyshev(ChebyshevKind::Second, n, x), u_poly(n, x), 1e-12));
    }
}

TEST_CASE("chebyshev angle identities") {
  for (int n = 1; n <= 20; ++n)
    for (int s = 1; s <= 12; ++s) {
      double theta = s * std::numbers::pi / 13.0;
      CHECK(near(std::cos(n * theta), chebyshev_t(n, std::cos(theta)), 1e-10));
      CHECK(near(std::sin(n * theta), std::sin(theta) * chebyshev_u(n - 1, std::cos(theta)), 1e-10));
    }
}

TEST_CASE("transition points") {
  CHECK(near(transition_point(2), 0.0, 1e-12));
  CHECK(near(transition_point(3), 0.5, 1e-12));
  CHECK(near(transition_point(4), (std::sqrt(5.0) - 1) / 2, 1e-12));
  CHECK(near(transition_point(5), 2.0 / 3.0, 1e-12));
  CHECK(near(transition_point(7), std::sqrt(2.0) / 2, 1e-12));
  for (int k : {6, 8, 9, 10})
    CHECK(near(transition_point(k), reference::transition_decimal(k), 0.5e-6));

  for (int k = 2; k < 40; ++k) CHECK(transition_point(k) < transition_point(k + 1));
  CHECK(transition_point(4000) < 0.75);
  CHECK(transition_point(4000) > 0.7499);
  CHECK_THROWS_AS(transition_point(1), std::invalid_argument);
}

TEST_CASE("toeplitz eigensystem pinned values") {
  auto e2 = toeplitz_eigs(2, 1.0);
  REQUIRE(e2.size() == 2);
  CHECK(near(e2[0].lambda, 0.0, 1e-12));
  CHECK(near(e2[1].lambda, -2.0, 1e-12));

  auto e3 = toeplitz_eigs(3, 0.0);
  CHECK(near(e3[0].lambda, std::sqrt(2.0), 1e-12));
  CHECK(near(e3[1].lambda, 0.0, 1e-12));
  CHECK(near(e3[2].lambda, -std::sqrt(2.0), 1e-12));

  // w.1 for k=2, a=1: direct sum and closed form agree at sqrt(2)
  double direct = e2[0].w[0] + e2[0].w[1];
  CHECK(near(direct, std::sqrt(2.0), 1e-12));
  CHECK(near(e2[0].wdot1, std::sqrt(2.0), 1e-12));
}

TEST_CASE("toeplitz residuals and closed-form dot products") {
  for (int k = 2; k <= 50; ++k)
    for (double P : {0.0, 0.5, 1.0, 1.5, 2.0}) {
      auto eigs = toeplitz_eigs(k, P);
      for (const auto& e : eigs) {
        double norm2 = 0, direct = 0, residual = 0;
        for (int b = 0; b < k; ++b) {
          norm2 += e.w[b] * e.w[b];
          direct += e.w[b];
          double prev = b > 0 ? e.w[b - 1] : 0.0;
          double next = b + 1 < k ? e.w[b + 1] : 0.0;
          residual = std::max(residual, std::fabs(prev - P * e.w[b] + next - e.lambda * e.w[b]));
        }
        CHECK(near(norm2, 1.0, 1e-12));
        CHECK(residual <= 1e-10);
        CHECK(near(e.wdot1, direct, 1e-10));
      }
    }
}

TEST_CASE("path g pinned values") {
  CHECK(near(path_g(5, 2.0 / 3.0), 5.0 / 18.0, 1e-12));
  CHECK(near(path_g(3, 0.6), 3.0 / 11.0, 1e-12));
  // continuity into the next piece: the k=4 row evaluated at p_5
  double p5 = 2.0 / 3.0;
  CHECK(near(reference::path_g_row(4, p5), 5.0 / 18.0, 1e-12));
  CHECK(near(path_g(4, p5), 5.0 / 18.0, 1e-12));
  // the k=2 path is K(2,0): g = p/2 across the whole window
  for (double p : {0.05, 0.3, 0.5, 0.7}) CHECK(near(path_g(2, p), p / 2, 1e-12));
}

TEST_CASE("path g window validation") {
  CHECK_THROWS_AS(path_g(3, 0.45), std::domain_error);
  CHECK_THROWS_AS(path_g(4, 0.8), std::domain_error);
  CHECK_THROWS_AS(path_g(4, 0.75), std::domain_error);
  CHECK_THROWS_AS(path_g(1, 0.6), std::invalid_argument);
  CHECK_NOTHROW(path_g(4, transition_point(4)));  // continuous extension at p_k
  CHECK_NOTHROW(path_weights(5, 2.0 / 3.0));
}

TEST_CASE("exactly representable transition densities") {
  // p = 0 and p = 1/2 hit the shared Chebyshev root head-on
  CHECK(near(path_g(2, 0.0), 0.0, 1e-15));
  auto w2 = path_weights(2, 0.0);
  CHECK(near(w2[0], 0.5, 1e-15));
  CHECK(near(w2[1], 0.5, 1e-15));

  CHECK(near(path_g(3, 0.5), 0.25, 1e-15));
  auto w3 = path_weights(3, 0.5);
  CHECK(near(w3[0], 0.25, 1e-15));
  CHECK(near(w3[1], 0.5, 1e-15));
  CHECK(near(w3[2], 0.25, 1e-15));
  // matches the tabulated row at the same density
  auto row = reference::path_weights_row(3, 0.5);
  for (int a = 0; a < 3; ++a) CHECK(near(w3[a], row[a], 1e-15));
}

TEST_CASE("path weights pinned values") {
  auto w5 = path_weights(5, 2.0 / 3.0);
  double want5[5] = {1.0 / 12, 0.25, 1.0 / 3, 0.25, 1.0 / 12};
  for (int a = 0; a < 5; ++a) CHECK(near(w5[a], want5[a], 1e-9));

  auto w4 = path_weights(4, 2.0 / 3.0);
  double want4[4] = {1.0 / 6, 1.0 / 3, 1.0 / 3, 1.0 / 6};
  for (int a = 0; a < 4; ++a) CHECK(near(w4[a], want4[a], 1e-9));

  for (double p : {0.1, 0.4, 0.6}) {
    auto w2 = path_weights(2, p);
    CHECK(near(w2[0], 0.5, 1e-10));
    CHECK(near(w2[1], 0.5, 1e-10));
  }
}

TEST_CASE("closed forms agree with the simplex program") {
  for (int k = 2; k <= 10; ++k) {
    double lo = transition_point(k), hi = transition_point(k + 1);
    for (int s = 1; s <= 5; ++s) {
      double p = lo + (hi - lo) * s / 5.0;
      CHECK(near(path_g(k, p), g_value(path_crg(k), p).g, 1e-9));
    }
  }
}

TEST_CASE("weights are symmetric, unimodal, normalized, and solve M x = g 1") {
  for (int k = 2; k <= 10; ++k) {
    double lo = transition_point(k), hi = transition_point(k + 1);
    for (double f : {0.25, 0.75, 1.0}) {
      double p = lo + (hi - lo) * f;
      auto x = path_weights(k, p);
      double sum = 0;
      for (double v : x) {
        CHECK(v > 0);
        sum += v;
      }
      CHECK(near(sum, 1.0, 1e-10));
      for (int a = 0; a < k; ++a) CHECK(near(x[a], x[k - 1 - a], 1e-10));
      for (int a = 0; a + 1 < (k + 1) / 2; ++a) CHECK(x[a] <= x[a + 1] + 1e-12);

      CostMatrix m = cost_matrix(path_crg(k), p);
      double g = path_g(k, p);
      for (int i = 0; i < k; ++i) {
        double acc = 0;
        for (int j = 0; j < k; ++j) acc += m.at(i, j) * x[j];
        CHECK(near(acc, g, 1e-9));
      }
    }
  }
}

TEST_CASE("second eigenvalue rules out p-coreness below the transition") {
  for (int k = 3; k <= 8; ++k) {
    double p = transition_point(k) - 0.01;
    double P = (2 * p - 1) / (1 - p);
    double lambda2 = 2 * std::cos(2 * std::numbers::pi / (k + 1)) - P;
    CHECK(lambda2 >= 0.0);
    CHECK_FALSE(is_p_core(path_crg(k), p));
  }
}

TEST_CASE("extended p-core window") {
  for (int k = 3; k <= 6; ++k) {
    double lo = transition_point(k), hi = transition_point(2 * k - 1);
    for (double f : {0.15, 0.5, 0.9}) {
      double p = lo + (hi - lo) * f;
      CHECK(is_p_core(path_crg(k), p));
    }
  }
}

TEST_CASE("path params") {
  PathParams pp = path_params(5, 2.0 / 3.0);
  CHECK(near(pp.P, 1.0, 1e-12));
  CHECK(near(pp.theta, std::numbers::pi / 3, 1e-12));
  CHECK(near(2 * std::cos(pp.theta), pp.P, 1e-12));
  CHECK(near(pp.G, 1 - path_g(5, 2.0 / 3.0) / (1 - 2.0 / 3.0), 1e-12));
  CHECK(pp.G > 0);
  CHECK(pp.G < 1);
}

TEST_CASE("trig and rational forms of G agree") {
  for (int k = 2; k <= 12; ++k) {
    double lo = transition_point(k);
    for (double f : {0.1, 0.5, 0.9}) {
      double p = lo + (transition_point(k + 1) - lo) * f;
      CHECK(near(detail::path_g_reduced_cheb(k, p), detail::path_g_reduced_trig(k, p), 1e-10));
    }
  }
  // large-k regime runs on the trig branch; compare with the simplex program
  // at k = 14 where both are still cheap
  double p = transition_point(14) * 0.3 + transition_point(15) * 0.7;
  CHECK(near(detail::path_g_reduced_cheb(14, p), detail::path_g_reduced_trig(14, p), 1e-10));
}
