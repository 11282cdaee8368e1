#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace nhmono {

template <typename Scalar>
struct QuadratureRule1D {
  std::vector<Scalar> nodes;
  std::vector<Scalar> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1], Newton iteration on P_n.
template <typename Scalar>
QuadratureRule1D<Scalar> gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  using std::abs;
  using std::cos;
  QuadratureRule1D<Scalar> rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  // (P_n(x), P_n'(x)) by the three-term recurrence
  auto legendre = [n](Scalar x) {
    Scalar p0 = 1, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const Scalar pk = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    const Scalar dp = n == 1 ? Scalar(1) : n * (x * p1 - p0) / (x * x - 1);
    return std::array<Scalar, 2>{p1, dp};
  };
  for (int i = 0; i < (n + 1) / 2; ++i) {
    Scalar x = cos(pi * (i + Scalar(0.75)) / (n + Scalar(0.5)));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [pn, dp] = legendre(x);
      const Scalar dx = pn / dp;
      x -= dx;
      if (abs(dx) <= 4 * eps) break;
    }
    const Scalar dp = legendre(x)[1];
    const Scalar w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0;
  return rule;
}

/// Gauss-Legendre rule mapped to [a, b].
template <typename Scalar>
QuadratureRule1D<Scalar> gauss_legendre(int n, Scalar a, Scalar b) {
  auto rule = gauss_legendre<Scalar>(n);
  const Scalar half = (b - a) / 2;
  const Scalar mid = (a + b) / 2;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    rule.nodes[i] = mid + half * rule.nodes[i];
    rule.weights[i] *= half;
  }
  return rule;
}

/// Barycentric point (l1, l2, l3) with weight normalized to total 1.
template <typename Scalar>
struct TrianglePoint {
  Scalar l1, l2, l3, weight;
};

/// 7-point degree-5 rule for triangles.
template <typename Scalar>
std::array<TrianglePoint<Scalar>, 7> triangle_rule_degree5() {
  using std::sqrt;
  const Scalar r15 = sqrt(Scalar(15));
  const Scalar a = (6 - r15) / 21;
  const Scalar b = (6 + r15) / 21;
  const Scalar wa = (155 - r15) / 1200;
  const Scalar wb = (155 + r15) / 1200;
  const Scalar third = Scalar(1) / 3;
  return {{{third, third, third, Scalar(9) / 40},
           {a, a, 1 - 2 * a, wa},
           {a, 1 - 2 * a, a, wa},
           {1 - 2 * a, a, a, wa},
           {b, b, 1 - 2 * b, wb},
           {b, 1 - 2 * b, b, wb},
           {1 - 2 * b, b, b, wb}}};
}

}  // namespace nhmono
