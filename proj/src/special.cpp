// Copyright 2026 The micz-su11 Authors
// SPDX-License-Identifier: Apache-2.0

#include "micz/special.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace micz::sf {

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("log_gamma: x must be > 0");
  return std::lgamma(x);
}

double jacobi_poly(int n, double a, double b, double x) {
  if (n < 0) throw std::invalid_argument("jacobi_poly: n must be >= 0");
  if (a <= -1.0 || b <= -1.0) throw std::invalid_argument("jacobi_poly: a and b must be > -1");
  if (n == 0) return 1.0;
  double pm1 = 1.0;
  double p = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
  for (int i = 2; i <= n; ++i) {
    // 2i(i+a+b)(2i+a+b-2) P_i = (2i+a+b-1)[(2i+a+b)(2i+a+b-2)x + a^2-b^2] P_{i-1}
    //                           - 2(i+a-1)(i+b-1)(2i+a+b) P_{i-2}
    double s = 2.0 * i + a + b;
    double c0 = 2.0 * i * (i + a + b) * (s - 2.0);
    double c1 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
    double c2 = 2.0 * (i + a - 1.0) * (i + b - 1.0) * s;
    double next = (c1 * p - c2 * pm1) / c0;
    pm1 = p;
    p = next;
  }
  return p;
}

namespace {

// 16-point Gauss-Legendre nodes on [-1,1] via Newton iteration on the
// Legendre recurrence (classic gauleg).
void gauss_legendre_16(std::vector<double>& x, std::vector<double>& w) {
  constexpr int n = 16;
  x.resize(n);
  w.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 1; i <= m; ++i) {
    double z = std::cos(kPi * (i - 0.25) / (n + 0.5));
    double z1, pp;
    do {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      z1 = z;
      z = z1 - p1 / pp;
    } while (std::abs(z - z1) > 1e-15);
    x[i - 1] = -z;
    x[n - i] = z;
    w[i - 1] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - i] = w[i - 1];
  }
}

// Panel edges on [0,1]: `depth` dyadic panels into each end, `mid` uniform
// panels across [1/4, 3/4].
std::vector<double> graded_edges(int depth, int mid) {
  std::vector<double> edges;
  edges.push_back(0.0);
  for (int i = depth - 1; i >= 0; --i) edges.push_back(0.25 * std::ldexp(1.0, -i));
  for (int i = 1; i < mid; ++i) edges.push_back(0.25 + 0.5 * i / mid);
  for (int i = 0; i < depth; ++i) edges.push_back(1.0 - 0.25 * std::ldexp(1.0, -i));
  edges.push_back(1.0);
  return edges;
}

// Composite 16-point rule on [0,1] with the graded layout for a given
// point budget.
void unit_rule(int point_count, std::vector<double>& t, std::vector<double>& wt) {
  const int panels = std::max(4, (point_count + 15) / 16);
  int depth = std::clamp(panels / 3, 1, 45);
  int mid = std::max(1, panels - 2 * depth);
  std::vector<double> edges = graded_edges(depth, mid);
  std::vector<double> gx, gw;
  gauss_legendre_16(gx, gw);
  t.clear();
  wt.clear();
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double a = edges[p], b = edges[p + 1];
    for (int i = 0; i < 16; ++i) {
      t.push_back(0.5 * (b - a) * gx[i] + 0.5 * (a + b));
      wt.push_back(0.5 * (b - a) * gw[i]);
    }
  }
}

}  // namespace

QuadratureRule half_line_rule(int point_count, double scale) {
  if (point_count < 2) throw std::invalid_argument("half_line_rule: point_count must be >= 2");
  if (!(scale > 0.0)) throw std::invalid_argument("half_line_rule: scale must be > 0");
  std::vector<double> t, wt;
  unit_rule(point_count, t, wt);
  QuadratureRule rule;
  rule.kind = QuadKind::HalfLineExponential;
  rule.budget = point_count;
  rule.param0 = scale;
  const int n = static_cast<int>(t.size());
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double u = t[i];
    rule.nodes[i] = scale * u / (1.0 - u);
    rule.weights[i] = wt[i] * scale / ((1.0 - u) * (1.0 - u));
  }
  return rule;
}

QuadratureRule interval_rule(int point_count, double a, double b) {
  if (point_count < 2) throw std::invalid_argument("interval_rule: point_count must be >= 2");
  if (!(a < b)) throw std::invalid_argument("interval_rule: requires a < b");
  std::vector<double> t, wt;
  unit_rule(point_count, t, wt);
  QuadratureRule rule;
  rule.kind = QuadKind::JacobiInterval;
  rule.budget = point_count;
  rule.param0 = a;
  rule.param1 = b;
  const int n = static_cast<int>(t.size());
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = a + (b - a) * t[i];
    rule.weights[i] = wt[i] * (b - a);
  }
  return rule;
}

QuadratureRule refined(const QuadratureRule& rule) {
  if (rule.kind == QuadKind::HalfLineExponential)
    return half_line_rule(2 * rule.budget, rule.param0);
  return interval_rule(2 * rule.budget, rule.param0, rule.param1);
}

}  // namespace micz::sf
