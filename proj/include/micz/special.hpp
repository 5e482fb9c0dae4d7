// Copyright 2026 The micz-su11 Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <utility>

#include "micz/common.hpp"

namespace micz::sf {

/// ln Gamma(x) for x > 0. Relative error below 1e-14 over the usable range.
double log_gamma(double x);

/// Associated Laguerre polynomial L_n^alpha(x) by the ascending three-term
/// recurrence
///   (i+1) L_{i+1} = (2i+1+alpha-x) L_i - (i+alpha) L_{i-1}.
/// The recurrence coefficients are polynomial in x, so the same code path
/// serves real and complex arguments.
template <class Scalar>
Scalar laguerre_assoc(int n, double alpha, Scalar x) {
  if (n < 0) throw std::invalid_argument("laguerre_assoc: n must be >= 0");
  if (alpha <= -1.0) throw std::invalid_argument("laguerre_assoc: alpha must be > -1");
  if (n == 0) return Scalar(1);
  Scalar lm1 = Scalar(1);
  Scalar l = Scalar(1.0 + alpha) - x;
  for (int i = 1; i < n; ++i) {
    Scalar next = ((Scalar(2.0 * i + 1.0 + alpha) - x) * l - (i + alpha) * lm1) / double(i + 1);
    lm1 = l;
    l = next;
  }
  return l;
}

/// L_n^alpha(x) together with a base-e scaling exponent, for arguments where
/// the raw recurrence overflows: value = mantissa * exp(log_scale).
template <class Scalar>
std::pair<Scalar, double> laguerre_assoc_scaled(int n, double alpha, Scalar x) {
  if (n < 0) throw std::invalid_argument("laguerre_assoc: n must be >= 0");
  if (alpha <= -1.0) throw std::invalid_argument("laguerre_assoc: alpha must be > -1");
  if (n == 0) return {Scalar(1), 0.0};
  Scalar lm1 = Scalar(1);
  Scalar l = Scalar(1.0 + alpha) - x;
  double log_scale = 0.0;
  constexpr double kBig = 1e280;
  constexpr double kLogBig = 644.73296951346541;  // ln(1e280)
  for (int i = 1; i < n; ++i) {
    Scalar next = ((Scalar(2.0 * i + 1.0 + alpha) - x) * l - (i + alpha) * lm1) / double(i + 1);
    lm1 = l;
    l = next;
    if (std::abs(l) > kBig) {
      l /= kBig;
      lm1 /= kBig;
      log_scale += kLogBig;
    }
  }
  return {l, log_scale};
}

/// Jacobi polynomial P_n^{(a,b)}(x) by the standard three-term recurrence;
/// a, b > -1 may be non-integer.
double jacobi_poly(int n, double a, double b, double x);

enum class QuadKind { HalfLineExponential, JacobiInterval };

/// Nodes/weights of a positive quadrature rule. Nodes are strictly
/// increasing. `budget` and the map parameters are kept so a refined
/// (doubled) rule can be rebuilt for convergence checks.
struct QuadratureRule {
  RealVec nodes;
  RealVec weights;
  QuadKind kind = QuadKind::HalfLineExponential;
  int budget = 0;       // requested point count
  double param0 = 1.0;  // half-line: scale; interval: lower bound a
  double param1 = 0.0;  // interval: upper bound b

  int size() const { return static_cast<int>(nodes.size()); }
};

/// Composite Gauss-Legendre rule on (0, inf) through the rational map
/// r = scale * t / (1 - t). Panel edges are graded dyadically toward both
/// ends of [0,1] so integrands with algebraic endpoint behaviour (r^alpha,
/// non-integer alpha) converge as well as smooth ones. point_count is a
/// budget; the rule rounds up to whole 16-point panels.
QuadratureRule half_line_rule(int point_count, double scale);

/// Same panel layout mapped affinely onto [a, b] (default [-1, 1]).
QuadratureRule interval_rule(int point_count, double a = -1.0, double b = 1.0);

/// The same rule with twice the point budget (used for convergence checks).
QuadratureRule refined(const QuadratureRule& rule);

}  // namespace micz::sf
