// Copyright 2026 The micz-su11 Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

#include "micz/common.hpp"

namespace micz::su11 {

/// Label of the positive discrete series D^+_k. For the Kepler-type radial
/// problem k = J + 1 with J >= 0, but any k > 1/2 is accepted.
struct BargmannIndex {
  double k;

  explicit BargmannIndex(double k_) : k(k_) {
    if (!(k > 0.5 - 1e-12))
      throw std::invalid_argument("BargmannIndex: k must exceed 1/2 (positive discrete series)");
  }
};

/// Displacement parameters in the canonical (tau, phi) convention:
///   xi   = -(tau/2) e^{-i phi}
///   zeta = -tanh(tau/2) e^{-i phi}        (|zeta| < 1)
///   eta  = ln(1 - |zeta|^2) = -2 ln cosh|xi|
///   sigma = (1 - |zeta|^2) / (zeta^* (1 - zeta))   (undefined at zeta = 0)
/// xi and zeta are always derived from (tau, phi), never set independently.
struct CoherentParams {
  double tau = 0.0;
  double phi = 0.0;

  static CoherentParams from_tau_phi(double tau, double phi) {
    if (!(tau >= 0.0)) throw std::invalid_argument("CoherentParams: tau must be >= 0");
    return CoherentParams{tau, wrap_angle(phi)};
  }

  Complex xi() const { return -0.5 * tau * std::exp(Complex(0.0, -phi)); }
  Complex zeta() const { return -std::tanh(0.5 * tau) * std::exp(Complex(0.0, -phi)); }
  double eta() const { return std::log1p(-std::norm(zeta())); }
  double abs_xi() const { return 0.5 * tau; }

  Complex sigma() const {
    const Complex z = zeta();
    if (z == Complex(0.0, 0.0))
      throw std::domain_error("CoherentParams::sigma: undefined at zeta = 0");
    return (1.0 - std::norm(z)) / (std::conj(z) * (1.0 - z));
  }
};

/// Coefficient vector over the truncated basis {|k,n> : 0 <= n <= cutoff}.
/// `tail` is the norm-squared lost to truncation when the vector was produced
/// by a unitary map (0 for exactly representable states).
struct FockVector {
  BargmannIndex k;
  Vec coeffs;
  double tail = 0.0;

  int cutoff() const { return static_cast<int>(coeffs.size()) - 1; }
  double norm() const { return coeffs.norm(); }
};

/// Truncated generator matrices. t0 is diagonal with entries n+k, tp maps
/// n -> n+1 with sqrt((n+1)(n+2k)), tm maps n -> n-1 with sqrt(n(n+2k-1)).
/// tp = tm^H holds on the whole truncated space; the algebra itself breaks
/// only on the boundary column (the n = cutoff -> cutoff+1 transition is
/// lost), which is why identity checks exclude the last row/column.
struct Generators {
  Mat t0, tp, tm;
  int boundary;  // index of the truncation boundary (= cutoff)
};

Generators build_generators(BargmannIndex k, int cutoff);

/// Casimir eigenvalue k(k-1) of D^+_k.
double casimir_value(BargmannIndex k);

/// Disentangling D(xi) = exp(zeta T+) exp(eta T0) exp(-zeta^* T-).
struct NormalForm {
  Complex zeta;
  double eta;
};
NormalForm normal_form(const CoherentParams& params);

/// D(xi)|k,n> expanded over the truncated basis. All factorial ratios go
/// through log-gamma; the expansion is cut off either at `cutoff` or once
/// coefficients have stalled below 1e-16 of the accumulated norm for five
/// consecutive terms. Throws NumericalError if the truncation tail exceeds
/// tail_tol (the message reports the achieved tail).
FockVector displace_number_state(const CoherentParams& params, BargmannIndex k, int n, int cutoff,
                                 double tail_tol = 1e-12);

/// Closed-form expectation values in the displaced number state:
///   <T0>    = cosh(2|xi|)(k+n)
///   <T+/-> = -e^{+/- i phi} sinh(2|xi|)(k+n)
struct GeneratorExpectations {
  double t0;
  Complex tp, tm;
};
GeneratorExpectations expectation_generators(const CoherentParams& params, BargmannIndex k, int n);

enum class GeneratorId { T0, Plus, Minus };

/// Expansion of D^+(xi) T D(xi) = c0 T0 + cp T+ + cm T-, with
/// alpha = sinh(2|xi|), beta = (cosh(2|xi|) - 1)/2.
struct SimilarityCoeffs {
  Complex c0, cp, cm;
};
SimilarityCoeffs similarity_transform(const CoherentParams& params, GeneratorId which);

}  // namespace micz::su11
