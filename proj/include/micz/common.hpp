// Copyright 2026 The micz-su11 Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace micz {

inline constexpr const char* kVersion = "0.1.0";

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;

/// Thrown when an iterative or truncated computation cannot reach its
/// requested accuracy (distinct from precondition violations, which use
/// std::invalid_argument / std::domain_error).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr double kPi = 3.14159265358979323846;

/// Wrap an angle into [0, 2*pi).
inline double wrap_angle(double phi) {
  double w = std::fmod(phi, 2.0 * kPi);
  if (w < 0.0) w += 2.0 * kPi;
  return w;
}

}  // namespace micz
