// Copyright 2026 The sqc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <numbers>

namespace sqc {

using cx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr cx kI{0.0, 1.0};

// Tolerances used throughout: analytically exact matrices are held to
// 1e-12, anything that went through a compilation pipeline to 1e-10.
inline constexpr double kTolExact = 1e-12;
inline constexpr double kTolCompiled = 1e-10;
inline constexpr double kTolPhaseMatch = 1e-8;

inline double max_abs_diff(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return std::numeric_limits<double>::infinity();
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

/// Max-entry deviation of U^dagger U from the identity. Columns of a
/// rectangular U are checked for orthonormality (isometry).
inline double unitarity_defect(const Mat& u) {
  Mat g = u.adjoint() * u;
  return max_abs_diff(g, Mat::Identity(u.cols(), u.cols()));
}

inline bool is_unitary(const Mat& u, double tol = kTolExact) {
  return unitarity_defect(u) < tol;
}

}  // namespace sqc
