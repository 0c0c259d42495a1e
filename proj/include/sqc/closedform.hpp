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

#include <cmath>

#include "sqc/linalg.hpp"

namespace sqc {

/// The four programmable phases and the derived half-sums. The device's
/// horizontal block depends on the phases only through phi_second; the
/// vertical block only through the left/right half-sums.
struct PhaseQuad {
  double phi1 = 0, phi2 = 0, phi3 = 0, phi4 = 0;

  double phi() const { return 0.5 * (phi1 + phi2); }
  double phi_second() const { return 0.5 * (phi3 + phi4); }
  double theta_left() const { return 0.5 * (phi1 + phi3); }
  double theta_right() const { return 0.5 * (phi2 + phi4); }
};

/// Grover four-port in the (SR, SL, AR, AL) basis: identity on the
/// symmetric block, -sigma_x on the antisymmetric one.
inline Mat grover_sa_matrix() {
  Mat g = Mat::Zero(4, 4);
  g(0, 0) = 1;
  g(1, 1) = 1;
  g(2, 3) = -1;
  g(3, 2) = -1;
  return g;
}

namespace detail {
/// S/A mixing rotation by theta, identity on direction, (SR,SL,AR,AL) basis.
inline Mat sa_rotation(double theta) {
  const cx c{std::cos(theta), 0.0};
  const cx ms = -kI * std::sin(theta);
  Mat m = Mat::Zero(4, 4);
  m(0, 0) = c;
  m(1, 1) = c;
  m(2, 2) = c;
  m(3, 3) = c;
  m(0, 2) = ms;
  m(2, 0) = ms;
  m(1, 3) = ms;
  m(3, 1) = ms;
  return m;
}
}  // namespace detail

/// A single-rail phase shifter conjugated into the (SR, SL, AR, AL) basis:
/// e^{i phi/2} times an S/A rotation by the half angle phi/2. Derived from
/// first principles (diag(1, e^{i phi}) on the rails).
inline Mat phase_segment_matrix(double phi) {
  return std::exp(kI * (phi / 2.0)) * detail::sa_rotation(phi / 2.0);
}

/// Matrix product U(phi2) . G . U(phi1): the one-pass (feed-forward) form of
/// a shifter-Grover-shifter segment.
inline Mat segment_u2gu1(double phi1, double phi2) {
  return phase_segment_matrix(phi2) * grover_sa_matrix() * phase_segment_matrix(phi1);
}

/// The same product written out entrywise with c_j = cos(phi_j/2),
/// s_j = sin(phi_j/2); kept as an independent expansion for validation.
inline Mat segment_expanded_form(double phi1, double phi2) {
  const double c1 = std::cos(phi1 / 2.0), s1 = std::sin(phi1 / 2.0);
  const double c2 = std::cos(phi2 / 2.0), s2 = std::sin(phi2 / 2.0);
  Mat m(4, 4);
  m << c1 * c2, s1 * s2, -kI * (c2 * s1), kI * (s2 * c1),
      s1 * s2, c1 * c2, kI * (s2 * c1), -kI * (c2 * s1),
      -kI * (s2 * c1), kI * (c2 * s1), -s1 * s2, -c2 * c1,
      kI * (c2 * s1), -kI * (s2 * c1), -c1 * c2, -s1 * s2;
  return std::exp(kI * ((phi1 + phi2) / 2.0)) * m;
}

/// Closed-form vertical block of the programmable device in two-sided
/// scattering form. thetaL/thetaR are the half-sums of the phases a vertical
/// photon crosses before/after the Grover. Transmission composes both
/// half-rotations; reflection composes the same-side one twice around the
/// Grover's -1 on the antisymmetric subspace.
inline Mat programmable_v_block(double theta_l, double theta_r) {
  const double cl = std::cos(theta_l), sl = std::sin(theta_l);
  const double cr = std::cos(theta_r), sr = std::sin(theta_r);
  const cx el = std::exp(kI * (2.0 * theta_l));
  const cx er = std::exp(kI * (2.0 * theta_r));
  const cx es = std::exp(kI * (theta_l + theta_r));
  Mat m(4, 4);
  m << es * (cr * cl), er * (sr * sr), -kI * es * (cr * sl), kI * er * (sr * cr),
      el * (sl * sl), es * (cl * cr), kI * el * (sl * cl), -kI * es * (cl * sr),
      -kI * es * (sr * cl), kI * er * (sr * cr), -es * (sr * sl), -er * (cr * cr),
      kI * el * (sl * cl), -kI * es * (sl * cr), -el * (cl * cl), -es * (sl * sr);
  return m;
}

/// Full 8x8 closed form in the (HSR..HAL, VSR..VAL) ordering: the
/// horizontal block is a pure S/A rotation by phi_second with matching
/// prefactor; the vertical block carries the Grover coupling.
inline Mat programmable_closed_form(const PhaseQuad& q) {
  Mat u = Mat::Zero(8, 8);
  u.block(0, 0, 4, 4) =
      std::exp(kI * q.phi_second()) * detail::sa_rotation(q.phi_second());
  u.block(4, 4, 4, 4) = programmable_v_block(q.theta_left(), q.theta_right());
  return u;
}

}  // namespace sqc
