// Copyright 2026 The tempcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TEMPCORR_BOUNDS_HPP
#define TEMPCORR_BOUNDS_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace tempcorr {

/// B1 at the optimal pure states for projective rank-1 effects whose axes
/// have overlap x = cos(gamma): X/4 (2 + sqrt(2 + 2x)), X = 2 + sqrt(2 - 2x).
double b1_projective_profile(double x);

/// B3 at the optimal pure states for rank-1 effects with axis overlap x:
/// (X0 + X1 + sqrt(X0^2 + X1^2 + 2 X0 X1 x)) / 4 with
/// X0 = 2 + sqrt(2 + 2x), X1 = 2 + sqrt(2 - 2x).
double b3_profile(double x);

/// d b3_profile / dx on the open interval (-1, 1).
double b3_profile_derivative(double x);

/// B4 envelope for effect parameter p in [0, 1] and axis overlap x:
/// ((2 - p) X0 + X1 + sqrt(p^2 X0^2 + X1^2 + 2 p X0 X1 x)) / 4 with
/// X0 = 1 + p + sqrt(p^2 + 1 + 2 p x), X1 = 3 - p + sqrt(p^2 + 1 - 2 p x).
double b4_envelope(double p, double x);

/// Integer coefficients (ascending powers) of the degree-10 polynomial whose
/// roots contain the stationary points of b3_profile, expanded exactly from
/// its nested form.
const std::array<std::int64_t, 11>& c3_polynomial();

/// The nested form evaluated directly (no expansion).
double c3_polynomial_nested(double x);

/// Horner evaluation of c3_polynomial().
double c3_polynomial_expanded(double x);

/// Real roots of c3_polynomial() in [-1, 1]: sign-change bracketing on
/// `brackets` subintervals, then bisection to `xtol`.
std::vector<double> c3_polynomial_roots(int brackets = 10'000, double xtol = 1e-12);

struct C3Bound {
  double value;       // b3_profile at the accepted root
  double cos_gamma;   // the accepted root
  bool certified;     // unique root passed the derivative filter and boundaries are lower
};

/// Keeps the polynomial roots where the unsquared derivative of b3_profile
/// vanishes within 1e-8 and checks b3_profile(+-1) <= 3. Throws NoValidRoot if
/// no root survives.
C3Bound c3_bound();

struct C1Bound {
  double value;          // 3
  double projective_max; // 3/2 + sqrt(2)
};
C1Bound c1_bound();

namespace bounds {
/// Conjectured qubit maximum of B2 and its analytic cap.
inline constexpr double kB2Conjectured = 3.0;
inline constexpr double kB2Cap = 3.5;
/// Analytic cap on B4: 2 + sqrt(2).
double b4_cap();
}  // namespace bounds

}  // namespace tempcorr

#endif  // TEMPCORR_BOUNDS_HPP
