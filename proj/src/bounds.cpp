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

#include "tempcorr/bounds.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "tempcorr/error.hpp"

namespace tempcorr {

namespace {

void check_unit_interval(double x, const char* name, double lo = -1.0) {
  if (!(x >= lo && x <= 1.0)) {
    std::ostringstream os;
    os << name << " = " << x << " outside [" << lo << ", 1]";
    throw Error(ErrorCode::kDomainError, os.str());
  }
}

double safe_sqrt(double v) { return std::sqrt(std::max(0.0, v)); }

using Poly = std::vector<std::int64_t>;

// c - k * x * q
Poly c_minus_kxq(std::int64_t c, std::int64_t k, const Poly& q) {
  Poly r(q.size() + 1, 0);
  r[0] = c;
  for (std::size_t i = 0; i < q.size(); ++i) r[i + 1] -= k * q[i];
  return r;
}

std::array<std::int64_t, 11> expand_nested() {
  Poly q{0, 2, 2};  // 2 (1 + x) x
  q[0] += -3;
  q = c_minus_kxq(19, 4, q);
  q = c_minus_kxq(481, 8, q);
  q = c_minus_kxq(-762, 1, q);
  q = c_minus_kxq(-24, 1, q);
  q = c_minus_kxq(380, 1, q);
  q = c_minus_kxq(-531, 4, q);
  q = c_minus_kxq(42, 1, q);
  q = c_minus_kxq(1, 1, q);
  std::array<std::int64_t, 11> out{};
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = q.at(i);
  return out;
}

}  // namespace

double b1_projective_profile(double x) {
  check_unit_interval(x, "cos(gamma)");
  const double big_x = 2.0 + safe_sqrt(2.0 - 2.0 * x);
  return big_x / 4.0 * (2.0 + safe_sqrt(2.0 + 2.0 * x));
}

double b3_profile(double x) {
  check_unit_interval(x, "cos(gamma)");
  const double x0 = 2.0 + safe_sqrt(2.0 + 2.0 * x);
  const double x1 = 2.0 + safe_sqrt(2.0 - 2.0 * x);
  return 0.25 * (x0 + x1 + safe_sqrt(x0 * x0 + x1 * x1 + 2.0 * x0 * x1 * x));
}

double b3_profile_derivative(double x) {
  if (!(x > -1.0 && x < 1.0)) throw Error(ErrorCode::kDomainError, "derivative defined on (-1, 1) only");
  const double s0 = std::sqrt(2.0 + 2.0 * x);
  const double s1 = std::sqrt(2.0 - 2.0 * x);
  const double x0 = 2.0 + s0;
  const double x1 = 2.0 + s1;
  const double dx0 = 1.0 / s0;
  const double dx1 = -1.0 / s1;
  const double d = x0 * x0 + x1 * x1 + 2.0 * x0 * x1 * x;
  const double dd = 2.0 * x0 * dx0 + 2.0 * x1 * dx1 + 2.0 * (dx0 * x1 + x0 * dx1) * x + 2.0 * x0 * x1;
  return 0.25 * (dx0 + dx1 + dd / (2.0 * std::sqrt(d)));
}

double b4_envelope(double p, double x) {
  check_unit_interval(p, "p", 0.0);
  check_unit_interval(x, "cos(gamma)");
  const double x0 = 1.0 + p + safe_sqrt(p * p + 1.0 + 2.0 * p * x);
  const double x1 = 3.0 - p + safe_sqrt(p * p + 1.0 - 2.0 * p * x);
  return 0.25 * ((2.0 - p) * x0 + x1 + safe_sqrt(p * p * x0 * x0 + x1 * x1 + 2.0 * p * x0 * x1 * x));
}

const std::array<std::int64_t, 11>& c3_polynomial() {
  static const std::array<std::int64_t, 11> coeffs = expand_nested();
  return coeffs;
}

double c3_polynomial_nested(double x) {
  return 1 - x * (42 - x * (-531 - 4 * x * (380 - x * (-24 - x * (-762 - x * (481 - 8 * x * (19 - 4 * x * (-3 + 2 * (1 + x) * x))))))));
}

double c3_polynomial_expanded(double x) {
  const auto& c = c3_polynomial();
  double v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + static_cast<double>(*it);
  return v;
}

std::vector<double> c3_polynomial_roots(int brackets, double xtol) {
  if (brackets < 1) throw Error(ErrorCode::kInvalidArgument, "need at least one bracket");
  std::vector<double> roots;
  const double h = 2.0 / brackets;
  double lo = -1.0;
  double flo = c3_polynomial_expanded(lo);
  for (int i = 1; i <= brackets; ++i) {
    const double hi = (i == brackets) ? 1.0 : -1.0 + i * h;
    const double fhi = c3_polynomial_expanded(hi);
    if (flo == 0.0) {
      roots.push_back(lo);
    } else if ((flo < 0.0) != (fhi < 0.0) && fhi != 0.0) {
      double a = lo;
      double b = hi;
      double fa = flo;
      while (b - a > xtol) {
        const double m = 0.5 * (a + b);
        const double fm = c3_polynomial_expanded(m);
        if (fm == 0.0) {
          a = b = m;
          break;
        }
        if ((fa < 0.0) == (fm < 0.0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    lo = hi;
    flo = fhi;
  }
  if (flo == 0.0) roots.push_back(lo);
  return roots;
}

C3Bound c3_bound() {
  constexpr double kDerivativeTol = 1e-8;
  std::vector<double> accepted;
  for (double r : c3_polynomial_roots()) {
    if (r <= -1.0 || r >= 1.0) continue;
    if (std::abs(b3_profile_derivative(r)) <= kDerivativeTol) accepted.push_back(r);
  }
  if (accepted.empty()) throw Error(ErrorCode::kNoValidRoot, "no polynomial root is a stationary point of the B3 profile");
  double best = accepted.front();
  for (double r : accepted)
    if (b3_profile(r) > b3_profile(best)) best = r;
  const double value = b3_profile(best);
  const bool boundaries_lower = b3_profile(-1.0) <= 3.0 && b3_profile(1.0) <= 3.0 && value > 3.0;
  return {value, best, accepted.size() == 1 && boundaries_lower};
}

C1Bound c1_bound() { return {3.0, 1.5 + std::numbers::sqrt2}; }

double bounds::b4_cap() { return 2.0 + std::numbers::sqrt2; }

}  // namespace tempcorr
