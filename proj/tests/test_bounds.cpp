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

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "tempcorr/bounds.hpp"
#include "test_support.hpp"

namespace tempcorr {
namespace {

const double kSqrt2 = std::numbers::sqrt2;

TEST(B1Profile, KnownValues) {
  EXPECT_NEAR(b1_projective_profile(0.0), 1.5 + kSqrt2, 1e-15);
  EXPECT_NEAR(b1_projective_profile(1.0), 2.0, 1e-15);
  EXPECT_NEAR(b1_projective_profile(-1.0), 2.0, 1e-15);
}

TEST(B1Profile, GridMaximumAtOrthogonalAxes) {
  const int n = 100'001;
  double best = -1.0, arg = 2.0;
  for (int i = 0; i < n; ++i) {
    const double x = -1.0 + 2.0 * i / (n - 1);
    const double v = b1_projective_profile(x);
    if (v > best) {
      best = v;
      arg = x;
    }
  }
  EXPECT_NEAR(best, 1.5 + kSqrt2, 1e-9);
  EXPECT_NEAR(arg, 0.0, 1e-12);
}

TEST(B3Profile, KnownValues) {
  EXPECT_NEAR(b3_profile(1.0), 3.0, 1e-15);
  EXPECT_NEAR(b3_profile(-1.0), 2.0, 1e-15);
  EXPECT_NEAR(b3_profile(0.756), 3.186, 5e-4);
}

TEST(Profiles, DomainErrors) {
  EXPECT_ERROR_CODE(b1_projective_profile(1.01), ErrorCode::kDomainError);
  EXPECT_ERROR_CODE(b3_profile(-1.5), ErrorCode::kDomainError);
  EXPECT_ERROR_CODE(b3_profile(std::nan("")), ErrorCode::kDomainError);
  EXPECT_ERROR_CODE(b4_envelope(-0.1, 0.0), ErrorCode::kDomainError);
  EXPECT_ERROR_CODE(b4_envelope(0.5, 2.0), ErrorCode::kDomainError);
  EXPECT_ERROR_CODE(b3_profile_derivative(1.0), ErrorCode::kDomainError);
}

TEST(B3Profile, DerivativeMatchesFiniteDifferences) {
  for (double x = -0.99; x < 0.99; x += 0.0137) {
    const double h = 1e-6;
    const double fd = (b3_profile(x + h) - b3_profile(x - h)) / (2 * h);
    EXPECT_NEAR(b3_profile_derivative(x), fd, 1e-6) << x;
  }
}

TEST(B4Envelope, ReducesToB3AtRankOne) {
  for (int i = 0; i <= 1000; ++i) {
    const double x = -1.0 + 2.0 * i / 1000.0;
    EXPECT_NEAR(b4_envelope(1.0, x), b3_profile(x), 1e-12);
  }
}

TEST(B4Envelope, GridMaximumAndCap) {
  const int n = 400;
  double best = -1.0;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double v = b4_envelope(static_cast<double>(i) / (n - 1), -1.0 + 2.0 * k / (n - 1));
      EXPECT_LE(v, bounds::b4_cap() + 1e-9);
      best = std::max(best, v);
    }
  EXPECT_NEAR(best, 3.186, 5e-3);
}

TEST(C3Polynomial, ExpansionMatchesIndependentCoefficients) {
  // Coefficients obtained separately by symbolic expansion.
  const std::array<std::int64_t, 11> expected{1, -42, -531, -1520, -96, 3048, 1924, -608, -384, 256, 256};
  EXPECT_EQ(c3_polynomial(), expected);
}

TEST(C3Polynomial, NestedAndExpandedEvaluationsAgree) {
  for (double x = -1.0; x <= 1.0; x += 0.001) {
    const double a = c3_polynomial_nested(x);
    const double b = c3_polynomial_expanded(x);
    EXPECT_NEAR(a, b, 1e-10 * std::max(1.0, std::abs(a))) << x;
  }
}

TEST(C3Polynomial, RootsMatchCompanionMatrixEigenvalues) {
  const auto& c = c3_polynomial();
  const int n = 10;
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -static_cast<double>(c[i]) / static_cast<double>(c[n]);
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
  std::vector<double> expected;
  for (int i = 0; i < n; ++i) {
    const auto z = es.eigenvalues()[i];
    if (std::abs(z.imag()) < 1e-9 && z.real() >= -1.0 && z.real() <= 1.0) expected.push_back(z.real());
  }
  std::sort(expected.begin(), expected.end());
  const auto roots = c3_polynomial_roots();
  ASSERT_EQ(roots.size(), expected.size());
  ASSERT_EQ(roots.size(), 6u);
  for (std::size_t i = 0; i < roots.size(); ++i) EXPECT_NEAR(roots[i], expected[i], 1e-9);
}

TEST(C3Bound, ValueAndDoubleCertification) {
  const C3Bound c = c3_bound();
  EXPECT_TRUE(c.certified);
  EXPECT_NEAR(c.value, 3.186, 5e-3);
  EXPECT_NEAR(c.cos_gamma, 0.756, 5e-3);
  EXPECT_LT(std::abs(c3_polynomial_nested(c.cos_gamma)), 1e-8);
  EXPECT_LT(std::abs(b3_profile_derivative(c.cos_gamma)), 1e-8);
  EXPECT_NEAR(c.value, b3_profile(c.cos_gamma), 0.0);
}

TEST(C3Bound, IsTheProfileMaximum) {
  const C3Bound c = c3_bound();
  const int n = 1'000'001;
  double best = -1.0;
  for (int i = 0; i < n; ++i) best = std::max(best, b3_profile(-1.0 + 2.0 * i / (n - 1)));
  EXPECT_LE(best, c.value + 1e-12);
  EXPECT_NEAR(best, c.value, 1e-9);
}

TEST(C3Bound, SpuriousRootsFailTheDerivativeFilter) {
  const C3Bound c = c3_bound();
  int rejected = 0;
  for (double r : c3_polynomial_roots()) {
    if (r == c.cos_gamma) continue;
    EXPECT_GT(std::abs(b3_profile_derivative(r)), 1e-8) << r;
    ++rejected;
  }
  EXPECT_EQ(rejected, 5);
}

TEST(C1Bound, Constants) {
  const C1Bound c = c1_bound();
  EXPECT_EQ(c.value, 3.0);
  EXPECT_NEAR(c.projective_max, 1.5 + kSqrt2, 1e-15);
  EXPECT_LT(c.projective_max, c.value);
  EXPECT_NEAR(bounds::b4_cap(), 2.0 + kSqrt2, 1e-15);
}

}  // namespace
}  // namespace tempcorr
