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

#include <cmath>

#include <gtest/gtest.h>

#include "tempcorr/quantum.hpp"
#include "tempcorr/random.hpp"
#include "test_support.hpp"

namespace tempcorr {
namespace {

const ComplexMatrix kX{{0.0, 1.0}, {1.0, 0.0}};
const ComplexMatrix kP0 = ComplexMatrix::unit(2, 0, 0);
const ComplexMatrix kP1 = ComplexMatrix::unit(2, 1, 1);

Instrument projective_z() { return instrument_from_kraus({kP0, kP1}); }

DensityMatrix plus_state() {
  const std::vector<Complex> plus{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
  return DensityMatrix(ComplexMatrix::outer(plus));
}

TEST(ValidateEffect, AcceptsIdentity) {
  EXPECT_EQ(validate_effect(ComplexMatrix::identity(2)).matrix(), ComplexMatrix::identity(2));
}

TEST(ValidateEffect, RejectsEigenvalueAboveOne) {
  EXPECT_ERROR_CODE(validate_effect(ComplexMatrix{{1.5, 0.0}, {0.0, 0.0}}), ErrorCode::kSpectrumOutOfRange);
}

TEST(ValidateEffect, RejectsNegativeEigenvalue) {
  EXPECT_ERROR_CODE(validate_effect(ComplexMatrix{{0.5, 0.0}, {0.0, -0.1}}), ErrorCode::kSpectrumOutOfRange);
}

TEST(ValidateEffect, RejectsNonHermitian) {
  EXPECT_ERROR_CODE(validate_effect(ComplexMatrix{{0.5, 0.1}, {0.0, 0.5}}), ErrorCode::kNotHermitian);
}

TEST(ValidateEffect, PartialSigmaZ) {
  const ComplexMatrix m = (ComplexMatrix::identity(2) + pauli_dot({0.0, 0.0, 0.9})) * Complex(0.5);
  const Effect e = validate_effect(m);
  const auto ev = hermitian_eigenvalues(e.matrix());
  EXPECT_NEAR(ev[0], 0.05, 1e-12);
  EXPECT_NEAR(ev[1], 0.95, 1e-12);
}

TEST(ValidateInstrument, ProjectiveIsValid) {
  const Instrument inst = projective_z();
  EXPECT_EQ(inst.outcomes(), 2u);
  EXPECT_EQ(inst.effects()[0].matrix(), kP0);
}

TEST(ValidateInstrument, FlipWithFixedOutcome) {
  const Instrument inst = instrument_from_kraus({kX, ComplexMatrix::zero(2)});
  EXPECT_EQ(inst.effects()[0].matrix(), ComplexMatrix::identity(2));
  EXPECT_EQ(inst.effects()[1].matrix(), ComplexMatrix::zero(2));
}

TEST(ValidateInstrument, RejectsNonTracePreserving) {
  EXPECT_ERROR_CODE(instrument_from_kraus({kP0}), ErrorCode::kNotTracePreserving);
}

TEST(ValidateInstrument, RejectsMixedDimensions) {
  EXPECT_ERROR_CODE(validate_instrument({{kP0}, {ComplexMatrix::identity(3)}}), ErrorCode::kDimensionMismatch);
}

TEST(ApplyInstrument, ProjectiveOnPlus) {
  const InstrumentOutput out = apply_instrument(plus_state(), projective_z(), 0);
  EXPECT_NEAR(out.probability, 0.5, 1e-15);
  const auto post = renormalized(out);
  ASSERT_TRUE(post.has_value());
  EXPECT_LT(max_abs_diff(post->matrix(), kP0), 1e-15);
}

TEST(ApplyInstrument, FlipSendsZeroToOne) {
  const Instrument flip = instrument_from_kraus({kX, ComplexMatrix::zero(2)});
  const InstrumentOutput out = apply_instrument(DensityMatrix::basis(2, 0), flip, 0);
  EXPECT_NEAR(out.probability, 1.0, 1e-15);
  EXPECT_LT(max_abs_diff(out.state, kP1), 1e-15);
  EXPECT_FALSE(renormalized(apply_instrument(DensityMatrix::basis(2, 0), flip, 1)).has_value());
}

TEST(ApplyInstrument, DimensionMismatch) {
  EXPECT_ERROR_CODE(apply_instrument(DensityMatrix::basis(3, 0), projective_z(), 0), ErrorCode::kDimensionMismatch);
}

TEST(ApplyInstrument, ProbabilitiesMatchInducedEffects) {
  Rng rng(21);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t d = 2 + rep % 3;
    const Instrument inst = random_instrument(d, 2 + rep % 2, 1 + rep % 2, rng);
    const DensityMatrix rho = random_density_matrix(d, rng);
    double total = 0.0;
    for (std::size_t r = 0; r < inst.outcomes(); ++r) {
      const InstrumentOutput out = apply_instrument(rho, inst, r);
      const double born = (inst.effects()[r].matrix() * rho.matrix()).trace().real();
      EXPECT_NEAR(out.probability, born, 1e-12);
      EXPECT_GE(out.probability, -1e-12);
      EXPECT_LE(out.probability, 1.0 + 1e-12);
      total += out.probability;
    }
    EXPECT_NEAR(total, 1.0, 1e-9);
  }
}

TEST(DensityMatrix, RejectsInvalidStates) {
  EXPECT_ERROR_CODE(DensityMatrix(ComplexMatrix::identity(2)), ErrorCode::kNotADensityMatrix);
  EXPECT_ERROR_CODE(DensityMatrix(ComplexMatrix{{1.2, 0.0}, {0.0, -0.2}}), ErrorCode::kNotADensityMatrix);
  EXPECT_ERROR_CODE(DensityMatrix(ComplexMatrix{{0.5, 0.3}, {0.0, 0.5}}), ErrorCode::kNotHermitian);
}

TEST(Bloch, PolesAndCenter) {
  EXPECT_LT(max_abs_diff(bloch_to_density({0.0, 0.0, 1.0}).matrix(), kP0), 1e-15);
  EXPECT_LT(max_abs_diff(bloch_to_density({0.0, 0.0, 0.0}).matrix(), ComplexMatrix::identity(2) * Complex(0.5)),
            1e-15);
}

TEST(Bloch, RoundTripAndPurity) {
  Rng rng(22);
  for (int rep = 0; rep < 100; ++rep) {
    const BlochVector a = random_bloch_vector(rng);
    const DensityMatrix rho = bloch_to_density(a);
    const BlochVector back = density_to_bloch(rho);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(back[i], a[i], 1e-12);
    const double purity = (rho.matrix() * rho.matrix()).trace().real();
    EXPECT_NEAR(purity, 0.5 * (1.0 + a.dot(a)), 1e-12);
  }
}

TEST(Bloch, Errors) {
  EXPECT_ERROR_CODE(bloch_to_density({0.0, 0.8, 0.8}), ErrorCode::kNormTooLarge);
  EXPECT_ERROR_CODE(density_to_bloch(DensityMatrix::basis(3, 0)), ErrorCode::kWrongDimension);
}

TEST(Bloch, KetMatchesDensity) {
  Rng rng(23);
  for (int rep = 0; rep < 50; ++rep) {
    const BlochVector n = random_unit_vector(rng);
    const auto k = bloch_ket(n);
    EXPECT_LT(max_abs_diff(ComplexMatrix::outer(k), bloch_to_density(n).matrix()), 1e-12);
  }
  const auto south = bloch_ket({0.0, 0.0, -1.0});
  EXPECT_LT(max_abs_diff(ComplexMatrix::outer(south), kP1), 1e-15);
}

TEST(EffectFromParams, Projector) {
  EXPECT_LT(max_abs_diff(effect_from_params(0.5, 1.0, {0.0, 0.0, 1.0}).matrix(), kP0), 1e-15);
}

TEST(EffectFromParams, ZeroEffect) {
  EXPECT_EQ(effect_from_params(0.0, 0.3, {1.0, 0.0, 0.0}).matrix(), ComplexMatrix::zero(2));
}

TEST(EffectFromParams, BoundaryMatchesRankOneComplementForm) {
  const BlochVector c{0.6, 0.0, 0.8};
  for (double p : {0.0, 0.25, 0.5, 0.9, 1.0}) {
    const double b = p / (2.0 - p);
    const Effect e = effect_from_params(1.0 / (1.0 + b), b, c);
    const ComplexMatrix expected = (ComplexMatrix::identity(2) * Complex(2.0 - p) + pauli_dot(c) * Complex(p)) * Complex(0.5);
    EXPECT_LT(max_abs_diff(e.matrix(), expected), 1e-12) << "p=" << p;
    // The complement 1 - E has rank at most one.
    const auto ev = hermitian_eigenvalues(ComplexMatrix::identity(2) - e.matrix());
    EXPECT_NEAR(ev[0], 0.0, 1e-12);
  }
}

TEST(EffectFromParams, ComplementIsAnEffect) {
  Rng rng(24);
  for (int rep = 0; rep < 100; ++rep) {
    const double b = uniform01(rng);
    const double a = uniform01(rng) / (1.0 + b);
    const Effect e = effect_from_params(a, b, random_unit_vector(rng));
    EXPECT_NO_THROW(validate_effect(ComplexMatrix::identity(2) - e.matrix()));
  }
}

TEST(EffectFromParams, OutOfRange) {
  EXPECT_ERROR_CODE(effect_from_params(0.6, 1.0, {0.0, 0.0, 1.0}), ErrorCode::kParamOutOfRange);
  EXPECT_ERROR_CODE(effect_from_params(0.5, 1.5, {0.0, 0.0, 1.0}), ErrorCode::kParamOutOfRange);
  EXPECT_ERROR_CODE(effect_from_params(0.5, 0.5, {0.0, 0.0, 0.5}), ErrorCode::kParamOutOfRange);
}

TEST(SystemModel, RejectsMismatchedInstruments) {
  std::vector<Instrument> insts{projective_z(), instrument_from_kraus({ComplexMatrix::identity(3)})};
  EXPECT_ERROR_CODE(SystemModel(DensityMatrix::basis(2, 0), insts), ErrorCode::kDimensionMismatch);
}

}  // namespace
}  // namespace tempcorr
