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

#ifndef TEMPCORR_QUANTUM_HPP
#define TEMPCORR_QUANTUM_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "tempcorr/matrix.hpp"

namespace tempcorr {

/// Three real components of a qubit state 1/2 (1 + alpha . sigma).
class BlochVector {
 public:
  BlochVector() = default;
  BlochVector(double x, double y, double z) : c_{x, y, z} {}
  explicit BlochVector(const std::array<double, 3>& c) : c_(c) {}

  double operator[](std::size_t i) const { return c_[i]; }
  const std::array<double, 3>& components() const noexcept { return c_; }
  double norm() const;
  double dot(const BlochVector& o) const;
  /// Unit vector along this one; returns *this unchanged for the zero vector.
  BlochVector normalized() const;

  friend BlochVector operator+(const BlochVector& a, const BlochVector& b);
  friend BlochVector operator-(const BlochVector& a, const BlochVector& b);
  friend BlochVector operator*(double s, const BlochVector& a);
  friend bool operator==(const BlochVector&, const BlochVector&) = default;

 private:
  std::array<double, 3> c_{0.0, 0.0, 0.0};
};

/// Pauli matrices sigma_x, sigma_y, sigma_z.
const std::array<ComplexMatrix, 3>& pauli();

/// n . sigma for a real 3-vector n.
ComplexMatrix pauli_dot(const BlochVector& n);

/// Hermitian, unit-trace, positive semidefinite operator.
class DensityMatrix {
 public:
  /// Validates; throws NotADensityMatrix / NotHermitian.
  explicit DensityMatrix(ComplexMatrix m);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.dim(); }

  /// |i><i|.
  static DensityMatrix basis(std::size_t dim, std::size_t i);
  static DensityMatrix maximally_mixed(std::size_t dim);

 private:
  ComplexMatrix m_;
};

/// Hermitian operator with spectrum in [0, 1].
class Effect {
 public:
  const ComplexMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.dim(); }

 private:
  explicit Effect(ComplexMatrix m) : m_(std::move(m)) {}
  friend Effect validate_effect(const ComplexMatrix& m);

  ComplexMatrix m_;
};

Effect validate_effect(const ComplexMatrix& m);

using KrausSet = std::vector<ComplexMatrix>;

/// A trace-preserving collection of completely positive maps, one per
/// outcome, each stored as a list of Kraus operators.
class Instrument {
 public:
  std::size_t dim() const noexcept { return dim_; }
  std::size_t outcomes() const noexcept { return kraus_.size(); }
  const KrausSet& kraus(std::size_t outcome) const { return kraus_.at(outcome); }
  const std::vector<KrausSet>& kraus_sets() const noexcept { return kraus_; }
  /// E_r = sum_k K_{r,k}^dagger K_{r,k}.
  const std::vector<Effect>& effects() const noexcept { return effects_; }

 private:
  Instrument() = default;
  friend Instrument validate_instrument(std::vector<KrausSet> kraus_sets);

  std::size_t dim_ = 0;
  std::vector<KrausSet> kraus_;
  std::vector<Effect> effects_;
};

Instrument validate_instrument(std::vector<KrausSet> kraus_sets);

/// Convenience: one Kraus operator per outcome.
Instrument instrument_from_kraus(std::vector<ComplexMatrix> per_outcome);

/// Initial state plus S instruments on a common space with a common number of
/// outcomes. A setting used at several time steps always uses the same
/// instrument.
class SystemModel {
 public:
  SystemModel(DensityMatrix initial, std::vector<Instrument> instruments);

  std::size_t dim() const noexcept { return initial_.dim(); }
  std::size_t settings() const noexcept { return instruments_.size(); }
  std::size_t outcomes() const noexcept { return instruments_.front().outcomes(); }
  const DensityMatrix& initial() const noexcept { return initial_; }
  const Instrument& instrument(std::size_t s) const { return instruments_.at(s); }
  const std::vector<Instrument>& instruments() const noexcept { return instruments_; }

 private:
  DensityMatrix initial_;
  std::vector<Instrument> instruments_;
};

struct InstrumentOutput {
  ComplexMatrix state;  // subnormalized
  double probability;
};

/// sum_k K rho K^dagger for a (possibly subnormalized) operator.
ComplexMatrix apply_outcome(const ComplexMatrix& rho, const Instrument& inst, std::size_t outcome);

InstrumentOutput apply_instrument(const DensityMatrix& rho, const Instrument& inst,
                                  std::size_t outcome);

/// Post-measurement state renormalized, or nothing if the probability is
/// below tol::kZero.
std::optional<DensityMatrix> renormalized(const InstrumentOutput& out);

DensityMatrix bloch_to_density(const BlochVector& alpha);
BlochVector density_to_bloch(const DensityMatrix& rho);

/// a (1 + b axis . sigma) with b in [0,1], a in [0, 1/(1+b)], |axis| = 1.
Effect effect_from_params(double a, double b, const BlochVector& axis);

/// Pure qubit state |n> with Bloch vector n (unit).
std::array<Complex, 2> bloch_ket(const BlochVector& n);

}  // namespace tempcorr

#endif  // TEMPCORR_QUANTUM_HPP
