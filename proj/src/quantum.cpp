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

#include "tempcorr/quantum.hpp"

#include <cmath>
#include <sstream>

#include "tempcorr/error.hpp"

namespace tempcorr {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << std::scientific << v;
  return os.str();
}

void check_hermitian(const ComplexMatrix& m, const char* what) {
  if (!m.all_finite()) throw Error(ErrorCode::kNotHermitian, std::string(what) + " has non-finite entries");
  const double defect = m.hermiticity_defect();
  if (defect > tol::kHerm) {
    throw Error(ErrorCode::kNotHermitian,
                std::string(what) + " deviates from Hermitian by " + fmt(defect) + " > " + fmt(tol::kHerm));
  }
}

}  // namespace

double BlochVector::norm() const { return std::sqrt(dot(*this)); }

double BlochVector::dot(const BlochVector& o) const {
  return c_[0] * o.c_[0] + c_[1] * o.c_[1] + c_[2] * o.c_[2];
}

BlochVector BlochVector::normalized() const {
  const double n = norm();
  if (n == 0.0) return *this;
  return (1.0 / n) * *this;
}

BlochVector operator+(const BlochVector& a, const BlochVector& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

BlochVector operator-(const BlochVector& a, const BlochVector& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

BlochVector operator*(double s, const BlochVector& a) { return {s * a[0], s * a[1], s * a[2]}; }

const std::array<ComplexMatrix, 3>& pauli() {
  static const std::array<ComplexMatrix, 3> kPauli = {
      ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
      ComplexMatrix{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}},
      ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
  };
  return kPauli;
}

ComplexMatrix pauli_dot(const BlochVector& n) {
  return ComplexMatrix{{n[2], Complex(n[0], -n[1])}, {Complex(n[0], n[1]), -n[2]}};
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.dim() == 0) throw Error(ErrorCode::kNotADensityMatrix, "empty matrix");
  check_hermitian(m_, "density matrix");
  const double tr_dev = std::abs(m_.trace() - 1.0);
  if (tr_dev > tol::kTrace) {
    throw Error(ErrorCode::kNotADensityMatrix, "trace deviates from 1 by " + fmt(tr_dev));
  }
  const auto ev = hermitian_eigenvalues(m_);
  if (ev.front() < -tol::kPsd) {
    throw Error(ErrorCode::kNotADensityMatrix, "eigenvalue " + fmt(ev.front()) + " < -" + fmt(tol::kPsd));
  }
}

DensityMatrix DensityMatrix::basis(std::size_t dim, std::size_t i) {
  return DensityMatrix(ComplexMatrix::unit(dim, i, i));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  return DensityMatrix(ComplexMatrix::identity(dim) * Complex(1.0 / static_cast<double>(dim)));
}

Effect validate_effect(const ComplexMatrix& m) {
  if (m.dim() == 0) throw Error(ErrorCode::kShapeMismatch, "empty effect");
  check_hermitian(m, "effect");
  const auto ev = hermitian_eigenvalues(m);
  if (ev.front() < -tol::kPsd) {
    throw Error(ErrorCode::kSpectrumOutOfRange,
                "smallest eigenvalue " + fmt(ev.front()) + " below -" + fmt(tol::kPsd));
  }
  if (ev.back() > 1.0 + tol::kPsd) {
    throw Error(ErrorCode::kSpectrumOutOfRange,
                "largest eigenvalue " + fmt(ev.back()) + " above 1+" + fmt(tol::kPsd));
  }
  return Effect(m);
}

Instrument validate_instrument(std::vector<KrausSet> kraus_sets) {
  if (kraus_sets.empty()) throw Error(ErrorCode::kShapeMismatch, "instrument has no outcomes");
  const std::size_t dim = kraus_sets.front().empty() ? 0 : kraus_sets.front().front().dim();
  if (dim == 0) throw Error(ErrorCode::kShapeMismatch, "instrument needs nonempty Kraus sets");

  Instrument inst;
  inst.dim_ = dim;
  ComplexMatrix total(dim);
  std::vector<ComplexMatrix> effect_mats;
  for (std::size_t r = 0; r < kraus_sets.size(); ++r) {
    if (kraus_sets[r].empty()) {
      throw Error(ErrorCode::kShapeMismatch, "outcome " + std::to_string(r) + " has no Kraus operators");
    }
    ComplexMatrix e(dim);
    for (const auto& k : kraus_sets[r]) {
      if (k.dim() != dim) {
        throw Error(ErrorCode::kDimensionMismatch, "Kraus operator of dim " + std::to_string(k.dim()) +
                                                       " in instrument of dim " + std::to_string(dim));
      }
      if (!k.all_finite()) throw Error(ErrorCode::kShapeMismatch, "non-finite Kraus entry");
      e += k.adjoint() * k;
    }
    total += e;
    effect_mats.push_back(std::move(e));
  }
  const double dev = max_abs_diff(total, ComplexMatrix::identity(dim));
  if (dev > tol::kTracePreserving) {
    throw Error(ErrorCode::kNotTracePreserving,
                "max |sum K^dag K - 1| = " + fmt(dev) + " > " + fmt(tol::kTracePreserving));
  }
  for (const auto& e : effect_mats) inst.effects_.push_back(validate_effect(e));
  inst.kraus_ = std::move(kraus_sets);
  return inst;
}

Instrument instrument_from_kraus(std::vector<ComplexMatrix> per_outcome) {
  std::vector<KrausSet> sets;
  sets.reserve(per_outcome.size());
  for (auto& k : per_outcome) sets.push_back(KrausSet{std::move(k)});
  return validate_instrument(std::move(sets));
}

SystemModel::SystemModel(DensityMatrix initial, std::vector<Instrument> instruments)
    : initial_(std::move(initial)), instruments_(std::move(instruments)) {
  if (instruments_.empty()) throw Error(ErrorCode::kShapeMismatch, "system needs at least one instrument");
  const std::size_t r = instruments_.front().outcomes();
  for (std::size_t s = 0; s < instruments_.size(); ++s) {
    if (instruments_[s].dim() != initial_.dim()) {
      throw Error(ErrorCode::kDimensionMismatch, "instrument " + std::to_string(s) + " has dim " +
                                                     std::to_string(instruments_[s].dim()) +
                                                     ", state has dim " + std::to_string(initial_.dim()));
    }
    if (instruments_[s].outcomes() != r) {
      throw Error(ErrorCode::kShapeMismatch, "instrument " + std::to_string(s) + " has " +
                                                 std::to_string(instruments_[s].outcomes()) +
                                                 " outcomes, expected " + std::to_string(r));
    }
  }
}

ComplexMatrix apply_outcome(const ComplexMatrix& rho, const Instrument& inst, std::size_t outcome) {
  if (rho.dim() != inst.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "state dim " + std::to_string(rho.dim()) +
                                                   " vs instrument dim " + std::to_string(inst.dim()));
  }
  if (outcome >= inst.outcomes()) {
    throw Error(ErrorCode::kInvalidArgument, "outcome " + std::to_string(outcome) + " out of range");
  }
  ComplexMatrix out(rho.dim());
  for (const auto& k : inst.kraus(outcome)) out += sandwich(k, rho);
  return out;
}

InstrumentOutput apply_instrument(const DensityMatrix& rho, const Instrument& inst, std::size_t outcome) {
  ComplexMatrix out = apply_outcome(rho.matrix(), inst, outcome);
  const double p = out.trace().real();
  return {std::move(out), p};
}

std::optional<DensityMatrix> renormalized(const InstrumentOutput& out) {
  if (out.probability <= tol::kZero) return std::nullopt;
  return DensityMatrix(out.state * Complex(1.0 / out.probability));
}

DensityMatrix bloch_to_density(const BlochVector& alpha) {
  const double n = alpha.norm();
  if (n > 1.0 + tol::kPsd) throw Error(ErrorCode::kNormTooLarge, "|alpha| = " + fmt(n));
  ComplexMatrix m = ComplexMatrix::identity(2) + pauli_dot(alpha);
  return DensityMatrix(m * Complex(0.5));
}

BlochVector density_to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw Error(ErrorCode::kWrongDimension, "Bloch vector needs a qubit state");
  const auto& m = rho.matrix();
  // tr(rho sigma_i)
  return {2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(), (m(0, 0) - m(1, 1)).real()};
}

Effect effect_from_params(double a, double b, const BlochVector& axis) {
  if (!(b >= 0.0 && b <= 1.0)) throw Error(ErrorCode::kParamOutOfRange, "b = " + fmt(b) + " not in [0,1]");
  const double a_max = 1.0 / (1.0 + b);
  if (!(a >= 0.0 && a <= a_max + tol::kPsd)) {
    throw Error(ErrorCode::kParamOutOfRange, "a = " + fmt(a) + " not in [0, " + fmt(a_max) + "]");
  }
  if (std::abs(axis.norm() - 1.0) > tol::kPsd) {
    throw Error(ErrorCode::kParamOutOfRange, "|axis| = " + fmt(axis.norm()) + " is not 1");
  }
  ComplexMatrix m = (ComplexMatrix::identity(2) + pauli_dot(b * axis)) * Complex(a);
  return validate_effect(m);
}

std::array<Complex, 2> bloch_ket(const BlochVector& n) {
  const double z = n[2];
  if (z < -1.0 + 1e-15) return {Complex(0.0), Complex(1.0)};
  const double s = std::sqrt(2.0 * (1.0 + z));
  return {Complex((1.0 + z) / s), Complex(n[0], n[1]) / s};
}

}  // namespace tempcorr
