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

#include "tempcorr/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tempcorr/error.hpp"

namespace tempcorr {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_) {
    throw Error(ErrorCode::kShapeMismatch, "matrix of dim " + std::to_string(dim_) + " needs " +
                                               std::to_string(dim_ * dim_) + " entries, got " +
                                               std::to_string(data_.size()));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw Error(ErrorCode::kShapeMismatch, "matrix must be square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::unit(std::size_t dim, std::size_t i, std::size_t j) {
  ComplexMatrix m(dim);
  m(i, j) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> psi) {
  ComplexMatrix m(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i)
    for (std::size_t j = 0; j < psi.size(); ++j) m(i, j) = psi[i] * std::conj(psi[j]);
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

double ComplexMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (o.dim_ != dim_) throw Error(ErrorCode::kDimensionMismatch, "matrix addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (o.dim_ != dim_) throw Error(ErrorCode::kDimensionMismatch, "matrix subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorCode::kDimensionMismatch, "matrix product");
  const std::size_t n = a.dim_;
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::kDimensionMismatch, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  return worst;
}

ComplexMatrix sandwich(const ComplexMatrix& k, const ComplexMatrix& rho) {
  return k * rho * k.adjoint();
}

ComplexMatrix direct_sum(std::span<const ComplexMatrix> blocks) {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.dim();
  ComplexMatrix m(total);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) m(off + i, off + j) = b(i, j);
    off += b.dim();
  }
  return m;
}

namespace {

std::vector<double> eigenvalues_2x2(const ComplexMatrix& h) {
  const double a = h(0, 0).real();
  const double d = h(1, 1).real();
  const double mean = 0.5 * (a + d);
  const double r = std::hypot(0.5 * (a - d), std::abs(h(0, 1)));
  return {mean - r, mean + r};
}

// Cyclic Jacobi for a dense real symmetric matrix stored row-major.
std::vector<double> jacobi_symmetric(std::vector<double> a, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    double diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      diag += at(i, i) * at(i, i);
      for (std::size_t j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
    }
    if (off <= 1e-30 * std::max(diag, 1e-300) || off == 0.0) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = at(i, i);
  return ev;
}

std::vector<double> eigenvalues_dense(const ComplexMatrix& h, std::span<const std::size_t> idx) {
  const std::size_t m = idx.size();
  if (m == 1) return {h(idx[0], idx[0]).real()};
  const std::size_t n = 2 * m;
  std::vector<double> emb(n * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      // Symmetrize to absorb Hermiticity noise.
      const Complex z = 0.5 * (h(idx[i], idx[j]) + std::conj(h(idx[j], idx[i])));
      emb[i * n + j] = z.real();
      emb[(i + m) * n + (j + m)] = z.real();
      emb[(i + m) * n + j] = z.imag();
      emb[i * n + (j + m)] = -z.imag();
    }
  }
  std::vector<double> doubled = jacobi_symmetric(std::move(emb), n);
  std::sort(doubled.begin(), doubled.end());
  std::vector<double> ev(m);
  for (std::size_t i = 0; i < m; ++i) ev[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  return ev;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  const std::size_t n = h.dim();
  if (n == 0) return {};
  if (n == 2) return eigenvalues_2x2(h);

  // Split into the irreducible blocks of the sparsity pattern; block-diagonal
  // inputs (direct sums) then cost one small solve per block.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (h(i, j) != Complex{} || h(j, i) != Complex{}) parent[find_root(parent, i)] = find_root(parent, j);

  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[find_root(parent, i)].push_back(i);

  std::vector<double> ev;
  ev.reserve(n);
  for (const auto& g : groups) {
    if (g.empty()) continue;
    auto part = eigenvalues_dense(h, g);
    ev.insert(ev.end(), part.begin(), part.end());
  }
  std::sort(ev.begin(), ev.end());
  return ev;
}

double trace_norm(const ComplexMatrix& h) {
  double s = 0.0;
  for (double v : hermitian_eigenvalues(h)) s += std::abs(v);
  return s;
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kSpectrumOutOfRange: return "SpectrumOutOfRange";
    case ErrorCode::kNotTracePreserving: return "NotTracePreserving";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNormTooLarge: return "NormTooLarge";
    case ErrorCode::kWrongDimension: return "WrongDimension";
    case ErrorCode::kParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::kNotADensityMatrix: return "NotADensityMatrix";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kNotAMember: return "NotAMember";
    case ErrorCode::kUnnormalizedConditional: return "UnnormalizedConditional";
    case ErrorCode::kTooManyVertices: return "TooManyVertices";
    case ErrorCode::kUnsupportedLength: return "UnsupportedLength";
    case ErrorCode::kEmptyDecomposition: return "EmptyDecomposition";
    case ErrorCode::kScenarioMismatch: return "ScenarioMismatch";
    case ErrorCode::kInvalidStrategy: return "InvalidStrategy";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kNoValidRoot: return "NoValidRoot";
    case ErrorCode::kNotAProjector: return "NotAProjector";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kSchema: return "Schema";
  }
  return "Unknown";
}

}  // namespace tempcorr
