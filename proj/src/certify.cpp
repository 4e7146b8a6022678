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

#include "tempcorr/certify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "pattern_search.hpp"
#include "tempcorr/bounds.hpp"
#include "tempcorr/error.hpp"
#include "tempcorr/random.hpp"
#include "tempcorr/witness.hpp"

namespace tempcorr {

namespace {

constexpr double kVerdictTol = 1e-9;
constexpr double kMembershipTol = 1e-9;
constexpr double kProjectorTol = 1e-9;

void check_projector(const ComplexMatrix& p, std::size_t dim) {
  if (p.dim() != dim) throw Error(ErrorCode::kDimensionMismatch, "projector and system dimensions differ");
  if (p.hermiticity_defect() > kProjectorTol) throw Error(ErrorCode::kNotAProjector, "projector is not Hermitian");
  const double idem = max_abs_diff(p * p, p);
  if (idem > kProjectorTol) {
    std::ostringstream os;
    os << "P^2 differs from P by " << idem;
    throw Error(ErrorCode::kNotAProjector, os.str());
  }
  const double rank = p.trace().real();
  if (std::abs(rank - 2.0) > 1e-6) {
    std::ostringstream os;
    os << "projector rank " << rank << " is not 2";
    throw Error(ErrorCode::kNotAProjector, os.str());
  }
}

double leakage(const ComplexMatrix& p, const ComplexMatrix& rho) { return trace_norm(p * rho * p - rho); }

// Unit vector in C^d from 2d reals; zero input maps to the first basis vector.
std::vector<Complex> ket_from_reals(const std::vector<double>& v) {
  const std::size_t d = v.size() / 2;
  std::vector<Complex> psi(d);
  double n = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    psi[i] = Complex(v[2 * i], v[2 * i + 1]);
    n += std::norm(psi[i]);
  }
  if (n == 0.0) {
    psi[0] = 1.0;
    return psi;
  }
  n = std::sqrt(n);
  for (auto& z : psi) z /= n;
  return psi;
}

}  // namespace

double epsilon_lower_bound(double value, double bound) {
  if (!(value >= -kVerdictTol && value <= 4.0 + kVerdictTol)) {
    std::ostringstream os;
    os << "witness value " << value << " outside [0, 4]";
    throw Error(ErrorCode::kDomainError, os.str());
  }
  return std::max(0.0, (value - bound) / 12.0);
}

double epsilon_cap(double bound) { return (4.0 - bound) / 12.0; }

double system_epsilon(const SystemModel& sys, const ComplexMatrix& projector, const EpsilonConfig& cfg) {
  const std::size_t d = sys.dim();
  check_projector(projector, d);
  if (cfg.restarts < 1) throw Error(ErrorCode::kInvalidArgument, "system_epsilon needs at least one restart");
  const double initial_eps = leakage(projector, sys.initial().matrix());
  const std::size_t n_a = sys.outcomes();
  const std::size_t n_tasks = sys.settings() * n_a;
  const auto restarts = static_cast<std::size_t>(cfg.restarts);
  const std::vector<detail::Box> box(2 * d);
  std::vector<double> best(n_tasks * restarts, 0.0);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t job = 0; job < best.size(); ++job) {
    const std::size_t task = job / restarts;
    const Instrument& inst = sys.instrument(task / n_a);
    const std::size_t a = task % n_a;
    auto objective = [&](const std::vector<double>& v) {
      return leakage(projector, apply_outcome(ComplexMatrix::outer(ket_from_reals(v)), inst, a));
    };
    double local = 0.0;
    // The first restart of each task also scores the basis states, which are
    // the extreme points for diagonal models.
    if (job % restarts == 0) {
      for (std::size_t i = 0; i < d; ++i) {
        std::vector<double> v(2 * d, 0.0);
        v[2 * i] = 1.0;
        local = std::max(local, objective(v));
      }
    }
    Rng rng(derive_seed(cfg.seed, job));
    const auto start = random_pure_state(d, rng);
    std::vector<double> v(2 * d);
    for (std::size_t i = 0; i < d; ++i) {
      v[2 * i] = start[i].real();
      v[2 * i + 1] = start[i].imag();
    }
    local = std::max(local, detail::compass_maximize(objective, v, box, {cfg.iterations, 0.25, 0.5, 1e-9}));
    best[job] = local;
  }
  double eps = initial_eps;
  for (double v : best) eps = std::max(eps, v);
  return eps;
}

std::string to_string(BoundStatus s) {
  return s == BoundStatus::kCertified ? "certified" : "numerically supported";
}

CertificationReport certify(const Behavior& b) {
  if (!(b.scenario() == Scenario{2, 2, 2})) {
    throw Error(ErrorCode::kScenarioMismatch, "certification is defined for the (L,R,S) = (2,2,2) scenario");
  }
  const MembershipReport m = check_membership(b, kMembershipTol);
  if (!m.member()) {
    throw Error(ErrorCode::kNotAMember, m.violations.front().describe() + " (" +
                                            std::to_string(m.violations.size()) + " violation(s))");
  }
  const double c3 = c3_bound().value;
  struct Spec {
    double bound;
    double conjectured;
    BoundStatus status;
  };
  const std::array<Spec, 4> specs{{
      {c1_bound().value, c1_bound().value, BoundStatus::kCertified},
      {bounds::kB2Cap, bounds::kB2Conjectured, BoundStatus::kNumericallySupported},
      {c3, c3, BoundStatus::kCertified},
      {bounds::b4_cap(), c3, BoundStatus::kNumericallySupported},
  }};
  CertificationReport r{};
  r.verdict_tolerance = kVerdictTol;
  r.membership_tolerance = kMembershipTol;
  r.epsilon = 0.0;
  r.dimension_exceeds_two = false;
  const auto fs = builtin_functionals();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const double v = evaluate(fs[i], b);
    auto& w = r.witnesses[i];
    w = {fs[i].name, v, specs[i].bound, specs[i].conjectured, specs[i].status, v > specs[i].bound + kVerdictTol,
         epsilon_lower_bound(v, specs[i].bound), epsilon_cap(specs[i].bound)};
    r.epsilon = std::max(r.epsilon, w.epsilon);
    r.dimension_exceeds_two = r.dimension_exceeds_two || w.exceeds_qubit;
  }
  return r;
}

std::string format_report(const CertificationReport& r) {
  std::ostringstream os;
  os << std::setprecision(12);
  os << std::left << std::setw(8) << "witness" << std::setw(18) << "value" << std::setw(18) << "bound"
     << std::setw(24) << "status" << std::setw(18) << "conjectured" << std::setw(18) << "epsilon>="
     << std::setw(18) << "epsilon cap" << "verdict\n";
  for (const auto& w : r.witnesses) {
    os << std::setw(8) << w.name << std::setw(18) << w.value << std::setw(18) << w.bound << std::setw(24)
       << to_string(w.status) << std::setw(18) << w.conjectured << std::setw(18) << w.epsilon << std::setw(18)
       << w.epsilon_cap << (w.exceeds_qubit ? "dimension > 2" : "qubit-compatible") << "\n";
  }
  os << "overall: " << (r.dimension_exceeds_two ? "dimension > 2" : "qubit-compatible")
     << ", epsilon >= " << r.epsilon << " (verdict tolerance " << r.verdict_tolerance << ", membership tolerance "
     << r.membership_tolerance << ")\n";
  return os.str();
}

}  // namespace tempcorr
