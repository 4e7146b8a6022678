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

#ifndef TEMPCORR_CERTIFY_HPP
#define TEMPCORR_CERTIFY_HPP

#include <array>
#include <cstdint>
#include <string>

#include "tempcorr/correlations.hpp"
#include "tempcorr/quantum.hpp"

namespace tempcorr {

/// max(0, (value - bound) / 12). Throws DomainError for values outside [0, 4].
double epsilon_lower_bound(double value, double bound);
/// (4 - bound) / 12, the largest lower bound a witness can produce.
double epsilon_cap(double bound);

struct EpsilonConfig {
  int restarts = 8;  // per (outcome, setting)
  std::uint64_t seed = 7;
  int iterations = 2000;
};

/// Estimate of the smallest epsilon for which `sys` is (2 + epsilon)
/// dimensional with respect to the rank-2 projector P: the largest of
/// ||P rho_in P - rho_in||_tr and, for every (outcome, setting), the maximum
/// over pure inputs of ||P I(rho) P - I(rho)||_tr. The inner maximum is
/// found by random restarts plus local ascent; it is a convergent estimate,
/// not a certified global bound.
double system_epsilon(const SystemModel& sys, const ComplexMatrix& projector, const EpsilonConfig& cfg = {});

enum class BoundStatus { kCertified, kNumericallySupported };

struct WitnessCertificate {
  std::string name;
  double value;
  double bound;        // the bound that gates the verdict
  double conjectured;  // the conjectured qubit maximum (equals bound when certified)
  BoundStatus status;
  bool exceeds_qubit;  // value > bound + tolerance
  double epsilon;      // epsilon_lower_bound(value, bound)
  double epsilon_cap;
};

struct CertificationReport {
  std::array<WitnessCertificate, 4> witnesses;
  double epsilon;  // largest per-witness lower bound
  bool dimension_exceeds_two;
  double verdict_tolerance;
  double membership_tolerance;
};

/// Evaluates B1..B4 on a (2,2,2) member behavior and compares against the
/// qubit bounds. Throws ScenarioMismatch or NotAMember.
CertificationReport certify(const Behavior& b);

/// Fixed-width text table (12 significant digits).
std::string format_report(const CertificationReport& r);

std::string to_string(BoundStatus s);

}  // namespace tempcorr

#endif  // TEMPCORR_CERTIFY_HPP
