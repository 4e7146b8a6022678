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

#ifndef TEMPCORR_CORRELATIONS_HPP
#define TEMPCORR_CORRELATIONS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tempcorr {

using BigInt = boost::multiprecision::cpp_int;

/// Sequence length L, outcomes per measurement R, settings per step S.
struct Scenario {
  int L = 2;
  int R = 2;
  int S = 2;

  void validate() const;
  std::size_t setting_sequences() const;  // S^L
  std::size_t outcome_sequences() const;  // R^L
  /// Number of (t, x_1..x_t) contexts: S + S^2 + ... + S^L.
  std::size_t contexts() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

std::size_t ipow(std::size_t base, int exp);

/// Digits of a base-`radix` index, most significant first.
std::vector<int> to_digits(std::size_t index, int radix, int length);
std::size_t from_digits(std::span<const int> digits, int radix);
/// "012" style rendering of a digit sequence (radix <= 10).
std::string digit_string(std::size_t index, int radix, int length);

/// Dense conditional probability table p(a_1..a_L | x_1..x_L). Rows are
/// setting sequences as base-S integers, columns outcome sequences as base-R
/// integers, both most significant digit first.
class Behavior {
 public:
  explicit Behavior(Scenario s);
  Behavior(Scenario s, std::vector<double> table);

  static Behavior uniform(Scenario s);

  const Scenario& scenario() const noexcept { return s_; }
  double& at(std::size_t settings, std::size_t outcomes) { return table_[settings * cols_ + outcomes]; }
  double at(std::size_t settings, std::size_t outcomes) const { return table_[settings * cols_ + outcomes]; }
  std::span<const double> row(std::size_t settings) const {
    return std::span<const double>(table_).subspan(settings * cols_, cols_);
  }
  std::span<double> row(std::size_t settings) { return std::span<double>(table_).subspan(settings * cols_, cols_); }
  const std::vector<double>& table() const noexcept { return table_; }

  /// Lookup by digit strings, e.g. p("01", "10") for p(01|10).
  double p(std::string_view outcomes, std::string_view settings) const;

 private:
  Scenario s_;
  std::size_t cols_ = 0;
  std::vector<double> table_;
};

/// max |a - b| over table entries; scenarios must agree.
double max_abs_diff(const Behavior& a, const Behavior& b);

/// a * lambda + b * (1 - lambda).
Behavior mix(const Behavior& a, const Behavior& b, double lambda);

struct Violation {
  enum class Kind { kNegativity, kNormalization, kArrowOfTime };
  Kind kind;
  int level;             // truncation level t for AoT, L otherwise
  std::string settings;  // setting digits involved
  std::string outcomes;  // outcome prefix digits involved
  double magnitude;

  std::string describe() const;
};

struct MembershipReport {
  std::vector<Violation> violations;
  bool member() const noexcept { return violations.empty(); }
};

/// Positivity, per-row normalization, and every arrow-of-time equality at
/// every truncation level t < L.
MembershipReport check_membership(const Behavior& b, double tolerance = 1e-9);

/// Length-t behavior obtained by summing out steps t+1..L.
Behavior marginal(const Behavior& b, int t);

/// p(a_1|x_1), p(a_2|a_1 x_1 x_2), ... Level t (1-based) holds S^t * R^(t-1)
/// contexts, context index = xprefix * R^(t-1) + aprefix, each followed by R
/// probabilities over a_t.
class ConditionalChain {
 public:
  explicit ConditionalChain(Scenario s);

  const Scenario& scenario() const noexcept { return s_; }
  std::size_t contexts(int t) const;
  std::span<double> dist(int t, std::size_t xprefix, std::size_t aprefix);
  std::span<const double> dist(int t, std::size_t xprefix, std::size_t aprefix) const;

 private:
  Scenario s_;
  std::vector<std::vector<double>> levels_;
};

ConditionalChain factorize(const Behavior& b);
Behavior compose_from_conditionals(const ConditionalChain& chain);

/// A 0/1 behavior given by one outcome per (t, x_1..x_t). The outcome
/// history of a context is the one the assignment itself produces.
class DeterministicVertex {
 public:
  DeterministicVertex(Scenario s, std::vector<std::uint8_t> assignment);

  const Scenario& scenario() const noexcept { return s_; }
  /// Outcome at step t (1-based) after setting prefix x_1..x_t (base-S index).
  int outcome(int t, std::size_t xprefix) const;
  /// Outcomes a_1..a_t produced along the settings prefix.
  std::vector<int> outcomes_along(std::span<const int> settings) const;
  const std::vector<std::uint8_t>& assignment() const noexcept { return a_; }
  /// Context keys like "t=2;x=01;a=0" mapped to outcomes, in context order.
  std::vector<std::pair<std::string, int>> keyed() const;

  friend bool operator==(const DeterministicVertex&, const DeterministicVertex&) = default;

 private:
  Scenario s_;
  std::vector<std::uint8_t> a_;
};

/// Offset of level t (1-based) in the flat context order.
std::size_t context_offset(const Scenario& s, int t);

Behavior vertex_behavior(const DeterministicVertex& v);

/// (R^S)^((S^L - 1)/(S - 1)).
BigInt count_vertices(const Scenario& s);

inline constexpr std::uint64_t kDefaultVertexCap = 1'000'000;

/// Vertex number `index` in lexicographic order: contexts ordered by (t,
/// settings prefix), the first context being the most significant base-R digit.
DeterministicVertex vertex_at(const Scenario& s, std::uint64_t index);
std::uint64_t vertex_index(const DeterministicVertex& v);

/// All vertices in lexicographic order; OpenMP-parallel over index ranges.
std::vector<DeterministicVertex> enumerate_vertices(const Scenario& s,
                                                    std::uint64_t cap = kDefaultVertexCap);

/// The named (2,2,2) vertices e1..e4; throws InvalidArgument otherwise.
DeterministicVertex named_vertex(std::string_view name);

enum class RelabelingGroup {
  kIdentity,
  /// Setting permutations with one outcome permutation shared by all settings.
  kGlobal,
  /// Setting permutations with an independent outcome permutation per setting.
  kPerSetting,
};

struct Relabeling {
  std::vector<int> setting_perm;               // new label of setting s
  std::vector<std::vector<int>> outcome_perm;  // per original setting, new label of outcome r
};

std::vector<Relabeling> group_elements(const Scenario& s, RelabelingGroup g);
DeterministicVertex apply_relabeling(const DeterministicVertex& v, const Relabeling& g);

struct OrbitPartition {
  /// Each orbit lists vertex indices ascending; orbits are sorted by their
  /// smallest index, which is the canonical representative.
  std::vector<std::vector<std::uint64_t>> orbits;
  std::uint64_t representative(std::size_t orbit) const { return orbits[orbit].front(); }
  /// Orbit containing a vertex index, or orbits.size() if absent.
  std::size_t orbit_of(std::uint64_t index) const;
};

OrbitPartition classify_vertices(const Scenario& s, RelabelingGroup g,
                                 std::uint64_t cap = kDefaultVertexCap);

struct WeightedVertex {
  double weight;
  DeterministicVertex vertex;
};

struct ConvexDecomposition {
  Scenario scenario;
  std::vector<WeightedVertex> terms;
};

/// Vertex weights are products of the factorized conditionals over all
/// contexts; zero-weight vertices are omitted.
ConvexDecomposition decompose_behavior(const Behavior& b, std::uint64_t cap = kDefaultVertexCap);

Behavior reconstruct(const ConvexDecomposition& d);

}  // namespace tempcorr

#endif  // TEMPCORR_CORRELATIONS_HPP
