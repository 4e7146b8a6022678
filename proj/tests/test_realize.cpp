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

#include "tempcorr/random.hpp"
#include "tempcorr/realize.hpp"
#include "tempcorr/reference.hpp"
#include "tempcorr/witness.hpp"
#include "test_support.hpp"

namespace tempcorr {
namespace {

const Scenario k222{2, 2, 2};

double b(const std::string& name, const Behavior& beh) { return evaluate(builtin_functional(name), beh); }

TEST(RunSequence, FlipProtocolHandTrace) {
  const SystemModel sys = canonical_protocol("qubit-B1-3");
  const std::vector<int> x00{0, 0};
  const auto d00 = run_sequence(sys, x00);
  EXPECT_NEAR(d00.probs[0], 1.0, 1e-15);  // flip to |1>, flip back to |0>, outcome 0 both times
  const std::vector<int> x10{1, 0};
  const auto d10 = run_sequence(sys, x10);
  EXPECT_NEAR(d10.probs[0], 1.0, 1e-15);
  EXPECT_NEAR(d10.probs[1], 0.0, 1e-15);
}

TEST(RunSequence, ProbabilitiesSumToOne) {
  Rng rng(41);
  for (int rep = 0; rep < 50; ++rep) {
    const SystemModel sys = random_system(3, 3, 2, rng);
    const std::vector<int> xs{1, 0, 1};
    double total = 0.0;
    for (double p : run_sequence(sys, xs).probs) {
      EXPECT_GE(p, -1e-15);
      total += p;
    }
    EXPECT_NEAR(total, 1.0, 1e-9);
  }
}

TEST(RunSequence, RejectsBadSettings) {
  const SystemModel sys = canonical_protocol("qubit-B1-3");
  const std::vector<int> bad{0, 2};
  EXPECT_ERROR_CODE(run_sequence(sys, bad), ErrorCode::kInvalidArgument);
}

TEST(FullBehavior, RepeatedProjectiveMeasurementIsRepeatable) {
  const Instrument z = instrument_from_kraus({ComplexMatrix::unit(2, 0, 0), ComplexMatrix::unit(2, 1, 1)});
  const SystemModel sys(DensityMatrix::maximally_mixed(2), {z, z});
  const Behavior beh = full_behavior(sys, 2);
  for (const char* x : {"00", "01", "10", "11"}) {
    EXPECT_NEAR(beh.p("00", x), 0.5, 1e-15);
    EXPECT_NEAR(beh.p("01", x), 0.0, 1e-15);
    EXPECT_NEAR(beh.p("11", x), 0.5, 1e-15);
  }
}

TEST(FullBehavior, CanonicalProtocols) {
  EXPECT_NEAR(b("B1", full_behavior(canonical_protocol("qubit-B1-3"), 2)), 3.0, 1e-12);
  EXPECT_NEAR(b("B2", full_behavior(canonical_protocol("qubit-B2-3"), 2)), 3.0, 1e-12);
  const Behavior e1 = full_behavior(canonical_protocol("qutrit-e1"), 2);
  EXPECT_LT(max_abs_diff(e1, vertex_behavior(named_vertex("e1"))), 1e-12);
  EXPECT_NEAR(b("B1", e1), 4.0, 1e-12);
  const Behavior e3 = full_behavior(canonical_protocol("qutrit-e3"), 2);
  EXPECT_NEAR(b("B3", e3), 4.0, 1e-12);
  for (const char* name : {"qutrit-e2", "qutrit-e4"}) {
    const Behavior beh = full_behavior(canonical_protocol(name), 2);
    EXPECT_NEAR(b(std::string("B") + name[8], beh), 4.0, 1e-12) << name;
  }
  EXPECT_ERROR_CODE(canonical_protocol("qubit-B9"), ErrorCode::kInvalidArgument);
}

TEST(FullBehavior, RandomSystemsSatisfyArrowOfTime) {
  Rng rng(42);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t d = 2 + rep % 3;
    const int L = 1 + rep % 3;
    const SystemModel sys = random_system(d, 2 + (rep / 3) % 2, 2 + (rep / 6) % 2, rng);
    const Behavior beh = full_behavior(sys, L);
    const MembershipReport r = check_membership(beh);
    EXPECT_TRUE(r.member()) << (r.member() ? "" : r.violations.front().describe());
  }
}

TEST(FullBehavior, SubnormalizedChainingMatchesExplicitConditionals) {
  Rng rng(43);
  for (int rep = 0; rep < 50; ++rep) {
    const SystemModel sys = random_system(2 + rep % 3, 2, 2, rng);
    EXPECT_LT(max_abs_diff(full_behavior(sys, 3), reference::full_behavior(sys, 3)), 1e-12);
  }
  // Zero-probability branches, where only the subnormalized path avoids 0/0.
  const SystemModel e1 = canonical_protocol("qutrit-e1");
  EXPECT_LT(max_abs_diff(full_behavior(e1, 3), reference::full_behavior(e1, 3)), 1e-15);
}

TEST(QutritVertexRealization, E1EffectsMatchProtocol) {
  const VertexRealization vr = qutrit_vertex_realization(named_vertex("e1"));
  ASSERT_EQ(vr.system.dim(), 3u);
  const auto& e00 = vr.system.instrument(0).effects()[0].matrix();
  const auto& e01 = vr.system.instrument(1).effects()[0].matrix();
  EXPECT_EQ(e00, ComplexMatrix::unit(3, 0, 0) + ComplexMatrix::unit(3, 1, 1));
  EXPECT_EQ(e01, ComplexMatrix::unit(3, 0, 0) + ComplexMatrix::unit(3, 2, 2));
  EXPECT_EQ(vr.system.initial().matrix(), ComplexMatrix::unit(3, 0, 0));
}

TEST(QutritVertexRealization, ConstantVertexHasTrivialEffects) {
  const VertexRealization vr = qutrit_vertex_realization(DeterministicVertex(k222, std::vector<std::uint8_t>(6, 0)));
  for (std::size_t s = 0; s < 2; ++s) EXPECT_EQ(vr.system.instrument(s).effects()[0].matrix(), ComplexMatrix::identity(3));
}

TEST(QutritVertexRealization, ExactForEveryVertexUpToThreeOutcomesAndSettings) {
  for (int R = 2; R <= 3; ++R) {
    for (int S = 2; S <= 3; ++S) {
      const Scenario s{2, R, S};
      const std::uint64_t n = static_cast<std::uint64_t>(count_vertices(s));
      double worst = 0.0;
      for (std::uint64_t i = 0; i < n; ++i) {
        const DeterministicVertex v = vertex_at(s, i);
        const VertexRealization vr = qutrit_vertex_realization(v);
        ASSERT_EQ(vr.system.dim(), static_cast<std::size_t>(S + 1));
        worst = std::max(worst, max_abs_diff(full_behavior(vr.system, 2), vertex_behavior(v)));
      }
      EXPECT_LT(worst, 1e-12) << "R=" << R << " S=" << S;
    }
  }
}

TEST(QutritVertexRealization, RejectsOtherLengths) {
  EXPECT_ERROR_CODE(qutrit_vertex_realization(vertex_at({3, 2, 2}, 5)), ErrorCode::kUnsupportedLength);
  EXPECT_ERROR_CODE(qutrit_vertex_realization(vertex_at({1, 2, 2}, 1)), ErrorCode::kUnsupportedLength);
}

TEST(MixtureRealization, SingleVertexMatchesVertexRealization) {
  const DeterministicVertex v = named_vertex("e4");
  const SystemModel m = mixture_realization({k222, {{1.0, v}}});
  EXPECT_LT(max_abs_diff(full_behavior(m, 2), full_behavior(qutrit_vertex_realization(v).system, 2)), 1e-15);
}

TEST(MixtureRealization, HalfE1HalfE3) {
  const ConvexDecomposition d{k222, {{0.5, named_vertex("e1")}, {0.5, named_vertex("e3")}}};
  const SystemModel m = mixture_realization(d);
  EXPECT_EQ(m.dim(), 6u);
  const Behavior expected = mix(vertex_behavior(named_vertex("e1")), vertex_behavior(named_vertex("e3")), 0.5);
  EXPECT_LT(max_abs_diff(full_behavior(m, 2), expected), 1e-12);
}

TEST(MixtureRealization, RandomMemberRoundTrip) {
  Rng rng(44);
  for (int rep = 0; rep < 30; ++rep) {
    const Scenario s = rep % 5 == 0 ? Scenario{2, 3, 2} : k222;
    const Behavior beh = random_member_behavior(s, rng, rep % 2 ? 0.3 : 0.0);
    const SystemModel m = mixture_realization(decompose_behavior(beh));
    EXPECT_LT(max_abs_diff(full_behavior(m, 2), beh), 1e-9);
  }
}

TEST(MixtureRealization, RandomWeightsOverRandomVertices) {
  Rng rng(45);
  for (int rep = 0; rep < 20; ++rep) {
    ConvexDecomposition d{k222, {}};
    double total = 0.0;
    for (int k = 0; k < 5; ++k) {
      const double w = uniform01(rng);
      d.terms.push_back({w, vertex_at(k222, static_cast<std::uint64_t>(uniform01(rng) * 64) % 64)});
      total += w;
    }
    for (auto& t : d.terms) t.weight /= total;
    EXPECT_LT(max_abs_diff(full_behavior(mixture_realization(d), 2), reconstruct(d)), 1e-9);
  }
}

TEST(MixtureRealization, Errors) {
  EXPECT_ERROR_CODE(mixture_realization({k222, {}}), ErrorCode::kEmptyDecomposition);
  EXPECT_ERROR_CODE(mixture_realization({{3, 2, 2}, {{1.0, vertex_at({3, 2, 2}, 0)}}}), ErrorCode::kUnsupportedLength);
}

}  // namespace
}  // namespace tempcorr
