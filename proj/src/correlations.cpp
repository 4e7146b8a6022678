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

#include "tempcorr/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "tempcorr/error.hpp"
#include "tempcorr/matrix.hpp"

namespace tempcorr {

namespace {

constexpr std::size_t kMaxTableEntries = std::size_t{1} << 26;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << std::scientific << v;
  return os.str();
}

std::vector<int> parse_digits(std::string_view s, int radix) {
  std::vector<int> d;
  d.reserve(s.size());
  for (char c : s) {
    const int v = c - '0';
    if (v < 0 || v >= radix) {
      throw Error(ErrorCode::kInvalidArgument, "digit '" + std::string(1, c) + "' out of range");
    }
    d.push_back(v);
  }
  return d;
}

}  // namespace

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::vector<int> to_digits(std::size_t index, int radix, int length) {
  std::vector<int> d(static_cast<std::size_t>(length));
  for (int i = length - 1; i >= 0; --i) {
    d[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::size_t>(radix));
    index /= static_cast<std::size_t>(radix);
  }
  return d;
}

std::size_t from_digits(std::span<const int> digits, int radix) {
  std::size_t v = 0;
  for (int d : digits) v = v * static_cast<std::size_t>(radix) + static_cast<std::size_t>(d);
  return v;
}

std::string digit_string(std::size_t index, int radix, int length) {
  std::string s;
  for (int d : to_digits(index, radix, length)) s.push_back(static_cast<char>('0' + d));
  return s;
}

void Scenario::validate() const {
  if (L < 1 || R < 2 || S < 2) {
    throw Error(ErrorCode::kInvalidArgument, "scenario needs L >= 1, R >= 2, S >= 2 (got L=" +
                                                 std::to_string(L) + ", R=" + std::to_string(R) +
                                                 ", S=" + std::to_string(S) + ")");
  }
  if (R > 10 || S > 10) throw Error(ErrorCode::kInvalidArgument, "R and S are limited to single digits");
  double entries = std::pow(static_cast<double>(R) * S, L);
  if (entries > static_cast<double>(kMaxTableEntries)) {
    throw Error(ErrorCode::kInvalidArgument, "behavior table with (RS)^L = " + fmt(entries) + " entries is too large");
  }
}

std::size_t Scenario::setting_sequences() const { return ipow(static_cast<std::size_t>(S), L); }
std::size_t Scenario::outcome_sequences() const { return ipow(static_cast<std::size_t>(R), L); }

std::size_t Scenario::contexts() const {
  std::size_t n = 0;
  for (int t = 1; t <= L; ++t) n += ipow(static_cast<std::size_t>(S), t);
  return n;
}

Behavior::Behavior(Scenario s) : s_(s) {
  s_.validate();
  cols_ = s_.outcome_sequences();
  table_.assign(s_.setting_sequences() * cols_, 0.0);
}

Behavior::Behavior(Scenario s, std::vector<double> table) : Behavior(s) {
  if (table.size() != table_.size()) {
    throw Error(ErrorCode::kShapeMismatch, "table has " + std::to_string(table.size()) + " entries, scenario needs " +
                                               std::to_string(table_.size()));
  }
  table_ = std::move(table);
}

Behavior Behavior::uniform(Scenario s) {
  Behavior b(s);
  std::fill(b.table_.begin(), b.table_.end(), 1.0 / static_cast<double>(b.cols_));
  return b;
}

double Behavior::p(std::string_view outcomes, std::string_view settings) const {
  if (outcomes.size() != static_cast<std::size_t>(s_.L) || settings.size() != static_cast<std::size_t>(s_.L)) {
    throw Error(ErrorCode::kShapeMismatch, "lookup needs " + std::to_string(s_.L) + " digits");
  }
  const auto a = parse_digits(outcomes, s_.R);
  const auto x = parse_digits(settings, s_.S);
  return at(from_digits(x, s_.S), from_digits(a, s_.R));
}

double max_abs_diff(const Behavior& a, const Behavior& b) {
  if (!(a.scenario() == b.scenario())) throw Error(ErrorCode::kScenarioMismatch, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.table().size(); ++i) worst = std::max(worst, std::abs(a.table()[i] - b.table()[i]));
  return worst;
}

Behavior mix(const Behavior& a, const Behavior& b, double lambda) {
  if (!(a.scenario() == b.scenario())) throw Error(ErrorCode::kScenarioMismatch, "mix");
  std::vector<double> t(a.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = lambda * a.table()[i] + (1.0 - lambda) * b.table()[i];
  return Behavior(a.scenario(), std::move(t));
}

std::string Violation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kNegativity:
      os << "negative entry p(" << outcomes << "|" << settings << ") = " << fmt(-magnitude);
      break;
    case Kind::kNormalization:
      os << "settings " << settings << " sum deviates from 1 by " << fmt(magnitude);
      break;
    case Kind::kArrowOfTime:
      os << "arrow-of-time violated at t=" << level << ": marginal of outcomes " << outcomes
         << " under settings " << settings << " differs by " << fmt(magnitude);
      break;
  }
  return os.str();
}

namespace {

// Mass of each outcome prefix of length t within one row.
std::vector<double> prefix_mass(std::span<const double> row, const Scenario& s, int t) {
  const std::size_t block = ipow(static_cast<std::size_t>(s.R), s.L - t);
  std::vector<double> m(row.size() / block, 0.0);
  for (std::size_t i = 0; i < row.size(); ++i) m[i / block] += row[i];
  return m;
}

void require_member(const Behavior& b) {
  const auto report = check_membership(b);
  if (!report.member()) {
    throw Error(ErrorCode::kNotAMember, std::to_string(report.violations.size()) +
                                            " violation(s); first: " + report.violations.front().describe());
  }
}

// p(a_1..a_t | x_1..x_t) with later settings fixed to 0.
std::vector<double> truncated_table(const Behavior& b, int t) {
  const Scenario& s = b.scenario();
  const std::size_t rows = ipow(static_cast<std::size_t>(s.S), t);
  const std::size_t cols = ipow(static_cast<std::size_t>(s.R), t);
  const std::size_t stride = ipow(static_cast<std::size_t>(s.S), s.L - t);
  std::vector<double> out(rows * cols);
  for (std::size_t xp = 0; xp < rows; ++xp) {
    const auto m = prefix_mass(b.row(xp * stride), s, t);
    std::copy(m.begin(), m.end(), out.begin() + static_cast<std::ptrdiff_t>(xp * cols));
  }
  return out;
}

}  // namespace

MembershipReport check_membership(const Behavior& b, double tolerance) {
  const Scenario& s = b.scenario();
  MembershipReport report;
  const std::size_t rows = s.setting_sequences();
  const std::size_t cols = s.outcome_sequences();
  for (std::size_t x = 0; x < rows; ++x) {
    double sum = 0.0;
    for (std::size_t a = 0; a < cols; ++a) {
      const double v = b.at(x, a);
      if (!(v >= -tol::kZero)) {
        report.violations.push_back({Violation::Kind::kNegativity, s.L, digit_string(x, s.S, s.L),
                                     digit_string(a, s.R, s.L), std::isfinite(v) ? -v : HUGE_VAL});
      }
      sum += v;
    }
    if (!(std::abs(sum - 1.0) <= tolerance)) {
      report.violations.push_back({Violation::Kind::kNormalization, s.L, digit_string(x, s.S, s.L), "",
                                   std::isfinite(sum) ? std::abs(sum - 1.0) : HUGE_VAL});
    }
  }
  for (int t = 1; t < s.L; ++t) {
    const std::size_t stride = ipow(static_cast<std::size_t>(s.S), s.L - t);
    for (std::size_t xp = 0; xp < ipow(static_cast<std::size_t>(s.S), t); ++xp) {
      const auto ref = prefix_mass(b.row(xp * stride), s, t);
      for (std::size_t ys = 1; ys < stride; ++ys) {
        const std::size_t x = xp * stride + ys;
        const auto m = prefix_mass(b.row(x), s, t);
        for (std::size_t ap = 0; ap < m.size(); ++ap) {
          const double dev = std::abs(m[ap] - ref[ap]);
          if (!(dev <= tolerance)) {
            report.violations.push_back({Violation::Kind::kArrowOfTime, t,
                                         digit_string(xp * stride, s.S, s.L) + " vs " + digit_string(x, s.S, s.L),
                                         digit_string(ap, s.R, t), dev});
          }
        }
      }
    }
  }
  return report;
}

Behavior marginal(const Behavior& b, int t) {
  const Scenario& s = b.scenario();
  if (t < 1 || t >= s.L) {
    throw Error(ErrorCode::kInvalidArgument, "marginal level " + std::to_string(t) + " not in [1, L)");
  }
  require_member(b);
  return Behavior(Scenario{t, s.R, s.S}, truncated_table(b, t));
}

ConditionalChain::ConditionalChain(Scenario s) : s_(s) {
  s_.validate();
  for (int t = 1; t <= s_.L; ++t) levels_.emplace_back(contexts(t) * static_cast<std::size_t>(s_.R), 0.0);
}

std::size_t ConditionalChain::contexts(int t) const {
  return ipow(static_cast<std::size_t>(s_.S), t) * ipow(static_cast<std::size_t>(s_.R), t - 1);
}

std::span<double> ConditionalChain::dist(int t, std::size_t xprefix, std::size_t aprefix) {
  const std::size_t ctx = xprefix * ipow(static_cast<std::size_t>(s_.R), t - 1) + aprefix;
  return std::span<double>(levels_.at(static_cast<std::size_t>(t - 1)))
      .subspan(ctx * static_cast<std::size_t>(s_.R), static_cast<std::size_t>(s_.R));
}

std::span<const double> ConditionalChain::dist(int t, std::size_t xprefix, std::size_t aprefix) const {
  const std::size_t ctx = xprefix * ipow(static_cast<std::size_t>(s_.R), t - 1) + aprefix;
  return std::span<const double>(levels_.at(static_cast<std::size_t>(t - 1)))
      .subspan(ctx * static_cast<std::size_t>(s_.R), static_cast<std::size_t>(s_.R));
}

ConditionalChain factorize(const Behavior& b) {
  require_member(b);
  const Scenario& s = b.scenario();
  const auto R = static_cast<std::size_t>(s.R);
  ConditionalChain chain(s);
  for (int t = 1; t <= s.L; ++t) {
    const auto joint = truncated_table(b, t);
    const std::size_t cols = ipow(R, t);
    const std::size_t prev = ipow(R, t - 1);
    for (std::size_t xp = 0; xp < ipow(static_cast<std::size_t>(s.S), t); ++xp) {
      for (std::size_t ap = 0; ap < prev; ++ap) {
        auto d = chain.dist(t, xp, ap);
        double total = 0.0;
        for (std::size_t r = 0; r < R; ++r) {
          d[r] = std::max(0.0, joint[xp * cols + ap * R + r]);
          total += d[r];
        }
        if (total <= tol::kZero) {
          // Unreachable history: any distribution works; uniform keeps it valid.
          std::fill(d.begin(), d.end(), 1.0 / static_cast<double>(R));
        } else {
          for (auto& v : d) v /= total;
        }
      }
    }
  }
  return chain;
}

Behavior compose_from_conditionals(const ConditionalChain& chain) {
  const Scenario& s = chain.scenario();
  const auto R = static_cast<std::size_t>(s.R);
  for (int t = 1; t <= s.L; ++t) {
    for (std::size_t xp = 0; xp < ipow(static_cast<std::size_t>(s.S), t); ++xp) {
      for (std::size_t ap = 0; ap < ipow(R, t - 1); ++ap) {
        const auto d = chain.dist(t, xp, ap);
        double total = 0.0;
        for (double v : d) {
          if (!(v >= -tol::kZero)) {
            throw Error(ErrorCode::kUnnormalizedConditional,
                        "negative conditional " + fmt(v) + " at t=" + std::to_string(t));
          }
          total += v;
        }
        if (!(std::abs(total - 1.0) <= tol::kNormalization)) {
          throw Error(ErrorCode::kUnnormalizedConditional, "conditional at t=" + std::to_string(t) +
                                                               ", x=" + digit_string(xp, s.S, t) + " sums to " +
                                                               fmt(total));
        }
      }
    }
  }
  Behavior b(s);
  for (std::size_t x = 0; x < s.setting_sequences(); ++x) {
    const auto xd = to_digits(x, s.S, s.L);
    for (std::size_t a = 0; a < s.outcome_sequences(); ++a) {
      const auto ad = to_digits(a, s.R, s.L);
      double p = 1.0;
      std::size_t xp = 0;
      std::size_t ap = 0;
      for (int t = 1; t <= s.L && p != 0.0; ++t) {
        xp = xp * static_cast<std::size_t>(s.S) + static_cast<std::size_t>(xd[t - 1]);
        p *= chain.dist(t, xp, ap)[static_cast<std::size_t>(ad[t - 1])];
        ap = ap * R + static_cast<std::size_t>(ad[t - 1]);
      }
      b.at(x, a) = p;
    }
  }
  return b;
}

std::size_t context_offset(const Scenario& s, int t) {
  std::size_t off = 0;
  for (int i = 1; i < t; ++i) off += ipow(static_cast<std::size_t>(s.S), i);
  return off;
}

DeterministicVertex::DeterministicVertex(Scenario s, std::vector<std::uint8_t> assignment)
    : s_(s), a_(std::move(assignment)) {
  s_.validate();
  if (a_.size() != s_.contexts()) {
    throw Error(ErrorCode::kShapeMismatch, "assignment needs " + std::to_string(s_.contexts()) + " entries, got " +
                                               std::to_string(a_.size()));
  }
  for (auto v : a_) {
    if (v >= s_.R) throw Error(ErrorCode::kInvalidArgument, "assigned outcome out of range");
  }
}

int DeterministicVertex::outcome(int t, std::size_t xprefix) const {
  return a_.at(context_offset(s_, t) + xprefix);
}

std::vector<int> DeterministicVertex::outcomes_along(std::span<const int> settings) const {
  std::vector<int> out;
  std::size_t xp = 0;
  for (std::size_t t = 0; t < settings.size(); ++t) {
    xp = xp * static_cast<std::size_t>(s_.S) + static_cast<std::size_t>(settings[t]);
    out.push_back(outcome(static_cast<int>(t) + 1, xp));
  }
  return out;
}

std::vector<std::pair<std::string, int>> DeterministicVertex::keyed() const {
  std::vector<std::pair<std::string, int>> out;
  for (int t = 1; t <= s_.L; ++t) {
    for (std::size_t xp = 0; xp < ipow(static_cast<std::size_t>(s_.S), t); ++xp) {
      const auto xd = to_digits(xp, s_.S, t);
      const auto history = outcomes_along(std::span<const int>(xd).first(static_cast<std::size_t>(t - 1)));
      std::string key = "t=" + std::to_string(t) + ";x=";
      for (int d : xd) key.push_back(static_cast<char>('0' + d));
      key += ";a=";
      for (int d : history) key.push_back(static_cast<char>('0' + d));
      out.emplace_back(std::move(key), outcome(t, xp));
    }
  }
  return out;
}

Behavior vertex_behavior(const DeterministicVertex& v) {
  const Scenario& s = v.scenario();
  Behavior b(s);
  for (std::size_t x = 0; x < s.setting_sequences(); ++x) {
    const auto xd = to_digits(x, s.S, s.L);
    const auto ad = v.outcomes_along(xd);
    b.at(x, from_digits(ad, s.R)) = 1.0;
  }
  return b;
}

BigInt count_vertices(const Scenario& s) {
  s.validate();
  // (S^L - 1)/(S - 1) = 1 + S + ... + S^(L-1)
  BigInt exponent = 0;
  BigInt term = 1;
  for (int i = 0; i < s.L; ++i) {
    exponent += term;
    term *= s.S;
  }
  const BigInt base = boost::multiprecision::pow(BigInt(s.R), s.S);
  return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

DeterministicVertex vertex_at(const Scenario& s, std::uint64_t index) {
  s.validate();
  std::vector<std::uint8_t> a(s.contexts());
  for (std::size_t i = a.size(); i-- > 0;) {
    a[i] = static_cast<std::uint8_t>(index % static_cast<std::uint64_t>(s.R));
    index /= static_cast<std::uint64_t>(s.R);
  }
  if (index != 0) throw Error(ErrorCode::kInvalidArgument, "vertex index exceeds vertex count");
  return DeterministicVertex(s, std::move(a));
}

std::uint64_t vertex_index(const DeterministicVertex& v) {
  std::uint64_t idx = 0;
  for (auto d : v.assignment()) idx = idx * static_cast<std::uint64_t>(v.scenario().R) + d;
  return idx;
}

namespace {

std::uint64_t checked_count(const Scenario& s, std::uint64_t cap) {
  const BigInt n = count_vertices(s);
  if (n > cap) {
    throw Error(ErrorCode::kTooManyVertices, "scenario has " + n.str() + " vertices, cap is " + std::to_string(cap));
  }
  return static_cast<std::uint64_t>(n);
}

}  // namespace

std::vector<DeterministicVertex> enumerate_vertices(const Scenario& s, std::uint64_t cap) {
  const std::uint64_t n = checked_count(s, cap);
  std::vector<DeterministicVertex> out(n, DeterministicVertex(s, std::vector<std::uint8_t>(s.contexts(), 0)));
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = vertex_at(s, static_cast<std::uint64_t>(i));
  return out;
}

DeterministicVertex named_vertex(std::string_view name) {
  // Unit entries (outcomes, settings) of each named vertex.
  struct Entry {
    const char* a;
    const char* x;
  };
  static const std::array<std::array<Entry, 4>, 4> kUnitEntries = {{
      {{{"00", "00"}, {"00", "11"}, {"01", "01"}, {"01", "10"}}},
      {{{"01", "00"}, {"01", "11"}, {"00", "01"}, {"00", "10"}}},
      {{{"01", "00"}, {"00", "11"}, {"01", "01"}, {"01", "10"}}},
      {{{"01", "00"}, {"01", "11"}, {"01", "01"}, {"00", "10"}}},
  }};
  if (name.size() != 2 || name[0] != 'e' || name[1] < '1' || name[1] > '4') {
    throw Error(ErrorCode::kInvalidArgument, "unknown named vertex '" + std::string(name) + "' (expected e1..e4)");
  }
  const Scenario s{2, 2, 2};
  std::vector<std::uint8_t> a(s.contexts(), 0);
  for (const auto& e : kUnitEntries[static_cast<std::size_t>(name[1] - '1')]) {
    const int x1 = e.x[0] - '0';
    const int x2 = e.x[1] - '0';
    a[static_cast<std::size_t>(x1)] = static_cast<std::uint8_t>(e.a[0] - '0');
    a[context_offset(s, 2) + static_cast<std::size_t>(x1 * 2 + x2)] = static_cast<std::uint8_t>(e.a[1] - '0');
  }
  return DeterministicVertex(s, std::move(a));
}

std::vector<Relabeling> group_elements(const Scenario& s, RelabelingGroup g) {
  const auto S = static_cast<std::size_t>(s.S);
  std::vector<int> id_s(S);
  std::iota(id_s.begin(), id_s.end(), 0);
  std::vector<int> id_r(static_cast<std::size_t>(s.R));
  std::iota(id_r.begin(), id_r.end(), 0);

  if (g == RelabelingGroup::kIdentity) return {Relabeling{id_s, std::vector<std::vector<int>>(S, id_r)}};

  std::vector<std::vector<int>> r_perms;
  for (auto p = id_r;;) {
    r_perms.push_back(p);
    if (!std::next_permutation(p.begin(), p.end())) break;
  }
  std::vector<std::vector<std::vector<int>>> outcome_choices;
  if (g == RelabelingGroup::kGlobal) {
    for (const auto& p : r_perms) outcome_choices.emplace_back(S, p);
  } else {
    // Mixed-radix walk over one permutation per setting.
    const std::size_t m = r_perms.size();
    const std::size_t total = ipow(m, s.S);
    for (std::size_t k = 0; k < total; ++k) {
      std::vector<std::vector<int>> choice(S);
      std::size_t rem = k;
      for (std::size_t si = S; si-- > 0;) {
        choice[si] = r_perms[rem % m];
        rem /= m;
      }
      outcome_choices.push_back(std::move(choice));
    }
  }
  std::vector<Relabeling> out;
  for (auto sp = id_s;;) {
    for (const auto& oc : outcome_choices) out.push_back(Relabeling{sp, oc});
    if (!std::next_permutation(sp.begin(), sp.end())) break;
  }
  return out;
}

DeterministicVertex apply_relabeling(const DeterministicVertex& v, const Relabeling& g) {
  const Scenario& s = v.scenario();
  std::vector<std::uint8_t> a(s.contexts());
  for (int t = 1; t <= s.L; ++t) {
    const std::size_t off = context_offset(s, t);
    for (std::size_t xp = 0; xp < ipow(static_cast<std::size_t>(s.S), t); ++xp) {
      auto xd = to_digits(xp, s.S, t);
      const int last = xd.back();
      for (auto& d : xd) d = g.setting_perm[static_cast<std::size_t>(d)];
      const int r = v.outcome(t, xp);
      a[off + from_digits(xd, s.S)] =
          static_cast<std::uint8_t>(g.outcome_perm[static_cast<std::size_t>(last)][static_cast<std::size_t>(r)]);
    }
  }
  return DeterministicVertex(s, std::move(a));
}

std::size_t OrbitPartition::orbit_of(std::uint64_t index) const {
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if (std::binary_search(orbits[i].begin(), orbits[i].end(), index)) return i;
  return orbits.size();
}

OrbitPartition classify_vertices(const Scenario& s, RelabelingGroup g, std::uint64_t cap) {
  const std::uint64_t n = checked_count(s, cap);
  const auto group = group_elements(s, g);
  std::vector<bool> seen(n, false);
  OrbitPartition part;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    const auto v = vertex_at(s, i);
    std::vector<std::uint64_t> orbit;
    orbit.reserve(group.size());
    for (const auto& e : group) orbit.push_back(vertex_index(apply_relabeling(v, e)));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (auto j : orbit) seen[j] = true;
    part.orbits.push_back(std::move(orbit));
  }
  return part;
}

ConvexDecomposition decompose_behavior(const Behavior& b, std::uint64_t cap) {
  const Scenario& s = b.scenario();
  checked_count(s, cap);
  const ConditionalChain chain = factorize(b);

  ConvexDecomposition out{s, {}};
  const std::size_t n_ctx = s.contexts();
  std::vector<std::uint8_t> a(n_ctx, 0);

  // Contexts in flat order: level t, settings prefix xp. Depth-first over
  // assignments in lexicographic order, pruning zero-weight branches.
  std::vector<std::pair<int, std::size_t>> ctx;
  for (int t = 1; t <= s.L; ++t)
    for (std::size_t xp = 0; xp < ipow(static_cast<std::size_t>(s.S), t); ++xp) ctx.emplace_back(t, xp);

  auto history = [&](int t, std::size_t xp) {
    // Outcome prefix a_1..a_{t-1} along xp, as a base-R index.
    std::size_t ap = 0;
    for (int u = 1; u < t; ++u) {
      const std::size_t xu = xp / ipow(static_cast<std::size_t>(s.S), t - u);
      ap = ap * static_cast<std::size_t>(s.R) + a[context_offset(s, u) + xu];
    }
    return ap;
  };

  auto recurse = [&](auto&& self, std::size_t k, double w) -> void {
    if (k == n_ctx) {
      out.terms.push_back({w, DeterministicVertex(s, a)});
      return;
    }
    const auto [t, xp] = ctx[k];
    const auto d = chain.dist(t, xp, history(t, xp));
    for (std::size_t r = 0; r < d.size(); ++r) {
      if (d[r] <= 0.0) continue;
      a[k] = static_cast<std::uint8_t>(r);
      self(self, k + 1, w * d[r]);
    }
    a[k] = 0;
  };
  recurse(recurse, 0, 1.0);
  return out;
}

Behavior reconstruct(const ConvexDecomposition& d) {
  Behavior b(d.scenario);
  std::vector<double> t(b.table().size(), 0.0);
  for (const auto& term : d.terms) {
    const auto vb = vertex_behavior(term.vertex);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] += term.weight * vb.table()[i];
  }
  return Behavior(d.scenario, std::move(t));
}

}  // namespace tempcorr
