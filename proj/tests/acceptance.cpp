// Copyright 2026 The permchan Authors
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

// Runs the end-to-end acceptance checks and prints one line per criterion.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "permchan/channel.hpp"
#include "permchan/counting.hpp"
#include "permchan/encoding.hpp"
#include "permchan/error.hpp"
#include "permchan/group.hpp"
#include "permchan/orbit.hpp"
#include "permchan/rep_theory.hpp"

namespace {

using namespace permchan;

struct Outcome {
  std::vector<std::string> problems;
  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

template <typename A, typename B>
std::string mismatch(const std::string& label, const A& got, const B& want) {
  std::ostringstream s;
  s << label << ": got " << got << ", want " << want;
  return s.str();
}

struct Criterion {
  std::string name;
  double time_limit_seconds;
  std::function<void(Outcome&)> body;
};

// ------------------------------------------------------------------ 1

struct TableRow {
  std::size_t mu;
  std::size_t alpha;
  std::vector<std::pair<const char*, Complex>> terms;
};

std::vector<TableRow> worked_example_rows() {
  const Complex one{1, 0}, i{0, 1};
  return {
      {0, 0, {{"0000", one}}},
      {0, 1, {{"0001", one}, {"1000", one}, {"0100", one}, {"0010", one}}},
      {0, 2, {{"0011", one}, {"1001", one}, {"1100", one}, {"0110", one}}},
      {0, 3, {{"0101", one}, {"1010", one}}},
      {0, 4, {{"0111", one}, {"1011", one}, {"1101", one}, {"1110", one}}},
      {0, 5, {{"1111", one}}},
      {1, 0, {{"0001", one}, {"1000", -i}, {"0100", -one}, {"0010", i}}},
      {1, 1, {{"0011", one}, {"1001", -i}, {"1100", -one}, {"0110", i}}},
      {1, 2, {{"0111", one}, {"1011", -i}, {"1101", -one}, {"1110", i}}},
      {2, 0, {{"0001", one}, {"1000", -one}, {"0100", one}, {"0010", -one}}},
      {2, 1, {{"0011", one}, {"1001", -one}, {"1100", one}, {"0110", -one}}},
      {2, 2, {{"0101", one}, {"1010", -one}}},
      {2, 3, {{"0111", one}, {"1011", -one}, {"1101", one}, {"1110", -one}}},
      {3, 0, {{"0001", one}, {"1000", i}, {"0100", -one}, {"0010", -i}}},
      {3, 1, {{"0011", one}, {"1001", i}, {"1100", -one}, {"0110", -i}}},
      {3, 2, {{"0111", one}, {"1011", i}, {"1101", -one}, {"1110", -i}}},
  };
}

void worked_example(Outcome& out) {
  const auto report = count_cyclic(4, 2);
  out.expect(report.classical == 6, mismatch("N_c", report.classical, 6));
  out.expect(report.quantum && *report.quantum == 16, "N_q != 16");
  out.expect(report.ancilla == 70, mismatch("N_a", report.ancilla, 70));

  const auto group = make_named_group(GroupKind::cyclic, 4);
  out.expect(count_classical_burnside(group, 2) == 6, "Burnside sum on C_4 != 6");
  out.expect(count_ancilla_polya(group, 2) == 70, "ancilla sum on C_4 != 70");

  const std::vector<std::string> expected_reps{"0000", "0001", "0011", "0101", "0111", "1111"};
  std::vector<std::string> reps;
  for (const auto& r : fkm_representatives(4, 2)) reps.push_back(r.to_string());
  out.expect(reps == expected_reps, "FKM representatives differ");
  std::vector<std::string> minima;
  for (const auto& orbit : orbits(group, 2)) minima.push_back(orbit.representative().to_string());
  out.expect(minima == expected_reps, "orbit minima differ");

  const auto basis = message_basis_cyclic(4, 2);
  out.expect(basis.multiplicities == std::vector<std::size_t>{6, 3, 4, 3}, "multiplicities != (6,3,4,3)");
  const auto rows = worked_example_rows();
  out.expect(basis.size() == rows.size(), mismatch("basis size", basis.size(), rows.size()));
  for (std::size_t e = 0; e < std::min(basis.size(), rows.size()); ++e) {
    const auto& entry = basis.entries[e];
    const auto& row = rows[e];
    std::ostringstream where;
    where << "state mu=" << row.mu << " alpha=" << row.alpha;
    out.expect(entry.irrep == row.mu && entry.alpha == row.alpha, where.str() + ": label order differs");
    out.expect(entry.state.amplitudes().size() == row.terms.size(), where.str() + ": support size differs");
    const double scale = std::sqrt(static_cast<double>(row.terms.size()));
    for (const auto& [text, coefficient] : row.terms) {
      const auto index = ColoredString::parse(text, 2).index();
      out.expect(std::abs(entry.state.amplitude(index) * scale - coefficient) < 1e-12,
                 where.str() + ": amplitude of " + text + " differs");
    }
  }
}

// ------------------------------------------------------------------ 2

void zero_error(Outcome& out) {
  auto run = [&](std::size_t n, std::size_t d) {
    const auto group = make_named_group(GroupKind::cyclic, n);
    const auto basis = message_basis_cyclic(n, d);
    const auto report = verify_zero_error(group, basis, true);
    std::ostringstream where;
    where << "C_" << n << " d=" << d;
    out.expect(report.messages_tested == basis.size(), where.str() + ": not every message tested");
    out.expect(report.trials == basis.size() * group.order(), where.str() + ": not every (message, sigma) pair tested");
    out.expect(report.certified(), where.str() + ": " + std::to_string(report.failures.size()) + " failures");
    out.expect(report.max_offdiag_overlap < 1e-9, where.str() + ": off-diagonal overlap above 1e-9");
  };
  for (std::size_t n = 2; n <= 8; ++n) run(n, 2);
  for (std::size_t n = 2; n <= 5; ++n) run(n, 3);
}

// ------------------------------------------------------------------ 3

void formula_oracle(Outcome& out) {
  for (std::size_t d : {2u, 3u}) {
    auto both = [&](GroupKind kind, std::size_t n) {
      const auto group = make_named_group(kind, n);
      const auto table = character_table(group);
      const auto m = ambient_multiplicities(group, table, d);
      std::ostringstream where;
      where << to_string(kind) << " n=" << n << " d=" << d;
      const BigInt formula = count_quantum_totally_orthogonal(group, d, true);
      out.expect(formula == nq_oracle(m), mismatch(where.str() + " N_q formula vs sum m", formula, nq_oracle(m)));
      out.expect(count_ancilla_polya(group, d) == na_oracle(m), where.str() + ": ancilla sum != sum m^2");
    };
    for (std::size_t n = 3; n <= 6; ++n) both(GroupKind::dihedral, n);
    for (std::size_t n = 3; n <= 5; ++n) both(GroupKind::symmetric, n);
    for (std::size_t n = 2; n <= 8; ++n) {
      const auto group = make_named_group(GroupKind::cyclic, n);
      const auto m = ambient_multiplicities(group, character_table(group), d);
      out.expect(count_ancilla_polya(group, d) == na_oracle(m),
                 "cyclic n=" + std::to_string(n) + " d=" + std::to_string(d) + ": ancilla sum != sum m^2");
    }
  }
}

// ------------------------------------------------------------------ 4

void negative_control(Outcome& out) {
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto group = make_named_group(GroupKind::cyclic, n);
    const std::string where = "C_" + std::to_string(n);
    out.expect(!is_totally_orthogonal(group), where + " certified totally orthogonal");
    bool threw = false;
    try {
      count_quantum_totally_orthogonal(group, 2, true);
    } catch (const NotTotallyOrthogonal&) {
      threw = true;
    }
    out.expect(threw, where + ": certification did not reject");
    for (std::size_t d : {2u, 3u}) {
      const BigInt formula = count_quantum_totally_orthogonal(group, d, false);
      const BigInt oracle = nq_oracle(group, d);
      out.expect(formula != oracle, where + " d=" + std::to_string(d) + ": formula unexpectedly equals sum m");
    }
  }
  const auto c4 = make_named_group(GroupKind::cyclic, 4);
  out.expect(count_quantum_totally_orthogonal(c4, 2, false) == 10, "C_4 formula value != 10");
  out.expect(nq_oracle(c4, 2) == 16, "C_4 sum m != 16");
}

// ------------------------------------------------------------------ 5

void symmetric_identities(Outcome& out) {
  for (std::size_t d = 1; d <= 4; ++d) {
    for (std::size_t n = 0; n <= 30; ++n) {
      // a[k - 1] holds the weight of a k-cycle.
      std::vector<Rational> a(n);
      for (std::size_t k = 1; k <= n; ++k) a[k - 1] = Rational(k % 2 ? d : d * d);
      const Rational z = cycle_index_symmetric(n, a);
      const BigInt series = series_coefficient_nq(n, d);
      out.expect(z == Rational(series), "series vs cycle index at n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
  }
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto elements = oracle::symmetric_elements(n);
    for (std::size_t d = 1; d <= 4; ++d) {
      std::vector<Rational> a(n + 1, Rational(d));
      const Rational z = cycle_index_symmetric(n, a);
      const BigInt brute = oracle::burnside(elements, d);
      out.expect(z == Rational(brute), "brute-force Burnside vs cycle index at n=" + std::to_string(n) +
                                           " d=" + std::to_string(d));
      out.expect(count_symmetric(n, d).classical == brute, "closed form vs brute force at n=" + std::to_string(n));
    }
  }
}

// ------------------------------------------------------------------ 6

void hierarchy_and_asymptotics(Outcome& out) {
  for (std::size_t n = 2; n <= 12; ++n) {
    for (std::size_t d = 2; d <= 4; ++d) {
      for (auto report : {count_cyclic(n, d), count_dihedral(n, d), count_symmetric(n, d)}) {
        const bool strict = report.quantum && report.classical < *report.quantum && *report.quantum < report.ancilla;
        out.expect(strict, "hierarchy fails at n=" + std::to_string(n) + " d=" + std::to_string(d));
      }
    }
  }
  const BigFloat ratio = BigFloat(exact_count(AsymptoticKind::cyclic_Nc, 30, 2)) /
                         asymptotic_estimate(AsymptoticKind::cyclic_Nc, 30, 2).leading_value;
  out.expect(abs(ratio - 1) < BigFloat("0.01"), "cyclic N_c ratio at n=30 not within 1%");
  for (std::size_t n = 1; n <= 100; ++n) {
    const BigInt exact = exact_count(AsymptoticKind::symmetric_Nc, n, 2);
    const BigFloat estimate = asymptotic_estimate(AsymptoticKind::symmetric_Nc, n, 2).leading_value;
    out.expect(exact == n + 1 && estimate == BigFloat(n),
               "symmetric N_c ratio != (n+1)/n at n=" + std::to_string(n));
  }
}

// ------------------------------------------------------------------ 7

void dense_coding(Outcome& out) {
  const std::vector<std::uint64_t> expected{10, 24, 70};
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto basis = message_basis_cyclic(n, 2);
    std::uint64_t successes = 0;
    for (std::size_t mu = 0; mu < n; ++mu) {
      if (basis.multiplicities[mu] == 0) continue;
      const auto instance = dense_coding_instance(basis, mu);
      for (std::size_t a = 0; a < instance.multiplicity; ++a) {
        for (std::size_t b = 0; b < instance.multiplicity; ++b) {
          bool ok = true;
          for (const auto& sigma : basis.group.elements()) {
            const auto r = dense_coding_roundtrip(basis, instance, a, b, sigma);
            ok = ok && r.a == a && r.b == b && std::abs(r.probability - 1.0) < 1e-9;
          }
          successes += ok ? 1 : 0;
        }
      }
    }
    const std::string where = "n=" + std::to_string(n);
    out.expect(successes == expected[n - 2], mismatch(where + " round-tripped triples", successes, expected[n - 2]));
    out.expect(count_cyclic(n, 2).ancilla == expected[n - 2], where + ": closed form N_a differs");
    out.expect(na_oracle(basis.group, 2) == expected[n - 2], where + ": sum m^2 differs");
  }
}

// ------------------------------------------------------------------ 8

void lemma_suite(Outcome& out) {
  for (auto [kind, n] : std::vector<std::pair<GroupKind, std::size_t>>{{GroupKind::cyclic, 6},
                                                                       {GroupKind::dihedral, 5},
                                                                       {GroupKind::symmetric, 4}}) {
    const auto group = make_named_group(kind, n);
    for (std::size_t d = 2; d <= 3; ++d) {
      const auto all = orbits(group, d);
      for (const auto& orbit : all) {
        out.expect(orbit.size() * orbit.stabilizer_order == group.order(), "orbit-stabilizer product");
        out.expect(stabilizer(group, orbit.representative()).order() == orbit.stabilizer_order, "stabilizer order");
      }
      std::vector<oracle::Images> plain;
      for (const auto& g : group.elements()) plain.emplace_back(g.images().begin(), g.images().end());
      out.expect(all.size() == oracle::orbit_count(plain, n, d), "orbit enumeration vs flood fill");
      out.expect(count_classical_burnside(group, d) == all.size(), "Burnside vs orbit enumeration");
    }
  }

  for (std::size_t n = 1; n <= 6; ++n) {
    const auto group = make_named_group(GroupKind::symmetric, n);
    const auto classes = conjugacy_classes(group);
    out.expect(classes.size() == partitions(n).size(), "class count != partition count");
    for (const auto& c : classes) {
      // |C_lambda| = n! / prod k^{m_k} m_k!
      BigInt denominator = 1;
      for (auto [k, m] : c.partition) {
        for (std::size_t i = 0; i < m; ++i) denominator *= k * (i + 1);
      }
      BigInt factorial = 1;
      for (std::size_t i = 2; i <= n; ++i) factorial *= i;
      out.expect(BigInt(c.size) == factorial / denominator, "class size formula at n=" + std::to_string(n));
    }
  }

  auto root_identity = [&](GroupKind kind, std::size_t n, bool should_hold) {
    const auto group = make_named_group(kind, n);
    const auto table = character_table(group);
    bool constant_on_classes = true;
    for (const auto& c : table.classes()) {
      const std::size_t first = square_root_count(group, c.members.front());
      for (const auto& member : c.members) constant_on_classes = constant_on_classes && square_root_count(group, member) == first;
    }
    out.expect(constant_on_classes, "square-root count not a class function");
    bool holds = true;
    for (std::size_t g = 0; g < group.order(); ++g) {
      Complex sum = 0.0;
      for (std::size_t mu = 0; mu < table.irreps().size(); ++mu) sum += table.character(mu, g);
      holds = holds && std::abs(sum - Complex(double(square_root_count(group, group.element(g))), 0.0)) < 1e-9;
    }
    const std::string where = std::string(to_string(kind)) + " n=" + std::to_string(n);
    out.expect(holds == should_hold, where + (should_hold ? ": identity fails" : ": counterexample not detected"));
  };
  root_identity(GroupKind::symmetric, 3, true);
  root_identity(GroupKind::symmetric, 4, true);
  root_identity(GroupKind::dihedral, 4, true);
  root_identity(GroupKind::cyclic, 4, false);
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"worked example C_4, d=2: counts, multiplicities, representatives, 16 encoding states", 1.0, worked_example},
      {"zero-error certification, cyclic n<=8 d=2 and n<=5 d=3", 30.0, zero_error},
      {"totally-orthogonal formula and ancilla sum agree with character oracle", 60.0, formula_oracle},
      {"negative control: cyclic n=3..6 rejected, formula != sum m (10 != 16 at n=4)", 60.0, negative_control},
      {"symmetric series == cycle index (n<=30, d<=4); brute-force Burnside (n<=7)", 60.0, symmetric_identities},
      {"strict hierarchy N_c < N_q < N_a; asymptotic ratios", 60.0, hierarchy_and_asymptotics},
      {"dense coding round-trips 10, 24, 70 triples for cyclic n=2,3,4", 10.0, dense_coding},
      {"lemma suite: orbit-stabilizer, Burnside, class sizes, square-root identity", 60.0, lemma_suite},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(outcome);
    } catch (const std::exception& e) {
      outcome.problems.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.time_limit_seconds) {
      outcome.problems.push_back("took " + std::to_string(seconds) + " s, limit " + std::to_string(c.time_limit_seconds) + " s");
    }
    const bool passed = outcome.problems.empty();
    failures += passed ? 0 : 1;
    std::cout << (passed ? "PASS" : "FAIL") << "  [" << (i + 1) << "] " << c.name << " (" << std::fixed
              << std::setprecision(3) << seconds << " s)\n";
    for (std::size_t p = 0; p < std::min<std::size_t>(outcome.problems.size(), 10); ++p) {
      std::cout << "        " << outcome.problems[p] << "\n";
    }
  }
  return failures;
}
