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

#include "permchan/counting.hpp"

#include <map>
#include <numeric>

#include "permchan/error.hpp"
#include "permchan/rep_theory.hpp"

namespace permchan {

namespace {

/// Sum of weight^{c(sigma)} grouped by cycle count, so each power is taken
/// once per distinct c.
BigInt sum_over_cycle_counts(const std::map<std::size_t, std::size_t>& histogram, std::uint64_t weight) {
  BigInt sum = 0;
  for (const auto& [cycles, multiplicity] : histogram) sum += big_pow(weight, cycles) * multiplicity;
  return sum;
}

std::map<std::size_t, std::size_t> cycle_count_histogram(const PermutationGroup& group) {
  std::map<std::size_t, std::size_t> histogram;
  for (const auto& sigma : group.elements()) ++histogram[cycle_count(sigma)];
  return histogram;
}

std::uint64_t checked_square(std::size_t d) {
  if (d > 0xFFFFFFFFull) throw InvalidArgument("alphabet size too large to square");
  return static_cast<std::uint64_t>(d) * d;
}

void require_alphabet(std::size_t d) {
  if (d == 0) throw InvalidArgument("alphabet size must be at least 1");
}

/// sum_{k=0}^{n-1} w^{gcd(k, n)}.
BigInt rotation_sum(std::size_t n, std::uint64_t w, std::size_t multiplier = 1) {
  std::map<std::size_t, std::size_t> histogram;
  for (std::size_t k = 0; k < n; ++k) ++histogram[std::gcd(multiplier * k, n)];
  return sum_over_cycle_counts(histogram, w);
}

/// Reflection term f(n) of the bracelet count.
BigInt reflection_sum(std::size_t n, std::uint64_t w) {
  if (n % 2 == 0) return BigInt(n / 2) * big_pow(w, n / 2) * (w + 1);
  return BigInt(n) * big_pow(w, (n + 1) / 2);
}

BigInt bracelets(std::size_t n, std::uint64_t w) {
  return exact_divide(rotation_sum(n, w) + reflection_sum(n, w), BigInt(2 * n), "bracelet count");
}

CountReport generic_report(const PermutationGroup& group, std::size_t d) {
  CountReport report;
  report.n = group.degree();
  report.d = d;
  report.classical = count_classical_burnside(group, d);
  report.ancilla = count_ancilla_polya(group, d);
  report.classical_method = CountMethod::burnside;
  report.ancilla_method = CountMethod::polya_ancilla;
  return report;
}

}  // namespace

std::string_view to_string(CountMethod method) {
  switch (method) {
    case CountMethod::burnside:
      return "burnside";
    case CountMethod::polya_ancilla:
      return "polya_ancilla";
    case CountMethod::totally_orthogonal:
      return "totally_orthogonal";
    case CountMethod::cyclic_closed_form:
      return "cyclic_closed_form";
    case CountMethod::dihedral_closed_form:
      return "dihedral_closed_form";
    case CountMethod::symmetric_closed_form:
      return "symmetric_closed_form";
    case CountMethod::oracle:
      return "oracle";
  }
  return "oracle";
}

std::vector<Partition> partitions(std::size_t n) {
  std::vector<Partition> out;
  std::vector<std::pair<std::size_t, std::size_t>> parts;
  // Choose the next part length strictly below the previous one, then its
  // multiplicity.
  auto recurse = [&](auto&& self, std::size_t remaining, std::size_t max_part) -> void {
    if (remaining == 0) {
      out.push_back({parts, n});
      return;
    }
    for (std::size_t len = std::min(remaining, max_part); len >= 1; --len) {
      for (std::size_t mult = remaining / len; mult >= 1; --mult) {
        parts.emplace_back(len, mult);
        self(self, remaining - len * mult, len - 1);
        parts.pop_back();
      }
    }
  };
  recurse(recurse, n, n);
  return out;
}

BigInt symmetric_class_size(const Partition& lambda) {
  BigInt denominator = 1;
  for (const auto& [len, mult] : lambda.parts) {
    for (std::size_t i = 2; i <= mult; ++i) denominator *= i;
    denominator *= big_pow(len, mult);
  }
  BigInt factorial = 1;
  for (std::size_t i = 2; i <= lambda.n; ++i) factorial *= i;
  return exact_divide(factorial, denominator, "conjugacy class size");
}

BigInt count_classical_burnside(const PermutationGroup& group, std::size_t d) {
  require_alphabet(d);
  return exact_divide(sum_over_cycle_counts(cycle_count_histogram(group), d), BigInt(group.order()),
                      "Burnside sum");
}

BigInt count_ancilla_polya(const PermutationGroup& group, std::size_t d) {
  require_alphabet(d);
  return exact_divide(sum_over_cycle_counts(cycle_count_histogram(group), checked_square(d)), BigInt(group.order()),
                      "ancilla Polya sum");
}

BigInt count_quantum_totally_orthogonal(const PermutationGroup& group, std::size_t d, bool certify) {
  require_alphabet(d);
  if (certify) {
    const CharacterTable table = character_table(group);
    const FSIndicators fs = frobenius_schur_indicators(group, table);
    for (std::size_t mu = 0; mu < fs.values.size(); ++mu) {
      if (fs.values[mu] != 1) {
        throw NotTotallyOrthogonal("irrep " + table.irreps()[mu].label + " has Frobenius-Schur indicator " +
                                   std::to_string(fs.values[mu]));
      }
    }
  }
  std::map<std::size_t, std::size_t> histogram;
  for (const auto& sigma : group.elements()) ++histogram[cycle_count(sigma * sigma)];
  return exact_divide(sum_over_cycle_counts(histogram, d), BigInt(group.order()), "squared-element sum");
}

CountReport count_cyclic(std::size_t n, std::size_t d) {
  if (n == 0) throw InvalidArgument("n must be at least 1");
  require_alphabet(d);
  CountReport report;
  report.n = n;
  report.d = d;
  report.classical = exact_divide(rotation_sum(n, d), BigInt(n), "necklace count");
  report.quantum = big_pow(d, n);
  report.ancilla = exact_divide(rotation_sum(n, checked_square(d)), BigInt(n), "ancilla necklace count");
  report.classical_method = CountMethod::cyclic_closed_form;
  report.quantum_method = CountMethod::cyclic_closed_form;
  report.ancilla_method = CountMethod::cyclic_closed_form;
  return report;
}

CountReport count_dihedral(std::size_t n, std::size_t d) {
  if (n == 0) throw InvalidArgument("n must be at least 1");
  require_alphabet(d);
  if (n < 3) {
    const PermutationGroup group = make_named_group(GroupKind::dihedral, n);
    CountReport report = generic_report(group, d);
    report.quantum = count_quantum_totally_orthogonal(group, d, false);
    report.quantum_method = CountMethod::totally_orthogonal;
    return report;
  }
  CountReport report;
  report.n = n;
  report.d = d;
  report.classical = bracelets(n, d);
  report.ancilla = bracelets(n, checked_square(d));
  const std::size_t b = n % 2 == 0 ? 2 : 1;
  report.quantum = exact_divide(BigInt(n) * big_pow(d, n) + rotation_sum(n, d, b), BigInt(2 * n),
                                "dihedral quantum count");
  report.classical_method = CountMethod::dihedral_closed_form;
  report.quantum_method = CountMethod::dihedral_closed_form;
  report.ancilla_method = CountMethod::dihedral_closed_form;
  return report;
}

CountReport count_symmetric(std::size_t n, std::size_t d) {
  if (n == 0) throw InvalidArgument("n must be at least 1");
  require_alphabet(d);
  CountReport report;
  report.n = n;
  report.d = d;
  report.classical = binomial(n + d - 1, n);
  report.quantum = series_coefficient_nq(n, d);
  report.ancilla = binomial(n + checked_square(d) - 1, n);
  report.classical_method = CountMethod::symmetric_closed_form;
  report.quantum_method = CountMethod::symmetric_closed_form;
  report.ancilla_method = CountMethod::symmetric_closed_form;
  return report;
}

CountReport count_group(const PermutationGroup& group, std::size_t d, QuantumCountPolicy policy,
                        const Bounds& bounds) {
  CountReport report = generic_report(group, d);
  if (group.order() > bounds.max_character_table_order) {
    if (group.kind() == GroupKind::cyclic) {
      report.quantum = big_pow(d, group.degree());
      report.quantum_method = CountMethod::cyclic_closed_form;
    } else {
      report.quantum_undefined_reason = "group order " + std::to_string(group.order()) +
                                        " exceeds the character-table bound; total orthogonality not certified";
    }
    return report;
  }
  const CharacterTable table = character_table(group, bounds);
  const FSIndicators fs = frobenius_schur_indicators(group, table);
  const bool totally_orthogonal = std::all_of(fs.values.begin(), fs.values.end(), [](int v) { return v == 1; });
  if (totally_orthogonal) {
    report.quantum = count_quantum_totally_orthogonal(group, d, false);
    report.quantum_method = CountMethod::totally_orthogonal;
  } else if (policy == QuantumCountPolicy::allow_oracle) {
    report.quantum = nq_oracle(ambient_multiplicities(group, table, d, false, bounds));
    report.quantum_method = CountMethod::oracle;
  } else {
    report.quantum_undefined_reason = "group is not totally orthogonal and the character-table oracle was not run";
  }
  return report;
}

Rational cycle_index_symmetric(std::size_t n, std::span<const Rational> a) {
  if (a.size() < n) throw InvalidArgument("cycle index needs at least n arguments");
  Rational total = 0;
  for (const auto& lambda : partitions(n)) {
    Rational term = 1;
    for (const auto& [len, mult] : lambda.parts) {
      BigInt weight = big_pow(len, mult);
      for (std::size_t i = 2; i <= mult; ++i) weight *= i;
      Rational power = 1;
      for (std::size_t i = 0; i < mult; ++i) power *= a[len - 1];
      term *= power / Rational(weight);
    }
    total += term;
  }
  return total;
}

BigInt series_coefficient_nq(std::size_t n, std::size_t d) {
  require_alphabet(d);
  const std::uint64_t pole = static_cast<std::uint64_t>(d) * (d + 1) / 2;  // exponent of (1-x)^{-1}
  const std::uint64_t zero = static_cast<std::uint64_t>(d) * (d - 1) / 2;  // exponent of (1+x)^{-1}
  // [x^k] (1-x)^{-A} = C(A+k-1, k); [x^k] (1+x)^{-B} = (-1)^k C(B+k-1, k).
  std::vector<BigInt> left(n + 1);
  std::vector<BigInt> right(n + 1);
  left[0] = 1;
  right[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    left[k] = left[k - 1] * (pole + k - 1) / k;
    right[k] = -right[k - 1] * (zero + k - 1) / k;
  }
  BigInt coefficient = 0;
  for (std::size_t k = 0; k <= n; ++k) coefficient += left[k] * right[n - k];
  return coefficient;
}

std::string_view to_string(AsymptoticKind kind) {
  switch (kind) {
    case AsymptoticKind::cyclic_Nc:
      return "cyclic_Nc";
    case AsymptoticKind::cyclic_Na:
      return "cyclic_Na";
    case AsymptoticKind::dihedral_Nc:
      return "dihedral_Nc";
    case AsymptoticKind::dihedral_Nq:
      return "dihedral_Nq";
    case AsymptoticKind::dihedral_Na:
      return "dihedral_Na";
    case AsymptoticKind::symmetric_Nc:
      return "symmetric_Nc";
    case AsymptoticKind::symmetric_Nq:
      return "symmetric_Nq";
    case AsymptoticKind::symmetric_Na:
      return "symmetric_Na";
  }
  return "cyclic_Nc";
}

AsymptoticKind parse_asymptotic_kind(std::string_view text) {
  for (auto kind : {AsymptoticKind::cyclic_Nc, AsymptoticKind::cyclic_Na, AsymptoticKind::dihedral_Nc,
                    AsymptoticKind::dihedral_Nq, AsymptoticKind::dihedral_Na, AsymptoticKind::symmetric_Nc,
                    AsymptoticKind::symmetric_Nq, AsymptoticKind::symmetric_Na}) {
    if (text == to_string(kind)) return kind;
  }
  throw InvalidArgument("unknown asymptotic law \"" + std::string(text) + "\"");
}

AsymptoticEstimate asymptotic_estimate(AsymptoticKind kind, std::size_t n, std::size_t d) {
  if (n == 0) throw InvalidArgument("n must be at least 1");
  require_alphabet(d);
  const BigFloat nf(n);
  const BigFloat df(d);
  auto factorial = [](std::uint64_t k) {
    BigFloat f = 1;
    for (std::uint64_t i = 2; i <= k; ++i) f *= i;
    return f;
  };
  using boost::multiprecision::pow;
  BigFloat value;
  switch (kind) {
    case AsymptoticKind::cyclic_Nc:
      value = pow(df, n) / nf;
      break;
    case AsymptoticKind::cyclic_Na:
      value = pow(df, 2 * n) / nf;
      break;
    case AsymptoticKind::dihedral_Nc:
      value = pow(df, n) / (2 * nf);
      break;
    case AsymptoticKind::dihedral_Nq:
      value = pow(df, n) / 2;
      break;
    case AsymptoticKind::dihedral_Na:
      value = pow(df, 2 * n) / (2 * nf);
      break;
    case AsymptoticKind::symmetric_Nc:
      value = pow(nf, d - 1) / factorial(d - 1);
      break;
    case AsymptoticKind::symmetric_Nq: {
      const std::uint64_t pole = static_cast<std::uint64_t>(d) * (d + 1) / 2;
      const std::uint64_t zero = static_cast<std::uint64_t>(d) * (d - 1) / 2;
      value = pow(nf, pole - 1) / (pow(BigFloat(2), zero) * factorial(pole - 1));
      break;
    }
    case AsymptoticKind::symmetric_Na: {
      const std::uint64_t dd = checked_square(d);
      value = pow(nf, dd - 1) / factorial(dd - 1);
      break;
    }
  }
  return {value, kind};
}

BigInt exact_count(AsymptoticKind kind, std::size_t n, std::size_t d) {
  switch (kind) {
    case AsymptoticKind::cyclic_Nc:
      return count_cyclic(n, d).classical;
    case AsymptoticKind::cyclic_Na:
      return count_cyclic(n, d).ancilla;
    case AsymptoticKind::dihedral_Nc:
      return count_dihedral(n, d).classical;
    case AsymptoticKind::dihedral_Nq:
      return *count_dihedral(n, d).quantum;
    case AsymptoticKind::dihedral_Na:
      return count_dihedral(n, d).ancilla;
    case AsymptoticKind::symmetric_Nc:
      return binomial(n + d - 1, n);
    case AsymptoticKind::symmetric_Nq:
      return series_coefficient_nq(n, d);
    case AsymptoticKind::symmetric_Na:
      return binomial(n + checked_square(d) - 1, n);
  }
  throw InvalidArgument("unknown asymptotic law");
}

}  // namespace permchan
