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

#include "permchan/channel.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "permchan/error.hpp"

namespace permchan {

namespace {

constexpr double kCertaintyTolerance = 1e-9;
constexpr std::uint64_t kMaxDenseCodingAmplitudes = std::uint64_t{1} << 24;

/// <u_e|psi> for every entry e sharing support with psi.
std::unordered_map<std::uint32_t, Complex> overlaps(const MessageBasis& basis, const StateVector& psi) {
  std::unordered_map<std::uint32_t, Complex> out;
  for (const auto& [index, value] : psi.amplitudes()) {
    for (std::uint32_t e : basis.entries_by_string[index]) {
      out[e] += std::conj(basis.entries[e].state.amplitude(index)) * value;
    }
  }
  return out;
}

void require_matching(const PermutationGroup& group, const MessageBasis& basis) {
  if (group.kind() != GroupKind::cyclic || group.degree() != basis.n || group.order() != basis.group.order()) {
    throw InvalidArgument("group does not match the cyclic message basis");
  }
}

std::size_t element_index(const PermutationGroup& group, const Permutation& sigma) {
  auto idx = group.index_of(sigma);
  if (!idx) throw InvalidArgument("permutation " + sigma.to_cycle_string() + " is not in the channel group");
  return *idx;
}

}  // namespace

void validate(const ChannelSpec& spec) {
  if (const auto* fixed = std::get_if<FixedSelection>(&spec.selection)) element_index(spec.group, fixed->sigma);
}

std::vector<std::size_t> selected_elements(const ChannelSpec& spec, std::uint64_t trial) {
  return std::visit(
      [&](const auto& selection) -> std::vector<std::size_t> {
        using T = std::decay_t<decltype(selection)>;
        if constexpr (std::is_same_v<T, ExhaustiveSelection>) {
          std::vector<std::size_t> all(spec.group.order());
          for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
          return all;
        } else if constexpr (std::is_same_v<T, UniformRandomSelection>) {
          std::seed_seq seq{static_cast<std::uint32_t>(selection.seed), static_cast<std::uint32_t>(selection.seed >> 32),
                            static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
          std::mt19937_64 rng(seq);
          std::uniform_int_distribution<std::size_t> pick(0, spec.group.order() - 1);
          return {pick(rng)};
        } else {
          return {element_index(spec.group, selection.sigma)};
        }
      },
      spec.selection);
}

std::vector<ClassicalTransmission> apply_channel_classical(const ChannelSpec& spec, const ColoredString& x,
                                                           std::uint64_t trial) {
  if (x.length() != spec.group.degree()) throw InvalidArgument("string length does not match channel degree");
  std::vector<ClassicalTransmission> out;
  for (std::size_t i : selected_elements(spec, trial)) {
    const Permutation& sigma = spec.group.element(i);
    out.push_back({act_on_string(sigma, x), sigma});
  }
  return out;
}

std::vector<QuantumTransmission> apply_channel_quantum(const ChannelSpec& spec, const StateVector& psi,
                                                       std::uint64_t trial) {
  if (psi.length() != spec.group.degree()) throw InvalidArgument("state length does not match channel degree");
  std::vector<QuantumTransmission> out;
  for (std::size_t i : selected_elements(spec, trial)) {
    const Permutation& sigma = spec.group.element(i);
    out.push_back({apply_permutation(sigma, psi), sigma});
  }
  return out;
}

std::size_t decode_classical(const OrbitPartition& partition, const ColoredString& y) {
  return partition.orbit_index(y);
}

QuantumDecode decode_quantum(const MessageBasis& basis, const StateVector& psi) {
  if (psi.length() != basis.n || psi.alphabet() != basis.d) throw InvalidArgument("state does not match the basis");
  const auto amplitudes = overlaps(basis, psi);
  double best = -1.0;
  double second = 0.0;
  std::uint32_t best_entry = 0;
  for (const auto& [entry, overlap] : amplitudes) {
    const double p = std::norm(overlap);
    if (p > best || (p == best && entry < best_entry)) {
      second = std::max(second, best);
      best = p;
      best_entry = entry;
    } else {
      second = std::max(second, p);
    }
  }
  if (best < 0.0) throw AmbiguousDecode("state has no overlap with any message");
  if (best - second < kDecodeTieTolerance) {
    throw AmbiguousDecode("top two message overlaps tie at probability " + std::to_string(best));
  }
  const auto& entry = basis.entries[best_entry];
  return {entry.irrep, entry.alpha, best_entry, best};
}

std::string ZeroErrorReport::to_json() const {
  nlohmann::json failures_json = nlohmann::json::array();
  for (const auto& f : failures) failures_json.push_back({{"message", f.message}, {"sigma", f.sigma.to_string()}});
  nlohmann::json doc{{"messages", messages_tested},
                     {"elements", group_elements_tested},
                     {"trials", trials},
                     {"failures", failures_json},
                     {"max_offdiag_overlap", max_offdiag_overlap}};
  return doc.dump();
}

ZeroErrorReport verify_zero_error(const PermutationGroup& group, const MessageBasis& basis, bool exhaustive,
                                  std::uint64_t seed) {
  require_matching(group, basis);
  ChannelSpec spec{group, exhaustive ? ElementSelection{ExhaustiveSelection{}}
                                     : ElementSelection{UniformRandomSelection{seed}}};
  ZeroErrorReport report;
  report.messages_tested = basis.size();
  std::vector<bool> element_used(group.order(), false);
  for (std::size_t m = 0; m < basis.size(); ++m) {
    for (std::size_t i : selected_elements(spec, m)) {
      element_used[i] = true;
      ++report.trials;
      const StateVector received = apply_permutation(group.element(i), basis.entries[m].state);
      for (const auto& [entry, overlap] : overlaps(basis, received)) {
        if (entry != m) report.max_offdiag_overlap = std::max(report.max_offdiag_overlap, std::norm(overlap));
      }
      try {
        const QuantumDecode decoded = decode_quantum(basis, received);
        if (decoded.entry != m || decoded.probability < 1.0 - kCertaintyTolerance) {
          report.failures.push_back({m, group.element(i)});
        }
      } catch (const AmbiguousDecode&) {
        report.failures.push_back({m, group.element(i)});
      }
    }
  }
  report.group_elements_tested = static_cast<std::size_t>(std::count(element_used.begin(), element_used.end(), true));
  return report;
}

std::vector<WeylOperator> weyl_operators(std::size_t m) {
  if (m == 0) throw InvalidArgument("Weyl operators need dimension at least 1");
  const auto dim = static_cast<Eigen::Index>(m);
  Eigen::MatrixXcd shift = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd clock = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    shift((j + 1) % dim, j) = 1.0;
    clock(j, j) = root_of_unity(j, dim);
  }
  std::vector<WeylOperator> out;
  out.reserve(m * m);
  Eigen::MatrixXcd shift_power = Eigen::MatrixXcd::Identity(dim, dim);
  for (std::size_t a = 0; a < m; ++a) {
    Eigen::MatrixXcd clock_power = Eigen::MatrixXcd::Identity(dim, dim);
    for (std::size_t b = 0; b < m; ++b) {
      out.push_back({a, b, shift_power * clock_power});
      clock_power = clock * clock_power;
    }
    shift_power = shift * shift_power;
  }
  return out;
}

DenseCodingInstance dense_coding_instance(const MessageBasis& basis, std::size_t mu) {
  if (mu >= basis.multiplicities.size() || basis.multiplicities[mu] == 0) {
    throw InvalidArgument("sector " + std::to_string(mu) + " is empty or out of range");
  }
  const std::vector<std::size_t> sector = basis.sector(mu);
  const std::size_t m = sector.size();
  const StringSpace space(basis.n, basis.d);
  if (space.size() * m * m * m > kMaxDenseCodingAmplitudes) {
    throw BoundExceeded("dense-coding instance for sector " + std::to_string(mu) + " is too large to store");
  }
  const auto dim = static_cast<Eigen::Index>(space.size());
  const auto mm = static_cast<Eigen::Index>(m);

  // Columns are the sector's message states; the isometry from the
  // multiplicity space into the message space.
  Eigen::MatrixXcd embed = Eigen::MatrixXcd::Zero(dim, mm);
  for (std::size_t alpha = 0; alpha < m; ++alpha) {
    for (const auto& [index, value] : basis.entries[sector[alpha]].state.amplitudes()) {
      embed(static_cast<Eigen::Index>(index), static_cast<Eigen::Index>(alpha)) = value;
    }
  }
  DenseCodingInstance instance;
  instance.irrep = mu;
  instance.multiplicity = m;
  instance.message_dimension = space.size();
  const double norm = 1.0 / std::sqrt(static_cast<double>(m));
  for (const auto& w : weyl_operators(m)) {
    // (W (x) I)|Phi> has components sum_beta u_beta(x) W(beta, alpha) / sqrt(m)
    // at x * m + alpha.
    const Eigen::MatrixXcd rotated = norm * embed * w.matrix;
    Eigen::VectorXcd state(dim * mm);
    for (Eigen::Index x = 0; x < dim; ++x) {
      for (Eigen::Index alpha = 0; alpha < mm; ++alpha) state[x * mm + alpha] = rotated(x, alpha);
    }
    instance.entangled_states.push_back(std::move(state));
    instance.weyl_index.emplace_back(w.a, w.b);
  }
  return instance;
}

DenseCodingResult dense_coding_roundtrip(const MessageBasis& basis, const DenseCodingInstance& instance,
                                         std::size_t a, std::size_t b, const Permutation& sigma) {
  const std::size_t m = instance.multiplicity;
  if (a >= m || b >= m) throw InvalidArgument("Weyl index out of range for multiplicity " + std::to_string(m));
  element_index(basis.group, sigma);
  const StringSpace space(basis.n, basis.d);
  const auto mm = static_cast<Eigen::Index>(m);
  const Eigen::VectorXcd& sent = instance.entangled_states[a * m + b];
  Eigen::VectorXcd received = Eigen::VectorXcd::Zero(sent.size());
  for (std::uint64_t x = 0; x < space.size(); ++x) {
    const auto target = static_cast<Eigen::Index>(space.act(sigma, x));
    const auto source = static_cast<Eigen::Index>(x);
    received.segment(target * mm, mm) = sent.segment(source * mm, mm);
  }
  double best = -1.0;
  double second = 0.0;
  std::size_t best_index = 0;
  for (std::size_t i = 0; i < instance.entangled_states.size(); ++i) {
    const double p = std::norm(instance.entangled_states[i].dot(received));
    if (p > best) {
      second = std::max(second, best);
      best = p;
      best_index = i;
    } else {
      second = std::max(second, p);
    }
  }
  if (best - second < kDecodeTieTolerance) throw AmbiguousDecode("dense-coding measurement is ambiguous");
  return {instance.weyl_index[best_index].first, instance.weyl_index[best_index].second, best};
}

DenseCodingResult dense_coding_roundtrip(std::size_t n, std::size_t d, std::size_t mu, std::size_t a, std::size_t b,
                                         const Permutation& sigma) {
  const MessageBasis basis = message_basis_cyclic(n, d);
  return dense_coding_roundtrip(basis, dense_coding_instance(basis, mu), a, b, sigma);
}

double sector_phase_residual(const MessageBasis& basis, std::size_t mu, const Permutation& sigma) {
  if (sigma.degree() != basis.n) throw InvalidArgument("permutation degree does not match the basis");
  const std::size_t k = sigma(0);
  if (sigma != cyclic_shift(basis.n).pow(static_cast<std::int64_t>(k))) {
    throw InvalidArgument("permutation is not a power of the cyclic shift");
  }
  const Complex phase = root_of_unity(static_cast<std::int64_t>(mu * k), static_cast<std::int64_t>(basis.n));
  const std::vector<std::size_t> sector = basis.sector(mu);
  double residual = 0.0;
  for (std::size_t beta = 0; beta < sector.size(); ++beta) {
    const StateVector moved = apply_permutation(sigma, basis.entries[sector[beta]].state);
    for (std::size_t alpha = 0; alpha < sector.size(); ++alpha) {
      const Complex expected = alpha == beta ? phase : Complex{};
      residual = std::max(residual, std::abs(basis.entries[sector[alpha]].state.inner(moved) - expected));
    }
  }
  return residual;
}

}  // namespace permchan
