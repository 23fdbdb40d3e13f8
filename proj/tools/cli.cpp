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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "permchan/channel.hpp"
#include "permchan/counting.hpp"
#include "permchan/encoding.hpp"
#include "permchan/error.hpp"
#include "permchan/group.hpp"
#include "permchan/orbit.hpp"
#include "permchan/rep_theory.hpp"

namespace permchan::cli {

namespace {

using nlohmann::json;

enum class Format { table, csv, json };
enum class Mode { classical, quantum, ancilla, all };

struct RunConfig {
  std::string group_kind;
  std::string group_file;
  std::size_t n = 0;
  std::size_t d = 2;
  std::string mode = "all";
  std::string format = "table";
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out_path;
  bool unsafe_bounds = false;
  std::size_t n_min = 1;
  std::size_t n_max = 0;
};

/// Raised for argument combinations CLI11 cannot express.
class UsageError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

Bounds bounds_for(const RunConfig& config) {
  Bounds bounds;
  if (config.unsafe_bounds) {
    bounds.max_group_order = 10'000'000;
    bounds.max_states = std::uint64_t{1} << 34;
    bounds.max_character_table_order = 40320;
    bounds.max_projector_dimension = std::uint64_t{1} << 14;
  }
  return bounds;
}

Format parse_format(const std::string& text) {
  if (text == "table") return Format::table;
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw UsageError("unknown format \"" + text + "\"");
}

Mode parse_mode(const std::string& text) {
  if (text == "classical") return Mode::classical;
  if (text == "quantum") return Mode::quantum;
  if (text == "ancilla") return Mode::ancilla;
  if (text == "all") return Mode::all;
  throw UsageError("unknown mode \"" + text + "\"");
}

struct ResolvedGroup {
  PermutationGroup group;
  std::string description;
};

ResolvedGroup resolve_group(const RunConfig& config, const Bounds& bounds) {
  const bool by_kind = !config.group_kind.empty();
  const bool by_file = !config.group_file.empty();
  if (by_kind == by_file) throw UsageError("give exactly one of --group or --group-file");
  if (by_file) {
    auto generators = read_generator_file(config.group_file);
    if (generators.empty()) throw UsageError("group file " + config.group_file + " contains no permutations");
    auto group = generate_group(generators, bounds);
    return {std::move(group), "custom(" + config.group_file + ")"};
  }
  const GroupKind kind = parse_group_kind(config.group_kind);
  if (kind == GroupKind::custom) throw UsageError("--group custom needs --group-file instead");
  if (config.n == 0) throw UsageError("--n must be given and at least 1");
  return {make_named_group(kind, config.n, bounds), std::string(to_string(kind))};
}

/// Named kinds that have closed forms, or nullopt for file groups.
std::optional<GroupKind> named_kind(const RunConfig& config) {
  if (config.group_kind.empty()) return std::nullopt;
  const GroupKind kind = parse_group_kind(config.group_kind);
  if (kind == GroupKind::custom) throw UsageError("--group custom needs --group-file instead");
  if (config.n == 0) throw UsageError("--n must be given and at least 1");
  return kind;
}

void require_alphabet(const RunConfig& config) {
  if (config.d == 0) throw UsageError("--d must be at least 1");
}

void require_cyclic(const RunConfig& config, const char* command) {
  if (config.group_kind != "cyclic" || !config.group_file.empty()) {
    throw UsageError(std::string(command) + " supports only --group cyclic");
  }
  if (config.n == 0) throw UsageError("--n must be given and at least 1");
}

/// Writes \p text to --out when given, otherwise to \p out.
void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.out_path);
  if (!file) throw UsageError("cannot open " + config.out_path + " for writing");
  file << text;
}

std::string join(const std::vector<std::size_t>& values, const char* sep) {
  std::ostringstream s;
  for (std::size_t i = 0; i < values.size(); ++i) s << (i ? sep : "") << values[i];
  return s.str();
}

std::string format_complex(Complex z) {
  std::ostringstream s;
  s << std::setprecision(6);
  const double re = std::abs(z.real()) < 1e-12 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 1e-12 ? 0.0 : z.imag();
  if (im == 0.0) {
    s << re;
  } else if (re == 0.0) {
    s << im << "i";
  } else {
    s << re << (im < 0 ? "-" : "+") << std::abs(im) << "i";
  }
  return s.str();
}

// ---------------------------------------------------------------- count

int cmd_count(const RunConfig& config, std::ostream& out) {
  require_alphabet(config);
  const Format format = parse_format(config.format);
  const Mode mode = parse_mode(config.mode);
  const Bounds bounds = bounds_for(config);

  CountReport report;
  std::string description;
  if (auto kind = named_kind(config)) {
    description = std::string(to_string(*kind));
    switch (*kind) {
      case GroupKind::cyclic:
        report = count_cyclic(config.n, config.d);
        break;
      case GroupKind::dihedral:
        report = count_dihedral(config.n, config.d);
        break;
      default:
        report = count_symmetric(config.n, config.d);
        break;
    }
  } else {
    auto resolved = resolve_group(config, bounds);
    description = resolved.description;
    report = count_group(resolved.group, config.d, QuantumCountPolicy::allow_oracle, bounds);
  }

  struct Row {
    const char* name;
    std::string value;
    std::string method;
  };
  std::vector<Row> rows;
  if (mode == Mode::classical || mode == Mode::all) {
    rows.push_back({"N_c", report.classical.str(), std::string(to_string(report.classical_method))});
  }
  if (mode == Mode::quantum || mode == Mode::all) {
    if (report.quantum_defined()) {
      rows.push_back({"N_q", report.quantum->str(), std::string(to_string(*report.quantum_method))});
    } else {
      rows.push_back({"N_q", "undefined", report.quantum_undefined_reason});
    }
  }
  if (mode == Mode::ancilla || mode == Mode::all) {
    rows.push_back({"N_a", report.ancilla.str(), std::string(to_string(report.ancilla_method))});
  }

  std::ostringstream text;
  switch (format) {
    case Format::table:
      text << "group: " << description << "  n: " << report.n << "  d: " << report.d << "\n";
      for (const auto& row : rows) text << row.name << " = " << row.value << "  [" << row.method << "]\n";
      break;
    case Format::csv:
      text << "quantity,value,method\n";
      for (const auto& row : rows) text << row.name << ',' << row.value << ',' << row.method << "\n";
      break;
    case Format::json: {
      json doc{{"group", description}, {"n", report.n}, {"d", report.d}};
      for (const auto& row : rows) {
        if (row.value == "undefined") {
          doc[row.name] = nullptr;
          doc["N_q_undefined_reason"] = row.method;
        } else {
          doc[row.name] = row.value;
          doc["methods"][row.name] = row.method;
        }
      }
      doc["N_q_defined"] = report.quantum_defined();
      text << doc.dump(2) << "\n";
      break;
    }
  }
  emit(config, out, text.str());
  return kSuccess;
}

// ------------------------------------------------------- representatives

int cmd_representatives(const RunConfig& config, std::ostream& out) {
  require_cyclic(config, "representatives");
  require_alphabet(config);
  const Format format = parse_format(config.format);
  const auto reps = fkm_representatives(config.n, config.d, bounds_for(config));
  std::ostringstream text;
  switch (format) {
    case Format::table:
      for (const auto& r : reps) text << r.to_string() << "\n";
      break;
    case Format::csv:
      text << "index,representative\n";
      for (std::size_t i = 0; i < reps.size(); ++i) text << i << ',' << reps[i].to_string() << "\n";
      break;
    case Format::json: {
      json arr = json::array();
      for (const auto& r : reps) arr.push_back(r.to_string());
      text << arr.dump() << "\n";
      break;
    }
  }
  emit(config, out, text.str());
  return kSuccess;
}

// ---------------------------------------------------------------- encode

int cmd_encode(const RunConfig& config, std::ostream& out) {
  require_cyclic(config, "encode");
  require_alphabet(config);
  const MessageBasis basis = message_basis_cyclic(config.n, config.d, bounds_for(config));
  const std::string summary = "m: [" + join(basis.multiplicities, ",") + "]\n";
  if (config.out_path.empty()) {
    out << summary << basis.to_json() << "\n";
  } else {
    emit(config, out, basis.to_json() + "\n");
    out << "wrote " << basis.size() << " states to " << config.out_path << "\n" << summary;
  }
  return kSuccess;
}

// -------------------------------------------------------------- simulate

json classical_simulation(const PermutationGroup& group, std::size_t d, const ChannelSpec& spec, const Bounds& bounds,
                          std::size_t& failures) {
  const OrbitPartition partition = orbit_partition(group, d, bounds);
  json failed = json::array();
  std::size_t trials = 0;
  for (std::size_t m = 0; m < partition.orbits.size(); ++m) {
    const ColoredString sent = partition.orbits[m].representative();
    for (const auto& t : apply_channel_classical(spec, sent, m)) {
      ++trials;
      if (decode_classical(partition, t.output) != m) failed.push_back({{"message", m}, {"sigma", t.sigma.to_string()}});
    }
  }
  failures += failed.size();
  return {{"messages", partition.orbits.size()},
          {"elements", std::holds_alternative<ExhaustiveSelection>(spec.selection) ? group.order() : std::size_t{1}},
          {"trials", trials},
          {"failures", failed}};
}

json ancilla_simulation(const MessageBasis& basis, std::size_t& failures) {
  std::size_t successes = 0;
  json failed = json::array();
  for (std::size_t mu = 0; mu < basis.multiplicities.size(); ++mu) {
    if (basis.multiplicities[mu] == 0) continue;
    const DenseCodingInstance instance = dense_coding_instance(basis, mu);
    const std::size_t m = instance.multiplicity;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        bool ok = true;
        for (const auto& sigma : basis.group.elements()) {
          try {
            const auto r = dense_coding_roundtrip(basis, instance, a, b, sigma);
            ok = ok && r.a == a && r.b == b && r.probability > 1.0 - 1e-9;
          } catch (const AmbiguousDecode&) {
            ok = false;
          }
        }
        if (ok) {
          ++successes;
        } else {
          failed.push_back({{"mu", mu}, {"a", a}, {"b", b}});
        }
      }
    }
  }
  failures += failed.size();
  return {{"roundtripped", successes}, {"failures", failed}};
}

int cmd_simulate(const RunConfig& config, std::ostream& out) {
  require_alphabet(config);
  const Mode mode = parse_mode(config.mode);
  const Bounds bounds = bounds_for(config);
  auto resolved = resolve_group(config, bounds);
  const PermutationGroup& group = resolved.group;
  const bool exhaustive = !config.seed_given;
  ChannelSpec spec{group, exhaustive ? ElementSelection{ExhaustiveSelection{}}
                                     : ElementSelection{UniformRandomSelection{config.seed}}};

  json doc{{"group", resolved.description}, {"n", group.degree()}, {"d", config.d}, {"exhaustive", exhaustive}};
  if (!exhaustive) doc["seed"] = config.seed;
  std::size_t failures = 0;
  if (mode == Mode::classical || mode == Mode::all) {
    doc["classical"] = classical_simulation(group, config.d, spec, bounds, failures);
  }
  const bool needs_basis = mode != Mode::classical;
  if (needs_basis) {
    if (group.kind() != GroupKind::cyclic) {
      throw UsageError("quantum and ancilla simulation support only --group cyclic");
    }
    const MessageBasis basis = message_basis_cyclic(group.degree(), config.d, bounds);
    if (mode == Mode::quantum || mode == Mode::all) {
      const ZeroErrorReport report = verify_zero_error(group, basis, exhaustive, config.seed);
      failures += report.failures.size();
      doc["quantum"] = json::parse(report.to_json());
    }
    if (mode == Mode::ancilla || mode == Mode::all) doc["ancilla"] = ancilla_simulation(basis, failures);
  }
  emit(config, out, doc.dump(2) + "\n");
  return failures == 0 ? kSuccess : kVerificationFailure;
}

// ---------------------------------------------------------------- verify

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

template <typename A, typename B>
Check equality(std::string name, const A& lhs, const B& rhs) {
  std::ostringstream detail;
  detail << lhs << (lhs == rhs ? " == " : " != ") << rhs;
  return {std::move(name), lhs == rhs, detail.str()};
}

std::vector<Check> run_checks(const RunConfig& config, const PermutationGroup& group, const Bounds& bounds) {
  const std::size_t d = config.d;
  const std::size_t n = group.degree();
  std::vector<Check> checks;

  const BigInt burnside = count_classical_burnside(group, d);
  const BigInt ancilla = count_ancilla_polya(group, d);
  checks.push_back(equality("ancilla sum == Burnside at d^2", ancilla, count_classical_burnside(group, d * d)));

  std::optional<OrbitPartition> partition;
  try {
    partition = orbit_partition(group, d, bounds);
  } catch (const BoundExceeded&) {
    checks.push_back({"orbit enumeration", true, "skipped: d^n above the state bound"});
  }
  if (partition) {
    checks.push_back(equality("Burnside == orbit count", burnside, BigInt(partition->orbits.size())));
    bool stabilizers_ok = true;
    std::size_t covered = 0;
    for (const auto& orbit : partition->orbits) {
      stabilizers_ok = stabilizers_ok && orbit.size() * orbit.stabilizer_order == group.order();
      covered += orbit.size();
    }
    checks.push_back({"orbit-stabilizer |O||G_x| == |G|", stabilizers_ok, std::to_string(partition->orbits.size()) + " orbits"});
    checks.push_back(equality("orbits cover d^n strings", covered, partition->orbit_of.size()));
  }

  std::optional<BigInt> quantum;
  if (auto kind = named_kind(config)) {
    CountReport closed = *kind == GroupKind::cyclic     ? count_cyclic(n, d)
                         : *kind == GroupKind::dihedral ? count_dihedral(n, d)
                                                        : count_symmetric(n, d);
    checks.push_back(equality("closed-form N_c == Burnside", closed.classical, burnside));
    checks.push_back(equality("closed-form N_a == ancilla sum", closed.ancilla, ancilla));
    quantum = closed.quantum;
  }

  if (group.order() <= bounds.max_character_table_order) {
    const CharacterTable table = character_table(group, bounds);
    const FSIndicators fs = frobenius_schur_indicators(group, table);
    std::ostringstream fs_text;
    for (std::size_t i = 0; i < fs.values.size(); ++i) fs_text << (i ? "," : "") << fs.values[i];
    const bool totally_orthogonal = std::all_of(fs.values.begin(), fs.values.end(), [](int v) { return v == 1; });
    std::optional<MultiplicityVector> mult;
    try {
      mult = ambient_multiplicities(group, table, d, false, bounds);
    } catch (const BoundExceeded&) {
      checks.push_back({"multiplicity oracle", true, "skipped: d^n above the state bound"});
    }
    const BigInt squared_formula = count_quantum_totally_orthogonal(group, d, false);
    if (mult) {
      const BigInt oracle_q = nq_oracle(*mult);
      checks.push_back(equality("sum m_mu^2 == ancilla sum", na_oracle(*mult), ancilla));
      if (totally_orthogonal) {
        checks.push_back(equality("totally-orthogonal formula == sum m_mu", squared_formula, oracle_q));
      } else {
        checks.push_back({"totally-orthogonal formula inapplicable", true,
                          "FS = [" + fs_text.str() + "]; formula gives " + squared_formula.str() +
                              (squared_formula == oracle_q ? " == " : " != ") + "sum m_mu = " + oracle_q.str()});
      }
      if (quantum) checks.push_back(equality("closed-form N_q == sum m_mu", *quantum, oracle_q));
      if (!quantum) quantum = oracle_q;
    }
    // sum_mu chi_mu(sigma) equals the square-root count exactly when every
    // indicator is +1.
    bool lemma_holds = true;
    for (std::size_t i = 0; i < group.order(); ++i) {
      Complex sum = 0.0;
      for (std::size_t mu = 0; mu < table.irreps().size(); ++mu) sum += table.character(mu, i);
      const double roots = static_cast<double>(square_root_count(group, group.element(i)));
      lemma_holds = lemma_holds && std::abs(sum - Complex(roots, 0.0)) < 1e-9;
    }
    if (totally_orthogonal) {
      checks.push_back({"sum_mu chi_mu(sigma) == square-root count", lemma_holds, "FS = [" + fs_text.str() + "]"});
    } else {
      checks.push_back({"square-root identity fails without total orthogonality", !lemma_holds,
                        "FS = [" + fs_text.str() + "]"});
    }
  } else {
    checks.push_back({"character table", true, "skipped: group order above the character-table bound"});
  }

  if (quantum) {
    const bool ordered = burnside <= *quantum && *quantum <= ancilla && *quantum <= big_pow(d, n);
    checks.push_back({"N_c <= N_q <= N_a", ordered, burnside.str() + " <= " + quantum->str() + " <= " + ancilla.str()});
  }

  if (group.kind() == GroupKind::cyclic && partition) {
    const MessageBasis basis = message_basis_cyclic(n, d, bounds);
    const ZeroErrorReport report = verify_zero_error(group, basis, true);
    checks.push_back({"quantum zero-error decoding", report.certified(),
                      std::to_string(report.trials) + " trials, " + std::to_string(report.failures.size()) +
                          " failures"});
    const auto reps = fkm_representatives(n, d, bounds);
    bool same = reps.size() == partition->orbits.size();
    for (std::size_t j = 0; same && j < reps.size(); ++j) same = reps[j] == partition->orbits[j].representative();
    checks.push_back({"FKM representatives == orbit minima", same, std::to_string(reps.size()) + " necklaces"});
    if (group.order() <= bounds.max_character_table_order) {
      const auto oracle = ambient_multiplicities(group, character_table(group, bounds), d, false, bounds);
      std::vector<std::size_t> expected(oracle.multiplicities.begin(), oracle.multiplicities.end());
      checks.push_back({"basis multiplicities == character oracle", expected == basis.multiplicities,
                        "m: [" + join(basis.multiplicities, ",") + "]"});
    }
  }
  return checks;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  require_alphabet(config);
  const Format format = parse_format(config.format);
  const Bounds bounds = bounds_for(config);
  auto resolved = resolve_group(config, bounds);
  const auto checks = run_checks(config, resolved.group, bounds);
  const auto failed = static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));

  std::ostringstream text;
  switch (format) {
    case Format::table:
      text << "verify " << resolved.description << " n=" << resolved.group.degree() << " d=" << config.d << "\n";
      for (const auto& c : checks) text << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
      if (failed == 0) {
        text << "all " << checks.size() << " checks passed\n";
      } else {
        text << failed << " of " << checks.size() << " checks failed\n";
      }
      break;
    case Format::csv:
      text << "check,passed,detail\n";
      for (const auto& c : checks) text << '"' << c.name << "\"," << (c.passed ? "true" : "false") << ",\"" << c.detail << "\"\n";
      break;
    case Format::json: {
      json arr = json::array();
      for (const auto& c : checks) arr.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      text << json{{"group", resolved.description}, {"checks", arr}, {"failed", failed}}.dump(2) << "\n";
      break;
    }
  }
  emit(config, out, text.str());
  return failed == 0 ? kSuccess : kVerificationFailure;
}

// ------------------------------------------------------------- chartable

int cmd_chartable(const RunConfig& config, std::ostream& out) {
  const Format format = parse_format(config.format);
  const Bounds bounds = bounds_for(config);
  auto resolved = resolve_group(config, bounds);
  const PermutationGroup& group = resolved.group;
  const CharacterTable table = character_table(group, bounds);
  const FSIndicators fs = frobenius_schur_indicators(group, table);

  auto partition_text = [](const ConjugacyClass& c) {
    std::ostringstream s;
    s << '[';
    for (std::size_t i = 0; i < c.partition.size(); ++i) {
      s << (i ? "," : "") << c.partition[i].first;
      if (c.partition[i].second > 1) s << '^' << c.partition[i].second;
    }
    s << ']';
    return s.str();
  };

  std::ostringstream text;
  switch (format) {
    case Format::table: {
      text << "group: " << resolved.description << "  order: " << group.order() << "  classes: " << table.classes().size()
           << "\n";
      text << std::left << std::setw(10) << "class";
      for (const auto& c : table.classes()) text << std::setw(14) << partition_text(c);
      text << "\n" << std::setw(10) << "size";
      for (const auto& c : table.classes()) text << std::setw(14) << c.size;
      text << "\n";
      for (std::size_t mu = 0; mu < table.irreps().size(); ++mu) {
        const auto& irrep = table.irreps()[mu];
        text << std::setw(10) << irrep.label;
        for (const auto& value : irrep.characters) text << std::setw(14) << format_complex(value);
        text << "dim=" << irrep.dimension << " FS=" << fs.values[mu] << "\n";
      }
      break;
    }
    case Format::csv: {
      text << "irrep,dimension,fs";
      for (const auto& c : table.classes()) text << ',' << partition_text(c) << "x" << c.size;
      text << "\n";
      for (std::size_t mu = 0; mu < table.irreps().size(); ++mu) {
        const auto& irrep = table.irreps()[mu];
        text << irrep.label << ',' << irrep.dimension << ',' << fs.values[mu];
        for (const auto& value : irrep.characters) text << ',' << format_complex(value);
        text << "\n";
      }
      break;
    }
    case Format::json: {
      json classes = json::array();
      for (const auto& c : table.classes()) {
        classes.push_back({{"representative", c.representative.to_string()},
                           {"cycle_type", partition_text(c)},
                           {"size", c.size}});
      }
      json irreps = json::array();
      for (std::size_t mu = 0; mu < table.irreps().size(); ++mu) {
        const auto& irrep = table.irreps()[mu];
        json values = json::array();
        for (const auto& v : irrep.characters) values.push_back({v.real(), v.imag()});
        irreps.push_back({{"label", irrep.label},
                          {"dimension", irrep.dimension},
                          {"frobenius_schur", fs.values[mu]},
                          {"characters", values}});
      }
      text << json{{"group", resolved.description}, {"order", group.order()}, {"classes", classes}, {"irreps", irreps}}
                  .dump(2)
           << "\n";
      break;
    }
  }
  emit(config, out, text.str());
  return kSuccess;
}

// --------------------------------------------------------------- scaling

AsymptoticKind scaling_kind(const RunConfig& config) {
  const Mode mode = parse_mode(config.mode == "all" ? "classical" : config.mode);
  const GroupKind kind = parse_group_kind(config.group_kind);
  const std::string name = std::string(to_string(kind)) + "_" +
                           (mode == Mode::classical ? "Nc"
                            : mode == Mode::quantum ? "Nq"
                                                    : "Na");
  try {
    return parse_asymptotic_kind(name);
  } catch (const InvalidArgument&) {
    throw UsageError("no asymptotic law for " + name);
  }
}

int cmd_scaling(const RunConfig& config, std::ostream& out) {
  require_alphabet(config);
  if (config.group_kind.empty()) throw UsageError("scaling needs --group");
  const AsymptoticKind kind = scaling_kind(config);
  const std::size_t n_max = config.n_max != 0 ? config.n_max : config.n;
  if (config.n_min == 0 || n_max < config.n_min) throw UsageError("need 1 <= --n-min <= --n-max");
  if (n_max - config.n_min > 100000) throw BoundExceeded("n range too long");
  const Format format = parse_format(config.format == "table" ? "csv" : config.format);

  std::ostringstream text;
  json rows = json::array();
  if (format == Format::csv) text << "n,exact,asymptotic,ratio\n";
  for (std::size_t n = config.n_min; n <= n_max; ++n) {
    const BigInt exact = exact_count(kind, n, config.d);
    const BigFloat estimate = asymptotic_estimate(kind, n, config.d).leading_value;
    const BigFloat ratio = BigFloat(exact) / estimate;
    std::ostringstream asym;
    asym << std::setprecision(17) << estimate;
    std::ostringstream r;
    r << std::setprecision(17) << ratio;
    if (format == Format::csv) {
      text << n << ',' << exact.str() << ',' << asym.str() << ',' << r.str() << "\n";
    } else {
      rows.push_back({{"n", n}, {"exact", exact.str()}, {"asymptotic", asym.str()}, {"ratio", r.str()}});
    }
  }
  if (format == Format::json) text << json{{"law", std::string(to_string(kind))}, {"d", config.d}, {"rows", rows}}.dump(2) << "\n";
  emit(config, out, text.str());
  return kSuccess;
}

void add_group_options(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--group", config.group_kind, "Named group kind")->check(CLI::IsMember({"cyclic", "dihedral", "symmetric"}));
  cmd->add_option("--group-file", config.group_file, "Generator file, one permutation per line");
  cmd->add_option("--n", config.n, "Number of positions");
}

void add_common_options(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--d", config.d, "Alphabet size")->capture_default_str();
  cmd->add_option("--format", config.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_option("--out", config.out_path, "Write output to PATH");
  cmd->add_flag("--unsafe-bounds", config.unsafe_bounds, "Raise the default resource bounds");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Zero-error message counting, encoding and verification for permutation channels", "permchan"};
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "N_c, N_q and N_a for a group and alphabet");
  auto* reps = app.add_subcommand("representatives", "Necklace representatives in lexicographic order");
  auto* encode = app.add_subcommand("encode", "Export the cyclic zero-error message basis as JSON");
  auto* simulate = app.add_subcommand("simulate", "Send every message through the channel and decode");
  auto* verify = app.add_subcommand("verify", "Cross-check formulas, oracles and simulation");
  auto* chartable = app.add_subcommand("chartable", "Character table and Frobenius-Schur indicators");
  auto* scaling = app.add_subcommand("scaling", "Exact counts against leading-order asymptotics");

  for (auto* cmd : {count, reps, encode, simulate, verify, chartable, scaling}) {
    add_group_options(cmd, config);
    add_common_options(cmd, config);
  }
  for (auto* cmd : {count, simulate, scaling}) {
    cmd->add_option("--mode", config.mode, "Which counts or protocols")
        ->check(CLI::IsMember({"classical", "quantum", "ancilla", "all"}));
  }
  simulate->add_option("--seed", config.seed, "Draw one random element per message with this seed");
  scaling->add_option("--n-min", config.n_min, "First n")->capture_default_str();
  scaling->add_option("--n-max", config.n_max, "Last n (defaults to --n)");

  try {
    std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(reversed.begin(), reversed.end());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }
  config.seed_given = simulate->count("--seed") > 0;

  try {
    if (*count) return cmd_count(config, out);
    if (*reps) return cmd_representatives(config, out);
    if (*encode) return cmd_encode(config, out);
    if (*simulate) return cmd_simulate(config, out);
    if (*verify) return cmd_verify(config, out);
    if (*chartable) return cmd_chartable(config, out);
    if (*scaling) return cmd_scaling(config, out);
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kResourceBound;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailure;
  }
  return kUsageError;
}

}  // namespace permchan::cli
