// Copyright 2026 The sixq authors
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

#include "sixq/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "sixq/entanglement.hpp"
#include "sixq/measurement.hpp"
#include "sixq/protocols.hpp"
#include "sixq/report.hpp"
#include "sixq/tables.hpp"
#include "sixq/transcript_json.hpp"

namespace sixq {

namespace {

using nlohmann::ordered_json;

struct CommonOptions {
  std::uint64_t seed = 1;
  int trials = 1000;
  double tolerance = 1e-10;
  std::string mode = "enumerate";
  bool quiet = false;
  bool no_timestamp = false;
  bool emit_transcripts = false;
  std::string output_path;  // empty = stdout
};

ordered_json config_echo(const CommonOptions& opt) {
  return ordered_json{{"seed", opt.seed},
                      {"trials", opt.trials},
                      {"tolerance", opt.tolerance},
                      {"mode", opt.mode}};
}

int finish(const Report& report, const CommonOptions& opt, std::ostream& out,
           std::ostream& err) {
  std::string text = opt.quiet ? report.quiet_text()
                               : report.to_json(!opt.no_timestamp).dump(2) + "\n";
  if (opt.output_path.empty()) {
    out << text;
  } else {
    std::ofstream file(opt.output_path);
    if (!file) {
      err << "cannot open output path: " << opt.output_path << "\n";
      return 2;
    }
    file << text;
  }
  return report.all_passed() ? 0 : 1;
}

double max_abs_offset(const std::vector<double>& values, double target) {
  double worst = 0.0;
  for (double v : values) worst = std::max(worst, std::abs(v - target));
  return worst;
}

// ---------------------------------------------------------------------------
// verify-channel
// ---------------------------------------------------------------------------

int run_verify_channel(const CommonOptions& opt, std::ostream& out,
                       std::ostream& err) {
  Report report("verify-channel");
  report.set_config(config_echo(opt));
  PureState channel = borras();

  const double expected_mag = 1.0 / (4.0 * std::sqrt(2.0));
  int nonzero = 0;
  double mag_err = 0.0;
  double zero_leak = 0.0;
  for (std::size_t i = 0; i < channel.dim(); ++i) {
    double a = std::abs(channel.amp(i));
    if (a > 1e-12) {
      ++nonzero;
      mag_err = std::max(mag_err, std::abs(a - expected_mag));
    } else {
      zero_leak = std::max(zero_leak, a);
    }
  }
  report.add_check("nonzero-amplitude-count", nonzero == 32,
                   static_cast<double>(nonzero), 0.0, "expected 32");
  report.add_check("amplitude-magnitude", mag_err <= opt.tolerance, mag_err,
                   opt.tolerance, "distance from 1/(4 sqrt 2)");
  report.add_check("zero-amplitudes", zero_leak <= opt.tolerance, zero_leak,
                   opt.tolerance);

  for (int k = 1; k <= 3; ++k) {
    double deviation = mixedness_report(channel, k);
    report.add_check("mixedness-k" + std::to_string(k),
                     deviation <= opt.tolerance, deviation, opt.tolerance,
                     "max-norm distance of k-qubit marginals from I/2^k");
  }

  for (int focus = 1; focus <= 6; ++focus) {
    MonogamyReport monogamy = monogamy_check(channel, focus);
    double pair_sum = monogamy.one_tangle - monogamy.slack;
    bool pass = pair_sum <= opt.tolerance &&
                std::abs(monogamy.one_tangle - 1.0) <= opt.tolerance &&
                monogamy.slack >= -opt.tolerance;
    report.add_check("monogamy-focus" + std::to_string(focus), pass,
                     monogamy.slack, opt.tolerance,
                     "slack of the pairwise-tangle bound; one-tangle = 1 and "
                     "pairwise sum = 0 expected");
  }

  double purity_err = 0.0;
  for (int q1 = 1; q1 <= 6; ++q1) {
    for (int q2 = q1 + 1; q2 <= 6; ++q2) {
      double p = purity(partial_trace(channel, {q1, q2}));
      purity_err = std::max(purity_err, std::abs(p - 0.25));
    }
  }
  report.add_check("two-qubit-marginal-purity", purity_err <= opt.tolerance,
                   purity_err, opt.tolerance, "distance from 1/4");

  return finish(report, opt, out, err);
}

// ---------------------------------------------------------------------------
// protocol runs
// ---------------------------------------------------------------------------

struct ProtocolRunStats {
  double min_fidelity = 1.0;
  double max_prob_offset = 0.0;   // listed outcomes vs the uniform value
  double total_prob_err = 0.0;    // |sum of branch probabilities - 1|
  double unlisted_mass = 0.0;     // max over inputs
  int branch_count = -1;          // completed branches per input (-1 unset)
  bool branch_count_stable = true;
  bool causal_ok = true;
  bool cbits_ok = true;
};

void check_cbits(ProtocolKind kind, const ProtocolTranscript& t, bool* ok) {
  auto totals = cbit_accounting(t);
  auto edge = [&](Party a, Party b) {
    auto it = totals.find({a, b});
    return it == totals.end() ? 0 : it->second;
  };
  switch (kind) {
    case ProtocolKind::Teleport3:
      *ok = *ok && edge(Party::Alice, Party::Bob) == 6;
      break;
    case ProtocolKind::Qsts1Bell:
    case ProtocolKind::Qsts1Computational:
      *ok = *ok && edge(Party::Alice, Party::Charlie) == 4 &&
            edge(Party::Bob, Party::Charlie) == 2;
      break;
    case ProtocolKind::Qsts2TableIV:
    case ProtocolKind::Qsts2TableVI:
      *ok = *ok && edge(Party::Alice, Party::Charlie) == 4 &&
            edge(Party::Bob, Party::Charlie) == 1;
      break;
  }
}

std::vector<ProtocolTranscript> enumerate_all(ProtocolKind kind,
                                              const PureState& input) {
  switch (kind) {
    case ProtocolKind::Teleport3:
      return teleport3_enumerate(input);
    case ProtocolKind::Qsts1Bell:
      return qsts1_enumerate(input, BobBasis::Bell);
    case ProtocolKind::Qsts1Computational:
      return qsts1_enumerate(input, BobBasis::Computational);
    case ProtocolKind::Qsts2TableIV:
      return qsts2_enumerate(input, QstsFamily::TableIV);
    case ProtocolKind::Qsts2TableVI:
      return qsts2_enumerate(input, QstsFamily::TableVI);
  }
  throw std::logic_error("enumerate_all: unknown protocol");
}

ProtocolRunStats enumerate_stats(ProtocolKind kind,
                                 const std::vector<ProtocolTranscript>& transcripts,
                                 double uniform_prob) {
  ProtocolRunStats stats;
  double total = 0.0;
  double unlisted = 0.0;
  int completed = 0;
  std::vector<double> alice_probs;
  for (const ProtocolTranscript& t : transcripts) {
    total += t.probability;
    stats.causal_ok = stats.causal_ok && causally_ordered(t);
    if (t.status == TranscriptStatus::UnlistedOutcome) {
      unlisted += t.probability;
      continue;
    }
    ++completed;
    stats.min_fidelity = std::min(stats.min_fidelity, t.fidelity);
    check_cbits(kind, t, &stats.cbits_ok);
    // First event is Alice's measurement; collect per-outcome probability
    // once per Alice outcome (Bob sub-branches share it).
    const auto& alice_event = std::get<MeasurementEvent>(t.events.front());
    alice_probs.push_back(alice_event.probability);
  }
  stats.total_prob_err = std::abs(total - 1.0);
  stats.unlisted_mass = unlisted;
  stats.branch_count = completed;
  stats.max_prob_offset = max_abs_offset(alice_probs, uniform_prob);
  return stats;
}

struct EnumerateExpectations {
  int branch_count;
  double uniform_prob;
};

EnumerateExpectations expectations_for(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::Teleport3:
      return {64, 1.0 / 64.0};
    case ProtocolKind::Qsts1Bell:
    case ProtocolKind::Qsts1Computational:
      return {64, 1.0 / 16.0};
    case ProtocolKind::Qsts2TableIV:
    case ProtocolKind::Qsts2TableVI:
      // 16 listed outcomes x 2 Bob outcomes; each listed outcome carries
      // probability 1/32, half the total mass.
      return {32, 1.0 / 32.0};
  }
  throw std::logic_error("expectations_for: unknown protocol");
}

ProtocolTranscript sample_one(ProtocolKind kind, const PureState& input,
                              std::uint64_t seed) {
  switch (kind) {
    case ProtocolKind::Teleport3:
      return teleport3_sample(input, seed);
    case ProtocolKind::Qsts1Bell:
      return qsts1_sample(input, BobBasis::Bell, seed);
    case ProtocolKind::Qsts1Computational:
      return qsts1_sample(input, BobBasis::Computational, seed);
    case ProtocolKind::Qsts2TableIV:
      return qsts2_sample(input, QstsFamily::TableIV, seed);
    case ProtocolKind::Qsts2TableVI:
      return qsts2_sample(input, QstsFamily::TableVI, seed);
  }
  throw std::logic_error("sample_one: unknown protocol");
}

PureState protocol_input(ProtocolKind kind, std::uint64_t seed) {
  return random_state(kind == ProtocolKind::Teleport3 ? 3 : 2, seed);
}

int run_protocol_command(ProtocolKind kind, const CommonOptions& opt,
                         std::ostream& out, std::ostream& err) {
  Report report(protocol_id(kind));
  ordered_json config = config_echo(opt);
  report.set_config(config);
  EnumerateExpectations expect = expectations_for(kind);
  bool is_qsts2 = kind == ProtocolKind::Qsts2TableIV ||
                  kind == ProtocolKind::Qsts2TableVI;
  bool is_qsts = kind != ProtocolKind::Teleport3;

  ordered_json transcripts = ordered_json::array();

  if (opt.mode == "enumerate") {
    ProtocolRunStats worst;
    worst.branch_count = expect.branch_count;
    for (int trial = 0; trial < opt.trials; ++trial) {
      PureState input = protocol_input(kind, opt.seed + trial);
      std::vector<ProtocolTranscript> runs = enumerate_all(kind, input);
      ProtocolRunStats stats = enumerate_stats(kind, runs, expect.uniform_prob);
      worst.min_fidelity = std::min(worst.min_fidelity, stats.min_fidelity);
      worst.max_prob_offset =
          std::max(worst.max_prob_offset, stats.max_prob_offset);
      worst.total_prob_err = std::max(worst.total_prob_err, stats.total_prob_err);
      worst.unlisted_mass = std::max(worst.unlisted_mass, stats.unlisted_mass);
      worst.branch_count_stable = worst.branch_count_stable &&
                                  stats.branch_count == expect.branch_count;
      worst.causal_ok = worst.causal_ok && stats.causal_ok;
      worst.cbits_ok = worst.cbits_ok && stats.cbits_ok;
      if (opt.emit_transcripts && trial == 0) {
        for (const ProtocolTranscript& t : runs) {
          transcripts.push_back(transcript_to_json(t));
        }
      }
    }
    report.add_check("completed-branch-count", worst.branch_count_stable,
                     static_cast<double>(expect.branch_count), 0.0,
                     "branches with a correction per input");
    report.add_check("alice-outcome-uniformity",
                     worst.max_prob_offset <= opt.tolerance,
                     worst.max_prob_offset, opt.tolerance,
                     "max offset from " + std::to_string(expect.uniform_prob));
    report.add_check("min-fidelity", worst.min_fidelity >= 1.0 - opt.tolerance,
                     worst.min_fidelity, opt.tolerance);
    report.add_check("total-probability", worst.total_prob_err <= opt.tolerance,
                     worst.total_prob_err, opt.tolerance);
    report.add_check("causal-order", worst.causal_ok, worst.causal_ok ? 1.0 : 0.0,
                     0.0);
    report.add_check("cbit-accounting", worst.cbits_ok, worst.cbits_ok ? 1.0 : 0.0,
                     0.0);
    if (is_qsts2) {
      report.add_finding(
          "unlisted-outcome-mass",
          "probability that the five-particle measurement lands outside the "
          "16-outcome codebook; those runs abort",
          worst.unlisted_mass);
    }
  } else {  // sample
    double min_fidelity = 1.0;
    int aborted = 0;
    bool causal_ok = true;
    bool cbits_ok = true;
    for (int trial = 0; trial < opt.trials; ++trial) {
      PureState input = protocol_input(kind, opt.seed + trial);
      ProtocolTranscript t = sample_one(kind, input, opt.seed + trial);
      causal_ok = causal_ok && causally_ordered(t);
      if (t.status == TranscriptStatus::UnlistedOutcome) {
        ++aborted;
      } else {
        min_fidelity = std::min(min_fidelity, t.fidelity);
        check_cbits(kind, t, &cbits_ok);
      }
      if (opt.emit_transcripts && trial == 0) {
        transcripts.push_back(transcript_to_json(t));
      }
    }
    report.add_check("min-fidelity", min_fidelity >= 1.0 - opt.tolerance,
                     min_fidelity, opt.tolerance,
                     "over completed sampled runs");
    report.add_check("causal-order", causal_ok, causal_ok ? 1.0 : 0.0, 0.0);
    report.add_check("cbit-accounting", cbits_ok, cbits_ok ? 1.0 : 0.0, 0.0);
    if (is_qsts2) {
      report.add_finding("aborted-run-fraction",
                         "sampled runs whose measurement fell outside the "
                         "16-outcome codebook",
                         static_cast<double>(aborted) / opt.trials);
    }
  }

  // Receiver-side view with only Alice's message: reported because the
  // conditional state is not input-independent for complex amplitudes.
  if (is_qsts) {
    int probes = std::min(opt.trials, 20);
    double worst = 0.0;
    for (std::size_t outcome = 0; outcome < alice_codebook_size(kind);
         ++outcome) {
      DensityMatrix reference = charlie_state_given_alice(
          kind, protocol_input(kind, opt.seed), outcome);
      for (int trial = 1; trial < probes; ++trial) {
        DensityMatrix other = charlie_state_given_alice(
            kind, protocol_input(kind, opt.seed + trial), outcome);
        worst = std::max(worst,
                         reference.matrix().max_abs_diff(other.matrix()));
      }
    }
    report.add_finding(
        "charlie-conditional-dependence",
        "max-norm spread of Charlie's state given only Alice's message, "
        "across random inputs; nonzero spread means Alice's message plus "
        "Charlie's qubits already leak input information",
        worst);
  }

  if (opt.emit_transcripts) {
    report.add_section("transcripts", transcripts);
  }
  return finish(report, opt, out, err);
}

// ---------------------------------------------------------------------------
// bases-check
// ---------------------------------------------------------------------------

int run_bases_check(const CommonOptions& opt, const std::string& dump_name,
                    std::ostream& out, std::ostream& err) {
  std::vector<OrthonormalBasis> bases;
  bases.push_back(generalized_bell_basis_6());
  bases.push_back(table1_basis());
  bases.push_back(table4_basis());
  bases.push_back(table6_basis());
  bases.push_back(bell_basis());
  bases.push_back(computational_basis(2));
  bases.push_back(hadamard_basis());

  if (!dump_name.empty()) {
    std::string text;
    for (const OrthonormalBasis& basis : bases) {
      if (dump_name == "all" || dump_name == basis.id) {
        text += "# basis " + basis.id + "\n" + dump_basis(basis);
      }
    }
    if (text.empty()) {
      err << "unknown basis: " << dump_name << "\n";
      return 2;
    }
    if (opt.output_path.empty()) {
      out << text;
    } else {
      std::ofstream file(opt.output_path);
      if (!file) {
        err << "cannot open output path: " << opt.output_path << "\n";
        return 2;
      }
      file << text;
    }
    return 0;
  }

  Report report("bases-check");
  report.set_config(config_echo(opt));
  for (const OrthonormalBasis& basis : bases) {
    double gram = basis.gram_deviation();
    report.add_check(basis.id + "-gram", gram <= opt.tolerance, gram,
                     opt.tolerance);
    double completeness = basis.completeness_deviation();
    report.add_check(basis.id + "-completeness", completeness <= opt.tolerance,
                     completeness, opt.tolerance);
  }
  return finish(report, opt, out, err);
}

// ---------------------------------------------------------------------------
// emit-tables
// ---------------------------------------------------------------------------

int run_emit_tables(const CommonOptions& opt, const std::string& table_id,
                    bool with_corrections, std::ostream& out, std::ostream& err) {
  Report report("emit-tables");
  ordered_json config = config_echo(opt);
  config["table"] = table_id;
  report.set_config(config);

  report.add_finding(
      "coefficient-legend",
      "table labels a, m, g, b denote the input amplitudes of |00>, |10>, "
      "|01>, |11>: the tables' mu is the |10> amplitude and their beta the "
      "|11> amplitude");

  std::vector<tables::TableReport> table_reports;
  if (table_id == "all") {
    table_reports = tables::regenerate_all_tables();
  } else {
    table_reports.push_back(tables::regenerate_table(table_id));
  }

  ordered_json tables_json = ordered_json::array();
  for (const tables::TableReport& table_report : table_reports) {
    ordered_json rows = ordered_json::array();
    for (const tables::RowReport& row : table_report.rows) {
      ordered_json row_json{
          {"row", row.fixture.row},
          {"variant", std::string(1, row.fixture.variant)},
          {"outcome", row.fixture.outcome},
          {"reference-cell", tables::render_cell(row.fixture.cell)},
          {"regenerated-cell", tables::render_cell(row.regenerated)},
          {"diff", tables::diff_kind_name(row.diff.kind)},
          {"outcome-consistent", row.outcome_consistent},
      };
      if (!row.diff.detail.empty()) row_json["diff-detail"] = row.diff.detail;
      if (!row.fixture.note.empty()) row_json["note"] = row.fixture.note;
      rows.push_back(std::move(row_json));
      if (row.diff.kind != tables::DiffKind::Match && row.documented()) {
        report.add_finding("table-" + table_report.table + "-row-" +
                               std::to_string(row.fixture.row) +
                               row.fixture.variant,
                           row.fixture.note + " [" + row.diff.detail + "]");
      }
    }
    tables_json.push_back(ordered_json{{"table", table_report.table},
                                       {"rows", std::move(rows)}});
    report.add_check(
        "table-" + table_report.table + "-undocumented-deviations",
        table_report.all_acceptable(),
        static_cast<double>(table_report.undocumented_deviations()), 0.0,
        "rows differing from the reference beyond a documented note");
  }
  report.add_section("tables", std::move(tables_json));

  if (with_corrections) {
    ordered_json corrections = ordered_json::array();
    char buf[64];
    auto dump_correction = [&](const CorrectionUnitary& u) {
      ordered_json entries = ordered_json::array();
      for (std::size_t r = 0; r < u.matrix.rows(); ++r) {
        for (std::size_t c = 0; c < u.matrix.cols(); ++c) {
          Complex z = u.matrix.at(r, c);
          std::snprintf(buf, sizeof(buf), "%.17g,%.17g", z.real(), z.imag());
          entries.push_back(std::string(buf));
        }
      }
      corrections.push_back(ordered_json{
          {"branch", u.branch.str()},
          {"dim", u.dim},
          {"entries", std::move(entries)},
          {"pauli", u.pauli_factorization.has_value()
                        ? ordered_json(*u.pauli_factorization)
                        : ordered_json(nullptr)},
      });
    };
    for (ProtocolKind kind :
         {ProtocolKind::Teleport3, ProtocolKind::Qsts1Bell,
          ProtocolKind::Qsts1Computational, ProtocolKind::Qsts2TableIV,
          ProtocolKind::Qsts2TableVI}) {
      const OrthonormalBasis& a_basis = alice_basis(kind);
      std::size_t listed = alice_codebook_size(kind);
      if (kind == ProtocolKind::Teleport3) {
        for (std::size_t a = 0; a < listed; ++a) {
          dump_correction(derive_branch_correction(protocol_id(kind),
                                                   a_basis.labels[a], "-"));
        }
        continue;
      }
      const OrthonormalBasis& b_basis = *bob_basis_of(kind);
      for (std::size_t a = 0; a < listed; ++a) {
        for (std::size_t b = 0; b < b_basis.size(); ++b) {
          dump_correction(derive_branch_correction(
              protocol_id(kind), a_basis.labels[a], b_basis.labels[b]));
        }
      }
    }
    report.add_section("corrections", std::move(corrections));
  }

  return finish(report, opt, out, err);
}

}  // namespace

int cli_run(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Simulator and verifier for teleportation and state sharing over the "
      "six-qubit Borras channel"};
  app.require_subcommand(1);

  CommonOptions opt;
  if (const char* env_seed = std::getenv("SIXQ_SEED")) {
    opt.seed = std::strtoull(env_seed, nullptr, 10);
  }

  auto add_common = [&](CLI::App* cmd, bool protocol_flags) {
    cmd->add_option("--seed", opt.seed, "Base seed (SIXQ_SEED overrides the default)");
    cmd->add_option("--tolerance", opt.tolerance, "Check tolerance");
    cmd->add_flag("--quiet", opt.quiet, "Pass/fail lines only");
    cmd->add_flag("--no-timestamp", opt.no_timestamp,
                  "Omit the timestamp for byte-identical reruns");
    cmd->add_option("--output", opt.output_path, "Write the report to a file");
    if (protocol_flags) {
      cmd->add_option("--trials", opt.trials, "Number of inputs / runs")
          ->check(CLI::PositiveNumber);
      cmd->add_option("--mode", opt.mode, "enumerate | sample")
          ->check(CLI::IsMember({"enumerate", "sample"}));
      cmd->add_flag("--emit-transcripts", opt.emit_transcripts,
                    "Include first-trial transcripts in the report");
    }
  };

  CLI::App* verify = app.add_subcommand("verify-channel",
                                        "Check the channel state's structure, "
                                        "mixedness and monogamy");
  add_common(verify, false);

  CLI::App* teleport = app.add_subcommand(
      "teleport", "Teleportation of an arbitrary three-qubit state");
  add_common(teleport, true);

  std::string bob_basis_name = "bell";
  CLI::App* qsts1 = app.add_subcommand(
      "qsts1", "State sharing, protocol 1 (four-particle measurement)");
  add_common(qsts1, true);
  qsts1->add_option("--bob-basis", bob_basis_name, "bell | computational")
      ->check(CLI::IsMember({"bell", "computational"}));

  std::string family_name = "iv";
  CLI::App* qsts2 = app.add_subcommand(
      "qsts2", "State sharing, protocol 2 (five-particle measurement)");
  add_common(qsts2, true);
  qsts2->add_option("--family", family_name, "iv | vi")
      ->check(CLI::IsMember({"iv", "vi"}));

  std::string dump_name;
  CLI::App* bases = app.add_subcommand(
      "bases-check", "Verify orthonormality and completeness of all bases");
  add_common(bases, false);
  bases->add_option("--dump", dump_name,
                    "Dump basis amplitudes as text (basis id or 'all')");

  std::string table_id = "all";
  bool with_corrections = false;
  CLI::App* emit = app.add_subcommand(
      "emit-tables", "Regenerate the protocol tables and diff them against "
                     "the checked-in reference");
  add_common(emit, false);
  emit->add_option("--table", table_id, "I..VII or 'all'")
      ->check(CLI::IsMember({"I", "II", "III", "IV", "V", "VI", "VII", "all"}));
  emit->add_flag("--corrections", with_corrections,
                 "Include every derived branch correction");

  // Defaults per command: teleportation samples by default, sharing
  // protocols enumerate (their branch counts are small).
  bool mode_given = false;
  for (int i = 0; i < argc; ++i) {
    if (std::string(argv[i]).rfind("--mode", 0) == 0) mode_given = true;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (verify->parsed()) return run_verify_channel(opt, out, err);
    if (teleport->parsed()) {
      if (!mode_given) opt.mode = "sample";
      return run_protocol_command(ProtocolKind::Teleport3, opt, out, err);
    }
    if (qsts1->parsed()) {
      return run_protocol_command(bob_basis_name == "bell"
                                      ? ProtocolKind::Qsts1Bell
                                      : ProtocolKind::Qsts1Computational,
                                  opt, out, err);
    }
    if (qsts2->parsed()) {
      return run_protocol_command(family_name == "iv"
                                      ? ProtocolKind::Qsts2TableIV
                                      : ProtocolKind::Qsts2TableVI,
                                  opt, out, err);
    }
    if (bases->parsed()) return run_bases_check(opt, dump_name, out, err);
    if (emit->parsed()) {
      return run_emit_tables(opt, table_id, with_corrections, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << app.help();
  return 2;
}

}  // namespace sixq
