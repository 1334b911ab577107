// SPDX-License-Identifier: MIT
//
// Run results and their serialization. All files are written atomically
// (temp + rename), reals carry 6 significant digits, integers are exact,
// and nothing time- or host-dependent is emitted, so equal reports produce
// byte-identical files.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qnetsim/config.hpp"
#include "qnetsim/teleport.hpp"

namespace qnet {

enum class OutputFormat { Csv, Json };

OutputFormat parse_format(const std::string& name);

struct PairSummary {
  int pair_index;
  int memory_a;
  int memory_b;
  std::int64_t completion_time_ps;
  int attempts;
  int round1_count;
  int round2_count;
  std::string sign;
  double fidelity;
};

struct SweepRowResult {
  SweepRow row;
  double monte_carlo_fidelity;
  double oracle_fidelity;
  double std_error;
};

struct RunReport {
  std::string scenario;
  std::uint64_t seed = 0;
  std::vector<PairSummary> pairs;
  std::optional<TrialAggregate> trials;
  // Insertion-ordered named metrics; emit_report enforces values in [0, 1].
  std::vector<std::pair<std::string, double>> metrics;
  std::vector<SweepRowResult> sweep;
  std::vector<std::string> trace;  // event-trace lines when enabled
};

// %.6g rendering used for every real number in every output file.
std::string format_real(double value);

// Writes run_metadata.json plus report.(csv|json), entanglement_times.csv +
// rounds.csv when pair records exist, fidelity_table.csv when sweep rows
// exist, and trace.tsv when a trace was captured. Returns the file names
// actually written, in order.
std::vector<std::string> emit_report(const RunReport& report, const std::filesystem::path& out_dir,
                                     OutputFormat format);

}  // namespace qnet
