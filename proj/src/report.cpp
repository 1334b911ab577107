// SPDX-License-Identifier: MIT

#include "qnetsim/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qnet {
namespace {

using ordered_json = nlohmann::ordered_json;

// Re-parsing the 6-digit rendering keeps JSON numbers at the same precision
// as the CSV files.
double rounded(double value) { return std::stod(format_real(value)); }

void write_atomic(const std::filesystem::path& target, const std::string& content) {
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

void check_metrics(const RunReport& report) {
  for (const auto& [name, value] : report.metrics) {
    if (!(value >= 0.0 && value <= 1.0)) {
      throw std::invalid_argument("metric '" + name + "' = " + format_real(value) +
                                  " is outside [0, 1]");
    }
  }
}

std::string render_report_csv(const RunReport& report) {
  std::ostringstream out;
  out << "key,value\n";
  out << "scenario," << report.scenario << "\n";
  out << "seed," << report.seed << "\n";
  for (const auto& [name, value] : report.metrics) {
    out << name << "," << format_real(value) << "\n";
  }
  if (report.trials) {
    out << "trials," << report.trials->trials << "\n";
    out << "count_0," << report.trials->count_0 << "\n";
    out << "count_1," << report.trials->count_1 << "\n";
    out << "mean_fidelity," << format_real(report.trials->mean_fidelity) << "\n";
    out << "std_error," << format_real(report.trials->std_error) << "\n";
  }
  return out.str();
}

std::string render_report_json(const RunReport& report) {
  ordered_json doc;
  doc["scenario"] = report.scenario;
  doc["seed"] = report.seed;
  ordered_json metrics = ordered_json::object();
  for (const auto& [name, value] : report.metrics) metrics[name] = rounded(value);
  doc["metrics"] = metrics;
  if (report.trials) {
    doc["trials"] = {{"trials", report.trials->trials},
                     {"count_0", report.trials->count_0},
                     {"count_1", report.trials->count_1},
                     {"mean_fidelity", rounded(report.trials->mean_fidelity)},
                     {"std_error", rounded(report.trials->std_error)}};
  }
  if (!report.pairs.empty()) {
    ordered_json pairs = ordered_json::array();
    for (const PairSummary& p : report.pairs) {
      pairs.push_back({{"pair_index", p.pair_index},
                       {"memory_a", p.memory_a},
                       {"memory_b", p.memory_b},
                       {"completion_time_ps", p.completion_time_ps},
                       {"attempts", p.attempts},
                       {"round1_count", p.round1_count},
                       {"round2_count", p.round2_count},
                       {"sign", p.sign},
                       {"fidelity", rounded(p.fidelity)}});
    }
    doc["pairs"] = pairs;
  }
  return doc.dump(2) + "\n";
}

std::string render_entanglement_times(const RunReport& report) {
  std::ostringstream out;
  out << "pair_index,memory_a,memory_b,completion_time_ps\n";
  for (const PairSummary& p : report.pairs) {
    out << p.pair_index << "," << p.memory_a << "," << p.memory_b << ","
        << p.completion_time_ps << "\n";
  }
  return out.str();
}

std::string render_rounds(const RunReport& report) {
  std::ostringstream out;
  out << "memory_index,round1_count,round2_count\n";
  for (const PairSummary& p : report.pairs) {
    out << p.memory_a << "," << p.round1_count << "," << p.round2_count << "\n";
    out << p.memory_b << "," << p.round1_count << "," << p.round2_count << "\n";
  }
  return out.str();
}

std::string render_sweep(const RunReport& report) {
  std::ostringstream out;
  out << "memory_fidelity,cnot_bitflip,x_bitflip,monte_carlo_fidelity,oracle_fidelity,std_error\n";
  for (const SweepRowResult& r : report.sweep) {
    out << format_real(r.row.memory_fidelity) << "," << format_real(r.row.cnot_bitflip) << ","
        << format_real(r.row.x_bitflip) << "," << format_real(r.monte_carlo_fidelity) << ","
        << format_real(r.oracle_fidelity) << "," << format_real(r.std_error) << "\n";
  }
  return out.str();
}

std::string render_trace(const RunReport& report) {
  std::ostringstream out;
  out << "fire_ps\tsequence\ttag\n";
  for (const std::string& line : report.trace) out << line << "\n";
  return out.str();
}

std::string render_metadata(const RunReport& report) {
  ordered_json doc;
  doc["format_version"] = 1;
  doc["scenario"] = report.scenario;
  doc["seed"] = report.seed;
  return doc.dump(2) + "\n";
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw ConfigError("format = '" + name + "' is not one of csv, json");
}

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

std::vector<std::string> emit_report(const RunReport& report, const std::filesystem::path& out_dir,
                                     OutputFormat format) {
  check_metrics(report);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory: " + out_dir.string());

  std::vector<std::string> manifest;
  auto emit = [&](const std::string& name, const std::string& content) {
    write_atomic(out_dir / name, content);
    manifest.push_back(name);
  };

  emit("run_metadata.json", render_metadata(report));
  emit(format == OutputFormat::Csv ? "report.csv" : "report.json",
       format == OutputFormat::Csv ? render_report_csv(report) : render_report_json(report));
  if (!report.pairs.empty()) {
    emit("entanglement_times.csv", render_entanglement_times(report));
    emit("rounds.csv", render_rounds(report));
  }
  if (!report.sweep.empty()) {
    emit("fidelity_table.csv", render_sweep(report));
  }
  if (!report.trace.empty()) {
    emit("trace.tsv", render_trace(report));
  }
  return manifest;
}

}  // namespace qnet
