#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pickaudit/adversary.hpp"
#include "pickaudit/experiments.hpp"

namespace pickaudit {

// CSV dialects understood by the loader. Comma-separated, header row
// required, '.' decimal separator, UTF-8.
//   raw_values:    header "dataset_id,value", one improvement per row.
//   paired_scores: header "dataset_id,score_a,score_b,base_rate"; the
//                  improvement is kappa(score_a) - kappa(score_b).
enum class CsvSchema { raw_values, paired_scores };

enum class OutputFormat { table, csv, json };

// Improvements plus the dataset ids they came from, in file order.
struct ImprovementTable {
  std::vector<std::string> dataset_ids;
  ImprovementSample sample;
};

// Skill score (score - base_rate) / (1 - base_rate) relative to the
// majority-class baseline. base_rate must be < 1.
double cohen_kappa(double score, double base_rate);

ImprovementTable parse_improvements_csv(std::string_view text, CsvSchema schema);
ImprovementTable load_improvements(const std::string& path, CsvSchema schema);

// Serializes to the raw_values dialect with round-trip-exact numbers.
std::string improvements_to_csv(const ImprovementTable& table);

// Divides by the unbiased sample standard deviation so the sample variance
// becomes 1. Values are not centered.
ImprovementSample normalize_unit_variance(const ImprovementSample& sample);

// Config files are JSON objects whose keys mirror SimulationConfig fields
// 1:1 (snake_case). Unknown keys are rejected.
SimulationConfig parse_config_json(const std::string& text);
SimulationConfig load_config(const std::string& path);
std::string config_to_json(const SimulationConfig& config);  // canonical form

std::uint64_t fnv1a(std::string_view text);
std::string config_hash_hex(const SimulationConfig& config);

std::string_view variance_mode_name(VarianceMode mode);
VarianceMode parse_variance_mode(std::string_view name);
std::string_view strategy_name(ReporterStrategy::Kind kind);
ReporterStrategy::Kind parse_strategy(std::string_view name);

// CLI output document: scalar fields plus rate rows, rendered as an
// aligned table, CSV, or JSON.
struct Report {
  struct Row {
    std::string label;
    double rate = 0.0;
    double std_error = 0.0;
    std::int64_t count = 0;
    std::int64_t total = 0;
  };
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<Row> rows;
};

std::string render_report(const Report& report, OutputFormat format);

// Shortest-width formatting that still re-reads to the same double.
std::string format_double(double v);

}  // namespace pickaudit
