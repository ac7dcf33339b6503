#include "pickaudit/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pickaudit/errors.hpp"
#include "pickaudit/hypothesis.hpp"

namespace pickaudit {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

double parse_field_double(std::string_view field, std::size_t row, const char* what) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v)) {
    throw DataError("row " + std::to_string(row) + ": cannot parse " + what + " '" +
                    std::string(field) + "'");
  }
  return v;
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

double cohen_kappa(double score, double base_rate) {
  if (!(base_rate < 1.0)) throw DomainError("cohen_kappa: base_rate must be < 1");
  if (!std::isfinite(score) || !std::isfinite(base_rate)) {
    throw DomainError("cohen_kappa: non-finite input");
  }
  return (score - base_rate) / (1.0 - base_rate);
}

ImprovementTable parse_improvements_csv(std::string_view text, CsvSchema schema) {
  const std::string_view expected_header =
      schema == CsvSchema::raw_values ? "dataset_id,value"
                                      : "dataset_id,score_a,score_b,base_rate";
  const std::size_t n_fields = schema == CsvSchema::raw_values ? 2 : 4;

  std::vector<std::string> ids;
  std::vector<double> values;
  std::size_t row = 0;
  std::size_t start = 0;
  bool saw_header = false;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = strip_cr(text.substr(start, end - start));
    start = end + 1;
    ++row;
    if (line.empty()) {
      if (start > text.size()) break;
      continue;
    }
    if (!saw_header) {
      if (line != expected_header) {
        throw DataError("row 1: expected header '" + std::string(expected_header) +
                        "', got '" + std::string(line) + "'");
      }
      saw_header = true;
      continue;
    }
    const auto fields = split_fields(line);
    if (fields.size() != n_fields) {
      throw DataError("row " + std::to_string(row) + ": expected " +
                      std::to_string(n_fields) + " fields, got " +
                      std::to_string(fields.size()));
    }
    ids.emplace_back(fields[0]);
    if (schema == CsvSchema::raw_values) {
      values.push_back(parse_field_double(fields[1], row, "value"));
    } else {
      const double score_a = parse_field_double(fields[1], row, "score_a");
      const double score_b = parse_field_double(fields[2], row, "score_b");
      const double base_rate = parse_field_double(fields[3], row, "base_rate");
      if (!(score_a >= 0.0 && score_a <= 1.0) || !(score_b >= 0.0 && score_b <= 1.0)) {
        throw DataError("row " + std::to_string(row) + ": scores must be in [0, 1]");
      }
      if (!(base_rate >= 0.0 && base_rate < 1.0)) {
        throw DataError("row " + std::to_string(row) + ": base_rate must be in [0, 1)");
      }
      values.push_back(cohen_kappa(score_a, base_rate) - cohen_kappa(score_b, base_rate));
    }
  }
  if (!saw_header) throw DomainError("empty improvements file");
  if (values.empty()) throw DomainError("no data rows in improvements file");
  return ImprovementTable{std::move(ids),
                          ImprovementSample::checked(std::move(values))};
}

ImprovementTable load_improvements(const std::string& path, CsvSchema schema) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_improvements_csv(buf.str(), schema);
}

std::string improvements_to_csv(const ImprovementTable& table) {
  std::string out = "dataset_id,value\n";
  for (std::size_t i = 0; i < table.sample.size(); ++i) {
    out += table.dataset_ids[i];
    out += ',';
    out += format_double(table.sample.values[i]);
    out += '\n';
  }
  return out;
}

ImprovementSample normalize_unit_variance(const ImprovementSample& sample) {
  if (sample.size() < 2) {
    throw DegenerateInputError("normalize_unit_variance: need at least two values");
  }
  const double var = sample_variance(sample);
  const double max_abs = [&] {
    double m = 0.0;
    for (double v : sample.values) m = std::max(m, std::fabs(v));
    return m;
  }();
  const double floor_sd = 64.0 * 2.220446049250313e-16 * std::max(max_abs, 1e-300);
  if (var <= floor_sd * floor_sd) {
    throw DegenerateInputError("normalize_unit_variance: zero sample variance");
  }
  const double inv_sd = 1.0 / std::sqrt(var);
  std::vector<double> scaled;
  scaled.reserve(sample.size());
  for (double v : sample.values) scaled.push_back(v * inv_sd);
  return ImprovementSample{std::move(scaled), sample.known_sd};
}

std::string_view variance_mode_name(VarianceMode mode) {
  return mode == VarianceMode::known_unit ? "known_unit" : "unknown";
}

VarianceMode parse_variance_mode(std::string_view name) {
  if (name == "known_unit") return VarianceMode::known_unit;
  if (name == "unknown") return VarianceMode::unknown;
  throw DataError("unknown variance_mode: " + std::string(name));
}

std::string_view strategy_name(ReporterStrategy::Kind kind) {
  return kind == ReporterStrategy::Kind::top_k ? "top_k" : "unbiased";
}

ReporterStrategy::Kind parse_strategy(std::string_view name) {
  if (name == "top_k") return ReporterStrategy::Kind::top_k;
  if (name == "unbiased") return ReporterStrategy::Kind::unbiased;
  throw DataError("unknown strategy: " + std::string(name));
}

SimulationConfig parse_config_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw DataError("config: top level must be a JSON object");

  SimulationConfig config;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "n_all") {
        config.n_all = value.get<std::int64_t>();
      } else if (key == "n_publish") {
        config.n_publish = value.get<std::int64_t>();
      } else if (key == "n_inspect") {
        config.n_inspect = value.get<std::int64_t>();
      } else if (key == "mu") {
        config.mu = value.get<double>();
      } else if (key == "variance_mode") {
        config.variance_mode = parse_variance_mode(value.get<std::string>());
      } else if (key == "unknown_sd") {
        config.unknown_sd = value.get<double>();
      } else if (key == "alpha") {
        config.alpha = value.get<double>();
      } else if (key == "beta") {
        config.beta = value.get<double>();
      } else if (key == "mu_gap") {
        config.mu_gap = value.get<double>();
      } else if (key == "trials") {
        config.trials = value.get<std::int64_t>();
      } else if (key == "seed") {
        config.seed = RngSeed{value.get<std::uint64_t>()};
      } else if (key == "strategy") {
        config.strategy = parse_strategy(value.get<std::string>());
      } else if (key == "mc_draws") {
        config.mc_draws = value.get<std::int64_t>();
      } else {
        throw DataError("config: unknown key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("config: ") + e.what());
  }
  return config;
}

SimulationConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open config: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_json(buf.str());
}

std::string config_to_json(const SimulationConfig& config) {
  nlohmann::ordered_json j;
  j["n_all"] = config.n_all;
  j["n_publish"] = config.n_publish;
  j["n_inspect"] = config.n_inspect;
  j["mu"] = config.mu;
  j["variance_mode"] = std::string(variance_mode_name(config.variance_mode));
  j["unknown_sd"] = config.unknown_sd;
  j["alpha"] = config.alpha;
  j["beta"] = config.beta;
  j["mu_gap"] = config.mu_gap;
  j["trials"] = config.trials;
  j["seed"] = config.seed.value;
  j["strategy"] = std::string(strategy_name(config.strategy));
  j["mc_draws"] = config.mc_draws;
  return j.dump();
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (const char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x00000100000001B3ull;
  }
  return h;
}

std::string config_hash_hex(const SimulationConfig& config) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a(config_to_json(config))));
  return std::string(buf);
}

std::string format_double(double v) {
  char buf[40];
  if (v == std::floor(v) && std::fabs(v) < 1e15) {
    std::snprintf(buf, sizeof(buf), "%.0f", v);
    return std::string(buf);
  }
  // Shortest representation that round-trips: try increasing precision.
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == v || (std::isnan(back) && std::isnan(v))) break;
  }
  return std::string(buf);
}

namespace {

std::string json_escape(std::string_view s) {
  std::string out;
  for (const char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (static_cast<unsigned char>(c) < 0x20) {
      char buf[8];
      std::snprintf(buf, sizeof(buf), "\\u%04x", c);
      out += buf;
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_report(const Report& report, OutputFormat format) {
  std::string out;
  switch (format) {
    case OutputFormat::table: {
      std::size_t width = 0;
      for (const auto& [key, value] : report.fields) width = std::max(width, key.size());
      for (const auto& row : report.rows) width = std::max(width, row.label.size());
      for (const auto& [key, value] : report.fields) {
        out += key;
        out.append(width - key.size() + 2, ' ');
        out += value;
        out += '\n';
      }
      if (!report.rows.empty()) {
        char buf[160];
        for (const auto& row : report.rows) {
          std::snprintf(buf, sizeof(buf), "%-*s  %.6f +/- %.6f  (%lld/%lld)",
                        static_cast<int>(width), row.label.c_str(), row.rate,
                        row.std_error, static_cast<long long>(row.count),
                        static_cast<long long>(row.total));
          out += buf;
          out += '\n';
        }
      }
      return out;
    }
    case OutputFormat::csv: {
      out = "kind,label,value,std_error,count,total\n";
      for (const auto& [key, value] : report.fields) {
        out += "field," + key + "," + value + ",,,\n";
      }
      for (const auto& row : report.rows) {
        out += "rate," + row.label + "," + format_double(row.rate) + "," +
               format_double(row.std_error) + "," + std::to_string(row.count) + "," +
               std::to_string(row.total) + "\n";
      }
      return out;
    }
    case OutputFormat::json: {
      out = "{\n";
      bool first = true;
      for (const auto& [key, value] : report.fields) {
        if (!first) out += ",\n";
        first = false;
        out += "  \"" + json_escape(key) + "\": \"" + json_escape(value) + "\"";
      }
      if (!report.rows.empty()) {
        if (!first) out += ",\n";
        out += "  \"rates\": [\n";
        for (std::size_t i = 0; i < report.rows.size(); ++i) {
          const auto& row = report.rows[i];
          out += "    {\"label\": \"" + json_escape(row.label) +
                 "\", \"rate\": " + format_double(row.rate) +
                 ", \"std_error\": " + format_double(row.std_error) +
                 ", \"count\": " + std::to_string(row.count) +
                 ", \"total\": " + std::to_string(row.total) + "}";
          out += i + 1 < report.rows.size() ? ",\n" : "\n";
        }
        out += "  ]";
      }
      out += "\n}\n";
      return out;
    }
  }
  return out;
}

}  // namespace pickaudit
