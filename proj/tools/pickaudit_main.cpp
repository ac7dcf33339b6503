// pickaudit: hypothesis tests, theorem bounds, and seeded simulations for
// auditing cherry-picked benchmark reports.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pickaudit/bounds.hpp"
#include "pickaudit/errors.hpp"
#include "pickaudit/experiments.hpp"
#include "pickaudit/hypothesis.hpp"
#include "pickaudit/io.hpp"
#include "pickaudit/version.hpp"

namespace {

using namespace pickaudit;

struct OutputOpts {
  std::string format = "table";
  std::string out_path;
};

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  return OutputFormat::table;
}

void emit(const Report& report, const OutputOpts& opts) {
  const std::string text = render_report(report, parse_format(opts.format));
  if (opts.out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(opts.out_path, std::ios::binary);
  if (!out) throw DataError("cannot open output file: " + opts.out_path);
  out << text;
}

// Every report carries the exact inputs, a hash of them, and the library
// version, so any printed number can be reproduced from the output alone.
Report start_report(const std::string& command,
                    std::vector<std::pair<std::string, std::string>> params) {
  Report report;
  report.fields.emplace_back("command", command);
  std::string canon = command;
  for (const auto& [key, value] : params) {
    canon += ';' + key + '=' + value;
    report.fields.emplace_back(key, value);
  }
  char hash[17];
  std::snprintf(hash, sizeof(hash), "%016llx",
                static_cast<unsigned long long>(fnv1a(canon)));
  report.fields.emplace_back("config_hash", hash);
  report.fields.emplace_back("version", kVersion);
  return report;
}

std::string_view kind_name(TestKind kind) {
  switch (kind) {
    case TestKind::standard_z:
      return "standard_z";
    case TestKind::gap_z:
      return "gap_z";
    case TestKind::conservative:
      return "conservative";
    case TestKind::inspector_z:
      return "inspector_z";
    case TestKind::one_sample_t:
      return "one_sample_t";
    case TestKind::two_sample_t:
      return "two_sample_t";
  }
  return "unknown";
}

void add_outcome_fields(Report& report, const TestOutcome& outcome) {
  report.fields.emplace_back("test", std::string(kind_name(outcome.kind)));
  report.fields.emplace_back("statistic", format_double(outcome.statistic));
  report.fields.emplace_back("p_value", format_double(outcome.p_value.value()));
  if (outcome.monte_carlo) {
    // Monte-Carlo p-values are estimates; always print the uncertainty.
    report.fields.emplace_back("p_std_error", format_double(outcome.monte_carlo->std_error));
    report.fields.emplace_back("draws", std::to_string(outcome.monte_carlo->draws));
  }
}

void add_decision_field(Report& report, const TestOutcome& outcome, double level,
                        const char* label) {
  report.fields.emplace_back(label,
                             decide(outcome, Probability::checked_open(level)) ? "yes" : "no");
}

CsvSchema schema_from_name(const std::string& name) {
  return name == "paired" ? CsvSchema::paired_scores : CsvSchema::raw_values;
}

ImprovementSample values_from_inputs(const std::vector<double>& flag_values,
                                     const std::string& csv_path, const std::string& schema) {
  if (!csv_path.empty()) return load_improvements(csv_path, schema_from_name(schema)).sample;
  if (!flag_values.empty()) return ImprovementSample::checked(flag_values);
  throw DataError("provide input values via --values or --csv");
}

void add_simulation_rows(Report& report, const SimulationResult& result) {
  for (const auto& rate : result.rates) {
    report.rows.push_back({rate.label, rate.rate(), rate.std_error(), rate.count, rate.total});
  }
  for (const auto& [label, value] : result.values) {
    report.fields.emplace_back(label, format_double(value));
  }
}

std::vector<std::pair<std::string, std::string>> config_params(const SimulationConfig& c) {
  return {
      {"n_all", std::to_string(c.n_all)},
      {"n_publish", std::to_string(c.n_publish)},
      {"n_inspect", std::to_string(c.n_inspect)},
      {"mu", format_double(c.mu)},
      {"variance_mode", std::string(variance_mode_name(c.variance_mode))},
      {"unknown_sd", format_double(c.unknown_sd)},
      {"alpha", format_double(c.alpha)},
      {"beta", format_double(c.beta)},
      {"mu_gap", format_double(c.mu_gap)},
      {"trials", std::to_string(c.trials)},
      {"seed", std::to_string(c.seed.value)},
      {"strategy", std::string(strategy_name(c.strategy))},
      {"mc_draws", std::to_string(c.mc_draws)},
  };
}

// Shared flag set of the simulate subcommands. A JSON config file provides
// the baseline; any flag given on the command line overrides its field.
struct SimulateArgs {
  std::string config_path;
  SimulationConfig flags;
  std::string variance_mode = "known_unit";
  std::string strategy = "top_k";
  std::uint64_t seed = 0;

  CLI::Option* o_n_all = nullptr;
  CLI::Option* o_n_publish = nullptr;
  CLI::Option* o_n_inspect = nullptr;
  CLI::Option* o_mu = nullptr;
  CLI::Option* o_variance_mode = nullptr;
  CLI::Option* o_unknown_sd = nullptr;
  CLI::Option* o_alpha = nullptr;
  CLI::Option* o_beta = nullptr;
  CLI::Option* o_mu_gap = nullptr;
  CLI::Option* o_trials = nullptr;
  CLI::Option* o_strategy = nullptr;
  CLI::Option* o_mc_draws = nullptr;

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file (SimulationConfig keys)");
    o_n_all = cmd->add_option("--n-all", flags.n_all, "pool size N_A");
    o_n_publish = cmd->add_option("--n-publish", flags.n_publish, "published count N_P");
    o_n_inspect = cmd->add_option("--n-inspect", flags.n_inspect, "inspector count N_I");
    o_mu = cmd->add_option("--mu", flags.mu, "true mean improvement");
    o_variance_mode =
        cmd->add_option("--variance-mode", variance_mode, "known_unit or unknown")
            ->check(CLI::IsMember({"known_unit", "unknown"}));
    o_unknown_sd =
        cmd->add_option("--unknown-sd", flags.unknown_sd, "draw sd under unknown variance");
    o_alpha = cmd->add_option("--alpha", flags.alpha, "reporter significance level");
    o_beta = cmd->add_option("--beta", flags.beta, "inspector confidence level");
    o_mu_gap = cmd->add_option("--mu-gap", flags.mu_gap, "minimum-improvement gap");
    o_trials = cmd->add_option("--trials", flags.trials, "number of trials");
    o_strategy = cmd->add_option("--strategy", strategy, "top_k or unbiased")
                     ->check(CLI::IsMember({"top_k", "unbiased"}));
    o_mc_draws = cmd->add_option("--mc-draws", flags.mc_draws,
                                 "conservative-test replicates per trial");
    cmd->add_option("--seed", seed, "run seed (required)")->required();
  }

  SimulationConfig resolve() const {
    SimulationConfig config;
    if (!config_path.empty()) config = load_config(config_path);
    if (o_n_all->count() > 0) config.n_all = flags.n_all;
    if (o_n_publish->count() > 0) config.n_publish = flags.n_publish;
    if (o_n_inspect->count() > 0) config.n_inspect = flags.n_inspect;
    if (o_mu->count() > 0) config.mu = flags.mu;
    if (o_variance_mode->count() > 0) config.variance_mode = parse_variance_mode(variance_mode);
    if (o_unknown_sd->count() > 0) config.unknown_sd = flags.unknown_sd;
    if (o_alpha->count() > 0) config.alpha = flags.alpha;
    if (o_beta->count() > 0) config.beta = flags.beta;
    if (o_mu_gap->count() > 0) config.mu_gap = flags.mu_gap;
    if (o_trials->count() > 0) config.trials = flags.trials;
    if (o_strategy->count() > 0) config.strategy = parse_strategy(strategy);
    if (o_mc_draws->count() > 0) config.mc_draws = flags.mc_draws;
    config.seed = RngSeed{seed};
    return config;
  }
};

void add_bound_report(Report& report, const BoundReport& bound) {
  report.fields.emplace_back("preconditions_met", bound.preconditions_met ? "yes" : "no");
  if (bound.threshold) {
    report.fields.emplace_back("threshold", format_double(*bound.threshold));
  }
  for (const auto& [key, value] : bound.detail) {
    report.fields.emplace_back("detail." + key, format_double(value));
  }
}

// Mean test (standard or gap) with inputs from flags or a CSV file.
Report run_mean_test(bool is_gap, CLI::Option* o_mu_hat, double mu_hat_flag,
                     CLI::Option* o_n, std::int64_t n, double mu_gap, CLI::Option* o_alpha,
                     double alpha, const std::string& csv_path, const std::string& schema) {
  double mu_hat = 0.0;
  if (!csv_path.empty()) {
    const ImprovementSample vals = load_improvements(csv_path, schema_from_name(schema)).sample;
    mu_hat = sample_mean(vals);
    n = static_cast<std::int64_t>(vals.size());
  } else if (o_mu_hat->count() > 0) {
    mu_hat = mu_hat_flag;
    if (o_n->count() == 0) throw DataError("--n is required with --mu-hat");
  } else {
    throw DataError("provide --mu-hat with --n, or --csv");
  }
  std::vector<std::pair<std::string, std::string>> params = {
      {"mu_hat", format_double(mu_hat)}, {"n", std::to_string(n)}};
  if (is_gap) params.emplace_back("mu_gap", format_double(mu_gap));
  Report report = start_report(is_gap ? "test gap" : "test standard", std::move(params));
  const TestOutcome outcome = is_gap ? gap_p(mu_hat, n, mu_gap) : standard_p(mu_hat, n);
  add_outcome_fields(report, outcome);
  if (o_alpha->count() > 0) add_decision_field(report, outcome, alpha, "significant");
  return report;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"hypothesis tests and seeded simulations for auditing cherry-picked "
               "benchmark reports"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("pickaudit ") + kVersion);

  OutputOpts output;
  app.add_option("--format", output.format, "output format: table, csv, or json")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", output.out_path, "write output to a file instead of stdout");

  // ---- test ----------------------------------------------------------
  CLI::App* test = app.add_subcommand("test", "run one hypothesis test");
  test->require_subcommand(1);

  struct MeanTestArgs {
    double mu_hat = 0.0;
    std::int64_t n = 0;
    double mu_gap = 0.0;
    double alpha = 0.05;
    std::string csv_path, schema = "raw";
    CLI::Option* o_mu_hat = nullptr;
    CLI::Option* o_n = nullptr;
    CLI::Option* o_alpha = nullptr;
  };

  MeanTestArgs std_args;
  CLI::App* t_std = test->add_subcommand("standard", "one-sided normal test of mean 0");
  std_args.o_mu_hat =
      t_std->add_option("--mu-hat", std_args.mu_hat, "published mean (unit-variance scale)");
  std_args.o_n = t_std->add_option("--n", std_args.n, "number of published values");
  t_std->add_option("--csv", std_args.csv_path, "derive mean and n from a CSV file");
  t_std->add_option("--schema", std_args.schema, "csv schema: raw or paired")
      ->check(CLI::IsMember({"raw", "paired"}));
  std_args.o_alpha =
      t_std->add_option("--alpha", std_args.alpha, "also report significance at this level");

  MeanTestArgs gap_args;
  CLI::App* t_gap = test->add_subcommand("gap", "normal test of mean mu_gap");
  gap_args.o_mu_hat = t_gap->add_option("--mu-hat", gap_args.mu_hat, "published mean");
  gap_args.o_n = t_gap->add_option("--n", gap_args.n, "number of published values");
  t_gap->add_option("--mu-gap", gap_args.mu_gap, "minimum-improvement gap")->required();
  t_gap->add_option("--csv", gap_args.csv_path, "derive mean and n from a CSV file");
  t_gap->add_option("--schema", gap_args.schema, "csv schema: raw or paired")
      ->check(CLI::IsMember({"raw", "paired"}));
  gap_args.o_alpha =
      t_gap->add_option("--alpha", gap_args.alpha, "also report significance at this level");

  struct {
    double mu_hat = 0.0;
    std::int64_t n = 0, n_all = 0, draws = 100000;
    std::uint64_t seed = 0;
    double alpha = 0.05;
    CLI::Option* o_alpha = nullptr;
  } con_args;
  CLI::App* t_con = test->add_subcommand(
      "conservative", "worst-case-selection test (Monte-Carlo estimate)");
  t_con->add_option("--mu-hat", con_args.mu_hat, "published mean")->required();
  t_con->add_option("--n", con_args.n, "number of published values")->required();
  t_con->add_option("--n-all", con_args.n_all, "pool size the reporter chose from")->required();
  t_con->add_option("--draws", con_args.draws, "Monte-Carlo replicates")->capture_default_str();
  t_con->add_option("--seed", con_args.seed, "run seed (required)")->required();
  con_args.o_alpha =
      t_con->add_option("--alpha", con_args.alpha, "also report significance at this level");

  struct {
    double mu_pub = 0.0, mu_insp = 0.0;
    std::int64_t n_publish = 0, n_inspect = 0;
    double beta = 0.05;
    std::string pub_csv, insp_csv, schema = "raw";
    CLI::Option *o_mu_pub = nullptr, *o_mu_insp = nullptr, *o_beta = nullptr;
  } insp_args;
  CLI::App* t_insp = test->add_subcommand("inspector", "two-sample z test of equal means");
  insp_args.o_mu_pub = t_insp->add_option("--mu-pub", insp_args.mu_pub, "published mean");
  insp_args.o_mu_insp = t_insp->add_option("--mu-insp", insp_args.mu_insp, "inspection mean");
  t_insp->add_option("--n-publish", insp_args.n_publish, "published count");
  t_insp->add_option("--n-inspect", insp_args.n_inspect, "inspection count");
  t_insp->add_option("--pub-csv", insp_args.pub_csv, "derive published side from CSV");
  t_insp->add_option("--insp-csv", insp_args.insp_csv, "derive inspection side from CSV");
  t_insp->add_option("--schema", insp_args.schema, "csv schema: raw or paired")
      ->check(CLI::IsMember({"raw", "paired"}));
  insp_args.o_beta =
      t_insp->add_option("--beta", insp_args.beta, "also report detection at this level");

  struct {
    std::vector<double> values;
    std::string csv_path, schema = "raw";
    double mu_gap = 0.0;
    double alpha = 0.05;
    CLI::Option* o_alpha = nullptr;
  } tone_args;
  CLI::App* t_one = test->add_subcommand("t-one", "one-sample t test (unknown variance)");
  t_one->add_option("--values", tone_args.values, "comma-separated values")->delimiter(',');
  t_one->add_option("--csv", tone_args.csv_path, "values from a CSV file");
  t_one->add_option("--schema", tone_args.schema, "csv schema: raw or paired")
      ->check(CLI::IsMember({"raw", "paired"}));
  t_one->add_option("--mu-gap", tone_args.mu_gap, "null mean")->capture_default_str();
  tone_args.o_alpha =
      t_one->add_option("--alpha", tone_args.alpha, "also report significance at this level");

  struct {
    std::vector<double> pub_values, insp_values;
    std::string pub_csv, insp_csv, schema = "raw";
    double beta = 0.05;
    CLI::Option* o_beta = nullptr;
  } ttwo_args;
  CLI::App* t_two = test->add_subcommand("t-two", "two-sample pooled t test (unknown variance)");
  t_two->add_option("--pub-values", ttwo_args.pub_values, "published values")->delimiter(',');
  t_two->add_option("--insp-values", ttwo_args.insp_values, "inspection values")->delimiter(',');
  t_two->add_option("--pub-csv", ttwo_args.pub_csv, "published values from CSV");
  t_two->add_option("--insp-csv", ttwo_args.insp_csv, "inspection values from CSV");
  t_two->add_option("--schema", ttwo_args.schema, "csv schema: raw or paired")
      ->check(CLI::IsMember({"raw", "paired"}));
  ttwo_args.o_beta =
      t_two->add_option("--beta", ttwo_args.beta, "also report detection at this level");

  // ---- bounds --------------------------------------------------------
  CLI::App* bounds_cmd = app.add_subcommand("bounds", "evaluate the guarantee thresholds");
  bounds_cmd->require_subcommand(1);

  struct {
    double alpha = 0.0;
    std::int64_t n_all = 0;
  } b1_args;
  CLI::App* b1 =
      bounds_cmd->add_subcommand("t1", "false-claim probability for single-result picking");
  b1->add_option("--alpha", b1_args.alpha)->required();
  b1->add_option("--n-all", b1_args.n_all)->required();

  struct {
    double alpha = 0.0, delta = 0.0, epsilon = 0.0;
    std::int64_t n_publish = 0, n_all = 0;
  } b2_args;
  CLI::App* b2 = bounds_cmd->add_subcommand(
      "t2", "sample-size preconditions for successful cherry-picking");
  b2->add_option("--alpha", b2_args.alpha)->required();
  b2->add_option("--delta", b2_args.delta)->required();
  b2->add_option("--epsilon", b2_args.epsilon)->required();
  b2->add_option("--n-publish", b2_args.n_publish)->required();
  b2->add_option("--n-all", b2_args.n_all)->required();

  struct {
    double delta = 0.0;
    std::int64_t n_publish = 0, n_all = 0;
  } b3_args;
  CLI::App* b3 = bounds_cmd->add_subcommand(
      "t3", "mean threshold below which the conservative test loses power");
  b3->add_option("--delta", b3_args.delta)->required();
  b3->add_option("--n-publish", b3_args.n_publish)->required();
  b3->add_option("--n-all", b3_args.n_all)->required();

  struct {
    double delta = 0.0;
    std::int64_t n_publish = 0, n_all = 0;
  } b4_args;
  CLI::App* b4 = bounds_cmd->add_subcommand("t4", "minimum gap defeating any selection");
  b4->add_option("--delta", b4_args.delta)->required();
  b4->add_option("--n-publish", b4_args.n_publish)->required();
  b4->add_option("--n-all", b4_args.n_all)->required();

  struct {
    double alpha = 0.0, beta = 0.0, delta = 0.0;
    std::int64_t n_publish = 0;
  } b5_args;
  CLI::App* b5 =
      bounds_cmd->add_subcommand("t5", "minimum gap guaranteeing inspector detection");
  b5->add_option("--alpha", b5_args.alpha)->required();
  b5->add_option("--beta", b5_args.beta)->required();
  b5->add_option("--delta", b5_args.delta)->required();
  b5->add_option("--n-publish", b5_args.n_publish)->required();

  // ---- simulate ------------------------------------------------------
  CLI::App* simulate = app.add_subcommand("simulate", "run a seeded simulation");
  simulate->require_subcommand(1);

  SimulateArgs fc_args;
  CLI::App* sim_fc = simulate->add_subcommand("false-claim", "cherry-picking false-claim rate");
  fc_args.attach(sim_fc);

  SimulateArgs pw_args;
  std::vector<double> mu_grid = {0.0, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0};
  CLI::App* sim_pw = simulate->add_subcommand(
      "power", "statistical power of the three tests under honest reporting");
  pw_args.attach(sim_pw);
  sim_pw->add_option("--mu-grid", mu_grid, "comma-separated true means")->delimiter(',');

  SimulateArgs in_args;
  CLI::App* sim_in = simulate->add_subcommand("inspect", "reporter-vs-inspector detection rates");
  in_args.attach(sim_in);

  // ---- analyze -------------------------------------------------------
  CLI::App* analyze = app.add_subcommand("analyze", "run the real-data pipeline");
  analyze->require_subcommand(1);

  struct {
    std::string csv_path, schema = "raw";
    std::int64_t n_publish = 5, n_inspect = 5, resample_trials = 1000;
    std::uint64_t seed = 0;
    double alpha = 0.05, beta = 0.05;
    bool exclude_published = true;
  } rd_args;
  CLI::App* an_rd = analyze->add_subcommand(
      "real-data", "top-k selection audit on a per-dataset improvements CSV");
  an_rd->add_option("--csv", rd_args.csv_path, "improvements CSV")->required();
  an_rd->add_option("--schema", rd_args.schema, "csv schema: raw or paired")
      ->check(CLI::IsMember({"raw", "paired"}));
  an_rd->add_option("--n-publish", rd_args.n_publish)->capture_default_str();
  an_rd->add_option("--n-inspect", rd_args.n_inspect)->capture_default_str();
  an_rd->add_option("--resample-trials", rd_args.resample_trials)->capture_default_str();
  an_rd->add_option("--seed", rd_args.seed, "run seed (required)")->required();
  an_rd->add_option("--alpha", rd_args.alpha)->capture_default_str();
  an_rd->add_option("--beta", rd_args.beta)->capture_default_str();
  an_rd->add_flag("--exclude-published,!--no-exclude-published", rd_args.exclude_published,
                  "inspector resamples avoid the published datasets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage error
  }

  Report report;
  if (t_std->parsed()) {
    report = run_mean_test(false, std_args.o_mu_hat, std_args.mu_hat, std_args.o_n,
                           std_args.n, 0.0, std_args.o_alpha, std_args.alpha,
                           std_args.csv_path, std_args.schema);
  } else if (t_gap->parsed()) {
    report = run_mean_test(true, gap_args.o_mu_hat, gap_args.mu_hat, gap_args.o_n,
                           gap_args.n, gap_args.mu_gap, gap_args.o_alpha, gap_args.alpha,
                           gap_args.csv_path, gap_args.schema);
  } else if (t_con->parsed()) {
    report = start_report("test conservative",
                          {{"mu_hat", format_double(con_args.mu_hat)},
                           {"n", std::to_string(con_args.n)},
                           {"n_all", std::to_string(con_args.n_all)},
                           {"draws", std::to_string(con_args.draws)},
                           {"seed", std::to_string(con_args.seed)}});
    const TestOutcome outcome = conservative_p(con_args.mu_hat, con_args.n, con_args.n_all,
                                               con_args.draws, RngSeed{con_args.seed});
    add_outcome_fields(report, outcome);
    if (con_args.o_alpha->count() > 0) {
      add_decision_field(report, outcome, con_args.alpha, "significant");
    }
  } else if (t_insp->parsed()) {
    double mu_pub = 0.0, mu_insp = 0.0;
    std::int64_t np = insp_args.n_publish, ni = insp_args.n_inspect;
    if (!insp_args.pub_csv.empty()) {
      const ImprovementSample vals =
          load_improvements(insp_args.pub_csv, schema_from_name(insp_args.schema)).sample;
      mu_pub = sample_mean(vals);
      np = static_cast<std::int64_t>(vals.size());
    } else if (insp_args.o_mu_pub->count() > 0) {
      mu_pub = insp_args.mu_pub;
      if (np < 1) throw DataError("--n-publish is required with --mu-pub");
    } else {
      throw DataError("provide --mu-pub or --pub-csv");
    }
    if (!insp_args.insp_csv.empty()) {
      const ImprovementSample vals =
          load_improvements(insp_args.insp_csv, schema_from_name(insp_args.schema)).sample;
      mu_insp = sample_mean(vals);
      ni = static_cast<std::int64_t>(vals.size());
    } else if (insp_args.o_mu_insp->count() > 0) {
      mu_insp = insp_args.mu_insp;
      if (ni < 1) throw DataError("--n-inspect is required with --mu-insp");
    } else {
      throw DataError("provide --mu-insp or --insp-csv");
    }
    report = start_report("test inspector", {{"mu_pub", format_double(mu_pub)},
                                             {"mu_insp", format_double(mu_insp)},
                                             {"n_publish", std::to_string(np)},
                                             {"n_inspect", std::to_string(ni)}});
    const TestOutcome outcome = inspector_p(mu_pub, mu_insp, np, ni);
    add_outcome_fields(report, outcome);
    if (insp_args.o_beta->count() > 0) {
      add_decision_field(report, outcome, insp_args.beta, "biased");
    }
  } else if (t_one->parsed()) {
    const ImprovementSample vals =
        values_from_inputs(tone_args.values, tone_args.csv_path, tone_args.schema);
    report = start_report("test t-one", {{"n", std::to_string(vals.size())},
                                         {"mu_gap", format_double(tone_args.mu_gap)}});
    const TestOutcome outcome = one_sample_t_p(vals, tone_args.mu_gap);
    add_outcome_fields(report, outcome);
    if (tone_args.o_alpha->count() > 0) {
      add_decision_field(report, outcome, tone_args.alpha, "significant");
    }
  } else if (t_two->parsed()) {
    const ImprovementSample pub =
        values_from_inputs(ttwo_args.pub_values, ttwo_args.pub_csv, ttwo_args.schema);
    const ImprovementSample insp =
        values_from_inputs(ttwo_args.insp_values, ttwo_args.insp_csv, ttwo_args.schema);
    report = start_report("test t-two", {{"n_publish", std::to_string(pub.size())},
                                         {"n_inspect", std::to_string(insp.size())}});
    const TestOutcome outcome = two_sample_t_p(pub, insp);
    add_outcome_fields(report, outcome);
    if (ttwo_args.o_beta->count() > 0) {
      add_decision_field(report, outcome, ttwo_args.beta, "biased");
    }
  } else if (b1->parsed()) {
    report = start_report("bounds t1", {{"alpha", format_double(b1_args.alpha)},
                                        {"n_all", std::to_string(b1_args.n_all)}});
    report.fields.emplace_back(
        "false_claim_prob",
        format_double(t1_false_claim_prob(b1_args.alpha, b1_args.n_all).value()));
  } else if (b2->parsed()) {
    report = start_report("bounds t2", {{"alpha", format_double(b2_args.alpha)},
                                        {"delta", format_double(b2_args.delta)},
                                        {"epsilon", format_double(b2_args.epsilon)},
                                        {"n_publish", std::to_string(b2_args.n_publish)},
                                        {"n_all", std::to_string(b2_args.n_all)}});
    add_bound_report(report, t2_preconditions(b2_args.alpha, b2_args.delta, b2_args.epsilon,
                                              b2_args.n_publish, b2_args.n_all));
  } else if (b3->parsed()) {
    report = start_report("bounds t3", {{"delta", format_double(b3_args.delta)},
                                        {"n_publish", std::to_string(b3_args.n_publish)},
                                        {"n_all", std::to_string(b3_args.n_all)}});
    add_bound_report(report, t3_power_threshold(b3_args.delta, b3_args.n_publish, b3_args.n_all));
  } else if (b4->parsed()) {
    report = start_report("bounds t4", {{"delta", format_double(b4_args.delta)},
                                        {"n_publish", std::to_string(b4_args.n_publish)},
                                        {"n_all", std::to_string(b4_args.n_all)}});
    add_bound_report(report, t4_min_gap_report(b4_args.delta, b4_args.n_publish, b4_args.n_all));
  } else if (b5->parsed()) {
    report = start_report("bounds t5", {{"alpha", format_double(b5_args.alpha)},
                                        {"beta", format_double(b5_args.beta)},
                                        {"delta", format_double(b5_args.delta)},
                                        {"n_publish", std::to_string(b5_args.n_publish)}});
    add_bound_report(report, t5_min_gap_report(b5_args.alpha, b5_args.beta, b5_args.delta,
                                               b5_args.n_publish));
  } else if (sim_fc->parsed()) {
    const SimulationConfig config = fc_args.resolve();
    report = start_report("simulate false-claim", config_params(config));
    report.fields.emplace_back("config_json_hash", config_hash_hex(config));
    add_simulation_rows(report, run_false_claim(config));
  } else if (sim_pw->parsed()) {
    const SimulationConfig config = pw_args.resolve();
    auto params = config_params(config);
    std::string grid;
    for (double mu : mu_grid) {
      if (!grid.empty()) grid += ',';
      grid += format_double(mu);
    }
    params.emplace_back("mu_grid", grid);
    report = start_report("simulate power", std::move(params));
    report.fields.emplace_back("config_json_hash", config_hash_hex(config));
    for (const SimulationResult& point : run_power(config, mu_grid)) {
      for (const auto& rate : point.rates) {
        report.rows.push_back({rate.label + "@mu=" + format_double(point.config.mu),
                               rate.rate(), rate.std_error(), rate.count, rate.total});
      }
    }
  } else if (sim_in->parsed()) {
    const SimulationConfig config = in_args.resolve();
    report = start_report("simulate inspect", config_params(config));
    report.fields.emplace_back("config_json_hash", config_hash_hex(config));
    add_simulation_rows(report, run_inspection(config));
  } else if (an_rd->parsed()) {
    report = start_report(
        "analyze real-data",
        {{"csv", rd_args.csv_path},
         {"schema", rd_args.schema},
         {"n_publish", std::to_string(rd_args.n_publish)},
         {"n_inspect", std::to_string(rd_args.n_inspect)},
         {"resample_trials", std::to_string(rd_args.resample_trials)},
         {"seed", std::to_string(rd_args.seed)},
         {"alpha", format_double(rd_args.alpha)},
         {"beta", format_double(rd_args.beta)},
         {"exclude_published", rd_args.exclude_published ? "true" : "false"}});
    const ImprovementTable table =
        load_improvements(rd_args.csv_path, schema_from_name(rd_args.schema));
    const ImprovementSample normalized = normalize_unit_variance(table.sample);
    RealDataParams params;
    params.n_publish = rd_args.n_publish;
    params.n_inspect = rd_args.n_inspect;
    params.resample_trials = rd_args.resample_trials;
    params.seed = RngSeed{rd_args.seed};
    params.alpha = rd_args.alpha;
    params.beta = rd_args.beta;
    params.exclude_published = rd_args.exclude_published;
    const SimulationResult result = run_real_data(normalized, params);

    const std::vector<std::size_t> top = select_indices(
        normalized, static_cast<std::size_t>(rd_args.n_publish), ReporterStrategy::top_k());
    std::string published;
    for (std::size_t i : top) {
      if (!published.empty()) published += ',';
      published += table.dataset_ids[i];
    }
    report.fields.emplace_back("published_datasets", published);
    add_simulation_rows(report, result);
  }

  emit(report, output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const pickaudit::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 3;
  } catch (const pickaudit::DomainError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
