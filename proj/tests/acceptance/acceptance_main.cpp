// Acceptance suite: one pass/fail line per criterion, pinned tolerances.
// Usage: pickaudit_acceptance [data_dir]   (data_dir holds the bundled
// fixture CSV; defaults to ../data)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pickaudit/adversary.hpp"
#include "pickaudit/bounds.hpp"
#include "pickaudit/experiments.hpp"
#include "pickaudit/hypothesis.hpp"
#include "pickaudit/io.hpp"
#include "pickaudit/normal.hpp"
#include "pickaudit/sampling.hpp"
#include "pickaudit/simd.hpp"
#include "pickaudit/tail_bounds.hpp"

namespace {

using namespace pickaudit;

std::string g_data_dir = "../data";

struct Outcome {
  bool pass = true;
  std::string detail;
};

void expect(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + what;
  }
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

double band(double p, std::int64_t n, double sigmas) {
  return sigmas * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

// 1. Round-trip, Mill's-ratio, and quantile-bracket fidelity.
Outcome criterion_special_functions() {
  Outcome o;
  double worst = 0.0;
  const double lo = 1e-10;
  for (int i = 0; i < 100; ++i) {
    const double p = lo * std::exp(std::log(0.5 / lo) / 99.0 * i);
    for (const double q : {p, 1.0 - p}) {
      worst = std::max(worst, std::fabs(normal_survival(normal_inv_survival(q)) - q));
    }
  }
  expect(o, worst <= 1e-10, "round trip worst " + fmt(worst) + " > 1e-10");

  for (double x = 0.05; x <= 10.0; x += 0.05) {
    const double ratio = normal_survival(x) / normal_density(x);
    expect(o, mills_ratio_lower(x) <= ratio && ratio <= mills_ratio_upper(x),
           "Mill's ratio bracket fails at x=" + fmt(x));
  }
  for (int i = 0; i < 200; ++i) {
    const double alpha = 1e-8 * std::exp(std::log(0.49 / 1e-8) / 199.0 * i);
    const double xsq = std::pow(normal_inv_survival(alpha), 2);
    expect(o, quantile_sq_lower(alpha) < xsq && xsq < quantile_sq_upper(alpha),
           "quantile bracket fails at alpha=" + fmt(alpha));
  }
  o.detail = "round-trip worst " + fmt(worst) + ", brackets hold on full grids";
  return o;
}

// 2. Single-pick false-claim rate matches 1 - 0.95^20.
Outcome criterion_single_pick() {
  Outcome o;
  SimulationConfig c;
  c.n_all = 20;
  c.n_publish = 1;
  c.n_inspect = 1;
  c.alpha = 0.05;
  c.trials = 100000;
  c.seed = RngSeed{1001};
  const double rate = run_false_claim(c).rate("significant").rate();
  const double closed_form = t1_false_claim_prob(0.05, 20).value();
  const double tol = band(closed_form, c.trials, 4.0);
  expect(o, std::fabs(rate - closed_form) < tol,
         "rate " + fmt(rate) + " vs closed form " + fmt(closed_form));
  o.detail = "rate " + fmt(rate) + " vs 1-(1-a)^20 = " + fmt(closed_form) + " (tol " +
             fmt(tol) + ")";
  return o;
}

// 3. False-claim rate grows with the published count and clears 1/2.
Outcome criterion_cherry_picking_power() {
  Outcome o;
  std::vector<double> rates;
  std::vector<double> errs;
  for (const std::int64_t np : {5, 10, 20, 40}) {
    SimulationConfig c;
    c.n_publish = np;
    c.n_all = 3 * np;
    c.n_inspect = 1;
    c.alpha = 0.05;
    c.trials = 1000;
    c.seed = RngSeed{1002};
    const LabeledRate r = run_false_claim(c).rate("significant");
    rates.push_back(r.rate());
    errs.push_back(r.std_error());
  }
  for (std::size_t i = 0; i + 1 < rates.size(); ++i) {
    const double joint = 2.0 * std::sqrt(errs[i] * errs[i] + errs[i + 1] * errs[i + 1]);
    expect(o, rates[i + 1] >= rates[i] - joint,
           "rate dropped from " + fmt(rates[i]) + " to " + fmt(rates[i + 1]));
  }
  SimulationConfig big;
  big.n_publish = 30;
  big.n_all = 90;
  big.n_inspect = 1;
  big.alpha = 0.05;
  big.trials = 1000;
  big.seed = RngSeed{1003};
  const double at_30_90 = run_false_claim(big).rate("significant").rate();
  expect(o, at_30_90 > 0.5, "rate at N_P=30,N_A=90 is " + fmt(at_30_90) + " <= 0.5");
  o.detail = "rates " + fmt(rates[0]) + " -> " + fmt(rates[1]) + " -> " + fmt(rates[2]) +
             " -> " + fmt(rates[3]) + ", at 30/90: " + fmt(at_30_90);
  return o;
}

// 4. The conservative test keeps its level under worst-case selection.
Outcome criterion_conservative_safety() {
  Outcome o;
  const std::int64_t trials = 10000;
  const std::int64_t mc_draws = 10000;
  std::int64_t hits = 0;
  for (std::int64_t t = 0; t < trials; ++t) {
    const RngSeed trial_seed = derive_seed(RngSeed{1004}, static_cast<std::uint64_t>(t));
    const auto pool =
        ImprovementSample::checked(sample_normal(30, 0.0, 1.0, derive_seed(trial_seed, 0)));
    const auto sel = select(pool, 10, ReporterStrategy::top_k());
    const TestOutcome outcome =
        conservative_p(publish_mean(sel), 10, 30, mc_draws, derive_seed(trial_seed, 1));
    if (decide(outcome, Probability::checked_open(0.05))) ++hits;
  }
  const double rate = static_cast<double>(hits) / static_cast<double>(trials);
  const double cap = 0.05 + band(0.05, trials, 4.0);
  expect(o, rate <= cap, "false-claim rate " + fmt(rate) + " above " + fmt(cap));
  o.detail = "conservative false-claim rate " + fmt(rate) + " <= " + fmt(cap);
  return o;
}

// 5. Below the power threshold the conservative test stays silent.
Outcome criterion_power_loss() {
  Outcome o;
  const BoundReport bound = t3_power_threshold(0.1, 10, 30);
  const double mu = bound.threshold && *bound.threshold > 0.0 ? *bound.threshold : 0.0;
  const std::int64_t trials = 10000;
  const std::int64_t mc_draws = 2000;
  std::int64_t hits = 0;
  for (std::int64_t t = 0; t < trials; ++t) {
    const RngSeed trial_seed = derive_seed(RngSeed{1005}, static_cast<std::uint64_t>(t));
    const auto vals = sample_normal(10, mu, 1.0, derive_seed(trial_seed, 0));
    double mean = 0.0;
    for (double v : vals) mean += v;
    mean /= 10.0;
    const TestOutcome outcome =
        conservative_p(mean, 10, 30, mc_draws, derive_seed(trial_seed, 1));
    if (decide(outcome, Probability::checked_open(0.05))) ++hits;
  }
  const double rate = static_cast<double>(hits) / static_cast<double>(trials);
  const double cap = 0.1 + band(0.1, trials, 4.0);
  expect(o, rate <= cap, "claim rate " + fmt(rate) + " above " + fmt(cap));
  o.detail = "threshold " + fmt(bound.threshold.value_or(0.0)) + " (clamped mu " + fmt(mu) +
             "), claim rate " + fmt(rate) + " <= " + fmt(cap);
  return o;
}

// 6. Inspector detection of a gap-passing cherry-picker clears 0.87.
Outcome criterion_inspector_detection() {
  Outcome o;
  double min_rate = 1.0;
  for (std::uint64_t s = 0; s < 5; ++s) {
    SimulationConfig c;
    c.n_all = 30;
    c.n_publish = 10;
    c.n_inspect = 10;
    c.mu_gap = 0.5;
    c.alpha = 0.05;
    c.beta = 0.05;
    c.trials = 1000;
    c.seed = RngSeed{2000 + s};
    const LabeledRate r = run_inspection(c).rate("detection_conditional");
    min_rate = std::min(min_rate, r.rate());
    expect(o, r.total > 100, "too few significant claims to condition on");
    expect(o, r.rate() >= 0.87,
           "seed " + std::to_string(2000 + s) + " detection " + fmt(r.rate()) + " < 0.87");
  }
  o.detail = "conditional detection min over 5 seeds " + fmt(min_rate) + " (>0.9 expected)";
  return o;
}

// 7. The two gap guarantees, and their ordering on the shared grid.
Outcome criterion_gap_guarantees() {
  Outcome o;
  SimulationConfig c;
  c.n_all = 30;
  c.n_publish = 10;
  c.n_inspect = 10;
  c.alpha = 0.05;
  c.beta = 0.05;
  c.trials = 1000;
  c.seed = RngSeed{1006};
  c.mu_gap = t4_min_gap(0.1, c.n_publish, c.n_all);
  const double claim_rate = run_inspection(c).rate("significant").rate();
  const double claim_cap = 0.1 + band(0.1, c.trials, 4.0);
  expect(o, claim_rate <= claim_cap,
         "claim rate " + fmt(claim_rate) + " above " + fmt(claim_cap));

  SimulationConfig d = c;
  d.n_all = 300;  // make passing the gap test routine so the conditional
  d.trials = 2000;  // detection rate is estimable
  d.seed = RngSeed{1007};
  d.mu_gap = t5_min_gap(0.05, 0.05, 0.1, d.n_publish);
  const LabeledRate detection = run_inspection(d).rate("detection_conditional");
  const double floor_rate = 0.9 - band(0.9, std::max<std::int64_t>(detection.total, 1), 4.0);
  expect(o, detection.total > 500, "too few significant claims to condition on");
  expect(o, detection.rate() >= floor_rate,
         "detection " + fmt(detection.rate()) + " below " + fmt(floor_rate));

  for (const double level : {0.01, 0.05, 0.1}) {
    for (const std::int64_t np : {5, 10, 20, 50, 100}) {
      for (const std::int64_t factor : {2, 5, 10, 50, 100}) {
        expect(o, t4_min_gap(level, np, np * factor) >= t5_min_gap(level, level, level, np),
               "gap ordering fails at level=" + fmt(level) + " np=" + fmt(double(np)) +
                   " na=" + fmt(double(np * factor)));
      }
    }
  }
  o.detail = "claim rate " + fmt(claim_rate) + " <= " + fmt(claim_cap) + "; detection " +
             fmt(detection.rate()) + " on " + std::to_string(detection.total) +
             " claims; gap ordering holds on grid";
  return o;
}

// 8. Estimated variance helps the cheater and hurts the inspector.
Outcome criterion_unknown_variance_ordering() {
  Outcome o;
  SimulationConfig c;
  c.n_all = 30;
  c.n_publish = 10;
  c.n_inspect = 10;
  c.alpha = 0.05;
  c.beta = 0.05;
  c.mu_gap = 0.5;
  c.trials = 10000;
  c.seed = RngSeed{1008};
  SimulationConfig u = c;
  u.variance_mode = VarianceMode::unknown;
  u.unknown_sd = 1.0;

  const LabeledRate kf = run_false_claim(c).rate("significant");
  const LabeledRate uf = run_false_claim(u).rate("significant");
  const double joint_fc =
      2.0 * std::sqrt(kf.std_error() * kf.std_error() + uf.std_error() * uf.std_error());
  expect(o, uf.rate() >= kf.rate() - joint_fc,
         "t-based false-claim rate " + fmt(uf.rate()) + " not >= z-based " + fmt(kf.rate()));

  const LabeledRate ki = run_inspection(c).rate("detection_conditional");
  const LabeledRate ui = run_inspection(u).rate("detection_conditional");
  const double joint_det =
      2.0 * std::sqrt(ki.std_error() * ki.std_error() + ui.std_error() * ui.std_error());
  expect(o, ui.rate() <= ki.rate() + joint_det,
         "t-based detection " + fmt(ui.rate()) + " not <= z-based " + fmt(ki.rate()));
  o.detail = "false-claim z " + fmt(kf.rate()) + " vs t " + fmt(uf.rate()) + "; detection z " +
             fmt(ki.rate()) + " vs t " + fmt(ui.rate());
  return o;
}

// 9. Real-data pipeline on the bundled 66-row fixture.
Outcome criterion_real_data_pipeline() {
  Outcome o;
  const ImprovementTable table = load_improvements(
      g_data_dir + "/synthetic_improvements_66.csv", CsvSchema::raw_values);
  expect(o, table.sample.size() == 66,
         "fixture has " + std::to_string(table.sample.size()) + " rows, want 66");
  const ImprovementSample pool = normalize_unit_variance(table.sample);

  RealDataParams params;
  params.n_publish = 5;
  params.n_inspect = 5;
  params.resample_trials = 1000;
  params.seed = RngSeed{909090};
  const SimulationResult r = run_real_data(pool, params);
  const double reporter_p = r.value("reporter_p");
  const double detection = r.rate("detection").rate();
  expect(o, reporter_p < 0.05, "reporter p " + fmt(reporter_p) + " not < 0.05");
  expect(o, detection > 0.8, "detection " + fmt(detection) + " not > 0.8");

  const SimulationResult again = run_real_data(pool, params);
  expect(o, again.rate("detection").count == r.rate("detection").count &&
                again.value("reporter_p") == reporter_p,
         "rerun with the same seed changed the results");
  o.detail = "reporter p " + fmt(reporter_p) + ", detection " + fmt(detection) + " over " +
             std::to_string(params.resample_trials) + " resamples";
  return o;
}

// 10. Every test keeps its nominal level at its own null, both variance modes.
Outcome criterion_calibration() {
  Outcome o;
  const std::int64_t trials = 10000;
  const double levels[3] = {0.01, 0.05, 0.1};
  struct Case {
    const char* name;
    std::function<double(RngSeed)> p_value;  // one null trial -> p
  };
  const double mu_gap = 0.5;
  std::vector<Case> cases;
  cases.push_back({"standard_z", [](RngSeed s) {
                     const auto v = sample_normal(10, 0.0, 1.0, s);
                     double m = 0.0;
                     for (double x : v) m += x;
                     return standard_p(m / 10.0, 10).p_value.value();
                   }});
  cases.push_back({"gap_z", [mu_gap](RngSeed s) {
                     const auto v = sample_normal(10, mu_gap, 1.0, s);
                     double m = 0.0;
                     for (double x : v) m += x;
                     return gap_p(m / 10.0, 10, mu_gap).p_value.value();
                   }});
  cases.push_back({"inspector_z", [](RngSeed s) {
                     const auto a = sample_normal(10, 0.3, 1.0, derive_seed(s, 0));
                     const auto b = sample_normal(12, 0.3, 1.0, derive_seed(s, 1));
                     double ma = 0.0, mb = 0.0;
                     for (double x : a) ma += x;
                     for (double x : b) mb += x;
                     return inspector_p(ma / 10.0, mb / 12.0, 10, 12).p_value.value();
                   }});
  cases.push_back({"one_sample_t", [mu_gap](RngSeed s) {
                     const auto v = ImprovementSample::checked(
                         sample_normal(10, mu_gap, 1.7, s));
                     return one_sample_t_p(v, mu_gap).p_value.value();
                   }});
  cases.push_back({"two_sample_t", [](RngSeed s) {
                     const auto a = ImprovementSample::checked(
                         sample_normal(10, 0.3, 1.7, derive_seed(s, 0)));
                     const auto b = ImprovementSample::checked(
                         sample_normal(12, 0.3, 1.7, derive_seed(s, 1)));
                     return two_sample_t_p(a, b).p_value.value();
                   }});
  cases.push_back({"conservative", [](RngSeed s) {
                     // Its null is worst-case selection itself.
                     const auto pool = ImprovementSample::checked(
                         sample_normal(30, 0.0, 1.0, derive_seed(s, 0)));
                     const auto sel = select(pool, 10, ReporterStrategy::top_k());
                     return conservative_p(publish_mean(sel), 10, 30, 2000,
                                           derive_seed(s, 1))
                         .p_value.value();
                   }});

  std::uint64_t case_salt = 0;
  for (const Case& c : cases) {
    std::int64_t hits[3] = {0, 0, 0};
    for (std::int64_t t = 0; t < trials; ++t) {
      const double p =
          c.p_value(derive_seed(RngSeed{3000 + case_salt}, static_cast<std::uint64_t>(t)));
      for (int l = 0; l < 3; ++l) {
        if (p <= levels[l]) ++hits[l];
      }
    }
    for (int l = 0; l < 3; ++l) {
      const double rate = static_cast<double>(hits[l]) / static_cast<double>(trials);
      const double tol = band(levels[l], trials, 4.0);
      expect(o, std::fabs(rate - levels[l]) < tol,
             std::string(c.name) + " at level " + fmt(levels[l]) + ": rate " + fmt(rate));
    }
    ++case_salt;
  }
  o.detail = "6 tests x 3 levels within 4 std errors of nominal";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_data_dir = argv[1];

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"special-function fidelity", criterion_special_functions},
      {"single-pick false-claim rate", criterion_single_pick},
      {"cherry-picking power trend", criterion_cherry_picking_power},
      {"conservative-test safety", criterion_conservative_safety},
      {"conservative power loss cap", criterion_power_loss},
      {"inspector detection rate", criterion_inspector_detection},
      {"minimum-gap guarantees", criterion_gap_guarantees},
      {"unknown-variance ordering", criterion_unknown_variance_ordering},
      {"real-data pipeline", criterion_real_data_pipeline},
      {"null calibration", criterion_calibration},
  };

  std::printf("pickaudit acceptance suite (simd backend: %s)\n",
              std::string(simd::name(simd::active())).c_str());
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%2zu/10] %s  %-32s (%.1fs)  %s\n", i + 1, o.pass ? "PASS" : "FAIL",
                criteria[i].first.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all 10 criteria passed\n");
  return 0;
}
