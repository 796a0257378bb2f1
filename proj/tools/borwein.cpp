// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: exact coefficient dumps, sign-pattern sweeps, the
// saddle/bounds pipeline, the appendix certification suite, and the general
// modulus sign predictor. JSON is the machine interface, CSV the tabular one.
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "borwein/bounds.hpp"
#include "borwein/certify.hpp"
#include "borwein/io.hpp"
#include "borwein/parallel.hpp"
#include "borwein/predict.hpp"
#include "borwein/qseries.hpp"
#include "borwein/saddle.hpp"
#include "borwein/signcheck.hpp"

namespace {

using nlohmann::json;

// Exit codes: 0 all checks pass, 1 violation found, 2 usage error, 3 resource.
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

struct Range {
  std::int64_t lo{0};
  std::int64_t hi{0};
};

// "a..b" or a single value
Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::int64_t v = std::stoll(text);
    return {v, v};
  }
  return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
}

struct FamilyChoice {
  std::string name{"borwein"};
  std::int64_t modulus{3};
  int delta{1};
};

borwein::TruncatedSeries make_family_series(const FamilyChoice& family, std::int64_t n,
                                            std::optional<std::int64_t> trunc) {
  using namespace borwein;
  if (family.name == "borwein") return borwein_poly(n, family.delta, trunc);
  if (family.name == "mod4" || family.name == "mod5" || family.name == "mod6" ||
      family.name == "mod7" || family.name == "general") {
    const std::int64_t K = family.modulus;
    const std::int64_t degree = K * (K - 1) / 2 * family.delta * n * n;
    return general_product(mod_family_spec(K, n, family.delta), trunc.value_or(degree));
  }
  if (family.name == "bbg") return theta_difference_bbg(trunc.value_or(3 * n));
  if (family.name == "andrews") return andrews_mod3_infinite(trunc.value_or(3 * n));
  if (family.name == "kane") return kane_square_numerator(trunc.value_or(3 * n));
  if (family.name == "pinf")
    return general_product(borwein_infinite_spec(family.delta), trunc.value_or(3 * n));
  throw CLI::ValidationError("unknown family: " + family.name);
}

borwein::SignRule make_family_rule(const FamilyChoice& family, std::int64_t n) {
  using namespace borwein;
  if (family.name == "borwein" || family.name == "pinf" || family.name == "andrews" ||
      family.name == "kane" || family.name == "bbg")
    return borwein_rule(3);
  if (family.name == "mod4") return mod4_rule(n, family.delta);
  if (family.name == "mod5") return borwein_rule(5);
  if (family.name == "mod7") return mod7_rule();
  throw CLI::ValidationError("no sign rule for family: " + family.name);
}

int run_verify_sign(const FamilyChoice& family, const Range& n_range,
                    std::optional<std::int64_t> m_limit, const std::string& out_path) {
  auto report = borwein::scan_family(
      [&](std::int64_t n) { return make_family_series(family, n, std::nullopt); },
      [&](std::int64_t n) { return make_family_rule(family, n); }, n_range.lo, n_range.hi,
      m_limit, family.name);
  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  out << borwein::scan_report_to_json(report).dump(2) << '\n';
  return report.clean() ? kExitOk : kExitViolation;
}

int run_verify_theorem(int theorem, const Range& n_range,
                       std::optional<std::int64_t> m_limit_override, const std::string& out_path) {
  using namespace borwein;
  const int delta = theorem;  // theorems 1..3 treat P_n^delta with delta = theorem index
  const std::int64_t analytic_threshold = (delta == 1) ? 5300 : (delta == 2 ? 7000 : 3150);

  struct Row {
    std::int64_t n;
    std::string mode;
    bool pass;
    std::int64_t checked_limit;
  };
  std::vector<Row> rows(static_cast<std::size_t>(n_range.hi - n_range.lo + 1));

  parallel_for(n_range.lo, n_range.hi + 1, [&](std::int64_t n) {
    Row row{n, "", true, 0};
    const std::int64_t degree = 3 * delta * n * n;
    const std::int64_t half = degree / 2;

    SignRule rule = borwein_rule(3);
    if (delta == 3) {
      // only residues 0 and 1 are theorem-covered below 3 deg(P_n)/2
      rule.residue_segments[2] = {{0, 9 * n * n / 2, SignExpectation::kFree}};
      rule.residue_segments[0][0].hi = 9 * n * n / 2;
      rule.residue_segments[1][0].hi = 9 * n * n / 2;
    }

    auto exact_check = [&](std::int64_t limit) {
      TruncatedSeries p = borwein_poly(n, delta, std::min(limit, degree));
      SignRule clipped = rule;
      clipped.m_range = {0, std::min(limit, p.trunc())};
      return verify_pattern(p, clipped).empty();
    };

    if (n <= 546) {
      row.mode = "FULL_EXACT";
      row.checked_limit = (delta == 3) ? 9 * n * n / 2 : degree;
      row.pass = exact_check(row.checked_limit);
    } else if (n < analytic_threshold) {
      row.mode = "TRUNCATED_EXACT+ANALYTIC";
      auto threshold = mstar(n, delta);
      if (!threshold) {
        row.pass = false;
      } else {
        std::int64_t limit = std::max(threshold->m_star, 3 * n);
        if (m_limit_override) limit = std::max(limit, *m_limit_override);
        limit = std::min(limit, half);
        row.checked_limit = limit;
        row.pass = exact_check(limit);
        // the analytic half: the inequality holds from m* on by construction;
        // spot-check the boundary site
        if (row.pass && limit < half) {
          const std::int64_t probe = (delta == 3 && limit % 3 == 2) ? limit + 1 : limit;
          row.pass = final_inequality(n, std::max(probe, 3 * n), delta).verdict;
        }
      }
    } else {
      row.mode = "ANALYTIC";
      // prefix [0, 3n] agrees with the infinite product, whose sign pattern
      // is known; verify the agreement exactly, then one bound evaluation
      // certifies everything from 3n to the center.
      TruncatedSeries fin = borwein_poly(n, delta, 3 * n);
      TruncatedSeries inf = general_product(borwein_infinite_spec(delta), 3 * n);
      bool prefix_ok = true;
      for (std::int64_t m = 0; m <= 3 * n; ++m)
        prefix_ok = prefix_ok && fin.coeff(m) == inf.coeff(m);
      SignRule clipped = rule;
      clipped.m_range = {0, 3 * n};
      row.checked_limit = 3 * n;
      row.pass = prefix_ok && verify_pattern(inf, clipped).empty() &&
                 final_inequality(n, 3 * n, delta).verdict;
    }
    rows[static_cast<std::size_t>(n - n_range.lo)] = row;
  });

  json entries = json::array();
  bool all_pass = true;
  for (const auto& row : rows) {
    all_pass = all_pass && row.pass;
    entries.push_back({{"n", row.n},
                       {"mode", row.mode},
                       {"checked_limit", row.checked_limit},
                       {"pass", row.pass}});
  }
  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  out << json{{"theorem", theorem}, {"entries", entries}, {"pass", all_pass}}.dump(2) << '\n';
  return all_pass ? kExitOk : kExitViolation;
}

json budget_to_json(const borwein::ErrorBudget& budget) {
  return {{"eps0", budget.eps0},
          {"eps1", budget.eps1},
          {"cos_floor", budget.cos_floor},
          {"margin", budget.margin},
          {"verdict", budget.verdict}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Borwein-type sign pattern toolkit"};
  app.require_subcommand(1);

  FamilyChoice family;
  Range n_range{1, 1};
  std::string n_text{"1"};
  std::int64_t n_value = 1;
  std::int64_t m_value = 1;
  std::optional<std::int64_t> trunc;
  std::optional<std::int64_t> m_limit;
  std::string out_path;
  std::int64_t samples = 4096;
  double r_value = 0.95;
  std::int64_t points = 8192;
  bool strict = false;
  std::uint64_t seed = 20260810;
  int theorem = 1;
  std::int64_t stride = 1;
  std::int64_t residue = 0;
  std::vector<std::int64_t> offsets;
  double mu = 0.5;
  int beta_index = 1;
  bool audit = false;

  auto add_family = [&](CLI::App* cmd) {
    cmd->add_option("--family", family.name,
                    "borwein|mod4|mod5|mod6|mod7|bbg|andrews|kane|pinf|general");
    cmd->add_option("--K", family.modulus, "modulus for the general family");
    cmd->add_option("--delta", family.delta, "power of the polynomial")->check(CLI::Range(1, 3));
  };

  auto* coeffs = app.add_subcommand("coeffs", "exact coefficient CSV for one polynomial");
  add_family(coeffs);
  coeffs->add_option("--n", n_value, "family index")->required();
  coeffs->add_option("--trunc", trunc, "truncation order (defaults to the full degree)");
  coeffs->add_option("--out", out_path, "output path (stdout when omitted)");

  auto* verify_sign = app.add_subcommand("verify-sign", "sign-pattern sweep over n");
  add_family(verify_sign);
  verify_sign->add_option("--n", n_text, "n range a..b")->required();
  verify_sign->add_option("--m-limit", m_limit, "check only coefficients up to this index");
  verify_sign->add_option("--out", out_path, "report path");

  auto* verify_theorem = app.add_subcommand("verify-theorem", "run the proof pipeline per n");
  verify_theorem->add_option("--theorem", theorem, "1, 2 or 3")->check(CLI::Range(1, 3));
  verify_theorem->add_option("--n", n_text, "n range a..b")->required();
  verify_theorem->add_option("--m-limit-override", m_limit, "raise the exact-check limit");
  verify_theorem->add_option("--out", out_path, "report path");

  auto* solve = app.add_subcommand("solve-radius", "approximate saddle point data as JSON");
  solve->add_option("--n", n_value)->required();
  solve->add_option("--m", m_value)->required();
  solve->add_option("--delta", family.delta)->check(CLI::Range(1, 3));

  auto* bounds_cmd = app.add_subcommand("bounds", "error budget at (n, m, delta)");
  bounds_cmd->add_option("--n", n_value)->required();
  bounds_cmd->add_option("--m", m_value)->required();
  bounds_cmd->add_option("--delta", family.delta)->check(CLI::Range(1, 3));
  bounds_cmd->add_flag("--audit", audit, "recompose the peak bound from the Gaussian lemma");

  auto* mstar_cmd = app.add_subcommand("mstar", "analytic thresholds m*(n) as CSV");
  mstar_cmd->add_option("--delta", family.delta)->check(CLI::Range(1, 3));
  mstar_cmd->add_option("--n", n_text, "n range a..b")->required();
  mstar_cmd->add_option("--stride", stride, "step through the n range");
  mstar_cmd->add_option("--out", out_path, "output path");

  auto* contour = app.add_subcommand("contour-check", "quadrature vs exact coefficient");
  contour->add_option("--n", n_value)->required();
  contour->add_option("--m", m_value)->required();
  contour->add_option("--delta", family.delta)->check(CLI::Range(1, 3));
  contour->add_option("--points", points, "trapezoid points");
  contour->add_option("--r", r_value, "contour radius (defaults to the saddle radius)");

  auto* certify_cmd = app.add_subcommand("certify", "certified constants and the appendix suite");
  auto* certify_beta = certify_cmd->add_subcommand("beta", "one beta_i(mu) value");
  certify_beta->add_option("--i", beta_index)->check(CLI::Range(1, 4))->required();
  certify_beta->add_option("--mu", mu)->required();
  certify_beta->add_flag("--strict", strict, "use the 10^6-point grid");
  auto* certify_suite = certify_cmd->add_subcommand("appendix-suite", "every appendix inequality");
  certify_suite->add_flag("--strict", strict, "use the 10^6-point grid");
  certify_suite->add_option("--seed", seed, "random seed (recorded in the manifest)");
  certify_suite->add_option("--out", out_path, "manifest path");

  auto* predict_cmd = app.add_subcommand("predict", "general-modulus sign predictor");
  predict_cmd->add_option("--K", family.modulus, "modulus")->required();
  predict_cmd->add_option("--offsets", offsets, "pair representatives a (paired with K-a)");
  predict_cmd->add_option("--residue", residue, "residue class of m");
  auto* predict_scan = predict_cmd->add_subcommand("scan", "tabulate all residues");

  auto* plot = app.add_subcommand("plot-circle", "log-modulus samples along the contour");
  plot->add_option("--n", n_value)->required();
  plot->add_option("--r", r_value, "radius");
  plot->add_option("--delta", family.delta)->check(CLI::Range(1, 3));
  plot->add_option("--samples", samples)->check(CLI::Range(16, 100000000));
  plot->add_option("--out", out_path, "output path");

  CLI11_PARSE(app, argc, argv);

  try {
    using namespace borwein;

    if (coeffs->parsed()) {
      TruncatedSeries s = make_family_series(family, n_value, trunc);
      std::ofstream file;
      write_csv(s, open_output(file, out_path));
      return kExitOk;
    }

    if (verify_sign->parsed()) {
      return run_verify_sign(family, parse_range(n_text), m_limit, out_path);
    }

    if (verify_theorem->parsed()) {
      return run_verify_theorem(theorem, parse_range(n_text), m_limit, out_path);
    }

    if (solve->parsed()) {
      SaddleContext ctx = SaddleContext::solve(n_value, m_value, family.delta);
      json j{{"n", ctx.n},     {"m", ctx.m},           {"delta", ctx.delta},
             {"r", ctx.r},     {"r0", ctx.r0},         {"theta0", ctx.theta0},
             {"g", ctx.g},     {"X0", ctx.x[0]},       {"X1", ctx.x[1]},
             {"X2", ctx.x[2]}, {"X3", ctx.x[3]},       {"X4", ctx.x[4]}};
      std::cout << j.dump(2) << '\n';
      return kExitOk;
    }

    if (bounds_cmd->parsed()) {
      ErrorBudget budget = final_inequality(n_value, m_value, family.delta);
      json j = budget_to_json(budget);
      if (audit) {
        const double r = solve_radius(n_value, m_value, family.delta);
        const double recomposed = 2.0 * gaussian_error_bound(fj_bounds(n_value, r, family.delta));
        j["eps0_audit"] = recomposed;
        j["audit_dominated"] = recomposed <= budget.eps0;
      }
      std::cout << j.dump(2) << '\n';
      return budget.verdict ? kExitOk : kExitViolation;
    }

    if (mstar_cmd->parsed()) {
      const Range range = parse_range(n_text);
      std::ofstream file;
      std::ostream& out = open_output(file, out_path);
      out << "n,rstar,mstar\n";
      char line[128];
      for (std::int64_t n = range.lo; n <= range.hi; n += stride) {
        auto result = mstar(n, family.delta);
        if (result) {
          std::snprintf(line, sizeof line, "%lld,%.12f,%lld\n",
                        static_cast<long long>(n), result->r_star,
                        static_cast<long long>(result->m_star));
          out << line;
        } else {
          out << n << ",,\n";  // analytic bound insufficient for this n
        }
      }
      return kExitOk;
    }

    if (contour->parsed()) {
      const double r =
          contour->count("--r") ? r_value : solve_radius(n_value, m_value, family.delta);
      auto estimate = contour_coefficient(n_value, m_value, family.delta, r, points);
      TruncatedSeries p = borwein_poly(n_value, family.delta, m_value);
      const double exact = p.coeff(m_value).get_d();
      const double rel =
          std::abs(estimate.value - exact) / std::max(1.0, std::abs(exact));
      json j{{"n", n_value},         {"m", m_value},
             {"delta", family.delta}, {"r", r},
             {"points", points},      {"estimate", estimate.value},
             {"imag_residual", estimate.imag_residual},
             {"exact", p.coeff(m_value).get_str()},
             {"relative_error", rel}};
      std::cout << j.dump(2) << '\n';
      return rel <= 1e-6 ? kExitOk : kExitViolation;
    }

    if (certify_beta->parsed()) {
      const double value = beta(beta_index, mu, strict ? kStrictGrid : kDefaultGrid);
      json j{{"i", beta_index}, {"mu", mu}, {"strict", strict}, {"beta", value}};
      std::cout << j.dump(2) << '\n';
      return kExitOk;
    }

    if (certify_suite->parsed()) {
      auto checks = appendix_suite(seed, strict ? kStrictGrid : kDefaultGrid);
      json entries = json::array();
      bool all_pass = true;
      for (const auto& check : checks) {
        all_pass = all_pass && check.pass;
        entries.push_back({{"name", check.name},
                           {"pass", check.pass},
                           {"observed", check.observed},
                           {"threshold", check.threshold}});
      }
      std::ofstream file;
      std::ostream& out = open_output(file, out_path);
      out << json{{"seed", seed}, {"strict", strict}, {"checks", entries}, {"pass", all_pass}}
                 .dump(2)
          << '\n';
      return all_pass ? kExitOk : kExitViolation;
    }

    if (predict_cmd->parsed()) {
      ProductSpec spec{family.modulus, {}, "cli"};
      if (offsets.empty()) {
        spec = mod_family_infinite_spec(family.modulus, 1);
      } else {
        for (std::int64_t a : offsets) {
          spec.factors.push_back({Rational(a), 1, kInfinite});
          if (a != family.modulus - a)
            spec.factors.push_back({Rational(family.modulus - a), 1, kInfinite});
        }
      }
      auto peaks = dominant_peaks(spec, 200, std::exp(std::log(0.5) / (200.0 * family.modulus)));
      json peaks_json = json::array();
      for (const auto& p : peaks.peaks)
        peaks_json.push_back({{"ell", p.ell},
                              {"theta", p.theta},
                              {"log_magnitude", p.log_magnitude},
                              {"dominant", p.dominant}});
      auto residue_entry = [&](std::int64_t res) {
        auto scan = sign_change_root(spec, res);
        json entry{{"residue", res},
                   {"target_at_0", general_target(spec, res, 0.0)},
                   {"target_at_1", general_target(spec, res, 1.0)}};
        if (scan.roots.empty()) {
          entry["s0"] = nullptr;
        } else {
          entry["s0"] = scan.roots[0];
          entry["fraction"] = fraction_at_root(spec, scan.roots[0]);
          entry["ambiguous"] = scan.ambiguous;
        }
        return entry;
      };
      json j{{"K", family.modulus}, {"dominant_peaks", peaks_json}};
      if (predict_scan->parsed()) {
        json table = json::array();
        for (std::int64_t res = 0; res < family.modulus; ++res)
          table.push_back(residue_entry(res));
        j["residues"] = table;
      } else {
        j.update(residue_entry(residue));
      }
      std::cout << j.dump(2) << '\n';
      return kExitOk;
    }

    if (plot->parsed()) {
      std::ofstream file;
      std::ostream& out = open_output(file, out_path);
      out << "theta,log_abs\n";
      char line[64];
      for (std::int64_t i = 0; i < samples; ++i) {
        const double theta = -M_PI + 2.0 * M_PI * static_cast<double>(i) / samples;
        const double value = log_q(n_value, family.delta, r_value, theta).real();
        std::snprintf(line, sizeof line, "%.12f,%.12f\n", theta, value);
        out << line;
      }
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  }
  return kExitUsage;
}
