// dini_kit: evaluate Dini-type functions, tabulate zeros, expand via zeros,
// and run the inequality checks.
//
// Exit codes: 0 success / all checks pass, 1 a check failed or a golden file
// differs, 2 usage, domain or convergence error.

#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dini/errors.hpp"
#include "dini/expansions.hpp"
#include "dini/grid_eval.hpp"
#include "dini/report.hpp"
#include "dini/suite.hpp"
#include "dini/zeros.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitFail = 1;
constexpr int kExitError = 2;
constexpr double kGoldenTol = 1e-12;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "1.5" or "lo:hi:n" (n points, both ends included)
std::vector<double> parse_x(const std::string& s, bool& is_range) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  auto num = [&](const std::string& p) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(p, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != p.size()) throw UsageError("cannot parse '" + p + "' in --x " + s);
    return v;
  };
  if (parts.size() == 1) {
    is_range = false;
    return {num(parts[0])};
  }
  if (parts.size() != 3) throw UsageError("--x takes a number or lo:hi:n");
  is_range = true;
  const double lo = num(parts[0]);
  const double hi = num(parts[1]);
  const double n = num(parts[2]);
  if (n < 1 || n != std::floor(n) || n > 1e6) throw UsageError("range point count must be 1..1e6");
  const int count = static_cast<int>(n);
  std::vector<double> xs(count);
  for (int i = 0; i < count; ++i) {
    xs[i] = (count == 1) ? lo : lo + (hi - lo) * i / (count - 1);
  }
  return xs;
}

std::string num(double v) { return dini::format_double(v); }

void require_format(const std::string& f) {
  if (f != "json" && f != "csv" && f != "text") throw UsageError("--format must be json, csv or text");
}

json jnum(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

int cmd_eval(const std::string& fn_name, double nu, const std::string& x_arg, int k,
             const std::string& format) {
  require_format(format);
  const dini::Function fn = dini::function_from_string(fn_name);
  const dini::Order order(nu);
  bool is_range = false;
  const auto xs = parse_x(x_arg, is_range);
  const auto values = dini::evaluate_grid(fn, order, xs, dini::Execution::parallel, k);

  if (format == "json") {
    auto point = [](double x, const dini::SeriesValue& v) {
      return json{{"error_estimate", jnum(v.error_estimate)},
                  {"terms_used", v.terms_used},
                  {"value", jnum(v.value)},
                  {"x", x}};
    };
    json j{{"fn", fn_name}, {"nu", nu}};
    if (fn == dini::Function::lambda_deriv) j["k"] = k;
    if (is_range) {
      json pts = json::array();
      for (std::size_t i = 0; i < xs.size(); ++i) pts.push_back(point(xs[i], values[i]));
      j["points"] = pts;
    } else {
      j.update(point(xs[0], values[0]));
    }
    std::cout << dini::canonicalize_json(j.dump()) << '\n';
  } else if (format == "csv") {
    std::cout << "x,value,terms_used,error_estimate\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      std::cout << num(xs[i]) << ',' << num(values[i].value) << ',' << values[i].terms_used << ','
                << num(values[i].error_estimate) << '\n';
    }
  } else if (!is_range) {
    std::cout << "value " << num(values[0].value) << "\nterms_used " << values[0].terms_used
              << "\nerror_estimate " << num(values[0].error_estimate) << '\n';
    if (values[0].cancellation_warning) std::cout << "warning: cancellation in the series\n";
  } else {
    std::printf("%-24s %-24s %6s %s\n", "x", "value", "terms", "error_estimate");
    for (std::size_t i = 0; i < xs.size(); ++i) {
      std::printf("%-24s %-24s %6d %s\n", num(xs[i]).c_str(), num(values[i].value).c_str(),
                  values[i].terms_used, num(values[i].error_estimate).c_str());
    }
  }
  return 0;
}

int cmd_zeros(double nu, int count, const std::string& kind, const std::string& golden,
              bool update, const std::string& format) {
  require_format(format);
  const dini::Order order(nu);
  dini::ZeroTable t;
  if (kind == "dini") {
    t = dini::dini_zero_table(order, count);
  } else if (kind == "bessel") {
    t = dini::bessel_zero_table(order, count);
  } else {
    throw UsageError("--kind must be dini or bessel");
  }

  if (format == "json") {
    std::cout << dini::zero_table_to_json(t);
  } else if (format == "csv") {
    std::cout << "n,zero\n";
    for (int i = 0; i < t.count(); ++i) std::cout << i + 1 << ',' << num(t.zeros[i]) << '\n';
  } else {
    for (int i = 0; i < t.count(); ++i) std::printf("%6d  %s\n", i + 1, num(t.zeros[i]).c_str());
    if (t.kind == dini::ZeroKind::dini) {
      std::cout << "rayleigh_residual " << num(t.rayleigh_residual) << '\n';
    }
  }

  if (golden.empty()) return 0;
  if (update || !std::filesystem::exists(golden)) {
    std::ofstream out(golden);
    if (!out) throw UsageError("cannot write golden file " + golden);
    out << dini::zero_table_to_json(t);
    std::cerr << "wrote " << golden << '\n';
    return 0;
  }
  std::ifstream in(golden);
  if (!in) throw UsageError("cannot read golden file " + golden);
  std::stringstream buf;
  buf << in.rdbuf();
  const double diff = dini::golden_mismatch(t, dini::golden_from_json(buf.str()));
  if (diff > kGoldenTol) {
    std::cerr << "golden mismatch: max relative difference " << num(diff) << '\n';
    return kExitFail;
  }
  std::cerr << "golden match: max relative difference " << num(diff) << '\n';
  return 0;
}

int cmd_verify(const std::vector<std::string>& ids, const std::string& profile,
               const std::string& format, bool serial) {
  require_format(format);
  const dini::Report r =
      dini::run_all(dini::profile_from_string(profile),
                    serial ? dini::Execution::serial : dini::Execution::parallel, ids);
  if (format == "json") {
    std::cout << dini::report_to_json(r);
  } else if (format == "csv") {
    std::cout << dini::report_to_csv(r);
  } else {
    std::cout << dini::report_to_text(r);
  }
  for (const auto& o : r.outcomes) {
    if (!o.error.empty()) return kExitError;
  }
  return r.all_pass ? 0 : kExitFail;
}

int cmd_expand(const std::string& fn, double nu, double x, double tol, const std::string& format) {
  require_format(format);
  const dini::Order order(nu);
  dini::TruncatedExpansion e;
  double reference = 0.0;
  double reference_err = 0.0;
  if (fn == "lambda_product") {
    e = dini::lambda_via_product(order, x, tol);
    const auto s = dini::lambda(order, x);
    reference = s.value;
    reference_err = s.error_estimate;
  } else if (fn == "dini_product") {
    e = dini::dini_via_product(order, x, tol);
    const auto s = dini::dini_D(order, x);
    reference = s.value;
    reference_err = s.error_estimate;
  } else if (fn == "mittag_leffler") {
    e = dini::mittag_leffler_ratio(order, x, tol);
    reference = dini::ratio_direct(order, x);
  } else if (fn == "logderiv_sum") {
    e = dini::log_deriv_lambda_sum(order, x, tol);
    const auto s = dini::evaluate(dini::Function::logderiv, order, x);
    reference = s.value;
    reference_err = s.error_estimate;
  } else {
    throw UsageError("--fn must be lambda_product, dini_product, mittag_leffler or logderiv_sum");
  }

  if (format == "json") {
    const json j{{"fn", fn},
                 {"near_zero_warning", e.near_zero_warning},
                 {"nu", nu},
                 {"reference", jnum(reference)},
                 {"reference_error", jnum(reference_err)},
                 {"tail_bound", jnum(e.tail_bound)},
                 {"tol", tol},
                 {"value", jnum(e.value)},
                 {"x", x},
                 {"zeros_used", e.zeros_used}};
    std::cout << dini::canonicalize_json(j.dump()) << '\n';
  } else if (format == "csv") {
    std::cout << "value,zeros_used,tail_bound,reference,reference_error,near_zero_warning\n"
              << num(e.value) << ',' << e.zeros_used << ',' << num(e.tail_bound) << ','
              << num(reference) << ',' << num(reference_err) << ','
              << (e.near_zero_warning ? "true" : "false") << '\n';
  } else {
    std::printf("%-12s %-24s %s\n", "", "expansion", "series");
    std::printf("%-12s %-24s %s\n", "value", num(e.value).c_str(), num(reference).c_str());
    std::printf("%-12s %-24s %s\n", "bound", num(e.tail_bound).c_str(), num(reference_err).c_str());
    std::printf("%-12s %d\n", "zeros_used", e.zeros_used);
    std::printf("%-12s %s\n", "difference", num(e.value - reference).c_str());
    if (e.near_zero_warning) std::cout << "warning: |x| is within 1e-8 of a zero\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dini and modified Dini functions: values, zeros, expansions, inequality checks"};
  app.set_version_flag("--version", std::string(DINI_KIT_VERSION));
  app.require_subcommand(1);

  std::string format = "text";
  std::string fn = "lambda";
  double nu = 0.0;
  std::string x_arg;
  double x = 0.0;
  int k = 1;
  int count = 1;
  std::string kind = "dini";
  std::string golden;
  bool update = false;
  std::vector<std::string> checks;
  std::string profile = "full";
  bool serial = false;
  double tol = dini::kDefaultExpansionTol;

  auto* eval = app.add_subcommand("eval", "evaluate a function at x or over lo:hi:n");
  eval->add_option("--fn", fn, "lambda, dini_D, norm_I, norm_J, xi, d, lambda_deriv, logderiv")
      ->capture_default_str();
  eval->add_option("--nu", nu, "order nu > -1")->required();
  eval->add_option("--x", x_arg, "x or lo:hi:n")->required();
  eval->add_option("--k", k, "derivative order for lambda_deriv")->capture_default_str();
  eval->add_option("--format", format, "json, csv or text")->capture_default_str();

  auto* zeros = app.add_subcommand("zeros", "tabulate zeros of d_nu (or J_nu)");
  zeros->add_option("--nu", nu, "order nu > -1")->required();
  zeros->add_option("--count,-n", count, "number of zeros")->required();
  zeros->add_option("--kind", kind, "dini or bessel")->capture_default_str();
  zeros->add_option("--golden", golden, "golden JSON file: compared if present, else written");
  zeros->add_flag("--update", update, "overwrite the golden file");
  zeros->add_option("--format", format, "json, csv or text")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run inequality checks");
  verify->add_option("--check", checks, "check id (repeatable); default all");
  verify->add_option("--profile", profile, "quick or full")->capture_default_str();
  verify->add_flag("--serial", serial, "run checks on one thread");
  verify->add_option("--format", format, "json, csv or text")->capture_default_str();

  auto* expand = app.add_subcommand("expand", "evaluate a zero-based expansion next to its series");
  expand->add_option("--fn", fn, "lambda_product, dini_product, mittag_leffler, logderiv_sum")
      ->required();
  expand->add_option("--nu", nu, "order nu > -1")->required();
  expand->add_option("--x", x, "argument")->required();
  expand->add_option("--tol", tol, "target accuracy (>= 1e-12)")->capture_default_str();
  expand->add_option("--format", format, "json, csv or text")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  try {
    if (eval->parsed()) return cmd_eval(fn, nu, x_arg, k, format);
    if (zeros->parsed()) return cmd_zeros(nu, count, kind, golden, update, format);
    if (verify->parsed()) return cmd_verify(checks, profile, format, serial);
    if (expand->parsed()) return cmd_expand(fn, nu, x, tol, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
