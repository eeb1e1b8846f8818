#include <chrono>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "helmert/gram_schmidt.hpp"
#include "helmert/matrix.hpp"
#include "helmert/report.hpp"
#include "helmert/verifier.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::string join_args(int argc, char** argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) out += ' ';
    out += argv[i];
  }
  return out;
}

std::int64_t parse_int(std::string_view s, const char* what) {
  std::int64_t v = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument(std::string("cannot parse ") + what + ": '" +
                                std::string(s) + "'");
  }
  return v;
}

// "lo..hi" or a single order.
std::pair<std::int64_t, std::int64_t> parse_order_range(
    const std::string& spec) {
  const auto dots = spec.find("..");
  if (dots == std::string::npos) {
    const std::int64_t n = parse_int(spec, "order");
    return {n, n};
  }
  const std::int64_t lo =
      parse_int(std::string_view(spec).substr(0, dots), "range start");
  const std::int64_t hi =
      parse_int(std::string_view(spec).substr(dots + 2), "range end");
  if (lo > hi) {
    throw std::invalid_argument("empty order range: " + spec);
  }
  return {lo, hi};
}

std::vector<double> read_value_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open input file: " + path);
  }
  std::vector<double> values;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      const double v = std::stod(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      values.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse value '" + token + "' in " +
                                  path);
    }
  }
  return values;
}

int run_matrix(std::int64_t n, const std::string& format, bool symbolic,
               const std::string& echo) {
  const auto start = Clock::now();
  const helmert::HelmertOrder order(n);
  if (symbolic && format != "text") {
    throw std::invalid_argument("--symbolic only applies to the text format");
  }
  if (format == "text" && symbolic) {
    std::cout << helmert::render_matrix_symbolic_text(order);
    return 0;
  }
  const helmert::DenseMatrix m = helmert::build_dense(order);
  if (format == "text") {
    std::cout << helmert::render_matrix_text(m);
  } else if (format == "csv") {
    std::cout << helmert::render_matrix_csv(m);
  } else {
    std::cout << helmert::render_matrix_json(m, echo, elapsed_ms(start));
  }
  return 0;
}

int run_check_exact(const std::string& range_spec, const std::string& format,
                    const std::string& echo) {
  const auto start = Clock::now();
  const auto [lo, hi] = parse_order_range(range_spec);
  std::vector<helmert::OrderVerdict> verdicts;
  verdicts.reserve(static_cast<std::size_t>(hi - lo + 1));
  bool all = true;
  for (std::int64_t n = lo; n <= hi; ++n) {
    const helmert::HelmertOrder order(n);
    helmert::OrderVerdict v;
    v.order = n;
    v.result = helmert::verify_orthogonality_exact(order);
    all = all && v.result.passed;
    verdicts.push_back(std::move(v));
  }
  if (format == "json") {
    std::cout << helmert::render_certification_json(verdicts, echo,
                                                    elapsed_ms(start));
  } else {
    std::cout << helmert::render_certification_text(verdicts);
  }
  return all ? 0 : 1;
}

int run_transform(std::int64_t n, const std::vector<double>& inline_values,
                  const std::string& input_path, const std::string& format,
                  const std::string& echo) {
  const auto start = Clock::now();
  const helmert::HelmertOrder order(n);
  if (!inline_values.empty() && !input_path.empty()) {
    throw std::invalid_argument(
        "give the vector inline or with --input, not both");
  }
  std::vector<double> z;
  if (!input_path.empty()) {
    z = read_value_file(input_path);
  } else {
    z = inline_values;
  }
  if (static_cast<std::int64_t>(z.size()) != n) {
    throw std::invalid_argument("expected " + std::to_string(n) +
                                " values, got " + std::to_string(z.size()));
  }
  const std::vector<double> y = helmert::apply(order, z);
  // The derived pair comes from y itself: last coordinate is the scaled
  // mean, the rest carry the deviation energy.
  const double sqrt_n_mean = y[static_cast<std::size_t>(n - 1)];
  double w = 0.0;
  for (std::int64_t i = 0; i + 1 < n; ++i) {
    w += y[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
  }
  if (format == "json") {
    std::cout << helmert::render_transform_json(n, y, sqrt_n_mean, w, echo,
                                                elapsed_ms(start));
  } else {
    std::cout << helmert::render_transform_text(y, sqrt_n_mean, w);
  }
  return 0;
}

struct VerifyArgs {
  std::int64_t n = 5;
  std::int64_t trials = 50000;
  std::uint64_t seed = 42;
  double alpha = 0.001;
  std::int64_t bins = 4;
  double mu = 0.0;
  double sigma = 1.0;
  bool has_params = false;
  int workers = 0;
  std::vector<std::string> claims;
  bool negative_controls = false;
  std::string format = "text";
};

int run_verify(const VerifyArgs& args, const std::string& echo) {
  const auto start = Clock::now();
  helmert::VerificationConfig cfg;
  cfg.n = args.n;
  cfg.trials = args.trials;
  cfg.seed = helmert::Seed{args.seed};
  cfg.alpha = args.alpha;
  cfg.bins = args.bins;
  if (args.has_params) {
    cfg.params = helmert::NormalParams(args.mu, args.sigma);
  }
  cfg.workers =
      args.workers > 0
          ? args.workers
          : static_cast<int>(
                std::max(1u, std::thread::hardware_concurrency()));
  if (args.negative_controls) {
    if (!args.claims.empty()) {
      throw std::invalid_argument(
          "--claims cannot be combined with --negative-controls (controls "
          "always run the three standardized claims)");
    }
    const helmert::NegativeControlReport rep =
        helmert::run_negative_controls(cfg);
    if (args.format == "json") {
      std::cout << helmert::render_controls_json(rep, echo, elapsed_ms(start));
    } else {
      std::cout << helmert::render_controls_text(rep);
    }
    return rep.overall_pass ? 0 : 1;
  }
  const helmert::TheoremReport rep =
      args.claims.empty() ? helmert::run_all(cfg)
                          : helmert::run_selected(cfg, args.claims);
  if (args.format == "json") {
    std::cout << helmert::render_theorem_json(rep, echo, elapsed_ms(start));
  } else {
    std::cout << helmert::render_theorem_text(rep);
  }
  return rep.overall_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "construct, exactly certify, and statistically verify the Helmert "
      "orthogonal transform"};
  app.require_subcommand(1);
  const std::string echo = join_args(argc, argv);
  int exit_code = 0;

  auto* matrix_cmd =
      app.add_subcommand("matrix", "print the order-n orthogonal matrix");
  std::int64_t m_n = 0;
  std::string m_format = "text";
  bool m_symbolic = false;
  matrix_cmd->add_option("n", m_n, "matrix order (>= 2)")->required();
  matrix_cmd->add_option("--format", m_format, "text, csv, or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  matrix_cmd->add_flag("--symbolic", m_symbolic,
                       "print exact entries c/sqrt(r) (text only)");
  matrix_cmd->callback(
      [&] { exit_code = run_matrix(m_n, m_format, m_symbolic, echo); });

  auto* check_cmd = app.add_subcommand(
      "check-exact", "certify orthogonality in exact integer arithmetic");
  std::string c_range;
  std::string c_format = "text";
  check_cmd->add_option("orders", c_range, "order n or inclusive range lo..hi")
      ->required();
  check_cmd->add_option("--format", c_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  check_cmd->callback(
      [&] { exit_code = run_check_exact(c_range, c_format, echo); });

  auto* transform_cmd = app.add_subcommand(
      "transform", "apply the order-n transform to a vector");
  std::int64_t t_n = 0;
  std::vector<double> t_values;
  std::string t_input;
  std::string t_format = "text";
  transform_cmd->add_option("n", t_n, "matrix order (>= 2)")->required();
  transform_cmd->add_option("values", t_values, "the n vector entries");
  transform_cmd->add_option("--input", t_input,
                            "file of whitespace-separated values");
  transform_cmd->add_option("--format", t_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  transform_cmd->callback([&] {
    exit_code = run_transform(t_n, t_values, t_input, t_format, echo);
  });

  auto* verify_cmd = app.add_subcommand(
      "verify", "Monte Carlo verification of the distributional claims");
  VerifyArgs v;
  verify_cmd->add_option("--n", v.n, "per-trial sample size (default 5)");
  verify_cmd->add_option("--trials", v.trials,
                         "Monte Carlo trials (default 50000)");
  verify_cmd->add_option("--seed", v.seed, "master RNG seed (default 42)");
  verify_cmd->add_option("--alpha", v.alpha,
                         "rejection level for p-value gates (default 0.001)");
  verify_cmd->add_option("--bins", v.bins,
                         "contingency table bins per margin (default 4)");
  auto* mu_opt = verify_cmd->add_option("--mu", v.mu, "general-mode mean");
  auto* sigma_opt =
      verify_cmd->add_option("--sigma", v.sigma, "general-mode sigma");
  mu_opt->needs(sigma_opt);
  sigma_opt->needs(mu_opt);
  verify_cmd->add_option("--workers", v.workers,
                         "worker threads (default: hardware concurrency)");
  verify_cmd->add_option("--claims", v.claims,
                         "comma-separated subset of T2.1,T2.2,T2.3,T1.1,"
                         "T1.3,coords")
      ->delimiter(',');
  verify_cmd->add_flag("--negative-controls", v.negative_controls,
                       "run the three deliberately-broken pipelines instead");
  verify_cmd->add_option("--format", v.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify_cmd->callback([&] {
    v.has_params = mu_opt->count() > 0 || sigma_opt->count() > 0;
    exit_code = run_verify(v, echo);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
