#include "helmert/report.hpp"

#include <string>

#include "helmert/json_writer.hpp"

namespace helmert {

namespace {

void write_config(JsonWriter& w, const VerificationConfig& cfg) {
  w.begin_object();
  w.key("n");
  w.value(cfg.n);
  w.key("trials");
  w.value(cfg.trials);
  w.key("seed");
  w.value(cfg.seed.value);
  w.key("alpha");
  w.value(cfg.alpha);
  w.key("bins");
  w.value(cfg.bins);
  if (cfg.params) {
    w.key("mu");
    w.value(cfg.params->mu());
    w.key("sigma");
    w.value(cfg.params->sigma());
  }
  w.key("workers");
  w.value(static_cast<std::int64_t>(cfg.workers));
  w.end_object();
}

void write_claim(JsonWriter& w, const ClaimResult& c) {
  w.begin_object();
  w.key("claim");
  w.value(c.claim_id);
  w.key("statement");
  w.value(c.statement);
  w.key("statistics");
  w.begin_object();
  for (const auto& [k, v] : c.statistics) {
    w.key(k);
    w.value(v);
  }
  w.end_object();
  w.key("p_values");
  w.begin_object();
  for (const auto& [k, v] : c.p_values) {
    w.key(k);
    w.value(v);
  }
  w.end_object();
  w.key("passed");
  w.value(c.passed);
  w.end_object();
}

void write_preamble(JsonWriter& w, std::string_view command) {
  w.key("schema_version");
  w.value(kSchemaVersion);
  w.key("command");
  w.value(command);
}

// duration_ms is always the final field so byte comparisons can drop exactly
// one line.
void write_duration_and_close(JsonWriter& w, double duration_ms) {
  w.key("duration_ms");
  w.value(duration_ms);
  w.end_object();
}

}  // namespace

std::string render_matrix_json(const DenseMatrix& m, std::string_view command,
                               double duration_ms) {
  JsonWriter w;
  w.begin_object();
  write_preamble(w, command);
  w.key("order");
  w.value(m.order());
  w.key("matrix");
  w.begin_array();
  for (std::int64_t i = 0; i < m.order(); ++i) {
    w.begin_array();
    for (std::int64_t j = 0; j < m.order(); ++j) {
      w.value(m.at(i, j));
    }
    w.end_array();
  }
  w.end_array();
  write_duration_and_close(w, duration_ms);
  return w.str();
}

std::string render_certification_json(const std::vector<OrderVerdict>& orders,
                                      std::string_view command,
                                      double duration_ms) {
  JsonWriter w;
  w.begin_object();
  write_preamble(w, command);
  w.key("orders");
  w.begin_array();
  bool all = true;
  for (const auto& v : orders) {
    all = all && v.result.passed;
    w.begin_object();
    w.key("order");
    w.value(v.order);
    w.key("passed");
    w.value(v.result.passed);
    w.key("pairs_checked");
    w.value(v.result.pairs_checked);
    if (v.result.first_failure) {
      const ExactGramEntry& f = *v.result.first_failure;
      w.key("failure");
      w.begin_object();
      w.key("row_i");
      w.value(f.i);
      w.key("row_j");
      w.value(f.j);
      w.key("integer_sum");
      w.value(f.integer_sum);
      w.key("expected_sum");
      w.value(v.result.expected_sum);
      w.key("shared_radicand");
      w.value(f.shared_radicand);
      w.end_object();
    }
    w.end_object();
  }
  w.end_array();
  w.key("all_passed");
  w.value(all);
  write_duration_and_close(w, duration_ms);
  return w.str();
}

std::string render_transform_json(std::int64_t n, const std::vector<double>& y,
                                  double sqrt_n_mean, double w_sum,
                                  std::string_view command,
                                  double duration_ms) {
  JsonWriter w;
  w.begin_object();
  write_preamble(w, command);
  w.key("n");
  w.value(n);
  w.key("y");
  w.begin_array();
  for (double v : y) w.value(v);
  w.end_array();
  w.key("sqrt_n_mean");
  w.value(sqrt_n_mean);
  w.key("w");
  w.value(w_sum);
  write_duration_and_close(w, duration_ms);
  return w.str();
}

std::string render_theorem_json(const TheoremReport& report,
                                std::string_view command, double duration_ms) {
  JsonWriter w;
  w.begin_object();
  write_preamble(w, command);
  w.key("config");
  write_config(w, report.config);
  w.key("exact_certification");
  w.begin_object();
  w.key("passed");
  w.value(report.exact_certification_passed);
  w.key("pairs_checked");
  w.value(report.certified_pairs);
  w.end_object();
  w.key("results");
  w.begin_array();
  for (const auto& c : report.results) write_claim(w, c);
  w.end_array();
  w.key("overall_pass");
  w.value(report.overall_pass);
  write_duration_and_close(w, duration_ms);
  return w.str();
}

std::string render_controls_json(const NegativeControlReport& report,
                                 std::string_view command,
                                 double duration_ms) {
  JsonWriter w;
  w.begin_object();
  write_preamble(w, command);
  w.key("config");
  write_config(w, report.config);
  w.key("controls");
  w.begin_array();
  for (const auto& c : report.controls) {
    w.begin_object();
    w.key("control");
    w.value(c.control);
    w.key("targeted_claim");
    w.value(c.targeted_claim);
    w.key("results");
    w.begin_array();
    for (const auto& r : c.results) write_claim(w, r);
    w.end_array();
    w.key("control_ok");
    w.value(c.control_ok);
    w.end_object();
  }
  w.end_array();
  w.key("overall_pass");
  w.value(report.overall_pass);
  write_duration_and_close(w, duration_ms);
  return w.str();
}

std::string render_matrix_text(const DenseMatrix& m) {
  std::string out;
  for (std::int64_t i = 0; i < m.order(); ++i) {
    for (std::int64_t j = 0; j < m.order(); ++j) {
      if (j) out += ' ';
      out += format_double(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string render_matrix_symbolic_text(HelmertOrder n) {
  std::string out;
  for (std::int64_t i = 1; i <= n.value(); ++i) {
    for (std::int64_t j = 1; j <= n.value(); ++j) {
      if (j > 1) out += ' ';
      out += symbolic_entry(n, i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

std::string render_matrix_csv(const DenseMatrix& m) {
  std::string out;
  for (std::int64_t i = 0; i < m.order(); ++i) {
    for (std::int64_t j = 0; j < m.order(); ++j) {
      if (j) out += ',';
      out += format_double(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string render_certification_text(
    const std::vector<OrderVerdict>& orders) {
  std::string out;
  bool all = true;
  for (const auto& v : orders) {
    all = all && v.result.passed;
    out += "order " + std::to_string(v.order) + ": ";
    if (v.result.passed) {
      out += "pass (" + std::to_string(v.result.pairs_checked) +
             " row pairs, exact integer arithmetic)\n";
    } else {
      const ExactGramEntry& f = *v.result.first_failure;
      out += "FAIL at pair (" + std::to_string(f.i) + "," +
             std::to_string(f.j) + "): integer sum " +
             std::to_string(f.integer_sum) + ", expected " +
             std::to_string(v.result.expected_sum) + "\n";
    }
  }
  out += all ? "all orders: pass\n" : "all orders: FAIL\n";
  return out;
}

std::string render_transform_text(const std::vector<double>& y,
                                  double sqrt_n_mean, double w) {
  std::string out = "y:";
  for (double v : y) {
    out += ' ';
    out += format_double(v);
  }
  out += '\n';
  out += "sqrt_n_mean: " + format_double(sqrt_n_mean) + "\n";
  out += "w: " + format_double(w) + "\n";
  return out;
}

namespace {

std::string claim_text(const ClaimResult& c) {
  std::string out = c.claim_id + ": " + (c.passed ? "pass" : "FAIL") + "\n";
  out += "  " + c.statement + "\n";
  for (const auto& [k, v] : c.statistics) {
    out += "  " + k + " = " + format_double(v) + "\n";
  }
  for (const auto& [k, v] : c.p_values) {
    out += "  p[" + k + "] = " + format_double(v) + "\n";
  }
  return out;
}

}  // namespace

std::string render_theorem_text(const TheoremReport& report) {
  std::string out = "exact certification: ";
  out += report.exact_certification_passed ? "pass" : "FAIL";
  out += " (" + std::to_string(report.certified_pairs) + " row pairs)\n";
  for (const auto& c : report.results) out += claim_text(c);
  out += std::string("overall: ") +
         (report.overall_pass ? "pass" : "FAIL") + "\n";
  return out;
}

std::string render_controls_text(const NegativeControlReport& report) {
  std::string out;
  for (const auto& c : report.controls) {
    out += c.control + " (targets " + c.targeted_claim + "): ";
    out += c.control_ok ? "ok\n" : "NOT OK\n";
    for (const auto& r : c.results) out += claim_text(r);
  }
  out += std::string("controls overall: ") +
         (report.overall_pass ? "pass" : "FAIL") + "\n";
  return out;
}

}  // namespace helmert
