#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "helmert/matrix.hpp"
#include "helmert/verifier.hpp"

namespace helmert {

// All report JSON carries this version marker; bump only on breaking schema
// changes.
inline constexpr std::string_view kSchemaVersion = "1";

struct OrderVerdict {
  std::int64_t order = 0;
  CertificationResult result;
};

// JSON payloads for the CLI. Field order is fixed, doubles are emitted at 17
// significant digits, and duration_ms is always the last line of the
// document, so byte comparison after dropping that one line is stable.
std::string render_matrix_json(const DenseMatrix& m, std::string_view command,
                               double duration_ms);
std::string render_certification_json(const std::vector<OrderVerdict>& orders,
                                      std::string_view command,
                                      double duration_ms);
std::string render_transform_json(std::int64_t n,
                                  const std::vector<double>& y,
                                  double sqrt_n_mean, double w,
                                  std::string_view command,
                                  double duration_ms);
std::string render_theorem_json(const TheoremReport& report,
                                std::string_view command, double duration_ms);
std::string render_controls_json(const NegativeControlReport& report,
                                 std::string_view command, double duration_ms);

// Plain-text renderings for the default CLI format.
std::string render_matrix_text(const DenseMatrix& m);
std::string render_matrix_symbolic_text(HelmertOrder n);
std::string render_matrix_csv(const DenseMatrix& m);
std::string render_certification_text(const std::vector<OrderVerdict>& orders);
std::string render_transform_text(const std::vector<double>& y,
                                  double sqrt_n_mean, double w);
std::string render_theorem_text(const TheoremReport& report);
std::string render_controls_text(const NegativeControlReport& report);

}  // namespace helmert
