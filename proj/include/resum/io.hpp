#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "resum/anharmonic.hpp"
#include "resum/estimate.hpp"
#include "resum/pade.hpp"
#include "resum/polyroot.hpp"
#include "resum/series.hpp"

namespace resum::io {

/// Exact values as "p/q" (or "p"), floats as decimal strings.
std::string scalar_text(const Scalar& s, int digits);

/// [{exponent: "p/q", coeff: decimal, exact: bool}, ...]
nlohmann::json series_json(const GenSeries& s, int digits);
/// {roots: [[re, im], ...], residual_bound}
nlohmann::json roots_json(const RootSet& rs, int digits);
/// {rho, tau, source_order, deflated, numer: [...], denom: [...]}
nlohmann::json pade_json(const PadeApprox& p, int digits);
nlohmann::json estimate_json(const Estimate& e, int digits);

/// One "n<TAB>numerator/denominator" line per order.
void write_coefficients(std::ostream& out, const anharmonic::PerturbSeries& a);

/// Minimal CSV writer: header first, then rows; fields are not quoted
/// because every field is a number or a bare word.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const std::vector<std::string>& header);
  void row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
  std::size_t width_;
};

}  // namespace resum::io
