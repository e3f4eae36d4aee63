#include "resum/io.hpp"

#include "resum/errors.hpp"

namespace resum {

std::string to_string(Criterion c) {
  switch (c) {
    case Criterion::stationary:
      return "stationary";
    case Criterion::inflection:
      return "inflection";
    case Criterion::plateau_top:
      return "plateau_top";
    case Criterion::pade_limit:
      return "pade_limit";
  }
  return "unknown";
}

namespace io {

using nlohmann::json;

std::string scalar_text(const Scalar& s, int digits) {
  if (s.is_exact()) return rat_to_string(s.rat());
  return s.flt().to_string(digits);
}

json series_json(const GenSeries& s, int digits) {
  json terms = json::array();
  const GenSeries f = s.folded();
  for (const auto& t : f.terms()) {
    terms.push_back({{"exponent", rat_to_string(t.exponent)},
                     {"coeff", t.coeff.to_string(digits)},
                     {"exact", t.coeff.is_exact()}});
  }
  return terms;
}

json roots_json(const RootSet& rs, int digits) {
  json roots = json::array();
  for (const auto& r : rs.roots) roots.push_back({r.re.to_string(digits), r.im.to_string(digits)});
  return {{"roots", roots}, {"residual_bound", rs.residual_bound.to_string(6)}};
}

json pade_json(const PadeApprox& p, int digits) {
  auto coeffs = [&](const Poly& q) {
    json out = json::array();
    for (const auto& c : q.coeffs()) out.push_back(scalar_text(c, digits));
    return out;
  };
  return {{"rho", p.rho},
          {"tau", p.tau},
          {"source_order", p.source_order},
          {"deflated", p.deflated},
          {"numer", coeffs(p.numer)},
          {"denom", coeffs(p.denom)}};
}

json estimate_json(const Estimate& e, int digits) {
  return {{"N", e.order_N},
          {"L", e.L},
          {"value", e.value.to_string(digits)},
          {"location_t", e.location_t.to_string(digits)},
          {"criterion", to_string(e.criterion)},
          {"first_deriv", e.first_deriv.to_string(6)},
          {"second_deriv", e.second_deriv.to_string(6)},
          {"pole_on_axis", e.pole_on_axis}};
}

void write_coefficients(std::ostream& out, const anharmonic::PerturbSeries& a) {
  for (std::size_t n = 0; n < a.coeffs.size(); ++n) {
    const BigRat& c = a.coeffs[n];
    out << n << '\t' << c.get_num().get_str() << '/' << c.get_den().get_str() << '\n';
  }
}

CsvWriter::CsvWriter(std::ostream& out, const std::vector<std::string>& header) : out_(out), width_(header.size()) {
  row(header);
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  if (fields.size() != width_) throw DomainError("CSV row width does not match the header");
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out_ << ',';
    out_ << fields[i];
  }
  out_ << '\n';
}

}  // namespace io
}  // namespace resum
