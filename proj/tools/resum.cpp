// Batch front end: one subcommand per table or figure dataset.

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

#include "resum/anharmonic.hpp"
#include "resum/errors.hpp"
#include "resum/io.hpp"
#include "resum/laplace.hpp"
#include "resum/pade.hpp"

using namespace resum;
using nlohmann::json;

namespace {

constexpr int kConfigError = 2;
constexpr int kConvergenceError = 3;
constexpr int kNoCandidate = 4;

struct RunConfig {
  std::string orders;
  std::string L;
  std::string k = "1..5";
  std::string scheme = "binomial";
  std::string theta = "exact";
  std::string precision = "auto";
  int digits = 20;
  std::string format = "csv";
  std::string out = "-";
  bool guard = false;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "10,20,30", "10..50" or "10..50:5", in the order given.
std::vector<long> parse_list(const std::string& text, const std::string& what) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const long v = std::stol(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ConfigError("bad " + what + " entry '" + s + "'");
    }
  };
  while (std::getline(ss, item, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(number(item));
      continue;
    }
    std::string hi = item.substr(dots + 2);
    long step = 1;
    if (const auto colon = hi.find(':'); colon != std::string::npos) {
      step = number(hi.substr(colon + 1));
      hi = hi.substr(0, colon);
    }
    const long a = number(item.substr(0, dots));
    const long b = number(hi);
    if (step <= 0 || b < a) throw ConfigError("bad " + what + " range '" + item + "'");
    for (long v = a; v <= b; v += step) out.push_back(v);
  }
  if (out.empty()) throw ConfigError("empty " + what + " list");
  return out;
}

BigFloat::prec_t parse_precision(const RunConfig& cfg) {
  if (cfg.precision == "auto") return 0;
  try {
    const long bits = std::stol(cfg.precision);
    if (bits < 64) throw ConfigError("--precision-bits must be at least 64");
    return bits;
  } catch (const std::invalid_argument&) {
    throw ConfigError("--precision-bits must be an integer or 'auto'");
  }
}

/// Precision actually used at order N.
BigFloat::prec_t bits_for(const RunConfig& cfg, long N) {
  const auto p = parse_precision(cfg);
  return p > 0 ? p : PrecisionPolicy::from_env().working_bits(N);
}

/// Runs fn at the working precision; with --guard also at 1.5x and checks
/// that the reported digits agree.
BigFloat guarded(const RunConfig& cfg, long N, const std::function<BigFloat(BigFloat::prec_t)>& fn) {
  const auto prec = bits_for(cfg, N);
  BigFloat v = fn(prec);
  if (cfg.guard) {
    const BigFloat w = fn(prec * 3 / 2);
    if (v.to_string(cfg.digits) != w.with_precision(prec).to_string(cfg.digits)) {
      throw ConvergenceError("guard check failed at N=" + std::to_string(N) + ": " + v.to_string(cfg.digits) +
                             " vs " + w.to_string(cfg.digits));
    }
  }
  return v;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw ConfigError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void emit_json(const RunConfig& cfg, const json& j) {
  Output out(cfg.out);
  out.stream() << j.dump(2) << '\n';
}

std::string dec(const BigFloat& x, int digits) { return x.to_string(digits); }

// --- subcommands -----------------------------------------------------------

void laplace_table1(const RunConfig& cfg) {
  const auto orders = parse_list(cfg.orders.empty() ? "10,20,30,40" : cfg.orders, "--orders");
  const auto Ls = parse_list(cfg.L.empty() ? "0..5" : cfg.L, "--L");
  json rows = json::array();
  std::vector<std::vector<std::string>> csv;
  for (long N : orders) {
    for (long L : Ls) {
      Estimate e;
      const BigFloat v = guarded(cfg, N, [&](BigFloat::prec_t p) {
        e = laplace::pms_estimate(N, L, p);
        return e.value;
      });
      rows.push_back(io::estimate_json(e, cfg.digits));
      csv.push_back({std::to_string(N), std::to_string(L), dec(v, cfg.digits), dec(e.location_t, cfg.digits)});
    }
  }
  if (cfg.format == "json") return emit_json(cfg, rows);
  Output out(cfg.out);
  io::CsvWriter w(out.stream(), {"N", "L", "value", "t_star"});
  for (const auto& r : csv) w.row(r);
}

void laplace_pade(const RunConfig& cfg) {
  const auto orders = parse_list(cfg.orders.empty() ? "10,20,30,40,50" : cfg.orders, "--orders");
  const auto Ls = parse_list(cfg.L.empty() ? "0" : cfg.L, "--L");
  json rows = json::array();
  std::vector<std::vector<std::string>> csv;
  for (long N : orders) {
    if (N % 2 != 0) throw ConfigError("laplace-pade needs even orders");
    const auto prec = bits_for(cfg, N);
    PadeOptions opts;
    opts.prec = prec;
    for (long L : Ls) {
      ReductionOp op;
      for (long p = 1; p <= L; ++p) op.exponents.emplace_back(p);
      const Scalar f_lim = limit_at_infinity(pade(apply_reduction(op, laplace::asymptotic_coeffs(N)), N / 2, N / 2, opts));
      const Scalar fb_lim = limit_at_infinity(pade(laplace::psi(N, L), N / 2, N / 2, opts));
      const std::string f_dec = f_lim.to_float(prec).to_string(cfg.digits);
      const std::string fb_dec = fb_lim.to_float(prec).to_string(cfg.digits);
      rows.push_back({{"N", N},
                      {"L", L},
                      {"f_limit", f_dec},
                      {"f_limit_exact", io::scalar_text(f_lim, cfg.digits)},
                      {"fbar_limit", fb_dec},
                      {"fbar_limit_exact", io::scalar_text(fb_lim, cfg.digits)}});
      csv.push_back({std::to_string(N), std::to_string(L), f_dec, io::scalar_text(f_lim, cfg.digits), fb_dec,
                     io::scalar_text(fb_lim, cfg.digits)});
    }
  }
  if (cfg.format == "json") return emit_json(cfg, rows);
  Output out(cfg.out);
  io::CsvWriter w(out.stream(), {"N", "L", "f_limit", "f_limit_exact", "fbar_limit", "fbar_limit_exact"});
  for (const auto& r : csv) w.row(r);
}

void laplace_cmax(const RunConfig& cfg) {
  const auto prec = bits_for(cfg, 0);
  const BigFloat c = laplace::c_max(std::max<BigFloat::prec_t>(prec, 128));
  std::vector<std::vector<std::string>> csv{{"c_max", "", "", dec(c, cfg.digits)}};
  json j = {{"c_max", dec(c, cfg.digits)}, {"c_star", json::array()}};
  if (!cfg.orders.empty()) {
    const auto orders = parse_list(cfg.orders, "--orders");
    const auto Ls = parse_list(cfg.L.empty() ? "0" : cfg.L, "--L");
    for (long L : Ls) {
      for (long N : orders) {
        const BigFloat cs = guarded(cfg, N, [&](BigFloat::prec_t p) { return laplace::cstar_sequence(L, {N}, p)[0]; });
        csv.push_back({"c_star", std::to_string(L), std::to_string(N), dec(cs, cfg.digits)});
        j["c_star"].push_back({{"L", L}, {"N", N}, {"value", dec(cs, cfg.digits)}});
      }
    }
  }
  if (cfg.format == "json") return emit_json(cfg, j);
  Output out(cfg.out);
  io::CsvWriter w(out.stream(), {"quantity", "L", "N", "value"});
  for (const auto& r : csv) w.row(r);
}

void laplace_zeropole(const RunConfig& cfg) {
  const auto orders = parse_list(cfg.orders.empty() ? "30" : cfg.orders, "--orders");
  const auto Ls = parse_list(cfg.L.empty() ? "0,1" : cfg.L, "--L");
  json rows = json::array();
  std::vector<std::vector<std::string>> csv;
  for (long N : orders) {
    const auto prec = bits_for(cfg, N);
    for (long L : Ls) {
      PadeOptions opts;
      opts.prec = prec;
      const PadeApprox p = pade(laplace::psi(N, L), N / 2, N / 2, opts);
      const auto [zeros, poles] = zero_pole_map(p, prec);
      const long pairs = cancelling_pairs(zeros, poles, 0.03);
      rows.push_back({{"N", N},
                      {"L", L},
                      {"zeros", io::roots_json(zeros, cfg.digits)},
                      {"poles", io::roots_json(poles, cfg.digits)},
                      {"cancelling_pairs", pairs}});
      for (const auto& r : zeros.roots)
        csv.push_back({std::to_string(N), std::to_string(L), "zero", dec(r.re, cfg.digits), dec(r.im, cfg.digits)});
      for (const auto& r : poles.roots)
        csv.push_back({std::to_string(N), std::to_string(L), "pole", dec(r.re, cfg.digits), dec(r.im, cfg.digits)});
    }
  }
  if (cfg.format == "json") return emit_json(cfg, rows);
  Output out(cfg.out);
  io::CsvWriter w(out.stream(), {"N", "L", "kind", "re", "im"});
  for (const auto& r : csv) w.row(r);
}

void aho_coeffs(const RunConfig& cfg) {
  const auto orders = parse_list(cfg.orders.empty() ? "300" : cfg.orders, "--orders");
  const long N = *std::max_element(orders.begin(), orders.end());
  const auto a = anharmonic::bender_wu(N);
  Output out(cfg.out);
  if (cfg.format == "json") {
    json j = json::array();
    for (const auto& c : a.coeffs) j.push_back(rat_to_string(c));
    out.stream() << j.dump(2) << '\n';
    return;
  }
  io::write_coefficients(out.stream(), a);
}

void aho_energy(const RunConfig& cfg) {
  const auto orders = parse_list(cfg.orders.empty() ? "10,15,20,25,50" : cfg.orders, "--orders");
  const auto scheme = anharmonic::parse_scheme(cfg.scheme);
  json rows = json::array();
  std::vector<std::vector<std::string>> csv;
  for (long N : orders) {
    Estimate e;
    const BigFloat v = guarded(cfg, N, [&](BigFloat::prec_t p) {
      e = anharmonic::estimate_E(N, scheme, p);
      return e.value;
    });
    const BigFloat err = abs(v - anharmonic::reference_E(v.precision()));
    json j = io::estimate_json(e, cfg.digits);
    j["scheme"] = anharmonic::to_string(scheme);
    j["abs_error"] = err.to_string(4);
    rows.push_back(j);
    csv.push_back({std::to_string(N), anharmonic::to_string(scheme), dec(v, cfg.digits), dec(e.location_t, cfg.digits),
                   to_string(e.criterion), err.to_string(4)});
  }
  if (cfg.format == "json") return emit_json(cfg, rows);
  Output out(cfg.out);
  io::CsvWriter w(out.stream(), {"N", "scheme", "value", "t_star", "criterion", "abs_error"});
  for (const auto& r : csv) w.row(r);
}

void aho_alpha(const RunConfig& cfg) {
  const auto orders = parse_list(cfg.orders.empty() ? "250" : cfg.orders, "--orders");
  const auto ks = parse_list(cfg.k, "--k");
  json rows = json::array();
  std::vector<std::vector<std::string>> csv;
  for (long N : orders) {
    for (long k : ks) {
      Estimate e;
      const BigFloat v = guarded(cfg, N, [&](BigFloat::prec_t p) {
        e = anharmonic::estimate_alpha(N, k, p);
        return e.value;
      });
      json j = io::estimate_json(e, cfg.digits);
      j["k"] = k;
      rows.push_back(j);
      csv.push_back({std::to_string(N), std::to_string(k), dec(v, cfg.digits), dec(e.location_t, cfg.digits),
                     to_string(e.criterion)});
    }
  }
  if (cfg.format == "json") return emit_json(cfg, rows);
  Output out(cfg.out);
  io::CsvWriter w(out.stream(), {"N", "k", "value", "t_star", "criterion"});
  for (const auto& r : csv) w.row(r);
}

void aho_lambda(const RunConfig& cfg) {
  const auto orders = parse_list(cfg.orders.empty() ? "60" : cfg.orders, "--orders");
  const auto Ls = parse_list(cfg.L.empty() ? "1" : cfg.L, "--L");
  if (cfg.theta != "exact" && cfg.theta != "estimated") throw ConfigError("--theta must be exact or estimated");
  json rows = json::array();
  std::vector<std::vector<std::string>> csv;
  for (long N : orders) {
    const auto prec = bits_for(cfg, N);
    std::string theta1 = "";
    for (long L : Ls) {
      if (L < 0) throw ConfigError("--L must be >= 0");
      std::vector<Scalar> thetas;
      for (const auto& th : anharmonic::theta_ladder(L)) thetas.emplace_back(th);
      if (cfg.theta == "estimated" && L >= 1) {
        const Estimate t1 = anharmonic::estimate_theta1(N, prec);
        thetas[0] = Scalar(t1.value);
        theta1 = dec(t1.value, cfg.digits);
      }
      Estimate e;
      const BigFloat v = guarded(cfg, N, [&](BigFloat::prec_t p) {
        e = anharmonic::estimate_E_lambda(N, thetas, p);
        return e.value;
      });
      const BigFloat err = abs(v - anharmonic::reference_E(v.precision()));
      json j = io::estimate_json(e, cfg.digits);
      j["theta_mode"] = cfg.theta;
      j["theta1"] = theta1;
      j["abs_error"] = err.to_string(4);
      rows.push_back(j);
      csv.push_back({std::to_string(N), std::to_string(L), cfg.theta, theta1, dec(v, cfg.digits),
                     dec(e.location_t, cfg.digits), to_string(e.criterion), e.pole_on_axis ? "1" : "0",
                     err.to_string(4)});
    }
  }
  if (cfg.format == "json") return emit_json(cfg, rows);
  Output out(cfg.out);
  io::CsvWriter w(out.stream(),
                  {"N", "L", "theta_mode", "theta1", "value", "g_star", "criterion", "pole_on_axis", "abs_error"});
  for (const auto& r : csv) w.row(r);
}

void aho_zeromap(const RunConfig& cfg) {
  const auto orders = parse_list(cfg.orders.empty() ? "50" : cfg.orders, "--orders");
  json rows = json::array();
  std::vector<std::vector<std::string>> csv;
  for (long N : orders) {
    const auto prec = bits_for(cfg, N);
    const auto bin = anharmonic::grid_polynomials(anharmonic::ebar(N, prec));
    const auto lde = anharmonic::grid_polynomials(anharmonic::elde(N));
    const std::vector<std::pair<std::string, const Poly*>> sets{
        {"binomial_d1", &bin.p1}, {"binomial_d2", &bin.p2}, {"lde_d1", &lde.p1}};
    json j = {{"N", N}, {"variable", "z = t^(3/2)"}};
    for (const auto& [name, poly] : sets) {
      const RootSet rs = all_roots(*poly, prec);
      j[name] = io::roots_json(rs, cfg.digits);
      for (const auto& r : rs.roots) csv.push_back({std::to_string(N), name, dec(r.re, cfg.digits), dec(r.im, cfg.digits)});
    }
    rows.push_back(j);
  }
  if (cfg.format == "json") return emit_json(cfg, rows);
  Output out(cfg.out);
  io::CsvWriter w(out.stream(), {"N", "set", "re", "im"});
  for (const auto& r : csv) w.row(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resummation of divergent series by the generalized binomial transform"};
  app.require_subcommand(1);
  RunConfig cfg;

  struct Command {
    const char* name;
    const char* help;
    void (*run)(const RunConfig&);
  };
  const std::vector<Command> commands{
      {"laplace-table1", "PMS estimates of the reduced transformed Laplace series", laplace_table1},
      {"laplace-pade", "diagonal Pade limits of f_N(M) and fbar_N(t)", laplace_pade},
      {"laplace-cmax", "the limiting constant c_max and N t* sequences", laplace_cmax},
      {"laplace-zeropole", "zeros and poles of diagonal Pade approximants", laplace_zeropole},
      {"aho-coeffs", "exact anharmonic oscillator perturbation coefficients", aho_coeffs},
      {"aho-energy", "strong-coupling constant estimates per order", aho_energy},
      {"aho-alpha", "strong-coupling expansion coefficients alpha_k", aho_alpha},
      {"aho-lambda", "coupling-side transform with reduced corrections", aho_lambda},
      {"aho-zeromap", "complex zeros of the transformed energy derivatives", aho_zeromap},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--orders", cfg.orders, "orders: list '10,20' or range '10..50[:step]'");
    sub->add_option("--L", cfg.L, "reduction counts, same list syntax");
    sub->add_option("--scheme", cfg.scheme, "binomial or lde")->check(CLI::IsMember({"binomial", "lde"}));
    sub->add_option("--k", cfg.k, "alpha_k indices, same list syntax");
    sub->add_option("--theta", cfg.theta, "exact or estimated theta_1")->check(CLI::IsMember({"exact", "estimated"}));
    sub->add_option("--precision-bits", cfg.precision, "working precision in bits, or auto");
    sub->add_option("--digits", cfg.digits, "significant digits in the output")->check(CLI::Range(1, 10000));
    sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out, "output path, '-' for stdout");
    sub->add_flag("--guard", cfg.guard, "recompute at 1.5x precision and require the digits to agree");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    for (const auto& c : commands) {
      if (app.got_subcommand(c.name)) c.run(cfg);
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what() << '\n';
    return kConvergenceError;
  } catch (const NoCandidate& e) {
    std::cerr << "no estimate: " << e.what() << '\n';
    return kNoCandidate;
  } catch (const NoStationaryPoint& e) {
    std::cerr << "no estimate: " << e.what() << '\n';
    return kNoCandidate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
