#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <future>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lpopnorm/certify.hpp"
#include "lpopnorm/core.hpp"
#include "lpopnorm/operators.hpp"
#include "lpopnorm/qcalc.hpp"
#include "lpopnorm/serialize.hpp"

namespace lpopnorm::cli {
namespace {

using nlohmann::json;

enum class Format { text, json, csv };

// Flags shared by every subcommand that needs a kernel.
struct KernelFlags {
  std::optional<double> q;
  std::vector<double> coeffs;
  std::string kernel_json;
};

struct Options {
  Format format = Format::text;
  std::uint64_t seed = 42;
  KernelFlags kernel;

  double p = 2.0;
  double q = 0.5;
  double alpha = 0.0;
  std::vector<double> p_list{2.0};
  std::vector<double> q_list{0.5};
  std::vector<double> alpha_list{0.0};
  std::vector<std::string> f_list{"1", "t", "t2", "random"};

  std::size_t n = 1000;
  std::vector<std::size_t> n_list;
  int trials = 1000;
  double m = 0.0;
  std::optional<std::size_t> k;
  std::string tail = "zero";

  double rel_tol = ToleranceConfig{}.rel_tol;
  int max_iter = ToleranceConfig{}.max_iter;

  ToleranceConfig tolerances() const {
    ToleranceConfig cfg;
    cfg.rel_tol = rel_tol;
    cfg.max_iter = max_iter;
    cfg.validate();
    return cfg;
  }
};

std::string num(double v) { return fmt::format("{:.17g}", v); }
std::string short_num(double v) { return fmt::format("{:.12g}", v); }

void text_row(std::ostream& out, std::string_view label, std::string_view value) {
  fmt::print(out, "{:<28}{}\n", label, value);
}

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_st>(err);
  auto logger = std::make_shared<spdlog::logger>("lpopnorm", sink);
  logger->set_pattern("[%l] %v");
  logger->set_level(spdlog::level::off);
  if (const char* level = std::getenv("LPOPNORM_LOG")) {
    logger->set_level(spdlog::level::from_str(level));
  }
  return logger;
}

ToeplitzKernel resolve_kernel(const KernelFlags& flags) {
  const int given = static_cast<int>(flags.q.has_value()) + static_cast<int>(!flags.coeffs.empty()) +
                    static_cast<int>(!flags.kernel_json.empty());
  if (given != 1) {
    throw ArgumentError("give exactly one of --q, --coeffs, --kernel");
  }
  if (flags.q) {
    return q_hardy_kernel(QParam(*flags.q));
  }
  if (!flags.coeffs.empty()) {
    return ToeplitzKernel::explicit_coeffs(flags.coeffs);
  }
  try {
    return kernel_from_json(json::parse(flags.kernel_json));
  } catch (const json::parse_error& e) {
    throw ArgumentError(fmt::format("--kernel is not valid JSON: {}", e.what()));
  }
}

std::string describe(const ToeplitzKernel& k) {
  if (k.is_geometric()) {
    const auto& g = k.geometric_params();
    return fmt::format("geometric ratio={} scale={}", short_num(g.ratio), short_num(g.scale));
  }
  std::vector<std::string> parts;
  for (double a : k.coeffs()) {
    parts.push_back(short_num(a));
  }
  return fmt::format("explicit ({})", fmt::join(parts, ", "));
}

// Entries uniform on [0, 1), support length uniform on 1..50. Bits are drawn
// straight from mt19937_64 so the stream is identical on every platform.
class SequenceGenerator {
public:
  explicit SequenceGenerator(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::size_t support_length() { return 1 + static_cast<std::size_t>(engine_() % 50); }

  TruncatedSequence next() {
    std::vector<double> v(support_length());
    for (double& x : v) {
      x = uniform();
    }
    return TruncatedSequence(std::move(v));
  }

private:
  std::mt19937_64 engine_;
};

json sequence_json(const TruncatedSequence& x) {
  return std::vector<double>(x.values().begin(), x.values().end());
}

// ---------------------------------------------------------------- constants

int cmd_constants(const Options& o, std::ostream& out) {
  const Exponent p(o.p);
  const QParam q(o.q);
  const qcalc::HardyParams params(p, o.alpha, q);

  const double hardy = std::pow(p.conj(), p.p());
  const double q_hardy = std::pow(1.0 - q.value(), -p.p());
  const double bracket = qcalc::q_bracket(params.bracket_argument(), q);
  const double weighted = std::pow(bracket, -p.p());
  const double S = 1.0 / (1.0 - q.value());

  switch (o.format) {
    case Format::json:
      out << json{{"schema_version", kSchemaVersion},
                  {"p", p.p()},
                  {"q", q.value()},
                  {"alpha", o.alpha},
                  {"hardy_constant", hardy},
                  {"q_hardy_constant", q_hardy},
                  {"q_bracket", bracket},
                  {"weighted_constant", weighted},
                  {"S", S}}
                 .dump(2)
          << '\n';
      break;
    case Format::csv:
      out << "# lpopnorm constants v1\n";
      out << "p,q,alpha,hardy_constant,q_hardy_constant,q_bracket,weighted_constant,S\n";
      out << fmt::format("{},{},{},{},{},{},{},{}\n", num(p.p()), num(q.value()), num(o.alpha),
                         num(hardy), num(q_hardy), num(bracket), num(weighted), num(S));
      break;
    case Format::text:
      text_row(out, "p", short_num(p.p()));
      text_row(out, "q", short_num(q.value()));
      text_row(out, "alpha", short_num(o.alpha));
      text_row(out, "Hardy (p/(p-1))^p", short_num(hardy));
      text_row(out, "q-Hardy (1-q)^-p", short_num(q_hardy));
      text_row(out, "[1-1/p-alpha]_q", short_num(bracket));
      text_row(out, "[1-1/p-alpha]_q^-p", short_num(weighted));
      text_row(out, "S = 1/(1-q)", short_num(S));
      break;
  }
  return kSuccess;
}

// ---------------------------------------------------------------- certify

int cmd_certify(const Options& o, std::ostream& out, spdlog::logger& log) {
  const auto kernel = resolve_kernel(o.kernel);
  const Exponent p(o.p);
  const auto cfg = o.tolerances();
  log.debug("certifying {} at p={} N={}", describe(kernel), o.p, o.n);

  const auto cert = certify::certify_norm(kernel, p, o.n, cfg);
  const auto violations = certify::certificate_violations(cert, kernel);
  log.debug("power iteration: {} iterations, value {}", cert.iterations, cert.power_lower);

  switch (o.format) {
    case Format::json: {
      auto j = certificate_to_json(cert);
      j["kernel"] = kernel_to_json(kernel);
      j["valid"] = violations.empty();
      j["violations"] = violations;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "# lpopnorm certify v1\n";
      out << "N,p,upper,lower,gap,method_lower,indicator_lower,power_lower,iterations,valid\n";
      out << fmt::format("{},{},{},{},{},{},{},{},{},{}\n", cert.N, num(p.p()), num(cert.upper),
                         num(cert.lower), num(cert.gap()), certify::to_string(cert.method_lower),
                         num(cert.indicator_lower), num(cert.power_lower), cert.iterations,
                         violations.empty() ? "true" : "false");
      break;
    case Format::text:
      text_row(out, "kernel", describe(kernel));
      text_row(out, "p", fmt::format("{} (conjugate {})", short_num(p.p()), short_num(p.conj())));
      text_row(out, "upper", fmt::format("{}  [{}]", short_num(cert.upper),
                                         certify::to_string(cert.method_upper)));
      text_row(out, "lower", fmt::format("{}  [{}]", short_num(cert.lower),
                                         certify::to_string(cert.method_lower)));
      text_row(out, "gap", short_num(cert.gap()));
      text_row(out, "N", std::to_string(cert.N));
      text_row(out, "indicator lower", short_num(cert.indicator_lower));
      text_row(out, "power-iteration lower", short_num(cert.power_lower));
      text_row(out, "iterations", std::to_string(cert.iterations));
      text_row(out, "status", violations.empty() ? "certified" : "INVALID");
      for (const auto& v : violations) {
        text_row(out, "violation", v);
      }
      break;
  }
  return violations.empty() ? kSuccess : kViolation;
}

// ---------------------------------------------------------------- sweep

int cmd_sweep(const Options& o, std::ostream& out, spdlog::logger& log) {
  const auto kernel = resolve_kernel(o.kernel);
  const Exponent p(o.p);
  const auto cfg = o.tolerances();
  if (o.n_list.empty()) {
    throw ArgumentError("--n needs at least one size");
  }
  for (std::size_t i = 1; i < o.n_list.size(); ++i) {
    if (o.n_list[i] <= o.n_list[i - 1]) {
      throw ArgumentError("--n sizes must be strictly ascending");
    }
  }

  std::vector<std::future<certify::NormCertificate>> rows;
  for (std::size_t n : o.n_list) {
    rows.push_back(std::async(std::launch::async,
                              [&kernel, &p, &cfg, n] { return certify::certify_norm(kernel, p, n, cfg); }));
  }
  std::vector<certify::NormCertificate> certs;
  bool valid = true;
  for (auto& r : rows) {
    certs.push_back(r.get());
    valid = valid && certify::certificate_violations(certs.back(), kernel).empty();
    log.debug("N={} gap={}", certs.back().N, certs.back().gap());
  }

  switch (o.format) {
    case Format::json: {
      json rows_json = json::array();
      for (const auto& c : certs) {
        rows_json.push_back({{"N", c.N},
                             {"indicator_lower", c.indicator_lower},
                             {"power_lower", c.power_lower},
                             {"upper", c.upper},
                             {"gap", c.gap()}});
      }
      out << json{{"schema_version", kSchemaVersion},
                  {"kernel", kernel_to_json(kernel)},
                  {"p", p.p()},
                  {"rows", rows_json}}
                 .dump(2)
          << '\n';
      break;
    }
    case Format::text:
      fmt::print(out, "{:>10} {:>20} {:>20} {:>20} {:>20}\n", "N", "indicator_lower", "power_lower",
                 "upper", "gap");
      for (const auto& c : certs) {
        fmt::print(out, "{:>10} {:>20} {:>20} {:>20} {:>20}\n", c.N, short_num(c.indicator_lower),
                   short_num(c.power_lower), short_num(c.upper), short_num(c.gap()));
      }
      break;
    case Format::csv:
      out << "# lpopnorm sweep v1\n";
      out << "N,indicator_lower,power_lower,upper,gap\n";
      for (const auto& c : certs) {
        out << fmt::format("{},{},{},{},{}\n", c.N, num(c.indicator_lower), num(c.power_lower),
                           num(c.upper), num(c.gap()));
      }
      break;
  }
  return valid ? kSuccess : kViolation;
}

// ---------------------------------------------------------------- verify-discrete

struct DiscreteGridPoint {
  double p;
  double q;
  int violations = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  double min_relative_margin = std::numeric_limits<double>::infinity();
  TruncatedSequence offending;  // first violating input, empty if none
};

int cmd_verify_discrete(const Options& o, std::ostream& out, std::ostream& err, spdlog::logger& log) {
  SequenceGenerator gen(o.seed);
  std::vector<DiscreteGridPoint> grid;
  for (double pv : o.p_list) {
    for (double qv : o.q_list) {
      const Exponent p(pv);
      const QParam q(qv);
      DiscreteGridPoint pt;
      pt.p = pv;
      pt.q = qv;
      for (int t = 0; t < o.trials; ++t) {
        const auto x = gen.next();
        const auto r = certify::verify_discrete_inequality(q, p, x);
        pt.min_margin = std::min(pt.min_margin, r.margin);
        if (r.rhs > 0.0) {
          pt.min_relative_margin = std::min(pt.min_relative_margin, r.margin / r.rhs);
        }
        if (!r.holds) {
          ++pt.violations;
          if (pt.offending.empty()) {
            pt.offending = x;
          }
        }
      }
      log.debug("p={} q={}: {} violations", pv, qv, pt.violations);
      grid.push_back(std::move(pt));
    }
  }

  int total = 0;
  for (const auto& pt : grid) {
    total += pt.violations;
  }

  switch (o.format) {
    case Format::json: {
      json points = json::array();
      for (const auto& pt : grid) {
        json j{{"p", pt.p},
               {"q", pt.q},
               {"trials", o.trials},
               {"violations", pt.violations},
               {"min_margin", pt.min_margin},
               {"min_relative_margin", pt.min_relative_margin}};
        if (!pt.offending.empty()) {
          j["offending_input"] = sequence_json(pt.offending);
        }
        points.push_back(j);
      }
      out << json{{"schema_version", kSchemaVersion},
                  {"mode", "discrete"},
                  {"seed", o.seed},
                  {"violations", total},
                  {"grid", points}}
                 .dump(2)
          << '\n';
      break;
    }
    case Format::csv:
      out << "# lpopnorm verify-discrete v1\n";
      out << "p,q,trials,violations,min_margin,min_relative_margin\n";
      for (const auto& pt : grid) {
        out << fmt::format("{},{},{},{},{},{}\n", num(pt.p), num(pt.q), o.trials, pt.violations,
                           num(pt.min_margin), num(pt.min_relative_margin));
      }
      break;
    case Format::text:
      fmt::print(out, "discrete q-Hardy inequality, {} trials per grid point, seed {}\n", o.trials,
                 o.seed);
      for (const auto& pt : grid) {
        fmt::print(out, "p={:<6} q={:<6} violations={:<4} min margin={} min relative margin={}\n",
                   short_num(pt.p), short_num(pt.q), pt.violations, short_num(pt.min_margin),
                   short_num(pt.min_relative_margin));
      }
      fmt::print(out, "total violations: {}\n", total);
      break;
  }
  for (const auto& pt : grid) {
    if (!pt.offending.empty()) {
      fmt::print(err, "violation at p={} q={}: {}\n", num(pt.p), num(pt.q),
                 sequence_json(pt.offending).dump());
    }
  }
  return total == 0 ? kSuccess : kViolation;
}

// ---------------------------------------------------------------- verify-theorem1

struct Theorem1Case {
  double p;
  double alpha;
  double q;
  std::string f;
  int trial;
  qcalc::InequalitySides sides;
  double reduction_rel_err;
  std::vector<double> samples;
};

qcalc::GridFunction sample_named(const std::string& name, QParam q, std::size_t count,
                                 SequenceGenerator& gen) {
  if (name == "1") {
    return qcalc::GridFunction::sample([](double) { return 1.0; }, 1.0, q, count);
  }
  if (name == "t") {
    return qcalc::GridFunction::sample([](double t) { return t; }, 1.0, q, count);
  }
  if (name == "t2") {
    return qcalc::GridFunction::sample([](double t) { return t * t; }, 1.0, q, count);
  }
  if (name == "random") {
    std::vector<double> s(count);
    for (double& v : s) {
      v = 1.0 - gen.uniform();  // (0, 1]
    }
    return qcalc::GridFunction(1.0, q, std::move(s));
  }
  throw ArgumentError(fmt::format("unknown function '{}' (expected 1, t, t2 or random)", name));
}

int cmd_verify_theorem1(const Options& o, std::ostream& out, std::ostream& err, spdlog::logger& log) {
  SequenceGenerator gen(o.seed);
  const ToleranceConfig cfg;
  std::vector<Theorem1Case> cases;
  for (double pv : o.p_list) {
    for (double alpha : o.alpha_list) {
      for (double qv : o.q_list) {
        const qcalc::HardyParams params(Exponent(pv), alpha, QParam(qv));
        // samples are bounded by 1 for every built-in f
        const std::size_t K = qcalc::default_truncation(params.q(), 1.0, cfg.tail_threshold);
        for (const auto& fname : o.f_list) {
          const int repeats = fname == "random" ? o.trials : 1;
          for (int t = 0; t < repeats; ++t) {
            const auto f = sample_named(fname, params.q(), K + 1, gen);
            const auto sides = qcalc::theorem1_sides(f, params, K);
            const auto reduced = qcalc::reduced_sides(qcalc::reduce_theorem1_to_discrete(f, params, K), params);
            const double err_l = std::abs(reduced.lhs - sides.lhs) / std::max(std::abs(sides.lhs), 1e-300);
            const double err_r = std::abs(reduced.rhs - sides.rhs) / std::max(std::abs(sides.rhs), 1e-300);
            cases.push_back({pv, alpha, qv, fname, t, sides, std::max(err_l, err_r),
                             {f.samples().begin(), f.samples().end()}});
          }
        }
      }
    }
  }

  int violations = 0;
  int flagged = 0;
  double max_reduction_err = 0.0;
  double min_relative_margin = std::numeric_limits<double>::infinity();
  for (const auto& c : cases) {
    max_reduction_err = std::max(max_reduction_err, c.reduction_rel_err);
    if (c.sides.rhs > 0.0) {
      min_relative_margin = std::min(min_relative_margin, c.sides.margin() / c.sides.rhs);
    }
    if (!c.sides.holds(cfg.abs_tol)) {
      ++violations;
      fmt::print(err, "violation: p={} alpha={} q={} f={} lhs={} rhs={} samples={}\n", num(c.p),
                 num(c.alpha), num(c.q), c.f, num(c.sides.lhs), num(c.sides.rhs), json(c.samples).dump());
    } else if (!c.sides.strictly_holds(cfg.abs_tol)) {
      ++flagged;
    }
  }
  log.debug("{} cases, {} violations, {} equal within tolerance", cases.size(), violations, flagged);

  switch (o.format) {
    case Format::json: {
      json rows = json::array();
      for (const auto& c : cases) {
        rows.push_back({{"p", c.p},
                        {"alpha", c.alpha},
                        {"q", c.q},
                        {"f", c.f},
                        {"trial", c.trial},
                        {"lhs", c.sides.lhs},
                        {"rhs", c.sides.rhs},
                        {"margin", c.sides.margin()},
                        {"reduction_rel_err", c.reduction_rel_err}});
      }
      out << json{{"schema_version", kSchemaVersion},
                  {"mode", "theorem1"},
                  {"seed", o.seed},
                  {"violations", violations},
                  {"equal_within_tolerance", flagged},
                  {"min_relative_margin", min_relative_margin},
                  {"max_reduction_rel_err", max_reduction_err},
                  {"cases", rows}}
                 .dump(2)
          << '\n';
      break;
    }
    case Format::csv:
      out << "# lpopnorm verify-theorem1 v1\n";
      out << "p,alpha,q,f,trial,lhs,rhs,margin,reduction_rel_err\n";
      for (const auto& c : cases) {
        out << fmt::format("{},{},{},{},{},{},{},{},{}\n", num(c.p), num(c.alpha), num(c.q), c.f,
                           c.trial, num(c.sides.lhs), num(c.sides.rhs), num(c.sides.margin()),
                           num(c.reduction_rel_err));
      }
      break;
    case Format::text:
      fmt::print(out, "weighted q-Hardy integral inequality, seed {}\n", o.seed);
      for (const auto& c : cases) {
        if (c.f == "random" && c.trial > 0) {
          continue;
        }
        fmt::print(out, "p={:<6} alpha={:<8} q={:<6} f={:<7} lhs={:<20} rhs={}\n", short_num(c.p),
                   short_num(c.alpha), short_num(c.q), c.f, short_num(c.sides.lhs),
                   short_num(c.sides.rhs));
      }
      text_row(out, "cases", std::to_string(cases.size()));
      text_row(out, "violations", std::to_string(violations));
      text_row(out, "equal within tolerance", std::to_string(flagged));
      text_row(out, "min relative margin", short_num(min_relative_margin));
      text_row(out, "max reduction rel. error", short_num(max_reduction_err));
      break;
  }
  return violations == 0 ? kSuccess : kViolation;
}

// ---------------------------------------------------------------- jackson

int cmd_jackson(const Options& o, std::ostream& out) {
  const QParam q(o.q);
  if (!(o.m >= 0.0)) {
    throw DomainError("--m must be nonnegative");
  }
  const auto tail = o.tail == "geometric" ? qcalc::TailMode::geometric_extrapolate : qcalc::TailMode::zero;
  const std::size_t K = o.k.value_or(qcalc::default_truncation(q, 1.0));
  const double m = o.m;
  const auto f = qcalc::GridFunction::sample([m](double t) { return std::pow(t, m); }, 1.0, q,
                                             std::max<std::size_t>(K + 1, 2), tail);
  const auto r = qcalc::jackson_integral(f, K);
  const double exact = 1.0 / qcalc::q_bracket(m + 1.0, q);
  const double rel_err = std::abs(r.value - exact) / exact;

  switch (o.format) {
    case Format::json:
      out << json{{"schema_version", kSchemaVersion}, {"q", q.value()}, {"m", m},
                  {"K", K}, {"value", r.value}, {"tail_residual", r.tail_residual},
                  {"exact", exact}, {"rel_err", rel_err}}
                 .dump(2)
          << '\n';
      break;
    case Format::csv:
      out << "# lpopnorm jackson v1\n";
      out << "q,m,K,value,tail_residual,exact,rel_err\n";
      out << fmt::format("{},{},{},{},{},{},{}\n", num(q.value()), num(m), K, num(r.value),
                         num(r.tail_residual), num(exact), num(rel_err));
      break;
    case Format::text:
      text_row(out, "integral of t^m over [0,1]", "");
      text_row(out, "q", short_num(q.value()));
      text_row(out, "m", short_num(m));
      text_row(out, "K", std::to_string(K));
      text_row(out, "Jackson sum", num(r.value));
      text_row(out, "tail residual", short_num(r.tail_residual));
      text_row(out, "1/[m+1]_q", num(exact));
      text_row(out, "relative error", short_num(rel_err));
      break;
  }
  return kSuccess;
}

void add_format(CLI::App* cmd, Options& o) {
  const std::map<std::string, Format> formats{
      {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  cmd->add_option("--format", o.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

void add_kernel(CLI::App* cmd, Options& o) {
  cmd->add_option("--q", o.kernel.q, "q-Hardy kernel a_m = q^(m-1)");
  cmd->add_option("--coeffs", o.kernel.coeffs, "Explicit kernel coefficients a_1,a_2,...")->delimiter(',');
  cmd->add_option("--kernel", o.kernel.kernel_json, "Kernel as JSON");
  cmd->add_option("--p", o.p, "Exponent p > 1");
  cmd->add_option("--rel-tol", o.rel_tol, "Power iteration relative tolerance");
  cmd->add_option("--max-iter", o.max_iter, "Power iteration iteration cap");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Certified l^p operator norms of Toeplitz operators and q-Hardy inequalities",
               "lpopnorm"};
  app.require_subcommand(1);

  auto* constants = app.add_subcommand("constants", "Print the inequality constants");
  constants->add_option("--p", o.p, "Exponent p > 1");
  constants->add_option("--q", o.q, "q in (0, 1)");
  constants->add_option("--alpha", o.alpha, "Weight exponent alpha < 1 - 1/p");
  add_format(constants, o);

  auto* certify_cmd = app.add_subcommand("certify", "Two-sided l^p norm certificate of a Toeplitz operator");
  add_kernel(certify_cmd, o);
  certify_cmd->add_option("--n", o.n, "Truncation size N")->check(CLI::PositiveNumber);
  add_format(certify_cmd, o);

  auto* sweep = app.add_subcommand("sweep", "Certificates over ascending truncation sizes");
  add_kernel(sweep, o);
  sweep->add_option("--n", o.n_list, "Ascending truncation sizes N1,N2,...")
      ->delimiter(',')
      ->required()
      ->check(CLI::PositiveNumber);
  add_format(sweep, o);

  auto* vdisc = app.add_subcommand("verify-discrete", "Randomized check of the discrete q-Hardy inequality");
  vdisc->add_option("--p", o.p_list, "Exponents p")->delimiter(',');
  vdisc->add_option("--q", o.q_list, "Values of q")->delimiter(',');
  vdisc->add_option("--trials", o.trials, "Random sequences per grid point")->check(CLI::PositiveNumber);
  vdisc->add_option("--seed", o.seed, "Random seed");
  add_format(vdisc, o);

  auto* vthm = app.add_subcommand("verify-theorem1", "Check the weighted q-Hardy integral inequality");
  vthm->add_option("--p", o.p_list, "Exponents p")->delimiter(',');
  vthm->add_option("--q", o.q_list, "Values of q")->delimiter(',');
  vthm->add_option("--alpha", o.alpha_list, "Weight exponents alpha")->delimiter(',');
  vthm->add_option("--f", o.f_list, "Functions: 1, t, t2, random")->delimiter(',');
  vthm->add_option("--trials", o.trials, "Random functions per grid point")->check(CLI::PositiveNumber);
  vthm->add_option("--seed", o.seed, "Random seed");
  add_format(vthm, o);

  auto* jackson = app.add_subcommand("jackson", "Jackson integral of t^m over [0, 1]");
  jackson->add_option("--q", o.q, "q in (0, 1)");
  jackson->add_option("--m", o.m, "Power m >= 0");
  jackson->add_option("--k", o.k, "Truncation index K");
  jackson->add_option("--tail", o.tail, "Tail model")->check(CLI::IsMember({"zero", "geometric"}));
  add_format(jackson, o);

  bool trials_given = false;
  try {
    app.parse(argc, argv);
    trials_given = vthm->count("--trials") > 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }
  if (*sweep && sweep->count("--format") == 0) {
    o.format = Format::csv;
  }
  if (*vthm && !trials_given) {
    o.trials = 10;
  }

  auto logger = make_logger(err);
  try {
    if (*constants) return cmd_constants(o, out);
    if (*certify_cmd) return cmd_certify(o, out, *logger);
    if (*sweep) return cmd_sweep(o, out, *logger);
    if (*vdisc) return cmd_verify_discrete(o, out, err, *logger);
    if (*vthm) return cmd_verify_theorem1(o, out, err, *logger);
    if (*jackson) return cmd_jackson(o, out);
  } catch (const DomainError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kUsage;
  } catch (const ArgumentError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kViolation;
  }
  return kUsage;
}

}  // namespace lpopnorm::cli
