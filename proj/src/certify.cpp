#include "lpopnorm/certify.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <future>

namespace lpopnorm::certify {

SchurWeights SchurWeights::dense(std::size_t n, std::vector<double> weights) {
  if (n == 0 || weights.size() != n * n) {
    throw ArgumentError(fmt::format("expected {} Schur weights, got {}", n * n, weights.size()));
  }
  for (double b : weights) {
    if (!(b > 0.0) || !std::isfinite(b)) {
      throw ArgumentError(fmt::format("Schur weights must be positive and finite, got {}", b));
    }
  }
  SchurWeights w;
  w.n_ = n;
  w.weights_ = std::move(weights);
  return w;
}

SchurBound schur_bound(const TruncatedMatrix& m, const SchurWeights& w, const Exponent& p) {
  const std::size_t n = m.dim();
  if (!w.is_constant_one() && w.dim() != n) {
    throw ArgumentError(fmt::format("Schur weights are {}x{}, matrix is {}x{}", w.dim(), w.dim(), n, n));
  }
  const double row_exp = 1.0 / p.p();
  const double col_exp = -1.0 / p.conj();
  const auto e = m.entries();

  double U1 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    CompensatedAccumulator acc;
    for (std::size_t j = 0; j < n; ++j) {
      acc.add(e[i * n + j] * std::pow(w.at(i, j), row_exp));
    }
    U1 = std::max(U1, acc.value());
  }
  double U2 = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    CompensatedAccumulator acc;
    for (std::size_t i = 0; i < n; ++i) {
      acc.add(e[i * n + j] * std::pow(w.at(i, j), col_exp));
    }
    U2 = std::max(U2, acc.value());
  }
  return {std::pow(U1, 1.0 / p.conj()) * std::pow(U2, 1.0 / p.p()), U1, U2};
}

double toeplitz_schur_bound(const ToeplitzKernel& k, const Exponent& /*p*/) {
  // U1 = S (every full row sums to S), U2 = max_j P_j <= S; U1^{1/p'} S^{1/p} = S.
  return k.sum();
}

IndicatorWitness indicator_witness(const ToeplitzKernel& k, const Exponent& p, std::size_t M) {
  if (M == 0) {
    throw ArgumentError("indicator length must be at least 1");
  }
  auto witness = TruncatedSequence::indicator(M);
  const auto image = apply_toeplitz(k, witness);
  const double ratio = lp_norm(image, p) / std::pow(static_cast<double>(M), 1.0 / p.p());
  return {ratio, std::move(witness)};
}

double indicator_ratio_closed_form(const ToeplitzKernel& k, const Exponent& p, std::size_t M) {
  if (M == 0) {
    throw ArgumentError("indicator length must be at least 1");
  }
  // P_m <= S, so normalizing by S keeps P_m^p bounded for large p
  const double S = k.sum();
  CompensatedAccumulator acc;
  for (std::size_t m = 1; m <= M; ++m) {
    acc.add(std::pow(k.partial_sum(m) / S, p.p()));
  }
  return S * std::pow(acc.value() / static_cast<double>(M), 1.0 / p.p());
}

BestPossibilitySearch search_indicator_length(const ToeplitzKernel& k, const Exponent& p, double eps,
                                              std::size_t max_M) {
  if (!(eps > 0.0)) {
    throw ArgumentError("eps must be positive");
  }
  const double target = k.sum() - eps;
  BestPossibilitySearch out;
  for (std::size_t M = 1; M <= max_M; M *= 2) {
    out.M = M;
    out.ratio = indicator_ratio_closed_form(k, p, M);
    if (out.ratio > target) {
      out.found = true;
      return out;
    }
  }
  return out;
}

namespace {

// J_r(y) = |y|^{r-1} sign(y) applied to y / max|y|; the scale drops out on normalization.
void duality_map(std::vector<double>& y, double r) {
  double scale = 0.0;
  for (double v : y) {
    scale = std::max(scale, std::abs(v));
  }
  if (scale == 0.0) {
    return;
  }
  if (r == 2.0) {
    for (double& v : y) {
      v /= scale;
    }
    return;
  }
  for (double& v : y) {
    const double mag = std::pow(std::abs(v) / scale, r - 1.0);
    v = v < 0.0 ? -mag : mag;
  }
}

template <typename Section>
PowerIterationResult run_power_iteration(const Section& m, const Exponent& p,
                                         const ToleranceConfig& cfg) {
  cfg.validate();
  if (m.is_zero()) {
    throw DegenerateInputError("power iteration on the zero matrix");
  }
  const std::size_t n = m.dim();
  const double unit = std::pow(static_cast<double>(n), -1.0 / p.p());
  std::vector<double> x(n, unit);
  std::vector<double> y = m.multiply(x);

  PowerIterationResult out;
  double ratio = lp_norm(y, p.p()) / lp_norm(x, p.p());
  out.ratios.push_back(ratio);

  for (int it = 1; it <= cfg.max_iter; ++it) {
    duality_map(y, p.p());
    std::vector<double> w = m.multiply_transpose(y);
    duality_map(w, p.conj());
    const double wn = lp_norm(w, p.p());
    if (wn == 0.0) {
      throw DegenerateInputError("power iteration collapsed to the zero vector");
    }
    for (double& v : w) {
      v /= wn;
    }
    x = std::move(w);
    y = m.multiply(x);

    const double next = lp_norm(y, p.p()) / lp_norm(x, p.p());
    out.ratios.push_back(next);
    out.iterations = it;
    out.final_rel_change = std::abs(next - ratio) / next;
    ratio = next;
    if (out.final_rel_change < cfg.rel_tol) {
      break;
    }
  }
  out.value = ratio;
  out.witness = TruncatedSequence(std::move(x));
  return out;
}

}  // namespace

PowerIterationResult power_iteration_lower_bound(const TruncatedMatrix& m, const Exponent& p,
                                                 const ToleranceConfig& cfg) {
  return run_power_iteration(m, p, cfg);
}

PowerIterationResult power_iteration_lower_bound(const ToeplitzSection& m, const Exponent& p,
                                                 const ToleranceConfig& cfg) {
  return run_power_iteration(m, p, cfg);
}

std::string to_string(UpperMethod m) {
  return m == UpperMethod::schur_closed_form ? "schur-closed-form" : "schur-numeric";
}

std::string to_string(LowerMethod m) {
  return m == LowerMethod::indicator ? "indicator" : "power-iteration";
}

NormCertificate certify_norm(const ToeplitzKernel& k, const Exponent& p, std::size_t N,
                             const ToleranceConfig& cfg) {
  if (N == 0) {
    throw ArgumentError("truncation N must be at least 1");
  }
  cfg.validate();
  auto power = std::async(std::launch::async, [&] {
    return power_iteration_lower_bound(ToeplitzSection(k, N), p, cfg);
  });
  IndicatorWitness indicator = indicator_witness(k, p, N);
  PowerIterationResult iterated = power.get();

  NormCertificate cert;
  cert.upper = toeplitz_schur_bound(k, p);
  cert.p = p;
  cert.method_upper = UpperMethod::schur_closed_form;
  cert.N = N;
  cert.iterations = iterated.iterations;
  cert.indicator_lower = indicator.ratio;
  cert.power_lower = iterated.value;
  for (std::size_t i = 1; i < iterated.ratios.size(); ++i) {
    cert.residuals.push_back(std::abs(iterated.ratios[i] - iterated.ratios[i - 1]) / iterated.ratios[i]);
  }
  // ties go to the indicator, whose ratio has a closed form
  if (iterated.value > indicator.ratio) {
    cert.lower = iterated.value;
    cert.witness = std::move(iterated.witness);
    cert.method_lower = LowerMethod::power_iteration;
  } else {
    cert.lower = indicator.ratio;
    cert.witness = std::move(indicator.witness);
    cert.method_lower = LowerMethod::indicator;
  }
  return cert;
}

std::vector<std::string> certificate_violations(const NormCertificate& cert, const ToeplitzKernel& k) {
  std::vector<std::string> out;
  if (!(cert.lower >= 0.0)) {
    out.push_back(fmt::format("lower bound {} is negative", cert.lower));
  }
  if (!(cert.lower <= cert.upper * (1.0 + 1e-10))) {
    out.push_back(fmt::format("lower bound {} exceeds upper bound {}", cert.lower, cert.upper));
  }
  if (cert.witness.is_zero()) {
    out.push_back("witness is the zero sequence");
    return out;
  }
  const double reproduced =
      lp_norm(apply_toeplitz(k, cert.witness), cert.p) / lp_norm(cert.witness, cert.p);
  if (!(std::abs(reproduced - cert.lower) <= 1e-10 * std::abs(cert.lower))) {
    out.push_back(fmt::format("witness ratio {} does not reproduce lower bound {}", reproduced, cert.lower));
  }
  return out;
}

DiscreteReport verify_discrete_inequality(const QParam& q, const Exponent& p,
                                          const TruncatedSequence& x, double abs_tol) {
  if (!x.is_nonnegative()) {
    throw ArgumentError("discrete q-Hardy inequality needs a nonnegative sequence");
  }
  const auto image = apply_qhardy_direct(q, x);
  DiscreteReport r;
  r.lhs = lp_power_sum(image.values(), p.p());
  r.rhs = std::pow(1.0 - q.value(), -p.p()) * lp_power_sum(x.values(), p.p());
  r.margin = r.rhs - r.lhs;
  r.holds = r.lhs <= r.rhs + abs_tol;
  return r;
}

}  // namespace lpopnorm::certify
