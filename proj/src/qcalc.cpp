#include "lpopnorm/qcalc.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>

namespace lpopnorm::qcalc {

double q_bracket(double alpha, const QParam& q) {
  // -expm1 keeps precision when q^alpha is close to 1
  const double qv = q.value();
  return -std::expm1(alpha * std::log(qv)) / (1.0 - qv);
}

GridFunction::GridFunction(double base, QParam q, std::vector<double> samples, TailMode tail)
    : base_(base), q_(q), samples_(std::move(samples)), tail_(tail) {
  if (!(base_ > 0.0) || !std::isfinite(base_)) {
    throw ArgumentError("grid base must be positive and finite");
  }
  if (samples_.empty()) {
    throw ArgumentError("grid function needs at least one sample");
  }
  for (double v : samples_) {
    if (!std::isfinite(v)) {
      throw ArgumentError("grid samples must be finite");
    }
  }
  if (tail_ == TailMode::geometric_extrapolate) {
    if (samples_.size() < 2) {
      throw ArgumentError("geometric extrapolation needs at least two samples");
    }
    const double prev = samples_[samples_.size() - 2];
    const double last = samples_.back();
    const bool decaying = prev != 0.0 ? std::abs(last / prev) < 1.0 : last == 0.0;
    if (!decaying) {
      throw ArgumentError("geometric extrapolation needs a last-sample ratio below 1 in magnitude");
    }
  }
}

GridFunction GridFunction::sample(const std::function<double(double)>& f, double base, QParam q,
                                  std::size_t count, TailMode tail) {
  if (count == 0) {
    throw ArgumentError("grid function needs at least one sample");
  }
  std::vector<double> samples(count);
  double t = base;
  for (std::size_t k = 0; k < count; ++k) {
    samples[k] = f(t);
    t *= q.value();
  }
  return GridFunction(base, q, std::move(samples), tail);
}

double GridFunction::node(std::size_t k) const {
  return base_ * std::pow(q_.value(), static_cast<double>(k));
}

bool GridFunction::is_nonnegative() const noexcept {
  return std::all_of(samples_.begin(), samples_.end(), [](double v) { return v >= 0.0; });
}

std::size_t default_truncation(const QParam& q, double fmax, double tail_threshold) {
  if (!(tail_threshold > 0.0)) {
    throw ArgumentError("tail threshold must be positive");
  }
  fmax = std::abs(fmax);
  if (fmax < tail_threshold) {
    return 0;
  }
  const double estimate = std::log(tail_threshold / fmax) / std::log(q.value());
  auto k = static_cast<std::size_t>(std::max(0.0, std::floor(estimate)));
  while (std::pow(q.value(), static_cast<double>(k)) * fmax >= tail_threshold) {
    ++k;
  }
  while (k > 0 && std::pow(q.value(), static_cast<double>(k - 1)) * fmax < tail_threshold) {
    --k;
  }
  return k;
}

JacksonResult jackson_integral(const GridFunction& f, std::size_t K) {
  if (K > f.last_index()) {
    throw ArgumentError(
        fmt::format("truncation index {} needs {} samples, have {}", K, K + 1, f.samples().size()));
  }
  const double q = f.q().value();
  const auto samples = f.samples();

  CompensatedAccumulator acc;
  double weight = 1.0;  // q^k
  for (std::size_t k = 0; k <= K; ++k) {
    acc.add(weight * samples[k]);
    weight *= q;
  }
  const double scale = (1.0 - q) * f.base();

  JacksonResult out;
  out.value = scale * acc.value();
  if (f.tail_mode() == TailMode::geometric_extrapolate) {
    if (K == 0 || samples[K - 1] == 0.0) {
      out.tail_residual = samples[K] == 0.0 && K > 0 ? 0.0 : std::numeric_limits<double>::infinity();
    } else {
      // omitted terms modelled as q^k f_K r^{k-K}, k > K
      const double r = std::abs(samples[K] / samples[K - 1]);
      const double qr = q * r;
      out.tail_residual = r < 1.0 ? scale * std::pow(q, static_cast<double>(K)) *
                                        std::abs(samples[K]) * qr / (1.0 - qr)
                                  : std::numeric_limits<double>::infinity();
    }
  }
  return out;
}

HardyParams::HardyParams(Exponent p, double alpha, QParam q) : p_(p), alpha_(alpha), q_(q) {
  if (!std::isfinite(alpha) || !(alpha < 1.0 - 1.0 / p.p())) {
    throw DomainError(fmt::format("alpha must satisfy alpha < 1 - 1/p = {}, got {}",
                                  1.0 - 1.0 / p.p(), alpha));
  }
}

bool InequalitySides::strictly_holds(double abs_tol) const noexcept {
  return lhs <= rhs - std::max(abs_tol, 1e-12 * rhs);
}

namespace {

void check_theorem1_input(const GridFunction& f, std::size_t K) {
  if (f.base() != 1.0) {
    throw ArgumentError("the weighted q-Hardy inequality is evaluated on [0, 1]; grid base must be 1");
  }
  if (!f.is_nonnegative()) {
    throw ArgumentError("grid samples must be nonnegative");
  }
  if (K > f.last_index()) {
    throw ArgumentError(
        fmt::format("truncation index {} needs {} samples, have {}", K, K + 1, f.samples().size()));
  }
}

}  // namespace

InequalitySides theorem1_sides(const GridFunction& f, const HardyParams& params, std::size_t K) {
  check_theorem1_input(f, K);
  const double q = params.q().value();
  const double p = params.p().p();
  const auto samples = f.samples();

  // Rescaled inner integral at x = q^n:
  //   q^{n(alpha-1)} int_0^{q^n} t^{-alpha} f d_q t = (1-q) sum_{j>=n} r^{j-n} f_j,
  // r = q^{1-alpha} < 1, built backwards so no power of q^{-1} is formed.
  const double r = std::pow(q, 1.0 - params.alpha());
  std::vector<double> inner(K + 1);
  double running = 0.0;
  for (std::size_t n = K + 1; n-- > 0;) {
    running = samples[n] + r * running;
    inner[n] = (1.0 - q) * running;
  }

  CompensatedAccumulator lhs_acc;
  CompensatedAccumulator rhs_acc;
  double weight = 1.0;  // q^n
  for (std::size_t n = 0; n <= K; ++n) {
    lhs_acc.add(weight * std::pow(inner[n], p));
    rhs_acc.add(weight * std::pow(samples[n], p));
    weight *= q;
  }

  const double constant = std::pow(q_bracket(params.bracket_argument(), params.q()), -p);
  return {(1.0 - q) * lhs_acc.value(), constant * (1.0 - q) * rhs_acc.value()};
}

DiscreteReduction reduce_theorem1_to_discrete(const GridFunction& f, const HardyParams& params,
                                              std::size_t K) {
  if (K > f.last_index()) {
    throw ArgumentError(
        fmt::format("truncation index {} needs {} samples, have {}", K, K + 1, f.samples().size()));
  }
  const double q = params.q().value();
  const double q_eff = std::pow(q, params.bracket_argument());
  if (!(q_eff > 0.0 && q_eff < 1.0)) {
    throw InternalError(fmt::format("effective q = {} left (0, 1)", q_eff));
  }
  const double step = std::pow(q, 1.0 / params.p().p());
  const auto samples = f.samples();
  std::vector<double> c(K + 1);
  double weight = 1.0;  // q^{j/p}
  for (std::size_t j = 0; j <= K; ++j) {
    c[j] = weight * samples[j];
    weight *= step;
  }
  return {q_eff, TruncatedSequence(std::move(c))};
}

DiscreteReduction reduce_theorem1_to_discrete(const GridFunction& f, const HardyParams& params) {
  return reduce_theorem1_to_discrete(f, params, f.last_index());
}

InequalitySides reduced_sides(const DiscreteReduction& reduction, const HardyParams& params) {
  const double q = params.q().value();
  const double p = params.p().p();
  const auto c = reduction.c.values();

  std::vector<double> tails(c.size());
  double running = 0.0;
  for (std::size_t n = c.size(); n-- > 0;) {
    running = c[n] + reduction.q_eff * running;
    tails[n] = running;
  }
  const double scale = std::pow(1.0 - q, p + 1.0);
  return {scale * lp_power_sum(tails, p),
          scale * std::pow(1.0 - reduction.q_eff, -p) * lp_power_sum(c, p)};
}

}  // namespace lpopnorm::qcalc
