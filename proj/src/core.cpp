#include "lpopnorm/core.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace lpopnorm {

double conjugate_exponent(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw DomainError(fmt::format("exponent must satisfy 1 < p < inf, got {}", p));
  }
  return p / (p - 1.0);
}

Exponent::Exponent(double p) : p_(p), conj_(conjugate_exponent(p)) {}

QParam::QParam(double q) : q_(q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw DomainError(fmt::format("q must satisfy 0 < q < 1, got {}", q));
  }
}

TruncatedSequence::TruncatedSequence(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw ArgumentError("sequence entries must be finite");
    }
  }
}

TruncatedSequence TruncatedSequence::zeros(std::size_t n) {
  return TruncatedSequence(std::vector<double>(n, 0.0));
}

TruncatedSequence TruncatedSequence::indicator(std::size_t m) {
  return TruncatedSequence(std::vector<double>(m, 1.0));
}

TruncatedSequence TruncatedSequence::unit(std::size_t n) {
  if (n == 0) {
    throw ArgumentError("sequence indices start at 1");
  }
  std::vector<double> v(n, 0.0);
  v[n - 1] = 1.0;
  return TruncatedSequence(std::move(v));
}

double TruncatedSequence::at(std::size_t n) const {
  if (n == 0) {
    throw ArgumentError("sequence indices start at 1");
  }
  return n <= values_.size() ? values_[n - 1] : 0.0;
}

bool TruncatedSequence::is_nonnegative() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v >= 0.0; });
}

bool TruncatedSequence::is_zero() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
}

std::size_t TruncatedSequence::support() const noexcept {
  for (std::size_t n = values_.size(); n > 0; --n) {
    if (values_[n - 1] != 0.0) {
      return n;
    }
  }
  return 0;
}

void ToleranceConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !(tail_threshold > 0.0)) {
    throw ArgumentError("tolerances must be positive");
  }
  if (max_iter < 1) {
    throw ArgumentError("max_iter must be at least 1");
  }
}

void CompensatedAccumulator::add(double term) noexcept {
  const double t = sum_ + term;
  if (std::abs(sum_) >= std::abs(term)) {
    compensation_ += (sum_ - t) + term;
  } else {
    compensation_ += (term - t) + sum_;
  }
  sum_ = t;
}

double compensated_sum(std::span<const double> terms) {
  CompensatedAccumulator acc;
  for (double t : terms) {
    acc.add(t);
  }
  return acc.value();
}

double lp_power_sum(std::span<const double> x, double p) {
  CompensatedAccumulator acc;
  for (double v : x) {
    acc.add(std::pow(std::abs(v), p));
  }
  return acc.value();
}

double lp_norm(std::span<const double> x, double p) {
  double scale = 0.0;
  for (double v : x) {
    scale = std::max(scale, std::abs(v));
  }
  if (scale == 0.0) {
    return 0.0;
  }
  CompensatedAccumulator acc;
  if (p == 2.0) {
    for (double v : x) {
      const double s = v / scale;
      acc.add(s * s);
    }
    return scale * std::sqrt(acc.value());
  }
  for (double v : x) {
    acc.add(std::pow(std::abs(v) / scale, p));
  }
  return scale * std::pow(acc.value(), 1.0 / p);
}

double lp_norm(const TruncatedSequence& x, const Exponent& p) {
  return lp_norm(x.values(), p.p());
}

}  // namespace lpopnorm
