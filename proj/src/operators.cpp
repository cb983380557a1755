#include "lpopnorm/operators.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace lpopnorm {

ToeplitzKernel::ToeplitzKernel(std::variant<std::vector<double>, Geometric> repr)
    : repr_(std::move(repr)) {}

ToeplitzKernel ToeplitzKernel::explicit_coeffs(std::vector<double> coeffs) {
  if (coeffs.empty()) {
    throw ArgumentError("kernel needs at least one coefficient");
  }
  for (double a : coeffs) {
    if (!std::isfinite(a) || a < 0.0) {
      throw ArgumentError(fmt::format("kernel coefficients must be finite and nonnegative, got {}", a));
    }
  }
  if (!(coeffs.front() > 0.0)) {
    throw ArgumentError("kernel needs a_1 > 0");
  }
  std::vector<double> prefix(coeffs.size() + 1, 0.0);
  CompensatedAccumulator acc;
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    acc.add(coeffs[m]);
    prefix[m + 1] = acc.value();
  }
  ToeplitzKernel k(std::move(coeffs));
  k.sum_ = prefix.back();
  k.prefix_ = std::move(prefix);
  if (!std::isfinite(k.sum_)) {
    throw ArgumentError("kernel coefficient sum overflows");
  }
  return k;
}

ToeplitzKernel ToeplitzKernel::geometric(double ratio, double scale) {
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw ArgumentError(fmt::format("geometric kernel ratio must lie in (0, 1), got {}", ratio));
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw ArgumentError(fmt::format("geometric kernel scale must be positive, got {}", scale));
  }
  ToeplitzKernel k(Geometric{ratio, scale});
  k.sum_ = scale / (1.0 - ratio);
  return k;
}

std::span<const double> ToeplitzKernel::coeffs() const {
  return std::get<std::vector<double>>(repr_);
}

double ToeplitzKernel::coeff(std::size_t m) const {
  if (m == 0) {
    throw ArgumentError("kernel indices start at 1");
  }
  if (const auto* g = std::get_if<Geometric>(&repr_)) {
    return g->scale * std::pow(g->ratio, static_cast<double>(m - 1));
  }
  const auto& a = std::get<std::vector<double>>(repr_);
  return m <= a.size() ? a[m - 1] : 0.0;
}

double ToeplitzKernel::partial_sum(std::size_t m) const {
  if (const auto* g = std::get_if<Geometric>(&repr_)) {
    return g->scale * -std::expm1(static_cast<double>(m) * std::log(g->ratio)) / (1.0 - g->ratio);
  }
  return prefix_[std::min(m, prefix_.size() - 1)];
}

std::size_t ToeplitzKernel::bandwidth() const noexcept {
  if (const auto* a = std::get_if<std::vector<double>>(&repr_)) {
    return a->size();
  }
  return 0;
}

ToeplitzKernel q_hardy_kernel(const QParam& q) {
  return ToeplitzKernel::geometric(q.value(), 1.0);
}

TruncatedSequence apply_toeplitz(const ToeplitzKernel& k, const TruncatedSequence& x) {
  const auto xs = x.values();
  const std::size_t n = xs.size();
  std::vector<double> y(n, 0.0);
  if (k.is_geometric()) {
    const auto [r, s] = k.geometric_params();
    double tail = 0.0;  // sum_{j>=i} r^{j-i} x_j
    for (std::size_t i = n; i-- > 0;) {
      tail = xs[i] + r * tail;
      y[i] = s * tail;
    }
  } else {
    const auto a = k.coeffs();
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t width = std::min(a.size(), n - i);
      CompensatedAccumulator acc;
      for (std::size_t m = 0; m < width; ++m) {
        acc.add(a[m] * xs[i + m]);
      }
      y[i] = acc.value();
    }
  }
  return TruncatedSequence(std::move(y));
}

TruncatedSequence apply_toeplitz_transpose(const ToeplitzKernel& k, const TruncatedSequence& y) {
  const auto ys = y.values();
  const std::size_t n = ys.size();
  std::vector<double> z(n, 0.0);
  if (k.is_geometric()) {
    const auto [r, s] = k.geometric_params();
    double head = 0.0;  // sum_{i<=j} r^{j-i} y_i
    for (std::size_t j = 0; j < n; ++j) {
      head = ys[j] + r * head;
      z[j] = s * head;
    }
  } else {
    const auto a = k.coeffs();
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t width = std::min(a.size(), j + 1);
      CompensatedAccumulator acc;
      for (std::size_t m = width; m-- > 0;) {
        acc.add(a[m] * ys[j - m]);
      }
      z[j] = acc.value();
    }
  }
  return TruncatedSequence(std::move(z));
}

TruncatedSequence apply_qhardy_direct(const QParam& q, const TruncatedSequence& x) {
  const auto xs = x.values();
  const std::size_t n = xs.size();
  const double qv = q.value();
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    CompensatedAccumulator acc;
    double weight = 1.0;  // q^{k-n}
    for (std::size_t k = i; k < n && weight > 0.0; ++k) {
      acc.add(weight * xs[k]);
      weight *= qv;
    }
    y[i] = acc.value();
  }
  return TruncatedSequence(std::move(y));
}

CesaroImage apply_cesaro(const TruncatedSequence& x, std::size_t horizon) {
  if (horizon == 0) {
    throw ArgumentError("Cesàro image needs an explicit positive horizon");
  }
  const auto xs = x.values();
  std::vector<double> y(horizon);
  CompensatedAccumulator running;
  for (std::size_t n = 0; n < horizon; ++n) {
    if (n < xs.size()) {
      running.add(xs[n]);
    }
    y[n] = running.value() / static_cast<double>(n + 1);
  }
  return {TruncatedSequence(std::move(y)), horizon};
}

TruncatedMatrix::TruncatedMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ == 0) {
    throw ArgumentError("matrix dimension must be at least 1");
  }
  if (entries_.size() != n_ * n_) {
    throw ArgumentError(fmt::format("expected {} entries for a {}x{} matrix, got {}", n_ * n_, n_,
                                    n_, entries_.size()));
  }
  for (double v : entries_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw ArgumentError("matrix entries must be finite and nonnegative");
    }
  }
}

TruncatedMatrix TruncatedMatrix::identity(std::size_t n) {
  std::vector<double> e(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    e[i * n + i] = 1.0;
  }
  return TruncatedMatrix(n, std::move(e));
}

double TruncatedMatrix::at(std::size_t i, std::size_t j) const {
  if (i == 0 || j == 0 || i > n_ || j > n_) {
    throw ArgumentError(fmt::format("index ({}, {}) outside 1..{}", i, j, n_));
  }
  return entries_[(i - 1) * n_ + (j - 1)];
}

std::span<const double> TruncatedMatrix::row(std::size_t i) const {
  if (i == 0 || i > n_) {
    throw ArgumentError(fmt::format("row {} outside 1..{}", i, n_));
  }
  return std::span<const double>(entries_).subspan((i - 1) * n_, n_);
}

bool TruncatedMatrix::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](double v) { return v == 0.0; });
}

std::vector<double> TruncatedMatrix::multiply(std::span<const double> x) const {
  if (x.size() != n_) {
    throw ArgumentError("dimension mismatch in matrix-vector product");
  }
  std::vector<double> y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    const double* r = entries_.data() + i * n_;
    double acc = 0.0;
    for (std::size_t j = 0; j < n_; ++j) {
      acc += r[j] * x[j];
    }
    y[i] = acc;
  }
  return y;
}

std::vector<double> TruncatedMatrix::multiply_transpose(std::span<const double> y) const {
  if (y.size() != n_) {
    throw ArgumentError("dimension mismatch in transposed matrix-vector product");
  }
  std::vector<double> z(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    const double* r = entries_.data() + i * n_;
    const double yi = y[i];
    for (std::size_t j = 0; j < n_; ++j) {
      z[j] += r[j] * yi;
    }
  }
  return z;
}

TruncatedMatrix materialize(const ToeplitzKernel& k, std::size_t n) {
  if (n == 0) {
    throw ArgumentError("section size must be at least 1");
  }
  std::vector<double> coeff(n);
  for (std::size_t m = 1; m <= n; ++m) {
    coeff[m - 1] = k.coeff(m);
  }
  std::vector<double> e(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      e[i * n + j] = coeff[j - i];
    }
  }
  return TruncatedMatrix(n, std::move(e));
}

TruncatedMatrix cesaro_section(std::size_t n) {
  if (n == 0) {
    throw ArgumentError("section size must be at least 1");
  }
  std::vector<double> e(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = 1.0 / static_cast<double>(i + 1);
    for (std::size_t j = 0; j <= i; ++j) {
      e[i * n + j] = w;
    }
  }
  return TruncatedMatrix(n, std::move(e));
}

ToeplitzSection::ToeplitzSection(ToeplitzKernel kernel, std::size_t n)
    : kernel_(std::move(kernel)), n_(n) {
  if (n_ == 0) {
    throw ArgumentError("section size must be at least 1");
  }
}

std::vector<double> ToeplitzSection::multiply(std::span<const double> x) const {
  if (x.size() != n_) {
    throw ArgumentError("dimension mismatch in section product");
  }
  // rows 1..N of the operator only see columns 1..N of a vector supported there
  const auto y = apply_toeplitz(kernel_, TruncatedSequence({x.begin(), x.end()}));
  return {y.values().begin(), y.values().end()};
}

std::vector<double> ToeplitzSection::multiply_transpose(std::span<const double> y) const {
  if (y.size() != n_) {
    throw ArgumentError("dimension mismatch in transposed section product");
  }
  const auto z = apply_toeplitz_transpose(kernel_, TruncatedSequence({y.begin(), y.end()}));
  return {z.values().begin(), z.values().end()};
}

}  // namespace lpopnorm
