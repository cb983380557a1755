#pragma once

// Upper-triangular Toeplitz operators on sequences, the q-Hardy operator and
// the Cesàro averaging operator, together with their finite sections.

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "lpopnorm/core.hpp"

namespace lpopnorm {

/// Generating coefficients a_1, a_2, ... of the operator (Ax)_i = sum_{j>=i} a_{j-i+1} x_j.
/// Either an explicit finite list (zero tail) or the geometric family a_m = s r^{m-1}.
class ToeplitzKernel {
public:
  struct Geometric {
    double ratio;
    double scale;
  };

  static ToeplitzKernel explicit_coeffs(std::vector<double> coeffs);
  static ToeplitzKernel geometric(double ratio, double scale = 1.0);

  bool is_geometric() const noexcept { return std::holds_alternative<Geometric>(repr_); }
  const Geometric& geometric_params() const { return std::get<Geometric>(repr_); }
  /// Explicit coefficients; throws for a geometric kernel.
  std::span<const double> coeffs() const;

  /// a_m for m >= 1.
  double coeff(std::size_t m) const;
  /// P_m = a_1 + ... + a_m.
  double partial_sum(std::size_t m) const;
  /// S = sum of all coefficients; s/(1-r) in closed form for geometric kernels.
  double sum() const noexcept { return sum_; }
  /// Number of possibly nonzero coefficients; 0 means unbounded (geometric).
  std::size_t bandwidth() const noexcept;

private:
  explicit ToeplitzKernel(std::variant<std::vector<double>, Geometric> repr);

  std::variant<std::vector<double>, Geometric> repr_;
  std::vector<double> prefix_;  // explicit mode: prefix_[m] = P_m
  double sum_ = 0.0;
};

/// Kernel a_m = q^{m-1}: (Ax)_n = q^{-n} sum_{k>=n} q^k x_k, with S = 1/(1-q).
ToeplitzKernel q_hardy_kernel(const QParam& q);

/// y_i = sum_{j>=i} a_{j-i+1} x_j for i = 1..size(x); rows past the support vanish.
TruncatedSequence apply_toeplitz(const ToeplitzKernel& k, const TruncatedSequence& x);

/// Transpose action: z_j = sum_{i<=j} a_{j-i+1} y_i for j = 1..size(y). Only the
/// first size(y) entries are returned (the full image has unbounded support).
TruncatedSequence apply_toeplitz_transpose(const ToeplitzKernel& k, const TruncatedSequence& y);

/// y_n = q^{-n} sum_{k>=n} q^k x_k, evaluated term by term as sum_{k>=n} q^{k-n} x_k.
TruncatedSequence apply_qhardy_direct(const QParam& q, const TruncatedSequence& x);

/// Image of the Cesàro operator, truncated at an explicit horizon.
struct CesaroImage {
  TruncatedSequence values;
  std::size_t horizon = 0;
};

/// y_n = (1/n) sum_{k<=n} x_k for n = 1..horizon. Throws ArgumentError for a
/// zero horizon.
CesaroImage apply_cesaro(const TruncatedSequence& x, std::size_t horizon);

/// Dense nonnegative N x N matrix, row-major. at() is 1-based.
class TruncatedMatrix {
public:
  TruncatedMatrix(std::size_t n, std::vector<double> entries);

  static TruncatedMatrix identity(std::size_t n);

  std::size_t dim() const noexcept { return n_; }
  double at(std::size_t i, std::size_t j) const;
  std::span<const double> row(std::size_t i) const;
  std::span<const double> entries() const noexcept { return entries_; }
  bool is_zero() const noexcept;

  /// Matrix-vector product on 0-based vectors of length dim().
  std::vector<double> multiply(std::span<const double> x) const;
  std::vector<double> multiply_transpose(std::span<const double> y) const;

private:
  std::size_t n_;
  std::vector<double> entries_;
};

/// entries[i][j] = a_{j-i+1} for j >= i, else 0.
TruncatedMatrix materialize(const ToeplitzKernel& k, std::size_t n);

/// The leading N x N block of the Cesàro matrix, c_{n,k} = 1/n for k <= n.
TruncatedMatrix cesaro_section(std::size_t n);

/// Matrix-free N x N leading block of a Toeplitz operator, same action as
/// materialize(k, N) in O(N) (geometric) or O(N * bandwidth) per product.
class ToeplitzSection {
public:
  ToeplitzSection(ToeplitzKernel kernel, std::size_t n);

  std::size_t dim() const noexcept { return n_; }
  const ToeplitzKernel& kernel() const noexcept { return kernel_; }
  bool is_zero() const noexcept { return false; }  // a_1 > 0

  std::vector<double> multiply(std::span<const double> x) const;
  std::vector<double> multiply_transpose(std::span<const double> y) const;

private:
  ToeplitzKernel kernel_;
  std::size_t n_;
};

}  // namespace lpopnorm
