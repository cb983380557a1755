#pragma once

// q-calculus primitives on the geometric grid {q^k x0}: the q-bracket, the
// Jackson integral, the two sides of the weighted q-Hardy integral inequality
// and its rewriting as a discrete Toeplitz inequality.

#include <cstddef>
#include <functional>
#include <vector>

#include "lpopnorm/core.hpp"

namespace lpopnorm::qcalc {

/// [alpha]_q = (1 - q^alpha) / (1 - q).
double q_bracket(double alpha, const QParam& q);

enum class TailMode { zero, geometric_extrapolate };

/// Samples f(q^k * base) for k = 0..K.
class GridFunction {
public:
  GridFunction(double base, QParam q, std::vector<double> samples, TailMode tail = TailMode::zero);

  /// Samples an analytic f on the grid. K = samples - 1.
  static GridFunction sample(const std::function<double(double)>& f, double base, QParam q,
                             std::size_t count, TailMode tail = TailMode::zero);

  double base() const noexcept { return base_; }
  const QParam& q() const noexcept { return q_; }
  TailMode tail_mode() const noexcept { return tail_; }
  std::span<const double> samples() const noexcept { return samples_; }
  /// Largest grid index K.
  std::size_t last_index() const noexcept { return samples_.size() - 1; }
  /// Grid point q^k * base.
  double node(std::size_t k) const;

  bool is_nonnegative() const noexcept;

private:
  double base_;
  QParam q_;
  std::vector<double> samples_;
  TailMode tail_;
};

/// Smallest K with q^K * fmax < tail_threshold.
std::size_t default_truncation(const QParam& q, double fmax, double tail_threshold = 1e-16);

struct JacksonResult {
  double value = 0.0;
  /// Bound on the omitted part of the series. Zero in TailMode::zero, where f
  /// is taken to vanish past index K; infinite when the geometric
  /// extrapolation ratio is not below 1 in magnitude.
  double tail_residual = 0.0;
};

/// (1 - q) * base * sum_{k=0}^{K} q^k f(q^k base).
JacksonResult jackson_integral(const GridFunction& f, std::size_t K);

/// Parameters of the weighted q-Hardy inequality: p > 1, alpha < 1 - 1/p.
class HardyParams {
public:
  HardyParams(Exponent p, double alpha, QParam q);

  const Exponent& p() const noexcept { return p_; }
  double alpha() const noexcept { return alpha_; }
  const QParam& q() const noexcept { return q_; }
  /// 1 - 1/p - alpha, strictly positive.
  double bracket_argument() const noexcept { return 1.0 - 1.0 / p_.p() - alpha_; }

private:
  Exponent p_;
  double alpha_;
  QParam q_;
};

struct InequalitySides {
  double lhs = 0.0;
  double rhs = 0.0;

  double margin() const noexcept { return rhs - lhs; }
  /// lhs <= rhs + abs_tol.
  bool holds(double abs_tol) const noexcept { return lhs <= rhs + abs_tol; }
  /// lhs <= rhs - max(abs_tol, 1e-12 rhs): strict with a floating-point margin.
  bool strictly_holds(double abs_tol) const noexcept;
};

/// Both sides of
///   int_0^1 x^{p(alpha-1)} (int_0^x t^{-alpha} f(t) d_q t)^p d_q x
///     <= [1 - 1/p - alpha]_q^{-p} int_0^1 f^p d_q t
/// with every Jackson sum truncated at grid index K (f treated as zero past K).
/// Requires f on [0, 1] (base 1), nonnegative samples.
InequalitySides theorem1_sides(const GridFunction& f, const HardyParams& params, std::size_t K);

/// The integral inequality rewritten as the discrete q-Hardy inequality with
/// q replaced by q_eff = q^{1 - 1/p - alpha}.
///
/// c_j = q^{j/p} f(q^j) for grid index j = 0..K, stored 1-based as c_1..c_{K+1};
/// shifting the start index does not change either side. With this c,
///   lhs = (1-q)^{p+1} sum_n (sum_{j>=n} q_eff^{j-n} c_j)^p
///   rhs = (1-q)^{p+1} (1-q_eff)^{-p} sum_j c_j^p
/// reproduce theorem1_sides exactly.
struct DiscreteReduction {
  double q_eff = 0.0;
  TruncatedSequence c;
};

DiscreteReduction reduce_theorem1_to_discrete(const GridFunction& f, const HardyParams& params,
                                              std::size_t K);
DiscreteReduction reduce_theorem1_to_discrete(const GridFunction& f, const HardyParams& params);

/// Evaluates the two discrete forms of a reduction (see DiscreteReduction).
InequalitySides reduced_sides(const DiscreteReduction& reduction, const HardyParams& params);

}  // namespace lpopnorm::qcalc
