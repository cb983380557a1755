#pragma once

// Foundational numeric types shared by every lpopnorm module: validated
// exponents, the q-parameter, finitely supported sequences, l^p norms and
// compensated summation.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpopnorm {

/// Input outside the mathematical domain of an operation (p <= 1, q >= 1, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Malformed arguments: wrong sizes, negative data where nonnegative is required.
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Input for which an iterative method has nothing to iterate on (zero matrix).
class DegenerateInputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Internal consistency failure that valid preconditions should rule out.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Hölder conjugate p/(p-1). Throws DomainError for p <= 1.
double conjugate_exponent(double p);

/// An exponent p > 1 together with its Hölder conjugate.
class Exponent {
public:
  explicit Exponent(double p);

  double p() const noexcept { return p_; }
  double conj() const noexcept { return conj_; }

private:
  double p_;
  double conj_;
};

/// The q of q-calculus, 0 < q < 1 strictly.
class QParam {
public:
  explicit QParam(double q);

  double value() const noexcept { return q_; }

private:
  double q_;
};

/// A finitely supported real sequence x_1, x_2, ..., x_n with an implicit
/// zero tail. Public indexing is 1-based to match the usual sequence notation;
/// values() exposes the 0-based storage.
class TruncatedSequence {
public:
  TruncatedSequence() = default;
  explicit TruncatedSequence(std::vector<double> values);

  static TruncatedSequence zeros(std::size_t n);
  static TruncatedSequence indicator(std::size_t m);
  static TruncatedSequence unit(std::size_t n);

  /// Length of the stored prefix; every entry past it is zero.
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  /// x_n for n >= 1; zero beyond the stored prefix.
  double at(std::size_t n) const;

  std::span<const double> values() const noexcept { return values_; }

  bool is_nonnegative() const noexcept;
  bool is_zero() const noexcept;
  /// Index of the last nonzero entry (0 for the zero sequence).
  std::size_t support() const noexcept;

  friend bool operator==(const TruncatedSequence&, const TruncatedSequence&) = default;

private:
  std::vector<double> values_;
};

struct ToleranceConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_iter = 20000;
  double tail_threshold = 1e-16;

  /// Throws ArgumentError unless every field is positive.
  void validate() const;
};

/// Neumaier's variant of Kahan summation. Terms are added in the order given.
class CompensatedAccumulator {
public:
  void add(double term) noexcept;
  double value() const noexcept { return sum_ + compensation_; }

private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

double compensated_sum(std::span<const double> terms);

/// (sum |x_n|^p)^(1/p), accumulated in ascending index order. Scaled by the
/// largest magnitude so large p does not overflow.
double lp_norm(std::span<const double> x, double p);
double lp_norm(const TruncatedSequence& x, const Exponent& p);

/// sum |x_n|^p itself (the p-th power of the norm), unscaled.
double lp_power_sum(std::span<const double> x, double p);

}  // namespace lpopnorm
