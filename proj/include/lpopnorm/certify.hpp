#pragma once

// Two-sided bounds on the l^p operator norm of nonnegative matrices and
// upper-triangular Toeplitz operators.
//
// Upper bounds come from the weighted Schur test
//   sum_j a_ij b_ij^{1/p}  <= U1,   sum_i a_ij b_ij^{-1/p'} <= U2
//   =>  ||A||_{p,p} <= U1^{1/p'} U2^{1/p}.
// For a Toeplitz operator with b = 1 this gives U1 = S, U2 <= S, so
// ||A||_{p,p} <= S with no truncation at all. Lower bounds are Rayleigh ratios
// ||Ax||_p / ||x||_p of explicit witnesses: indicator sequences 1_{1..M}
// (ratio -> S as M grows) and the fixed point of the nonlinear power method.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "lpopnorm/core.hpp"
#include "lpopnorm/operators.hpp"

namespace lpopnorm::certify {

/// Positive weights b_ij of the Schur test: either the exact constant 1 or a
/// dense N x N table.
class SchurWeights {
public:
  static SchurWeights constant_one() { return SchurWeights(); }
  static SchurWeights dense(std::size_t n, std::vector<double> weights);

  bool is_constant_one() const noexcept { return n_ == 0; }
  std::size_t dim() const noexcept { return n_; }
  /// b_ij, 0-based.
  double at(std::size_t i, std::size_t j) const noexcept {
    return n_ == 0 ? 1.0 : weights_[i * n_ + j];
  }

private:
  SchurWeights() = default;

  std::size_t n_ = 0;
  std::vector<double> weights_;
};

struct SchurBound {
  double bound = 0.0;
  double U1 = 0.0;
  double U2 = 0.0;
};

/// U1 = max_i sum_j m_ij b_ij^{1/p}, U2 = max_j sum_i m_ij b_ij^{-1/p'},
/// bound = U1^{1/p'} U2^{1/p}.
SchurBound schur_bound(const TruncatedMatrix& m, const SchurWeights& w, const Exponent& p);

/// Closed-form Schur bound with b = 1 on the infinite operator: exactly S.
double toeplitz_schur_bound(const ToeplitzKernel& k, const Exponent& p);

struct IndicatorWitness {
  double ratio = 0.0;
  TruncatedSequence witness;
};

/// Rayleigh ratio of the indicator of {1..M}, computed by applying the operator.
IndicatorWitness indicator_witness(const ToeplitzKernel& k, const Exponent& p, std::size_t M);

/// The same ratio from partial sums alone: rows 1..M of A 1_{1..M} are
/// P_M, ..., P_1, so ratio^p = (1/M) sum_{m<=M} P_m^p. O(M), no witness storage.
double indicator_ratio_closed_form(const ToeplitzKernel& k, const Exponent& p, std::size_t M);

struct BestPossibilitySearch {
  bool found = false;
  std::size_t M = 0;
  double ratio = 0.0;
};

/// Doubles M from 1 until the indicator ratio exceeds S - eps, giving up once
/// M exceeds max_M.
BestPossibilitySearch search_indicator_length(const ToeplitzKernel& k, const Exponent& p, double eps,
                                              std::size_t max_M = 10'000'000);

struct PowerIterationResult {
  double value = 0.0;
  TruncatedSequence witness;  // unit l^p norm
  int iterations = 0;
  /// Rayleigh ratio after each iteration, starting with the all-ones vector.
  std::vector<double> ratios;
  double final_rel_change = 0.0;
};

/// Nonlinear power method x <- normalize(J_{p'}(M^T J_p(M x))), J_r(y) = |y|^{r-1} sign(y),
/// started from the all-ones vector. Every returned value is a valid lower
/// bound on ||m||_{p,p}; on nonnegative matrices the ratios are nondecreasing.
/// Stops once the relative change of the ratio drops below rel_tol or after max_iter.
/// Throws DegenerateInputError for the zero matrix.
PowerIterationResult power_iteration_lower_bound(const TruncatedMatrix& m, const Exponent& p,
                                                 const ToleranceConfig& cfg = {});
/// Matrix-free variant on a Toeplitz finite section.
PowerIterationResult power_iteration_lower_bound(const ToeplitzSection& m, const Exponent& p,
                                                 const ToleranceConfig& cfg = {});

enum class UpperMethod { schur_closed_form, schur_numeric };
enum class LowerMethod { indicator, power_iteration };

std::string to_string(UpperMethod m);
std::string to_string(LowerMethod m);

struct NormCertificate {
  double upper = 0.0;
  double lower = 0.0;
  Exponent p{2.0};
  TruncatedSequence witness;
  UpperMethod method_upper = UpperMethod::schur_closed_form;
  LowerMethod method_lower = LowerMethod::indicator;
  std::size_t N = 0;
  int iterations = 0;
  /// Relative change of the power-method ratio at each iteration.
  std::vector<double> residuals;

  double indicator_lower = 0.0;
  double power_lower = 0.0;

  double gap() const noexcept { return upper - lower; }
};

/// upper = S; lower = the better of the indicator witness on {1..N} and the
/// power method on the N x N section. The two lower bounds run concurrently.
NormCertificate certify_norm(const ToeplitzKernel& k, const Exponent& p, std::size_t N,
                             const ToleranceConfig& cfg = {});

/// Violated certificate invariants, empty when the certificate is sound:
/// 0 <= lower <= upper (1 + 1e-10), nonzero witness, and the witness's
/// Rayleigh ratio under k reproducing lower to 1e-10 relative.
std::vector<std::string> certificate_violations(const NormCertificate& cert, const ToeplitzKernel& k);

struct DiscreteReport {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  double margin = 0.0;
};

/// Both sides of the discrete q-Hardy inequality
///   sum_n (q^{-n} sum_{k>=n} q^k x_k)^p <= (1-q)^{-p} sum_n x_n^p.
/// holds = lhs <= rhs + abs_tol. Throws ArgumentError for negative entries.
DiscreteReport verify_discrete_inequality(const QParam& q, const Exponent& p,
                                          const TruncatedSequence& x, double abs_tol = 1e-14);

}  // namespace lpopnorm::certify
