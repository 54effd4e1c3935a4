// operators.hpp - the Chlodowsky variant of the (p,q) Bernstein-Stancu-Schurer
// operator: basis weights, sample nodes, full evaluation, and the classical
// p,q -> 1 comparator.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pqc/pq_core.hpp"

namespace pqc {

/// Operator parameters. n is the degree, m the Schurer shift extending the
/// sample set to n+m+1 points, alpha/beta the node shifts, b_n the interval
/// stretch: the operator acts on [0, b_n].
struct OperatorConfig {
  OperatorConfig(int n, int m, int alpha, int beta, double b_n, PQParams params);

  int n;
  int m;
  int alpha;
  int beta;
  double b_n;
  PQParams params;
};

// Raw keeps the defining prefactor exactly as written, in which case the
// weights sum to p^{mn + m(m-1)/2} rather than 1 whenever m > 0.
// SumNormalized divides by the measured sum, restoring the partition of
// unity that every moment identity and error bound assumes.
enum class NormalizationMode { Raw, SumNormalized };

/// All weights and nodes for one evaluation point.
struct BasisExpansion {
  double x;
  std::vector<double> weights;
  std::vector<double> nodes;
  double raw_sum;  // sum of the raw weights, recorded in both modes
  NormalizationMode mode;
};

struct LipschitzClass {
  double constant;  // M
  double exponent;  // gamma in (0, 1]
};

/// An evaluable scalar function plus optional smoothness metadata. The
/// metadata fields are upper bounds valid on the function's declared domain;
/// derivative may be null, in which case consumers fall back to finite
/// differences.
struct TargetFunction {
  std::function<double(double)> eval;
  std::function<double(double)> derivative;
  std::optional<LipschitzClass> lipschitz;
  std::optional<double> derivative_bound;
  std::optional<double> vanishes_beyond;
  std::string name;

  double operator()(double t) const { return eval(t); }
};

/// Sample node t_k = (p^{n-k} [k] + alpha) / ([n] + beta) * b_n. The exponent
/// n-k goes negative for k > n, so nodes may exceed b_n.
double node(int k, const OperatorConfig& config);

/// Largest node; functions passed to evaluate must be defined up to here.
double max_node(const OperatorConfig& config);

/// Unnormalized basis weight w_k(x), computed in the log domain with exact
/// zeros at the x = 0 and x = b_n boundaries.
double raw_weight(int k, double x, const OperatorConfig& config);

/// All weights and nodes at x. Throws std::runtime_error if the raw weight
/// sum underflows to zero (degenerate basis; never silently normalized).
BasisExpansion basis(double x, const OperatorConfig& config, NormalizationMode mode);

/// Applies the operator to f at x: sum_k w_k(x) f(t_k) accumulated in
/// ascending k with compensated summation. Failures of f are rethrown with
/// the offending node index.
double evaluate(const TargetFunction& f, double x, const OperatorConfig& config,
                NormalizationMode mode);

/// The p,q -> 1, m = 0 comparator: classical Bernstein weights on [0, b_n]
/// with nodes (k + alpha)/(n + beta) * b_n.
double classical_stancu_chlodowsky(const TargetFunction& f, double x, int n,
                                   int alpha, int beta, double b_n);

}  // namespace pqc
