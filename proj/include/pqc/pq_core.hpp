// pq_core.hpp - (p,q)-calculus primitives: integers, factorials, binomial
// coefficients and the falling product, with log-domain companions for the
// ranges where the direct products leave double range.
#pragma once

namespace pqc {

// Minimum admissible p - q. The divided form (p^n - q^n)/(p - q) is used as a
// test oracle only, but downstream quantities still divide by p - q scale
// factors, so a separation floor keeps everything well conditioned.
inline constexpr double kDefaultSeparationFloor = 1e-12;

// Binomials switch from direct products to log-factorials above this top
// index; below it the direct ratio is both faster and slightly more accurate.
inline constexpr int kBinomialLogCrossover = 40;

/// The base pair of the calculus. Construction enforces 0 < q < p <= 1 with
/// p - q >= separation_floor; values are immutable afterwards.
class PQParams {
 public:
  PQParams(double p, double q, double separation_floor = kDefaultSeparationFloor);

  double p() const { return p_; }
  double q() const { return q_; }

 private:
  double p_;
  double q_;
};

/// [n]_{p,q}, computed as the cancellation-free sum p^{n-1} + p^{n-2} q +
/// ... + q^{n-1}. Empty sum for n = 0.
double pq_integer(int n, const PQParams& params);

/// [n]!_{p,q} = [n][n-1]...[1], with [0]! = 1. Throws std::overflow_error if
/// the running product leaves double range.
double pq_factorial(int n, const PQParams& params);

/// log [n]!_{p,q}; immune to the overflow/underflow of the direct product.
double log_pq_factorial(int n, const PQParams& params);

/// (p,q)-binomial coefficient [n k]. Symmetric in k <-> n-k by construction.
double pq_binomial(int n, int k, const PQParams& params);

/// log [n k]; always goes through log-factorial sums.
double log_pq_binomial(int n, int k, const PQParams& params);

/// prod_{s=0}^{count-1} (p^s - q^s t) for t in [0,1]. Every factor is
/// nonnegative under q < p; result is 1 for count = 0 and exactly 0 when
/// t = 1 and count >= 1.
double falling_product(double t, int count, const PQParams& params);

/// Log-domain value of falling_product together with an exact-zero flag.
/// When is_zero is set, log_value is -infinity.
struct LogProduct {
  double log_value;
  bool is_zero;
};

LogProduct log_falling_product(double t, int count, const PQParams& params);

}  // namespace pqc
