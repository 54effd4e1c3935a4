// pq_core.cpp - (p,q)-calculus primitives.
#include "pqc/pq_core.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace pqc {

namespace {

void require_index(int n, const char* what) {
  if (n < 0) {
    std::ostringstream msg;
    msg << what << " must be nonnegative, got " << n;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

PQParams::PQParams(double p, double q, double separation_floor) : p_(p), q_(q) {
  if (!(p > 0.0) || !(p <= 1.0) || !(q > 0.0) || !(q < 1.0)) {
    std::ostringstream msg;
    msg << "require 0 < q < 1 and 0 < p <= 1, got p=" << p << " q=" << q;
    throw std::invalid_argument(msg.str());
  }
  if (!(q < p) || !(p - q >= separation_floor)) {
    std::ostringstream msg;
    msg << "require q < p with p - q >= " << separation_floor << ", got p=" << p
        << " q=" << q;
    throw std::invalid_argument(msg.str());
  }
}

double pq_integer(int n, const PQParams& params) {
  require_index(n, "n");
  // [k+1] = q [k] + p^k builds the summed form with positive terms only.
  double bracket = 0.0;
  double ppow = 1.0;
  for (int k = 0; k < n; ++k) {
    bracket = params.q() * bracket + ppow;
    ppow *= params.p();
  }
  return bracket;
}

double pq_factorial(int n, const PQParams& params) {
  require_index(n, "n");
  double fact = 1.0;
  double bracket = 0.0;
  double ppow = 1.0;
  for (int j = 1; j <= n; ++j) {
    bracket = params.q() * bracket + ppow;
    ppow *= params.p();
    fact *= bracket;
    if (!std::isfinite(fact)) {
      std::ostringstream msg;
      msg << "(p,q)-factorial overflows double range at n=" << j;
      throw std::overflow_error(msg.str());
    }
  }
  return fact;
}

double log_pq_factorial(int n, const PQParams& params) {
  require_index(n, "n");
  double sum = 0.0;
  double bracket = 0.0;
  double ppow = 1.0;
  for (int j = 1; j <= n; ++j) {
    bracket = params.q() * bracket + ppow;
    ppow *= params.p();
    sum += std::log(bracket);
  }
  return sum;
}

double pq_binomial(int n, int k, const PQParams& params) {
  require_index(n, "n");
  if (k < 0 || k > n) {
    std::ostringstream msg;
    msg << "binomial index k=" << k << " outside [0, " << n << "]";
    throw std::invalid_argument(msg.str());
  }
  const int kk = (k < n - k) ? k : n - k;  // exact k <-> n-k symmetry
  if (kk == 0) return 1.0;
  if (n <= kBinomialLogCrossover) {
    double out = 1.0;
    for (int j = 1; j <= kk; ++j) {
      out *= pq_integer(n - kk + j, params) / pq_integer(j, params);
    }
    return out;
  }
  return std::exp(log_pq_binomial(n, k, params));
}

double log_pq_binomial(int n, int k, const PQParams& params) {
  require_index(n, "n");
  if (k < 0 || k > n) {
    std::ostringstream msg;
    msg << "binomial index k=" << k << " outside [0, " << n << "]";
    throw std::invalid_argument(msg.str());
  }
  const int kk = (k < n - k) ? k : n - k;
  if (kk == 0) return 0.0;
  double sum = 0.0;
  double bracket = 0.0;
  double ppow = 1.0;
  std::vector<double> logs(static_cast<std::size_t>(kk) + 1, 0.0);
  for (int j = 1; j <= n; ++j) {
    bracket = params.q() * bracket + ppow;
    ppow *= params.p();
    const double lb = std::log(bracket);
    if (j <= kk) logs[static_cast<std::size_t>(j)] = lb;
    if (j > n - kk) sum += lb;  // numerator tail [n-kk+1] ... [n]
  }
  for (int j = 1; j <= kk; ++j) sum -= logs[static_cast<std::size_t>(j)];
  return sum;
}

double falling_product(double t, int count, const PQParams& params) {
  require_index(count, "count");
  if (!(t >= 0.0) || !(t <= 1.0)) {
    std::ostringstream msg;
    msg << "falling_product requires t in [0,1], got " << t;
    throw std::domain_error(msg.str());
  }
  double out = 1.0;
  double ps = 1.0;
  double qs = 1.0;
  for (int s = 0; s < count; ++s) {
    out *= ps - qs * t;
    ps *= params.p();
    qs *= params.q();
  }
  return out;
}

LogProduct log_falling_product(double t, int count, const PQParams& params) {
  require_index(count, "count");
  if (!(t >= 0.0) || !(t <= 1.0)) {
    std::ostringstream msg;
    msg << "log_falling_product requires t in [0,1], got " << t;
    throw std::domain_error(msg.str());
  }
  if (count >= 1 && t == 1.0) {
    // The s = 0 factor 1 - t vanishes exactly; no other factor can.
    return {-std::numeric_limits<double>::infinity(), true};
  }
  // p^s - q^s t = p^s (1 - t (q/p)^s); summing the analytic p-power part
  // separately keeps each log1p argument well inside (-1, 0].
  const double lp = std::log(params.p());
  const double ratio = params.q() / params.p();
  double rs = 1.0;
  double acc = 0.5 * static_cast<double>(count) * static_cast<double>(count - 1) * lp;
  for (int s = 0; s < count; ++s) {
    acc += std::log1p(-t * rs);
    rs *= ratio;
  }
  return {acc, false};
}

}  // namespace pqc
