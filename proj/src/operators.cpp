// operators.cpp - basis construction and operator evaluation.
#include "pqc/operators.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pqc/summation.hpp"

namespace pqc {

namespace {

void require_point(double x, double b_n, const char* where) {
  if (!(x >= 0.0) || !(x <= b_n)) {
    std::ostringstream msg;
    msg << where << " requires x in [0, " << b_n << "], got " << x;
    throw std::domain_error(msg.str());
  }
}

void require_k(int k, int top, const char* where) {
  if (k < 0 || k > top) {
    std::ostringstream msg;
    msg << where << " requires k in [0, " << top << "], got " << k;
    throw std::invalid_argument(msg.str());
  }
}

// Weight scale shared by the x = 0 and x = b_n boundary masses:
// p^{mn + m(m-1)/2}, which is 1 at m = 0.
double boundary_mass(const OperatorConfig& cfg) {
  const int c = cfg.m * cfg.n + cfg.m * (cfg.m - 1) / 2;
  return std::pow(cfg.params.p(), static_cast<double>(c));
}

}  // namespace

OperatorConfig::OperatorConfig(int n_, int m_, int alpha_, int beta_, double b_n_,
                               PQParams params_)
    : n(n_), m(m_), alpha(alpha_), beta(beta_), b_n(b_n_), params(params_) {
  if (n < 1) throw std::invalid_argument("operator degree n must be >= 1");
  if (m < 0) throw std::invalid_argument("shift m must be >= 0");
  if (alpha < 0 || beta < alpha) {
    throw std::invalid_argument("node shifts require 0 <= alpha <= beta");
  }
  if (!(b_n > 0.0)) throw std::invalid_argument("interval scale b_n must be > 0");
}

double node(int k, const OperatorConfig& config) {
  require_k(k, config.n + config.m, "node");
  const double bracket_k = pq_integer(k, config.params);
  const double bracket_n = pq_integer(config.n, config.params);
  const double shift = std::pow(config.params.p(), static_cast<double>(config.n - k));
  return (shift * bracket_k + config.alpha) / (bracket_n + config.beta) * config.b_n;
}

double max_node(const OperatorConfig& config) {
  double best = 0.0;
  for (int k = 0; k <= config.n + config.m; ++k) {
    best = std::max(best, node(k, config));
  }
  return best;
}

double raw_weight(int k, double x, const OperatorConfig& config) {
  const int top = config.n + config.m;
  require_k(k, top, "raw_weight");
  require_point(x, config.b_n, "raw_weight");
  const double t = x / config.b_n;
  if (t == 0.0) return k == 0 ? boundary_mass(config) : 0.0;
  if (t == 1.0) return k == top ? boundary_mass(config) : 0.0;
  const double lp = std::log(config.params.p());
  const double log_w = 0.5 * (static_cast<double>(k) * (k - 1) -
                              static_cast<double>(config.n) * (config.n - 1)) *
                           lp +
                       log_pq_binomial(top, k, config.params) +
                       static_cast<double>(k) * std::log(t) +
                       log_falling_product(t, top - k, config.params).log_value;
  return std::exp(log_w);
}

BasisExpansion basis(double x, const OperatorConfig& config, NormalizationMode mode) {
  const int top = config.n + config.m;
  require_point(x, config.b_n, "basis");
  const double t = x / config.b_n;

  BasisExpansion out;
  out.x = x;
  out.mode = mode;
  out.weights.resize(static_cast<std::size_t>(top) + 1);
  out.nodes.resize(static_cast<std::size_t>(top) + 1);

  if (t == 0.0 || t == 1.0) {
    for (auto& w : out.weights) w = 0.0;
    out.weights[t == 0.0 ? 0 : static_cast<std::size_t>(top)] = boundary_mass(config);
  } else {
    // One pass of [j] builds the log-factorial prefix; each weight is then a
    // handful of table lookups.
    std::vector<double> log_fact(static_cast<std::size_t>(top) + 1, 0.0);
    double bracket = 0.0;
    double ppow = 1.0;
    for (int j = 1; j <= top; ++j) {
      bracket = config.params.q() * bracket + ppow;
      ppow *= config.params.p();
      log_fact[static_cast<std::size_t>(j)] =
          log_fact[static_cast<std::size_t>(j - 1)] + std::log(bracket);
    }
    const double lp = std::log(config.params.p());
    const double lt = std::log(t);
    for (int k = 0; k <= top; ++k) {
      const double log_binom = log_fact[static_cast<std::size_t>(top)] -
                               log_fact[static_cast<std::size_t>(k)] -
                               log_fact[static_cast<std::size_t>(top - k)];
      const double log_w = 0.5 * (static_cast<double>(k) * (k - 1) -
                                  static_cast<double>(config.n) * (config.n - 1)) *
                               lp +
                           log_binom + static_cast<double>(k) * lt +
                           log_falling_product(t, top - k, config.params).log_value;
      out.weights[static_cast<std::size_t>(k)] = std::exp(log_w);
    }
  }

  CompensatedSum sum;
  for (double w : out.weights) sum.add(w);
  out.raw_sum = sum.value();
  if (!(out.raw_sum > 0.0)) {
    std::ostringstream msg;
    msg << "degenerate basis: raw weight sum underflowed to " << out.raw_sum
        << " (n=" << config.n << " m=" << config.m << " p=" << config.params.p()
        << " q=" << config.params.q() << " x=" << x << ")";
    throw std::runtime_error(msg.str());
  }
  if (mode == NormalizationMode::SumNormalized) {
    for (auto& w : out.weights) w /= out.raw_sum;
  }

  for (int k = 0; k <= top; ++k) {
    out.nodes[static_cast<std::size_t>(k)] = node(k, config);
  }
  return out;
}

double evaluate(const TargetFunction& f, double x, const OperatorConfig& config,
                NormalizationMode mode) {
  const BasisExpansion expansion = basis(x, config, mode);
  CompensatedSum acc;
  for (std::size_t k = 0; k < expansion.weights.size(); ++k) {
    double value = 0.0;
    try {
      value = f.eval(expansion.nodes[k]);
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << "target function failed at node k=" << k << " (t=" << expansion.nodes[k]
          << "): " << e.what();
      throw std::runtime_error(msg.str());
    }
    if (!std::isfinite(value)) {
      std::ostringstream msg;
      msg << "target function returned non-finite value at node k=" << k
          << " (t=" << expansion.nodes[k] << ")";
      throw std::runtime_error(msg.str());
    }
    acc.add(expansion.weights[k] * value);
  }
  return acc.value();
}

double classical_stancu_chlodowsky(const TargetFunction& f, double x, int n,
                                   int alpha, int beta, double b_n) {
  if (n < 1) throw std::invalid_argument("degree n must be >= 1");
  if (alpha < 0 || beta < alpha) {
    throw std::invalid_argument("node shifts require 0 <= alpha <= beta");
  }
  if (!(b_n > 0.0)) throw std::invalid_argument("interval scale b_n must be > 0");
  require_point(x, b_n, "classical_stancu_chlodowsky");
  const double u = x / b_n;
  CompensatedSum acc;
  double coeff = 1.0;  // C(n, k) by multiplicative recurrence
  for (int k = 0; k <= n; ++k) {
    const double weight =
        coeff * std::pow(u, static_cast<double>(k)) * std::pow(1.0 - u, static_cast<double>(n - k));
    const double t = (static_cast<double>(k) + alpha) / (static_cast<double>(n) + beta) * b_n;
    acc.add(weight * f.eval(t));
    coeff *= static_cast<double>(n - k) / static_cast<double>(k + 1);
  }
  return acc.value();
}

}  // namespace pqc
