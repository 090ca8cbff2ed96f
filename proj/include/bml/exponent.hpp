#pragma once

#include <cmath>
#include <stdexcept>

namespace bml {

/// Conjugate-exponent bookkeeping threaded through every constant and
/// special-function evaluation.  p* = max(p, q) with 1/p + 1/q = 1, and
/// alpha_p = p (1 - 1/p*)^(p-1) is the normalizing factor of the
/// biconcave majorant.
struct ExponentContext {
  double p;
  double q;
  double p_star;
  double alpha_p;

  explicit ExponentContext(double p_in) {
    if (!(p_in > 1.0))
      throw std::domain_error("ExponentContext: requires p > 1");
    p = p_in;
    q = p_in / (p_in - 1.0);
    p_star = p_in >= q ? p_in : q;
    alpha_p = p_in * std::pow(1.0 - 1.0 / p_star, p_in - 1.0);
  }
};

inline double p_star(double p) {
  if (!(p > 1.0)) throw std::domain_error("p_star: requires p > 1");
  const double q = p / (p - 1.0);
  return p >= q ? p : q;
}

}  // namespace bml
