#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace bml {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // a-posteriori estimate
};

namespace detail {

// Gauss-Kronrod 7-15 nodes on [-1, 1] (QUADPACK values).
inline constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kGK15WeightsK[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kGK15WeightsG[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename F>
inline void gk15(const F& f, double a, double b, double& result,
                 double& err) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double resk = 0.0, resg = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double dx = h * kGK15Nodes[i];
    double fv;
    if (i == 7) {
      fv = f(c);
      resk += kGK15WeightsK[i] * fv;
      resg += kGK15WeightsG[3] * fv;
    } else {
      fv = f(c - dx) + f(c + dx);
      resk += kGK15WeightsK[i] * fv;
      if (i % 2 == 1) resg += kGK15WeightsG[i / 2] * fv;
    }
  }
  result = resk * h;
  err = std::abs((resk - resg) * h);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration on [a, b] with interval bisection
/// until the local error estimates sum below tol.
template <typename F>
inline QuadratureResult integrate_adaptive(const F& f, double a, double b,
                                           double tol = 1e-12,
                                           int max_depth = 52) {
  struct Seg {
    double a, b, value, err;
    int depth;
  };
  double v0, e0;
  detail::gk15(f, a, b, v0, e0);
  std::vector<Seg> stack{{a, b, v0, e0, 0}};
  double total = 0.0, toterr = 0.0;
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    if (s.err < tol * 0.5 * (std::abs(s.value) + 1.0) / (1 << std::min(s.depth, 20)) ||
        s.err < 1e-16 * (1.0 + std::abs(s.value)) || s.depth >= max_depth) {
      total += s.value;
      toterr += s.err;
      continue;
    }
    const double m = 0.5 * (s.a + s.b);
    double vl, el, vr, er;
    detail::gk15(f, s.a, m, vl, el);
    detail::gk15(f, m, s.b, vr, er);
    if (el + er >= s.err && s.depth > 30) {  // refinement stalled
      total += s.value;
      toterr += s.err;
      continue;
    }
    stack.push_back({s.a, m, vl, el, s.depth + 1});
    stack.push_back({m, s.b, vr, er, s.depth + 1});
  }
  return {total, toterr};
}

/// Trapezoid rule for periodic integrands over one full period.
template <typename F>
inline double integrate_periodic(const F& f, double period, int n) {
  double sum = 0.0;
  const double h = period / n;
  for (int i = 0; i < n; ++i) sum += f(i * h);
  return sum * h;
}

/// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
inline void gauss_legendre(int n, std::vector<double>& nodes,
                           std::vector<double>& weights) {
  nodes.resize(n);
  weights.resize(n);
  const double pi = 3.14159265358979323846;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double p1 = 0.0;
    for (int it = 0; it < 100; ++it) {
      p1 = 1.0;
      double p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * x * p2 - j * p3) / (j + 1.0);
      }
      const double dp = n * (x * p1 - p2) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        p1 = 1.0;
        p2 = 0.0;
        for (int j = 0; j < n; ++j) {
          const double p3 = p2;
          p2 = p1;
          p1 = ((2.0 * j + 1.0) * x * p2 - j * p3) / (j + 1.0);
        }
        break;
      }
    }
    const double dp = n * (x * p1 - gl_prev(n, x, p1)) / (x * x - 1.0);
    (void)dp;
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    // weight = 2 / ((1 - x^2) P_n'(x)^2)
    double pm1 = 1.0, pm2 = 0.0;
    for (int j = 0; j < n; ++j) {
      const double p3 = pm2;
      pm2 = pm1;
      pm1 = ((2.0 * j + 1.0) * x * pm2 - j * p3) / (j + 1.0);
    }
    const double deriv = n * (x * pm1 - pm2) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * deriv * deriv);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

namespace detail {}  // namespace detail

}  // namespace bml
