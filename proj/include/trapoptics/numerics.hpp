// Small numerical utilities shared across modules: bracketed root finding,
// 1-D minimization, a deterministic Nelder-Mead simplex, ordinary least
// squares, and trapezoid/Simpson quadrature helpers.
#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace trapoptics {

struct OlsFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  double intercept_stderr = 0.0;
  double residual_rms = 0.0;
};

// bisection on [lo, hi]; f(lo) and f(hi) must bracket a sign change
double bisect(const std::function<double(double)>& f, double lo, double hi, double xtol = 1e-14,
              int max_iter = 200);

// golden-section minimization of a unimodal function on [lo, hi]
double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  double xtol = 1e-10, int max_iter = 300);

// deterministic Nelder-Mead; returns best point, sets fmin if nonnull
std::vector<double> nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                std::vector<double> start, double scale = 0.1,
                                double ftol = 1e-15, int max_iter = 5000,
                                double* fmin = nullptr);

// OLS of y = slope*x + intercept with standard errors from residual variance
OlsFit ols(const std::vector<double>& x, const std::vector<double>& y);

// composite Simpson integration of f over [a, b] with n (even) intervals
double simpson(const std::function<double(double)>& f, double a, double b, int n);

}  // namespace trapoptics
