#include "trapoptics/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace trapoptics {

double bisect(const std::function<double(double)>& f, double lo, double hi, double xtol,
              int max_iter) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0) == (fhi > 0))
    throw std::runtime_error("bisect: endpoints do not bracket a root");
  for (int i = 0; i < max_iter && (hi - lo) > xtol; ++i) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double golden_min(const std::function<double(double)>& f, double lo, double hi, double xtol,
                  int max_iter) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < max_iter && (b - a) > xtol; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

std::vector<double> nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                std::vector<double> start, double scale, double ftol,
                                int max_iter, double* fmin) {
  const size_t n = start.size();
  const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;

  std::vector<std::vector<double>> pts(n + 1, start);
  for (size_t i = 0; i < n; ++i) {
    double step = (start[i] != 0.0) ? scale * std::abs(start[i]) : scale;
    pts[i + 1][i] += step;
  }
  std::vector<double> fv(n + 1);
  for (size_t i = 0; i <= n; ++i) fv[i] = f(pts[i]);

  std::vector<size_t> idx(n + 1);
  for (int iter = 0; iter < max_iter; ++iter) {
    std::iota(idx.begin(), idx.end(), size_t{0});
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return fv[a] < fv[b]; });
    if (std::abs(fv[idx[n]] - fv[idx[0]]) <=
        ftol * (std::abs(fv[idx[0]]) + std::abs(fv[idx[n]]) + 1e-300))
      break;

    // centroid of all but worst
    std::vector<double> cen(n, 0.0);
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k) cen[k] += pts[idx[i]][k] / double(n);

    auto combine = [&](double t) {
      std::vector<double> p(n);
      for (size_t k = 0; k < n; ++k) p[k] = cen[k] + t * (pts[idx[n]][k] - cen[k]);
      return p;
    };

    auto xr = combine(-alpha);
    double fr = f(xr);
    if (fr < fv[idx[0]]) {
      auto xe = combine(-gamma);
      double fe = f(xe);
      if (fe < fr) {
        pts[idx[n]] = xe;
        fv[idx[n]] = fe;
      } else {
        pts[idx[n]] = xr;
        fv[idx[n]] = fr;
      }
    } else if (fr < fv[idx[n - 1]]) {
      pts[idx[n]] = xr;
      fv[idx[n]] = fr;
    } else {
      auto xc = combine(fr < fv[idx[n]] ? -rho : rho);
      double fc = f(xc);
      if (fc < std::min(fr, fv[idx[n]])) {
        pts[idx[n]] = xc;
        fv[idx[n]] = fc;
      } else {
        // shrink toward best
        for (size_t i = 1; i <= n; ++i) {
          for (size_t k = 0; k < n; ++k)
            pts[idx[i]][k] = pts[idx[0]][k] + sigma * (pts[idx[i]][k] - pts[idx[0]][k]);
          fv[idx[i]] = f(pts[idx[i]]);
        }
      }
    }
  }
  size_t best = 0;
  for (size_t i = 1; i <= n; ++i)
    if (fv[i] < fv[best]) best = i;
  if (fmin) *fmin = fv[best];
  return pts[best];
}

OlsFit ols(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::runtime_error("ols: need at least two matched samples");
  const size_t n = x.size();
  double sx = 0, sy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / double(n), my = sy / double(n);
  double sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::runtime_error("ols: degenerate abscissa");
  OlsFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0;
  for (size_t i = 0; i < n; ++i) {
    double r = y[i] - (fit.slope * x[i] + fit.intercept);
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / double(n));
  if (n > 2) {
    double s2 = ss / double(n - 2);
    fit.slope_stderr = std::sqrt(s2 / sxx);
    fit.intercept_stderr = std::sqrt(s2 * (1.0 / double(n) + mx * mx / sxx));
  }
  return fit;
}

double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  if (n < 2) throw std::runtime_error("simpson: need at least 2 intervals");
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace trapoptics
