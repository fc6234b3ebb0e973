#include "trapoptics/surface.hpp"

#include <cmath>

namespace trapoptics {

AsphericSurface::AsphericSurface(double vz, double R, double kappa, std::map<int, double> A,
                                 double semi)
    : vertex_z_(vz), R_(R), kappa_(kappa), A_(std::move(A)), clear_semi_(semi) {
  if (semi <= 0.0) throw std::invalid_argument("clear semi-diameter must be positive");
  for (const auto& [n, a] : A_) {
    (void)a;
    if (n < 4 || n % 2 != 0)
      throw std::invalid_argument("polynomial orders must be even and >= 4");
  }
  // the sag must stay real over the full clear aperture
  if (R_ != 0.0) {
    double rho2 = (clear_semi_ / R_) * (clear_semi_ / R_);
    if ((1.0 + kappa_) * rho2 > 1.0)
      throw std::invalid_argument("conic sag undefined inside the clear aperture");
  }
}

AsphericSurface AsphericSurface::plane(double vertex_z, double clear_semi) {
  return AsphericSurface(vertex_z, 0.0, 0.0, {}, clear_semi);
}

AsphericSurface AsphericSurface::conic(double vertex_z, double R, double kappa,
                                       double clear_semi) {
  if (R == 0.0) throw std::invalid_argument("conic surface needs a nonzero radius");
  return AsphericSurface(vertex_z, R, kappa, {}, clear_semi);
}

AsphericSurface AsphericSurface::asphere(double vertex_z, double R, double kappa,
                                         const std::map<int, double>& coeffs,
                                         double clear_semi) {
  if (R == 0.0) throw std::invalid_argument("asphere needs a nonzero on-axis radius");
  return AsphericSurface(vertex_z, R, kappa, coeffs, clear_semi);
}

void AsphericSurface::check_aperture(double r) const {
  if (r > clear_semi_ * (1.0 + 1e-12))
    throw ApertureError("radius outside clear aperture");
}

double AsphericSurface::sag(double r) const {
  check_aperture(r);
  return sag_unbounded(r);
}

double AsphericSurface::dsag(double r) const {
  check_aperture(r);
  return dsag_unbounded(r);
}

double AsphericSurface::sag_unbounded(double r) const {
  if (R_ == 0.0) return 0.0;
  const double rho = r / R_;
  const double rho2 = rho * rho;
  const double arg = 1.0 - (1.0 + kappa_) * rho2;
  if (arg < 0.0) throw SagDomainError("conic square root argument negative");
  double z = rho2 / (1.0 + std::sqrt(arg));
  for (const auto& [n, a] : A_) z += a * std::pow(rho, n);
  return R_ * z;
}

double AsphericSurface::dsag_unbounded(double r) const {
  if (R_ == 0.0) return 0.0;
  const double c = 1.0 / R_;
  const double arg = 1.0 - (1.0 + kappa_) * c * c * r * r;
  if (arg < 0.0) throw SagDomainError("conic square root argument negative");
  double d = c * r / std::sqrt(arg);  // conic part, exact
  const double rho = r / R_;
  for (const auto& [n, a] : A_) d += a * double(n) * std::pow(rho, n - 1);
  return d;
}

Eigen::Vector3d AsphericSurface::normal(double x, double y) const {
  const double r = std::hypot(x, y);
  if (r == 0.0) return Eigen::Vector3d(0, 0, 1);
  const double m = dsag(r);
  Eigen::Vector3d n(-m * x / r, -m * y / r, 1.0);
  n.normalize();
  return n;
}

}  // namespace trapoptics
