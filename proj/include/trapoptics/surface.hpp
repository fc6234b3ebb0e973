// Rotationally symmetric refracting surfaces: plane, conic, and polynomial
// asphere z(r) = R*[rho^2/(1+sqrt(1-(1+kappa) rho^2)) + sum A_n rho^n] with
// rho = r/R (the polynomial sum shares the leading R scale). R is signed:
// positive when the center of curvature lies downstream (+z) of the vertex.
#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace trapoptics {

class SagDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ApertureError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class AsphericSurface {
 public:
  // planar surface (R = 0 sentinel)
  static AsphericSurface plane(double vertex_z, double clear_semi);
  // pure conic (sphere when kappa = 0, parabola when kappa = -1)
  static AsphericSurface conic(double vertex_z, double R, double kappa, double clear_semi);
  // full polynomial asphere; coeffs maps even order n (4..16) -> A_n
  static AsphericSurface asphere(double vertex_z, double R, double kappa,
                                 const std::map<int, double>& coeffs, double clear_semi);

  double sag(double r) const;        // mm; throws SagDomainError / ApertureError
  double dsag(double r) const;       // dz/dr
  // evaluation without the clear-aperture bound; the ray intersector needs it
  // because Newton iterates may step outside the aperture before converging
  // back in (the aperture is enforced at the converged hit only)
  double sag_unbounded(double r) const;
  double dsag_unbounded(double r) const;
  Eigen::Vector3d normal(double x, double y) const;  // unit, positive z component

  bool is_plane() const { return R_ == 0.0; }
  double vertex_z() const { return vertex_z_; }
  double radius() const { return R_; }
  double kappa() const { return kappa_; }
  double clear_semi() const { return clear_semi_; }
  const std::map<int, double>& coefficients() const { return A_; }

 private:
  AsphericSurface(double vz, double R, double kappa, std::map<int, double> A, double semi);
  void check_aperture(double r) const;

  double vertex_z_ = 0.0;
  double R_ = 0.0;  // 0 = plane
  double kappa_ = 0.0;
  std::map<int, double> A_;
  double clear_semi_ = 0.0;
};

}  // namespace trapoptics
