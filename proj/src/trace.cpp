#include "trapoptics/trace.hpp"

#include <cmath>
#include <limits>

#include "trapoptics/numerics.hpp"

namespace trapoptics {

bool refract_direction(const Eigen::Vector3d& incident, const Eigen::Vector3d& normal, double n1,
                       double n2, Eigen::Vector3d* transmitted) {
  Eigen::Vector3d n = normal;
  double ci = -incident.dot(n);
  if (ci < 0) {  // flip the normal to face the incoming ray
    n = -n;
    ci = -ci;
  }
  const double eta = n1 / n2;
  const double k = 1.0 - eta * eta * (1.0 - ci * ci);
  if (k < 0.0) return false;  // total internal reflection
  *transmitted = (eta * incident + (eta * ci - std::sqrt(k)) * n).normalized();
  return true;
}

bool intersect_surface(const AsphericSurface& s, Ray* ray) {
  const Eigen::Vector3d& p = ray->origin;
  const Eigen::Vector3d& d = ray->direction;
  if (std::abs(d.z()) < 1e-15) return false;

  double t = (s.vertex_z() - p.z()) / d.z();  // planar first guess
  for (int it = 0; it < 64; ++it) {
    const double x = p.x() + t * d.x();
    const double y = p.y() + t * d.y();
    const double z = p.z() + t * d.z();
    const double r = std::hypot(x, y);
    double sag, dsag;
    try {
      sag = s.sag_unbounded(r);
      dsag = s.dsag_unbounded(r);
    } catch (const std::exception&) {
      return false;
    }
    const double g = z - (s.vertex_z() + sag);
    const double rdot = (r > 0) ? (x * d.x() + y * d.y()) / r : 0.0;
    const double gdot = d.z() - dsag * rdot;
    if (std::abs(gdot) < 1e-18) return false;
    const double step = g / gdot;
    t -= step;
    if (std::abs(step) < 1e-13 * (1.0 + std::abs(t))) {
      if (t < -1e-9) return false;  // surface behind the ray
      const double xf = p.x() + t * d.x();
      const double yf = p.y() + t * d.y();
      if (std::hypot(xf, yf) > s.clear_semi()) return false;
      ray->origin = p + t * d;
      return true;
    }
  }
  return false;
}

void trace_ray(const OpticalAssembly& assembly, Ray* ray) {
  for (const auto& itf : assembly.interfaces()) {
    if (!ray->alive) return;
    const Eigen::Vector3d before = ray->origin;
    if (!intersect_surface(itf.surface, ray)) {
      ray->alive = false;
      return;
    }
    ray->optical_path += itf.n_in * (ray->origin - before).norm();
    Eigen::Vector3d n = itf.surface.normal(ray->origin.x(), ray->origin.y());
    Eigen::Vector3d out;
    if (!refract_direction(ray->direction, n, itf.n_in, itf.n_out, &out)) {
      ray->alive = false;
      return;
    }
    ray->direction = out;
  }
}

std::vector<Ray> meridional_fan(double na, int n_rays) {
  std::vector<Ray> fan;
  fan.reserve(n_rays);
  const double s0 = 1e-6;  // skip the exactly-axial ray; it carries no annulus weight
  for (int i = 0; i < n_rays; ++i) {
    const double s = s0 + (na - s0) * double(i) / double(n_rays - 1);
    Ray r;
    r.direction = Eigen::Vector3d(s, 0.0, std::sqrt(1.0 - s * s));
    fan.push_back(r);
  }
  return fan;
}

std::vector<Ray> trace_fan(const OpticalAssembly& assembly, std::vector<Ray> fan) {
  for (auto& r : fan) trace_ray(assembly, &r);
  return fan;
}

FanStats collimation_stats(const std::vector<Ray>& rays) {
  FanStats st;
  st.total = int(rays.size());
  for (const auto& r : rays)
    if (r.alive) ++st.alive;
  // a collimation figure only makes sense for a fully surviving fan; a clipped
  // fan reads as "infinitely bad" so focus searches steer away from it
  if (st.alive < st.total || st.total == 0) {
    st.direction_rms_urad = std::numeric_limits<double>::infinity();
    return st;
  }
  double acc = 0;
  for (const auto& r : rays) {
    double ang = std::atan2(std::hypot(r.direction.x(), r.direction.y()), r.direction.z());
    if (r.direction.x() < 0) ang = -ang;
    acc += ang * ang;
  }
  st.direction_rms_urad = std::sqrt(acc / double(st.total)) * 1e6;
  return st;
}

double spot_rms_at(const std::vector<Ray>& rays, const std::vector<double>& src_sine, double z) {
  double wsum = 0, acc = 0;
  for (size_t i = 0; i < rays.size(); ++i) {
    if (!rays[i].alive) continue;
    const auto& r = rays[i];
    const double t = (z - r.origin.z()) / r.direction.z();
    const double x = r.origin.x() + t * r.direction.x();
    acc += src_sine[i] * x * x;
    wsum += src_sine[i];
  }
  return wsum > 0 ? std::sqrt(acc / wsum) : 0.0;
}

double best_focus_z(const std::vector<Ray>& rays, const std::vector<double>& src_sine, double z_lo,
                    double z_hi) {
  return golden_min([&](double z) { return spot_rms_at(rays, src_sine, z); }, z_lo, z_hi, 1e-9,
                    300);
}

std::vector<PupilSample> direction_pupil(const std::vector<Ray>& rays,
                                         const std::vector<double>& src_sine, double z) {
  std::vector<PupilSample> out;
  out.reserve(rays.size());
  for (size_t i = 0; i < rays.size(); ++i) {
    PupilSample ps;
    ps.src_sine = src_sine[i];
    ps.alive = rays[i].alive;
    if (rays[i].alive) {
      const auto& r = rays[i];
      const double t = (z - r.origin.z()) / r.direction.z();
      const double x = r.origin.x() + t * r.direction.x();
      ps.L = r.direction.x();
      // optical path continued to the plane (air), Legendre-transformed to
      // direction space so the phase reads against the on-axis focal point
      ps.eikonal = r.optical_path + t - ps.L * x;
    }
    out.push_back(ps);
  }
  return out;
}

double autofocus_working_distance(const OpticalAssembly& assembly, double wd_lo, double wd_hi,
                                  int n_rays) {
  auto base_fan = meridional_fan(assembly.object_na(), n_rays);
  auto objective = [&](double wd) {
    auto a = assembly.with_working_distance(wd);
    auto rays = trace_fan(a, base_fan);
    return collimation_stats(rays).direction_rms_urad;
  };
  return golden_min(objective, wd_lo, wd_hi, 1e-10, 300);
}

}  // namespace trapoptics
