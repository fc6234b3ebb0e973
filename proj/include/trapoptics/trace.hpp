// Sequential ray tracing: Newton intersection with aspheric surfaces, vector
// Snell refraction, accumulated optical path, and the derived diagnostics
// (collimation statistics, focus search, direction-space pupil synthesis).
#pragma once

#include <vector>

#include <Eigen/Dense>

#include "trapoptics/assembly.hpp"

namespace trapoptics {

struct Ray {
  Eigen::Vector3d origin{0, 0, 0};
  Eigen::Vector3d direction{0, 0, 1};
  double optical_path = 0.0;  // accumulated n * geometric length, mm
  double amplitude_weight = 1.0;
  bool alive = true;
};

// refract a unit direction at a unit normal; returns false on total internal
// reflection (direction left untouched in that case)
bool refract_direction(const Eigen::Vector3d& incident, const Eigen::Vector3d& normal, double n1,
                       double n2, Eigen::Vector3d* transmitted);

// advance a ray to the surface (Newton iteration on the axial sag residual);
// returns false (ray killed) when the iteration fails or the hit point is
// outside the clear aperture
bool intersect_surface(const AsphericSurface& s, Ray* ray);

// trace through every interface in order; dead rays are passed through untouched
void trace_ray(const OpticalAssembly& assembly, Ray* ray);

// meridional fan from an on-axis object point: n_rays with direction sines
// equally spaced in (0, na]; lives in the x-z plane
std::vector<Ray> meridional_fan(double na, int n_rays);

// trace a whole fan; returns traced rays (some may be dead)
std::vector<Ray> trace_fan(const OpticalAssembly& assembly, std::vector<Ray> fan);

struct FanStats {
  double direction_rms_urad = 0.0;  // rms exit angle from the axis, microradians
  int alive = 0;
  int total = 0;
};

// collimation quality of a traced fan: rms of the signed exit angle about the
// axis; infinite when any ray was lost (so focus searches avoid clipping)
FanStats collimation_stats(const std::vector<Ray>& rays);

// rms transverse spot radius of the fan propagated to plane z (same weights)
double spot_rms_at(const std::vector<Ray>& rays, const std::vector<double>& src_sine, double z);

// golden-section search for the plane of least rms spot radius
double best_focus_z(const std::vector<Ray>& rays, const std::vector<double>& src_sine, double z_lo,
                    double z_hi);

// direction-space pupil sample: exit direction sine, eikonal (mm), source sine
struct PupilSample {
  double L = 0.0;       // exit direction sine (x component of the unit direction)
  double eikonal = 0.0; // optical path Legendre-transformed to direction space, mm
  double src_sine = 0.0;
  bool alive = true;
};

// build the direction-space pupil at plane z for an on-axis focus:
// W = OPL(to plane) - x_hit * L (fan lives in y = 0)
std::vector<PupilSample> direction_pupil(const std::vector<Ray>& rays,
                                         const std::vector<double>& src_sine, double z);

// autofocus the working distance of a collimating assembly: returns the wd
// minimizing the exit-direction spread (the numerical alignment step)
double autofocus_working_distance(const OpticalAssembly& assembly, double wd_lo, double wd_hi,
                                  int n_rays = 301);

}  // namespace trapoptics
