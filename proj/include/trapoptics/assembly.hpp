// The imaging train: an ordered list of refracting interfaces with the medium
// index on each side evaluated at the design wavelength. The object (ion)
// sits at z = 0 and light travels toward +z.
#pragma once

#include <string>
#include <vector>

#include "trapoptics/config.hpp"
#include "trapoptics/material.hpp"
#include "trapoptics/surface.hpp"

namespace trapoptics {

struct Interface {
  AsphericSurface surface;
  double n_in;   // index upstream of the surface
  double n_out;  // index downstream
  std::string label;
};

class OpticalAssembly {
 public:
  // full two-lens train: collection asphere, vacuum window, fiber-coupling lens
  static OpticalAssembly imaging_train(const Config& cfg, const MaterialSet& mats);
  // just the in-vacuum collection asphere (collimation studies)
  static OpticalAssembly collection_asphere(const Config& cfg, const MaterialSet& mats);

  const std::vector<Interface>& interfaces() const { return interfaces_; }
  double wavelength_nm() const { return wavelength_nm_; }
  double object_na() const { return object_na_; }
  double working_distance() const { return working_distance_; }  // mm
  double exit_vertex_z() const;  // last surface vertex (focus searches start here)

  // replace the working distance, shifting every surface accordingly
  OpticalAssembly with_working_distance(double wd_mm) const;

 private:
  std::vector<Interface> interfaces_;
  double wavelength_nm_ = 0.0;
  double object_na_ = 0.0;
  double working_distance_ = 0.0;
};

}  // namespace trapoptics
