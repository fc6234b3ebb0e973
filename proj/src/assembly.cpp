#include "trapoptics/assembly.hpp"

#include <stdexcept>

namespace trapoptics {

namespace {

std::map<int, double> poly_coeffs(const Config& cfg, const std::string& section) {
  std::map<int, double> A;
  for (int n = 4; n <= 16; n += 2) {
    std::string key = "back_A" + std::to_string(n);
    if (cfg.has(section, key)) A[n] = cfg.get_double(section, key);
  }
  return A;
}

}  // namespace

OpticalAssembly OpticalAssembly::collection_asphere(const Config& cfg, const MaterialSet& mats) {
  OpticalAssembly a;
  a.wavelength_nm_ = cfg.get_double("train", "wavelength_nm");
  a.object_na_ = cfg.get_double("train", "object_na");
  a.working_distance_ = cfg.get_double("train", "working_distance_mm");

  const double n_glass = mats.get(cfg.get_string("asphere", "material")).index_at(a.wavelength_nm_);
  const double t = cfg.get_double("asphere", "center_thickness_mm");
  const double wd = a.working_distance_;

  a.interfaces_.push_back({AsphericSurface::plane(wd, cfg.get_double("asphere", "flat_clear_semi_mm")),
                           1.0, n_glass, "asphere flat front"});
  a.interfaces_.push_back({AsphericSurface::asphere(wd + t, cfg.get_double("asphere", "back_R_mm"),
                                                    cfg.get_double("asphere", "back_kappa"),
                                                    poly_coeffs(cfg, "asphere"),
                                                    cfg.get_double("asphere", "back_clear_semi_mm")),
                           n_glass, 1.0, "asphere back"});
  return a;
}

OpticalAssembly OpticalAssembly::imaging_train(const Config& cfg, const MaterialSet& mats) {
  OpticalAssembly a = collection_asphere(cfg, mats);
  double z = a.interfaces_.back().surface.vertex_z();

  if (cfg.has("window", "thickness_mm")) {
    const double n_win = mats.get(cfg.get_string("window", "material")).index_at(a.wavelength_nm_);
    const double semi = cfg.get_double("window", "clear_semi_mm", 20.0);
    z += cfg.get_double("window", "gap_before_mm", 20.0);
    a.interfaces_.push_back({AsphericSurface::plane(z, semi), 1.0, n_win, "window front"});
    z += cfg.get_double("window", "thickness_mm");
    a.interfaces_.push_back({AsphericSurface::plane(z, semi), n_win, 1.0, "window back"});
  }

  const double n_fl = mats.get(cfg.get_string("fiber_lens", "material")).index_at(a.wavelength_nm_);
  const double semi = cfg.get_double("fiber_lens", "clear_semi_mm", 12.5);
  z += cfg.get_double("fiber_lens", "gap_before_mm", 30.0);
  a.interfaces_.push_back({AsphericSurface::conic(z, cfg.get_double("fiber_lens", "front_R_mm"),
                                                  cfg.get_double("fiber_lens", "front_kappa", -1.0),
                                                  semi),
                           1.0, n_fl, "fiber lens front"});
  z += cfg.get_double("fiber_lens", "center_thickness_mm");
  a.interfaces_.push_back({AsphericSurface::conic(z, cfg.get_double("fiber_lens", "back_R_mm"),
                                                  cfg.get_double("fiber_lens", "back_kappa", 0.0),
                                                  semi),
                           n_fl, 1.0, "fiber lens back"});
  return a;
}

double OpticalAssembly::exit_vertex_z() const {
  if (interfaces_.empty()) throw std::runtime_error("empty assembly");
  return interfaces_.back().surface.vertex_z();
}

OpticalAssembly OpticalAssembly::with_working_distance(double wd_mm) const {
  OpticalAssembly out = *this;
  const double shift = wd_mm - working_distance_;
  out.working_distance_ = wd_mm;
  for (auto& itf : out.interfaces_) {
    const auto& s = itf.surface;
    if (s.is_plane()) {
      itf.surface = AsphericSurface::plane(s.vertex_z() + shift, s.clear_semi());
    } else if (s.coefficients().empty()) {
      itf.surface =
          AsphericSurface::conic(s.vertex_z() + shift, s.radius(), s.kappa(), s.clear_semi());
    } else {
      itf.surface = AsphericSurface::asphere(s.vertex_z() + shift, s.radius(), s.kappa(),
                                             s.coefficients(), s.clear_semi());
    }
  }
  return out;
}

}  // namespace trapoptics
