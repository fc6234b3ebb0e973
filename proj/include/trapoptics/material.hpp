// Dispersion data: a material is a table of (wavelength nm, index) pairs with
// linear interpolation between nodes. Queries outside the tabulated range are
// an error rather than an extrapolation.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace trapoptics {

class Material {
 public:
  Material() = default;
  Material(std::string name, std::vector<std::pair<double, double>> table);

  // CSV rows "wavelength_nm,index"; '#' comments allowed
  static Material from_csv(const std::string& name, const std::string& path);

  double index_at(double wavelength_nm) const;  // linear interpolation
  const std::string& name() const { return name_; }
  const std::vector<std::pair<double, double>>& table() const { return table_; }

 private:
  void validate() const;
  std::string name_;
  std::vector<std::pair<double, double>> table_;
};

// loads the standard material files from a data directory
class MaterialSet {
 public:
  static MaterialSet from_directory(const std::string& dir);
  const Material& get(const std::string& name) const;
  void add(Material m);

 private:
  std::map<std::string, Material> materials_;
};

// vacuum index helper for assembly construction
inline double vacuum_index() { return 1.0; }

}  // namespace trapoptics
