#include "trapoptics/material.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fs = std::filesystem;

namespace trapoptics {

Material::Material(std::string name, std::vector<std::pair<double, double>> table)
    : name_(std::move(name)), table_(std::move(table)) {
  validate();
}

void Material::validate() const {
  if (table_.size() < 2)
    throw std::runtime_error("material " + name_ + ": need at least two table nodes");
  for (size_t i = 0; i < table_.size(); ++i) {
    if (table_[i].second < 1.0)
      throw std::runtime_error("material " + name_ + ": index below 1");
    if (i > 0 && table_[i].first <= table_[i - 1].first)
      throw std::runtime_error("material " + name_ + ": wavelengths not strictly increasing");
  }
}

Material Material::from_csv(const std::string& name, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("material file not found: " + path);
  std::vector<std::pair<double, double>> tab;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto cut = line.find('#');
    if (cut != std::string::npos) line = line.substr(0, cut);
    // skip blank lines
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::istringstream row(line);
    double wl, n;
    char comma;
    if (!(row >> wl >> comma >> n) || comma != ',')
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected 'wavelength_nm,index'");
    tab.emplace_back(wl, n);
  }
  return Material(name, std::move(tab));
}

double Material::index_at(double wavelength_nm) const {
  if (wavelength_nm < table_.front().first || wavelength_nm > table_.back().first)
    throw std::runtime_error("material " + name_ + ": wavelength " +
                             std::to_string(wavelength_nm) + " nm outside table range");
  for (size_t i = 1; i < table_.size(); ++i) {
    if (wavelength_nm <= table_[i].first) {
      const auto& [w0, n0] = table_[i - 1];
      const auto& [w1, n1] = table_[i];
      return n0 + (n1 - n0) * (wavelength_nm - w0) / (w1 - w0);
    }
  }
  return table_.back().second;  // unreachable given the range check
}

MaterialSet MaterialSet::from_directory(const std::string& dir) {
  MaterialSet set;
  if (!fs::is_directory(dir))
    throw std::runtime_error("material directory not found: " + dir);
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".csv") continue;
    std::string stem = entry.path().stem().string();
    set.add(Material::from_csv(stem, entry.path().string()));
  }
  if (set.materials_.empty())
    throw std::runtime_error("no material tables in " + dir);
  return set;
}

void MaterialSet::add(Material m) {
  std::string key = m.name();
  materials_.insert_or_assign(key, std::move(m));
}

const Material& MaterialSet::get(const std::string& name) const {
  auto it = materials_.find(name);
  if (it == materials_.end())
    throw std::runtime_error("unknown material: " + name);
  return it->second;
}

}  // namespace trapoptics
