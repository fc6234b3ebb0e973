#include "trapoptics/report.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace fs = std::filesystem;

namespace trapoptics {

json qty(double value, const std::string& unit, const std::string& provenance,
         const std::string& note) {
  json j;
  j["value"] = value;
  j["unit"] = unit;
  j["provenance"] = provenance;
  if (!note.empty()) j["note"] = note;
  return j;
}

ReportWriter::ReportWriter(std::string out_dir) : out_dir_(std::move(out_dir)) {
  fs::create_directories(out_dir_);
}

std::string ReportWriter::resolve(const std::string& relative_path) const {
  fs::path rel(relative_path);
  if (rel.is_absolute()) throw std::runtime_error("report path must be relative: " + relative_path);
  fs::path full = fs::path(out_dir_) / rel;
  // normalize and confirm the result stays under out_dir_
  fs::path norm = full.lexically_normal();
  fs::path root = fs::path(out_dir_).lexically_normal();
  auto rit = root.begin();
  for (auto it = norm.begin(); rit != root.end(); ++it, ++rit) {
    if (it == norm.end() || *it != *rit)
      throw std::runtime_error("report path escapes output directory: " + relative_path);
  }
  fs::create_directories(norm.parent_path());
  return norm.string();
}

void ReportWriter::write_json(const std::string& relative_path, const json& j) const {
  std::ofstream out(resolve(relative_path), std::ios::binary);
  if (!out) throw std::runtime_error("cannot open report file: " + relative_path);
  out << j.dump(2) << "\n";
}

void ReportWriter::write_csv(const std::string& relative_path, const std::string& header,
                             const std::vector<std::string>& rows) const {
  std::ofstream out(resolve(relative_path), std::ios::binary);
  if (!out) throw std::runtime_error("cannot open report file: " + relative_path);
  out << header << "\n";
  for (const auto& r : rows) out << r << "\n";
}

json ReportWriter::preamble(std::uint64_t seed, const std::string& config_origin) {
  json j;
  j["tool"] = "trapoptics";
  j["version"] = "0.1.0";
  j["seed"] = seed;
  j["config"] = config_origin;
  return j;
}

}  // namespace trapoptics
