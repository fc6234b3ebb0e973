// JSON report emission. Uses ordered JSON so identical runs serialize to
// byte-identical files. Every quantity is written as {value, unit, provenance}
// where provenance is one of "paper" | "computed" | "assumed" (plus "measured"
// for budget factors that model a measured input).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>  // vendored nlohmann/json single header

namespace trapoptics {

using json = nlohmann::ordered_json;

// quantity entry helper
json qty(double value, const std::string& unit, const std::string& provenance,
         const std::string& note = "");

class ReportWriter {
 public:
  // All writes are confined to out_dir (created if missing). Relative paths
  // that escape the directory are rejected.
  explicit ReportWriter(std::string out_dir);

  // serialize json with 2-space indent + trailing newline
  void write_json(const std::string& relative_path, const json& j) const;
  // write a CSV given a header line and preformatted rows
  void write_csv(const std::string& relative_path, const std::string& header,
                 const std::vector<std::string>& rows) const;

  const std::string& dir() const { return out_dir_; }

  // common report preamble: tool version, seed, config origin
  static json preamble(std::uint64_t seed, const std::string& config_origin);

 private:
  std::string resolve(const std::string& relative_path) const;
  std::string out_dir_;
};

}  // namespace trapoptics
