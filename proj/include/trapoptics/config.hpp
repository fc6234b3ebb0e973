// Minimal INI-style config reader: [section] headers, key = value pairs,
// '#' or ';' comments, blank lines ignored. Parse errors carry line numbers.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace trapoptics {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Config {
 public:
  Config() = default;

  static Config from_file(const std::string& path);
  static Config from_string(const std::string& text, const std::string& origin = "<string>");

  bool has(const std::string& section, const std::string& key) const;
  std::vector<std::string> sections() const;
  std::vector<std::string> keys(const std::string& section) const;

  std::string get_string(const std::string& section, const std::string& key) const;
  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) const;
  double get_double(const std::string& section, const std::string& key) const;
  double get_double(const std::string& section, const std::string& key, double fallback) const;
  long long get_int(const std::string& section, const std::string& key) const;
  long long get_int(const std::string& section, const std::string& key, long long fallback) const;

  void set(const std::string& section, const std::string& key, const std::string& value);

  const std::string& origin() const { return origin_; }

 private:
  const std::string& raw(const std::string& section, const std::string& key) const;
  // section -> ordered key/value list (insertion order preserved for reports)
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> data_;
  std::string origin_;
};

}  // namespace trapoptics
