#include "trapoptics/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace trapoptics {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

Config Config::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config file not found: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_string(ss.str(), path);
}

Config Config::from_string(const std::string& text, const std::string& origin) {
  Config c;
  c.origin_ = origin;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // strip comments (not inside values: we keep it simple, '#'/';' start a comment)
    auto cut = line.find_first_of("#;");
    if (cut != std::string::npos) line = line.substr(0, cut);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty())
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty section name");
      c.data_[section];  // create even if empty
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected 'key = value', got '" +
                        line + "'");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
    c.data_[section].emplace_back(key, val);
  }
  return c;
}

bool Config::has(const std::string& section, const std::string& key) const {
  auto it = data_.find(section);
  if (it == data_.end()) return false;
  for (const auto& kv : it->second)
    if (kv.first == key) return true;
  return false;
}

std::vector<std::string> Config::sections() const {
  std::vector<std::string> out;
  out.reserve(data_.size());
  for (const auto& s : data_) out.push_back(s.first);
  return out;
}

std::vector<std::string> Config::keys(const std::string& section) const {
  std::vector<std::string> out;
  auto it = data_.find(section);
  if (it == data_.end()) return out;
  for (const auto& kv : it->second) out.push_back(kv.first);
  return out;
}

const std::string& Config::raw(const std::string& section, const std::string& key) const {
  auto it = data_.find(section);
  if (it != data_.end()) {
    for (const auto& kv : it->second)
      if (kv.first == key) return kv.second;
  }
  throw ConfigError(origin_ + ": missing key [" + section + "] " + key);
}

std::string Config::get_string(const std::string& section, const std::string& key) const {
  return raw(section, key);
}

std::string Config::get_string(const std::string& section, const std::string& key,
                               const std::string& fallback) const {
  return has(section, key) ? raw(section, key) : fallback;
}

double Config::get_double(const std::string& section, const std::string& key) const {
  const std::string& v = raw(section, key);
  try {
    size_t pos = 0;
    double d = std::stod(v, &pos);
    while (pos < v.size() && std::isspace(static_cast<unsigned char>(v[pos]))) ++pos;
    if (pos != v.size()) throw std::invalid_argument("trailing characters");
    return d;
  } catch (const std::exception&) {
    throw ConfigError(origin_ + ": field [" + section + "] " + key + " = '" + v +
                      "' is not a number");
  }
}

double Config::get_double(const std::string& section, const std::string& key,
                          double fallback) const {
  return has(section, key) ? get_double(section, key) : fallback;
}

long long Config::get_int(const std::string& section, const std::string& key) const {
  const std::string& v = raw(section, key);
  try {
    size_t pos = 0;
    long long d = std::stoll(v, &pos);
    while (pos < v.size() && std::isspace(static_cast<unsigned char>(v[pos]))) ++pos;
    if (pos != v.size()) throw std::invalid_argument("trailing characters");
    return d;
  } catch (const std::exception&) {
    throw ConfigError(origin_ + ": field [" + section + "] " + key + " = '" + v +
                      "' is not an integer");
  }
}

long long Config::get_int(const std::string& section, const std::string& key,
                          long long fallback) const {
  return has(section, key) ? get_int(section, key) : fallback;
}

void Config::set(const std::string& section, const std::string& key, const std::string& value) {
  auto& vec = data_[section];
  for (auto& kv : vec) {
    if (kv.first == key) {
      kv.second = value;
      return;
    }
  }
  vec.emplace_back(key, value);
}

}  // namespace trapoptics
