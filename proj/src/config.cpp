#include "gmhd/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace gmhd {

namespace {

std::string trim(const std::string& s) {
  size_t begin = 0, end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin])))
    ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1])))
    --end;
  return s.substr(begin, end - begin);
}

std::string strip_comment(const std::string& line) {
  size_t pos = line.find_first_of("#;");
  return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

ConfigError::ConfigError(const std::string& path, int line,
                         const std::string& message)
    : std::runtime_error(line > 0 ? path + ":" + std::to_string(line) + ": " +
                                        message
                                  : path + ": " + message),
      line_(line) {}

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, 0, "cannot open config file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_string(buffer.str(), path);
}

Config Config::parse_string(const std::string& text, const std::string& path) {
  Config config;
  config.path_ = path;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string content = trim(strip_comment(line));
    if (content.empty()) continue;
    if (content.front() == '[') {
      if (content.back() != ']' || content.size() < 3)
        throw ConfigError(path, line_no, "malformed section header");
      section = trim(content.substr(1, content.size() - 2));
      if (section.empty())
        throw ConfigError(path, line_no, "empty section name");
      config.sections_[section];
      continue;
    }
    size_t eq = content.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path, line_no, "expected 'key = value'");
    std::string key = trim(content.substr(0, eq));
    std::string value = trim(content.substr(eq + 1));
    if (key.empty()) throw ConfigError(path, line_no, "empty key");
    if (section.empty())
      throw ConfigError(path, line_no, "key outside any [section]");
    auto [it, inserted] =
        config.sections_[section].emplace(key, Entry{value, line_no});
    if (!inserted)
      throw ConfigError(path, line_no,
                        "duplicate key '" + key + "' in [" + section + "]");
    config.key_order_[section].push_back(key);
  }
  return config;
}

bool Config::has_section(const std::string& section) const {
  return sections_.count(section) > 0;
}

bool Config::has(const std::string& section, const std::string& key) const {
  return find(section, key) != nullptr;
}

const Config::Entry* Config::find(const std::string& section,
                                  const std::string& key) const {
  auto sec = sections_.find(section);
  if (sec == sections_.end()) return nullptr;
  auto entry = sec->second.find(key);
  return entry == sec->second.end() ? nullptr : &entry->second;
}

const Config::Entry& Config::require(const std::string& section,
                                     const std::string& key) const {
  const Entry* entry = find(section, key);
  if (!entry)
    throw ConfigError(path_, 0,
                      "missing key '" + key + "' in section [" + section +
                          "]");
  return *entry;
}

std::string Config::get_string(const std::string& section,
                               const std::string& key) const {
  return require(section, key).value;
}

double Config::get_double(const std::string& section,
                          const std::string& key) const {
  const Entry& entry = require(section, key);
  char* end = nullptr;
  double v = std::strtod(entry.value.c_str(), &end);
  if (end == entry.value.c_str() || *end != '\0')
    throw ConfigError(path_, entry.line,
                      "expected a number for '" + key + "', got '" +
                          entry.value + "'");
  return v;
}

long long Config::get_int(const std::string& section,
                          const std::string& key) const {
  const Entry& entry = require(section, key);
  char* end = nullptr;
  long long v = std::strtoll(entry.value.c_str(), &end, 10);
  if (end == entry.value.c_str() || *end != '\0')
    throw ConfigError(path_, entry.line,
                      "expected an integer for '" + key + "', got '" +
                          entry.value + "'");
  return v;
}

bool Config::get_bool(const std::string& section,
                      const std::string& key) const {
  const Entry& entry = require(section, key);
  if (entry.value == "true" || entry.value == "1" || entry.value == "yes")
    return true;
  if (entry.value == "false" || entry.value == "0" || entry.value == "no")
    return false;
  throw ConfigError(path_, entry.line,
                    "expected a boolean for '" + key + "', got '" +
                        entry.value + "'");
}

std::string Config::get_string(const std::string& section,
                               const std::string& key,
                               const std::string& fallback) const {
  const Entry* entry = find(section, key);
  return entry ? entry->value : fallback;
}

double Config::get_double(const std::string& section, const std::string& key,
                          double fallback) const {
  return has(section, key) ? get_double(section, key) : fallback;
}

long long Config::get_int(const std::string& section, const std::string& key,
                          long long fallback) const {
  return has(section, key) ? get_int(section, key) : fallback;
}

bool Config::get_bool(const std::string& section, const std::string& key,
                      bool fallback) const {
  return has(section, key) ? get_bool(section, key) : fallback;
}

std::vector<std::string> Config::keys(const std::string& section) const {
  auto it = key_order_.find(section);
  return it == key_order_.end() ? std::vector<std::string>{} : it->second;
}

}  // namespace gmhd
