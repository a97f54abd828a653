#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmhd {

/// Config error carrying the file and line it anchors to; what() is already
/// formatted as "path:line: message" (line 0 when no line applies).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& path, int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

/// Flat sectioned key-value configuration:
///   [section]
///   key = value   # comment
/// Keys are unique per section; '#' and ';' start comments.
class Config {
 public:
  static Config parse_file(const std::string& path);
  static Config parse_string(const std::string& text,
                             const std::string& path = "<string>");

  bool has_section(const std::string& section) const;
  bool has(const std::string& section, const std::string& key) const;

  std::string get_string(const std::string& section,
                         const std::string& key) const;
  double get_double(const std::string& section, const std::string& key) const;
  long long get_int(const std::string& section, const std::string& key) const;
  bool get_bool(const std::string& section, const std::string& key) const;

  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) const;
  double get_double(const std::string& section, const std::string& key,
                    double fallback) const;
  long long get_int(const std::string& section, const std::string& key,
                    long long fallback) const;
  bool get_bool(const std::string& section, const std::string& key,
                bool fallback) const;

  /// Keys of one section in file order.
  std::vector<std::string> keys(const std::string& section) const;

  const std::string& path() const { return path_; }

 private:
  struct Entry {
    std::string value;
    int line = 0;
  };

  const Entry* find(const std::string& section, const std::string& key) const;
  const Entry& require(const std::string& section,
                       const std::string& key) const;

  std::string path_;
  std::map<std::string, std::map<std::string, Entry>> sections_;
  std::map<std::string, std::vector<std::string>> key_order_;
};

}  // namespace gmhd
