#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lhfatom::io {

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

//! Flat key-value run configuration: one `key = value` per line,
//! '#' starts a comment, keys may be dotted (grid.n, scf.tol, ...).
class Config {
public:
  static Config parse_file(const std::string &path);
  static Config parse_string(const std::string &text,
                             const std::string &origin = "<string>");

  bool has(const std::string &key) const;
  std::string get_string(const std::string &key) const;
  double get_double(const std::string &key) const;
  long get_int(const std::string &key) const;
  bool get_bool(const std::string &key) const;

  std::string get_string(const std::string &key, const std::string &dflt) const;
  double get_double(const std::string &key, double dflt) const;
  long get_int(const std::string &key, long dflt) const;
  bool get_bool(const std::string &key, bool dflt) const;

  //! Comma-separated list value, trimmed items.
  std::vector<std::string> get_list(const std::string &key) const;

  const std::map<std::string, std::string> &entries() const { return kv_; }

private:
  [[noreturn]] void fail(const std::string &key, const std::string &msg) const;

  std::map<std::string, std::string> kv_;
  std::map<std::string, int> line_;
  std::string origin_;
};

} // namespace lhfatom::io
