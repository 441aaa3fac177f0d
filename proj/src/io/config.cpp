#include "io/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace lhfatom::io {

namespace {
std::string trim(const std::string &s) {
  auto b = s.find_first_not_of(" \t\r\n");
  auto e = s.find_last_not_of(" \t\r\n");
  return (b == std::string::npos) ? std::string{} : s.substr(b, e - b + 1);
}
} // namespace

Config Config::parse_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_string(ss.str(), path);
}

Config Config::parse_string(const std::string &text, const std::string &origin) {
  Config c;
  c.origin_ = origin;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos)
      line.erase(h);
    line = trim(line);
    if (line.empty())
      continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(lineno) +
                        ": expected 'key = value', got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) +
                        ": empty key or value");
    if (c.kv_.count(key))
      throw ConfigError(origin + ":" + std::to_string(lineno) +
                        ": duplicate key '" + key + "'");
    c.kv_[key] = val;
    c.line_[key] = lineno;
  }
  return c;
}

void Config::fail(const std::string &key, const std::string &msg) const {
  std::string where = origin_;
  if (auto it = line_.find(key); it != line_.end())
    where += ":" + std::to_string(it->second);
  throw ConfigError(where + ": key '" + key + "': " + msg);
}

bool Config::has(const std::string &key) const { return kv_.count(key) > 0; }

std::string Config::get_string(const std::string &key) const {
  auto it = kv_.find(key);
  if (it == kv_.end())
    throw ConfigError(origin_ + ": missing required key '" + key + "'");
  return it->second;
}

double Config::get_double(const std::string &key) const {
  const auto s = get_string(key);
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size())
      fail(key, "trailing characters in number '" + s + "'");
    return v;
  } catch (const ConfigError &) {
    throw;
  } catch (...) {
    fail(key, "not a number: '" + s + "'");
  }
}

long Config::get_int(const std::string &key) const {
  const auto s = get_string(key);
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size())
      fail(key, "trailing characters in integer '" + s + "'");
    return v;
  } catch (const ConfigError &) {
    throw;
  } catch (...) {
    fail(key, "not an integer: '" + s + "'");
  }
}

bool Config::get_bool(const std::string &key) const {
  auto s = get_string(key);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (s == "true" || s == "1" || s == "yes" || s == "on")
    return true;
  if (s == "false" || s == "0" || s == "no" || s == "off")
    return false;
  fail(key, "not a boolean: '" + s + "'");
}

std::string Config::get_string(const std::string &key,
                               const std::string &dflt) const {
  return has(key) ? get_string(key) : dflt;
}
double Config::get_double(const std::string &key, double dflt) const {
  return has(key) ? get_double(key) : dflt;
}
long Config::get_int(const std::string &key, long dflt) const {
  return has(key) ? get_int(key) : dflt;
}
bool Config::get_bool(const std::string &key, bool dflt) const {
  return has(key) ? get_bool(key) : dflt;
}

std::vector<std::string> Config::get_list(const std::string &key) const {
  const auto s = get_string(key);
  std::vector<std::string> items;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty())
      items.push_back(item);
  }
  return items;
}

} // namespace lhfatom::io
