#include "config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hrdeg::cli {

namespace {

std::string trim(const std::string& s) {
  const char* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

}  // namespace

ConfigEntries parse_config(const std::string& text) {
  ConfigEntries out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(no) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key.empty() || key.find_first_of(" \t") != std::string::npos || key[0] == '-')
      throw std::invalid_argument("config line " + std::to_string(no) + ": bad key '" + key + "'");
    for (auto& [k, v] : out)
      if (k == key) throw std::invalid_argument("config line " + std::to_string(no) + ": duplicate key '" + key + "'");
    out.emplace_back(key, value);
  }
  return out;
}

ConfigEntries read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace hrdeg::cli
