#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include "aritylab/limits.hpp"

namespace aritylab {

struct Config {
  Limits lim;
  int kmax_default = 0;  // 0: use the universe size
  std::uint64_t seed = 1729;
};

// Flat key = value file ('#' comments):
//   cap = 10000000
//   size_cap = 12
//   kmax_default = 0
//   seed = 1729
inline Config parse_config_text(const std::string& text) {
  Config c;
  std::istringstream in(text);
  std::string line;
  std::size_t at = 0;
  while (std::getline(in, line)) {
    std::size_t line_at = at;
    at += line.size() + 1;
    std::string::size_type hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::string::size_type eq = line.find('=');
    std::string key, val;
    std::istringstream ls(line.substr(0, eq == std::string::npos ? line.size() : eq));
    ls >> key;
    if (key.empty()) continue;
    if (eq == std::string::npos) throw parse_error("expected key = value", line_at);
    std::istringstream vs(line.substr(eq + 1));
    vs >> val;
    std::string extra;
    if (val.empty() || (vs >> extra))
      throw parse_error("expected a single value for '" + key + "'", line_at);
    try {
      if (key == "cap") c.lim.work_cap = std::stoull(val);
      else if (key == "size_cap") c.lim.size_cap = std::stoi(val);
      else if (key == "kmax_default") c.kmax_default = std::stoi(val);
      else if (key == "seed") c.seed = std::stoull(val);
      else throw parse_error("unknown config key '" + key + "'", line_at);
    } catch (const std::invalid_argument&) {
      throw parse_error("bad value for '" + key + "'", line_at);
    } catch (const std::out_of_range&) {
      throw parse_error("value out of range for '" + key + "'", line_at);
    }
  }
  return c;
}

inline Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace aritylab
