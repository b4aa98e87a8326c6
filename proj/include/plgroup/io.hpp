#pragma once

#include "plgroup/plmap.hpp"
#include "plgroup/rational.hpp"

#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace plgroup {

/// "plmap v1" header, then one "xnum/xden ynum/yden" line per vertex.
inline std::string write_plmap(const PLMap& f) {
  std::string out = "plmap v1\n";
  for (const auto& [x, y] : f.vertices())
    out += rat_frac_str(x) + " " + rat_frac_str(y) + "\n";
  return out;
}

namespace detail {

inline PLMap read_plmap_body(std::istream& in, bool normalize) {
  std::vector<PLMap::Vertex> vs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) break;
    std::istringstream ls(line);
    std::string xs, ys, extra;
    if (!(ls >> xs >> ys) || (ls >> extra))
      throw std::invalid_argument("plmap v1: bad vertex line '" + line + "'");
    vs.push_back({parse_rational(xs), parse_rational(ys)});
  }
  return normalize ? PLMap::from_vertices(std::move(vs))
                   : PLMap::from_vertices_strict(std::move(vs));
}

}  // namespace detail

/// Strict parse rejects non-canonical vertex tables; normalize merges
/// collinear vertices instead.
inline PLMap read_plmap(std::istream& in, bool normalize = false) {
  std::string header;
  if (!std::getline(in, header) || header != "plmap v1")
    throw std::invalid_argument("plmap v1: missing header");
  return detail::read_plmap_body(in, normalize);
}

inline PLMap read_plmap(const std::string& text, bool normalize = false) {
  std::istringstream in(text);
  return read_plmap(in, normalize);
}

/// Session file: a sequence of "member <name>" blocks, each holding one
/// plmap v1 block, separated by blank lines. Generator order is file order.
inline std::string write_session_members(
    const std::vector<std::pair<std::string, PLMap>>& members) {
  std::string out;
  for (const auto& [name, map] : members) {
    out += "member " + name + "\n";
    out += write_plmap(map);
    out += "\n";
  }
  return out;
}

inline std::vector<std::pair<std::string, PLMap>> read_session_members(std::istream& in,
                                                                       bool normalize = false) {
  std::vector<std::pair<std::string, PLMap>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("member ", 0) != 0)
      throw std::invalid_argument("session file: expected 'member <name>', got '" + line + "'");
    std::string name = line.substr(7);
    if (!std::getline(in, line) || line != "plmap v1")
      throw std::invalid_argument("session file: missing 'plmap v1' header for '" + name + "'");
    out.push_back({std::move(name), detail::read_plmap_body(in, normalize)});
  }
  if (out.empty()) throw std::invalid_argument("session file: no members");
  return out;
}

inline std::vector<std::pair<std::string, PLMap>> read_session_members(const std::string& text,
                                                                       bool normalize = false) {
  std::istringstream in(text);
  return read_session_members(in, normalize);
}

}  // namespace plgroup
