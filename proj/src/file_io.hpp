#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "iconrate/error.hpp"

namespace iconrate::detail {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << content;
  if (!out.flush()) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

}  // namespace iconrate::detail
