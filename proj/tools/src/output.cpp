#include "output.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "mockgauss/error.hpp"
#include "mockgauss/version.hpp"

namespace mockgauss::cli {

void emit(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  const std::filesystem::path target(path);
  if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
  std::filesystem::path tmp = target;
  tmp += ".partial";
  {
    std::ofstream f(tmp, std::ios::binary);
    f << text;
    if (!f) fail(ErrorKind::kPreconditionViolation, "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

std::string dump_json(const ordered_json& doc) { return doc.dump(2) + "\n"; }

std::string csv_header_comment(const ordered_json& config) {
  return std::string("# mockgauss ") + kVersion + " " + config.dump() + "\n";
}

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace mockgauss::cli
