#include "pcd/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace pcd {

std::vector<Point2> read_points_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open '" + path + "'");
  std::vector<Point2> pts;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t a = line.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos)
      fail(Errc::parse_error, path + ":" + std::to_string(lineno) + ": expected 'x,y'");
    try {
      double x = std::stod(line.substr(0, comma));
      double y = std::stod(line.substr(comma + 1));
      if (!std::isfinite(x) || !std::isfinite(y))
        fail(Errc::parse_error, path + ":" + std::to_string(lineno) + ": non-finite coordinate");
      pts.emplace_back(x, y);
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(Errc::parse_error, path + ":" + std::to_string(lineno) + ": bad number");
    }
  }
  return pts;
}

void write_points_csv(const std::string& path, const std::vector<Point2>& pts) {
  std::ostringstream out;
  char buf[80];
  for (const Point2& p : pts) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.x(), p.y());
    out << buf;
  }
  write_text_file(path, out.str());
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::parse_error, "cannot write '" + path + "'");
  out << content;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::parse_error, "cannot open '" + path + "'");
  std::uint64_t h = 0xcbf29ce484222325ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace pcd
