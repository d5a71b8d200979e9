#pragma once

#include <string>
#include <vector>

#include "pcd/geometry.hpp"

namespace pcd {

// Point file: one "x,y" pair per line; blank lines and '#' comments allowed.
std::vector<Point2> read_points_csv(const std::string& path);
void write_points_csv(const std::string& path, const std::vector<Point2>& pts);

void write_text_file(const std::string& path, const std::string& content);

// FNV-1a 64-bit digest of a file's bytes, as 16 hex characters.
std::string file_digest(const std::string& path);

}  // namespace pcd
