#pragma once

#include <string>
#include <utility>
#include <vector>

#include <globvert/descriptors.hpp>
#include <globvert/vertices.hpp>

namespace globvert {

/// Key-value record of a run, written as '#'-prefixed comment lines at the top
/// of every output file so results can be reproduced from the file alone.
struct Manifest {
  std::vector<std::pair<std::string, std::string>> entries;

  void add(const std::string& key, const std::string& value) { entries.emplace_back(key, value); }
  void add(const std::string& key, double value);
  void add(const std::string& key, int value);
  std::string header_lines() const;
};

/// Shortest exact decimal form of a double (17 significant digits).
std::string format_double(double value);

void write_polyline_csv(const std::string& path, const Points& points, const Manifest& manifest);
Points read_polyline_csv(const std::string& path);

void write_profile_csv(const std::string& path, const DescriptorProfile& profile, const Manifest& manifest);
DescriptorProfile read_profile_csv(const std::string& path);
void write_profile_json(const std::string& path, const DescriptorProfile& profile, const Manifest& manifest);

void write_vertices_csv(const std::string& path, const VertexSet& set, const Manifest& manifest);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace globvert
