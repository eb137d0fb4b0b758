#include <globvert/io.hpp>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace globvert {

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void Manifest::add(const std::string& key, double value) { add(key, format_double(value)); }
void Manifest::add(const std::string& key, int value) { add(key, std::to_string(value)); }

std::string Manifest::header_lines() const {
  std::ostringstream out;
  for (const auto& [key, value] : entries) out << "# " << key << "=" << value << "\n";
  return out.str();
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::input, "WriteFailure", "cannot write " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::input, "InputUnresolvable", "cannot open " + path);
  return in;
}

bool skip_line(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;  // blank
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) fields.push_back(item);
  return fields;
}

double parse_double(const std::string& text, const std::string& path) {
  try {
    return std::stod(text);
  } catch (const std::exception&) {
    fail(ErrorKind::input, "BadCsv", "malformed number '" + text + "' in " + path);
  }
}

}  // namespace

void write_polyline_csv(const std::string& path, const Points& points, const Manifest& manifest) {
  auto out = open_out(path);
  out << manifest.header_lines();
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    out << format_double(points(i, 0)) << "," << format_double(points(i, 1)) << "\n";
  }
}

Points read_polyline_csv(const std::string& path) {
  auto in = open_in(path);
  std::vector<Vec2> pts;
  std::string line;
  while (std::getline(in, line)) {
    if (skip_line(line)) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 2) fail(ErrorKind::input, "BadCsv", "expected 'x,y' in " + path);
    pts.emplace_back(parse_double(fields[0], path), parse_double(fields[1], path));
  }
  Points out(static_cast<Eigen::Index>(pts.size()), 2);
  for (size_t i = 0; i < pts.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = pts[i];
  return out;
}

void write_profile_csv(const std::string& path, const DescriptorProfile& p, const Manifest& manifest) {
  auto out = open_out(path);
  out << manifest.header_lines();
  out << "index,s,phi,phi_d1,phi_d2,phi_d3,A,B,C,D,kappa_global,defined\n";
  for (int i = 0; i < p.n; ++i) {
    out << i << "," << format_double(i * p.ds) << "," << format_double(p.phi[i]) << ","
        << format_double(p.phi_d1[i]) << "," << format_double(p.phi_d2[i]) << ","
        << format_double(p.phi_d3[i]) << "," << format_double(p.A[i]) << ","
        << format_double(p.B[i]) << "," << format_double(p.C[i]) << ","
        << format_double(p.D[i]) << "," << format_double(p.kappa_global[i]) << ","
        << (p.kappa_defined[i] ? 1 : 0) << "\n";
  }
}

DescriptorProfile read_profile_csv(const std::string& path) {
  auto in = open_in(path);
  std::string line;
  std::vector<std::vector<double>> rows;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (skip_line(line)) continue;
    if (!header_seen) {
      header_seen = true;  // column header
      continue;
    }
    const auto fields = split_csv(line);
    if (fields.size() != 12) fail(ErrorKind::input, "BadCsv", "expected 12 columns in " + path);
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(parse_double(f, path));
    rows.push_back(std::move(row));
  }

  DescriptorProfile p;
  p.n = static_cast<int>(rows.size());
  if (p.n == 0) return p;
  p.ds = p.n > 1 ? rows[1][1] - rows[0][1] : 0.0;
  p.perimeter = p.ds * p.n;
  auto column = [&](int c) {
    Eigen::ArrayXd a(p.n);
    for (int i = 0; i < p.n; ++i) a[i] = rows[static_cast<size_t>(i)][static_cast<size_t>(c)];
    return a;
  };
  p.phi = column(2);
  p.phi_d1 = column(3);
  p.phi_d2 = column(4);
  p.phi_d3 = column(5);
  p.A = column(6);
  p.B = column(7);
  p.C = column(8);
  p.D = column(9);
  p.kappa_global = column(10);
  p.kappa_defined.resize(p.n);
  for (int i = 0; i < p.n; ++i) p.kappa_defined[i] = rows[static_cast<size_t>(i)][11] != 0.0;
  return p;
}

void write_profile_json(const std::string& path, const DescriptorProfile& p, const Manifest& manifest) {
  nlohmann::json j;
  for (const auto& [key, value] : manifest.entries) j["manifest"][key] = value;
  j["n"] = p.n;
  j["ds"] = p.ds;
  j["perimeter"] = p.perimeter;
  j["self_chord_correction"] = p.options.self_chord_correction;
  j["sign_convention"] = p.options.sign == SignConvention::standard ? "standard" : "paper";
  auto dump = [](const Eigen::ArrayXd& a) {
    return std::vector<double>(a.data(), a.data() + a.size());
  };
  j["phi"] = dump(p.phi);
  j["phi_d1"] = dump(p.phi_d1);
  j["phi_d2"] = dump(p.phi_d2);
  j["phi_d3"] = dump(p.phi_d3);
  j["A"] = dump(p.A);
  j["B"] = dump(p.B);
  j["C"] = dump(p.C);
  j["D"] = dump(p.D);
  std::vector<double> kappa;
  std::vector<int> defined;
  for (int i = 0; i < p.n; ++i) {
    kappa.push_back(p.kappa_global[i]);
    defined.push_back(p.kappa_defined[i] ? 1 : 0);
  }
  j["kappa_global"] = kappa;
  j["kappa_defined"] = defined;

  auto out = open_out(path);
  out << j.dump(2) << "\n";
}

void write_vertices_csv(const std::string& path, const VertexSet& set, const Manifest& manifest) {
  auto out = open_out(path);
  out << manifest.header_lines();
  out << "position,label,kappa,sources\n";
  for (const Vertex& v : set.vertices) {
    out << format_double(v.position) << ","
        << (v.label == VertexLabel::convex ? "convex" : "concave") << ","
        << format_double(v.kappa_at) << ",";
    for (size_t i = 0; i < v.sources.size(); ++i) {
      if (i) out << ";";
      out << v.sources[i];
    }
    out << "\n";
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  auto out = open_out(path);
  out << content;
}

}  // namespace globvert
