#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include <globvert/io.hpp>
#include <globvert/shapes.hpp>

using namespace globvert;

TEST_SUITE("io") {

TEST_CASE("format_double round-trips arbitrary values exactly") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-300, 300);
  for (int k = 0; k < 2000; ++k) {
    const double value = std::ldexp(mant(rng), expo(rng));
    CHECK(std::stod(format_double(value)) == value);
  }
}

TEST_CASE("polyline csv round-trips bit exactly with a manifest header") {
  ShapeSpec spec = parse_shape("star:base=1,a=0.3,k=5");
  spec.samples = 64;
  const ClosedContour c = generate(spec);
  Manifest manifest;
  manifest.add("command", "noise");
  manifest.add("rho", 0.8);
  const std::string path = "io_polyline.csv";
  write_polyline_csv(path, c.points, manifest);

  // Header really is there.
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  CHECK(first == "# command=noise");

  const Points back = read_polyline_csv(path);
  REQUIRE(back.rows() == c.points.rows());
  CHECK((back - c.points).cwiseAbs().maxCoeff() == 0.0);
  std::remove(path.c_str());
}

TEST_CASE("profile csv round-trips every column bit exactly") {
  ShapeSpec spec = parse_shape("ellipse:a=2,b=1");
  spec.samples = 64;
  const DescriptorProfile p = compute_profile(generate(spec));
  const std::string path = "io_profile.csv";
  write_profile_csv(path, p, {});
  const DescriptorProfile back = read_profile_csv(path);

  REQUIRE(back.n == p.n);
  CHECK((back.phi - p.phi).abs().maxCoeff() == 0.0);
  CHECK((back.phi_d1 - p.phi_d1).abs().maxCoeff() == 0.0);
  CHECK((back.phi_d2 - p.phi_d2).abs().maxCoeff() == 0.0);
  CHECK((back.phi_d3 - p.phi_d3).abs().maxCoeff() == 0.0);
  CHECK((back.A - p.A).abs().maxCoeff() == 0.0);
  CHECK((back.B - p.B).abs().maxCoeff() == 0.0);
  CHECK((back.C - p.C).abs().maxCoeff() == 0.0);
  CHECK((back.D - p.D).abs().maxCoeff() == 0.0);
  for (int i = 0; i < p.n; ++i) {
    CHECK(back.kappa_defined[i] == p.kappa_defined[i]);
    if (p.kappa_defined[i]) CHECK(back.kappa_global[i] == p.kappa_global[i]);
  }
  std::remove(path.c_str());
}

TEST_CASE("vertex csv lists labels and sources") {
  VertexSet set;
  set.n = 100;
  Vertex v;
  v.position = 12.5;
  v.label = VertexLabel::concave;
  v.kappa_at = -0.75;
  v.sources = {"smooth", "noise1"};
  set.vertices.push_back(v);
  const std::string path = "io_vertices.csv";
  write_vertices_csv(path, set, {});

  std::ifstream in(path);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  CHECK(header == "position,label,kappa,sources");
  CHECK(row == "12.5,concave,-0.75,smooth;noise1");
  std::remove(path.c_str());
}

TEST_CASE("missing files raise input errors") {
  CHECK_THROWS_WITH_AS(read_polyline_csv("no_such_file.csv"),
                       doctest::Contains("InputUnresolvable"), Error);
}

TEST_CASE("malformed csv raises a BadCsv error") {
  const std::string path = "io_bad.csv";
  {
    std::ofstream out(path);
    out << "1.0,2.0\nnot-a-number,3\n";
  }
  CHECK_THROWS_WITH_AS(read_polyline_csv(path), doctest::Contains("BadCsv"), Error);
  std::remove(path.c_str());
}

}  // TEST_SUITE
