#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <string>

#include "doctest.h"
#include "groupsel/errors.hpp"
#include "groupsel/io.hpp"
#include "groupsel/matrix.hpp"
#include "groupsel/permutation.hpp"
#include "groupsel/rng.hpp"
#include "oracles.hpp"

using namespace groupsel;

namespace {

struct TempDir {
  std::filesystem::path path;

  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("groupsel-io-" + std::to_string(std::rand()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }

  std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("matrix round trips are bit identical") {
  TempDir dir;
  Rng rng(81);
  ComplexMatrix m = oracles::random_uniform_complex(5, 3, rng);
  m(0, 0) = cplx(1.0 / 3.0, -2.0e-300);
  m(1, 2) = cplx(-7.25e+250, std::numeric_limits<double>::denorm_min());
  m(4, 1) = cplx(0.0, -0.0);

  const std::string path = dir.file("m.mat");
  write_matrix(path, m);
  const ComplexMatrix back = read_matrix(path);
  REQUIRE(back.rows() == 5);
  REQUIRE(back.cols() == 3);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(back(i, j).real() == m(i, j).real());
      CHECK(back(i, j).imag() == m(i, j).imag());
    }

  write_matrix(dir.file("m2.mat"), back);
  CHECK(read_text(dir.file("m2.mat")) == read_text(path));
}

TEST_CASE("real-valued matrices use the compact real kind") {
  TempDir dir;
  ComplexMatrix m(2, 2);
  m(0, 0) = 1.5;
  m(0, 1) = -2.0;
  m(1, 0) = -2.0;
  m(1, 1) = 4.25;
  write_matrix(dir.file("r.mat"), m);
  const std::string text = read_text(dir.file("r.mat"));
  CHECK(text.find("2 2 real") == 0);

  const ComplexMatrix back = read_matrix(dir.file("r.mat"));
  CHECK(oracles::entry_distance(back, m) == 0.0);

  m(1, 0) = cplx(-2.0, 1e-14);
  m(0, 1) = cplx(-2.0, -1e-14);
  write_matrix(dir.file("c.mat"), m);
  CHECK(read_text(dir.file("c.mat")).find("2 2 complex") == 0);
}

TEST_CASE("matrix reading rejects malformed files") {
  TempDir dir;
  const std::string path = dir.file("bad.mat");

  write_text(path, "");
  CHECK_THROWS_AS(read_matrix(path), ValidationError);

  write_text(path, "2 2 quaternion\n1 0\n0 1\n");
  CHECK_THROWS_AS(read_matrix(path), ValidationError);

  write_text(path, "2 2 real\n1 0\n");
  CHECK_THROWS_AS(read_matrix(path), ValidationError);

  write_text(path, "2 2 real\n1 0\n0 1\nextra\n");
  CHECK_THROWS_AS(read_matrix(path), ValidationError);

  write_text(path, "2 2 real\n1 nan\n0 1\n");
  CHECK_THROWS_AS(read_matrix(path), ValidationError);

  write_text(path, "0 2 real\n");
  CHECK_THROWS_AS(read_matrix(path), ValidationError);

  CHECK_THROWS_AS(read_matrix(dir.file("missing.mat")), ValidationError);

  CHECK_THROWS_WITH_AS(read_matrix(path), doctest::Contains(path.c_str()), ValidationError);
}

TEST_CASE("matrix writing rejects non-finite entries") {
  TempDir dir;
  ComplexMatrix m(1, 1);
  m(0, 0) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(write_matrix(dir.file("inf.mat"), m), ValidationError);
}

TEST_CASE("group files round trip through generators and closure") {
  TempDir dir;
  const PermutationGroup d6 = PermutationGroup::closure(
      6, {Permutation::cyclic(6), Permutation::reflection(6)});
  const std::string path = dir.file("d6.grp");
  write_group(path, d6);
  const PermutationGroup back = read_group(path);
  CHECK(back.same_group(d6));

  write_group(dir.file("triv.grp"), PermutationGroup::trivial(4));
  const PermutationGroup trivial = read_group(dir.file("triv.grp"));
  CHECK(trivial.degree() == 4);
  CHECK(trivial.order() == 1);
}

TEST_CASE("group reading rejects malformed content") {
  TempDir dir;
  const std::string path = dir.file("bad.grp");

  write_text(path, "");
  CHECK_THROWS_AS(read_group(path), ValidationError);

  write_text(path, "4\n0 1 9 3\n");
  CHECK_THROWS_AS(read_group(path), ValidationError);

  write_text(path, "4\n0 1 2\n");
  CHECK_THROWS_AS(read_group(path), ValidationError);

  write_text(path, "4\n0 0 2 3\n");
  CHECK_THROWS_AS(read_group(path), ValidationError);
}

TEST_CASE("seventeen-digit formatting survives parsing") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(1.0) == "1");
  const double third = 1.0 / 3.0;
  CHECK(std::stod(format_double(third)) == third);
  const std::string c = format_cplx(cplx(third, -2.5));
  CHECK(c.find(format_double(third)) != std::string::npos);
  CHECK(c.find("-2.5") != std::string::npos);
}

TEST_CASE("tsv rendering is exact and shape-checked") {
  TsvTable table;
  table.columns = {"name", "value"};
  table.rows = {{"alpha", "1"}, {"beta", "2.5"}};
  CHECK(render_tsv(table) == "#name\tvalue\nalpha\t1\nbeta\t2.5\n");

  TsvTable ragged;
  ragged.columns = {"a", "b"};
  ragged.rows = {{"only-one"}};
  CHECK_THROWS_AS(render_tsv(ragged), ValidationError);

  TempDir dir;
  write_tsv(dir.file("t.tsv"), table);
  CHECK(read_text(dir.file("t.tsv")) == render_tsv(table));
}

TEST_CASE("svg bar charts contain one rect per value") {
  TempDir dir;
  const std::string path = dir.file("bars.svg");
  write_svg_bars(path, "residuals", {"a", "b", "c"}, {0.5, 0.0, 2.0});
  const std::string svg = read_text(path);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("residuals") != std::string::npos);
  std::size_t rects = 0;
  for (std::size_t pos = svg.find("<rect"); pos != std::string::npos;
       pos = svg.find("<rect", pos + 1))
    ++rects;
  CHECK(rects >= 3);
  CHECK(svg.find("</svg>") != std::string::npos);

  CHECK_THROWS_AS(write_svg_bars(path, "t", {"a"}, {0.5, 1.0}), ValidationError);
  CHECK_THROWS_AS(write_svg_bars(path, "t", {"a"}, {-1.0}), ValidationError);
  CHECK_THROWS_AS(write_svg_bars(path, "t", {}, {}), ValidationError);
}

TEST_CASE("svg sweeps draw a single polyline across the grid") {
  TempDir dir;
  const std::string path = dir.file("sweep.svg");
  write_svg_polyline(path, "sweep", {0.0, 0.1, 0.2, 0.3}, {1.0, 0.2, 0.0, 0.7});
  const std::string svg = read_text(path);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("sweep") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);

  CHECK_THROWS_AS(write_svg_polyline(path, "t", {0.0}, {1.0, 2.0}), ValidationError);
  CHECK_THROWS_AS(write_svg_polyline(path, "t", {0.0}, {1.0}), ValidationError);
}

TEST_CASE("atomic writes leave no temporary behind") {
  TempDir dir;
  const std::string path = dir.file("note.txt");
  atomic_write_text(path, "first");
  CHECK(read_text(path) == "first");
  atomic_write_text(path, "second");
  CHECK(read_text(path) == "second");

  std::size_t entries = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir.path)) {
    (void)entry;
    ++entries;
  }
  CHECK(entries == 1);
}
