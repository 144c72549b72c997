#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

#include "doctest.h"
#include "segnoise/npy.hpp"
#include "segnoise/pgm.hpp"
#include "segnoise/rng.hpp"

using namespace segnoise;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const char* name) {
  const fs::path dir = fs::temp_directory_path() / "segnoise_npy_tests";
  fs::create_directories(dir);
  return dir / name;
}

void write_bytes(const fs::path& p, const std::vector<unsigned char>& bytes) {
  std::ofstream out(p, std::ios::binary);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

std::vector<unsigned char> read_bytes(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// np.save output for np.array([1.5, -2.0, 3.25]).
const std::vector<unsigned char> kGoldenF8 = {
    147, 78,  85,  77, 80,  89,  1,   0,   118, 0,   123, 39,  100, 101, 115, 99,  114, 39, 58,
    32,  39,  60,  102, 56, 39,  44,  32,  39,  102, 111, 114, 116, 114, 97,  110, 95,  111, 114,
    100, 101, 114, 39, 58,  32,  70,  97,  108, 115, 101, 44,  32,  39,  115, 104, 97,  112, 101,
    39,  58,  32,  40, 51,  44,  41,  44,  32,  125, 32,  32,  32,  32,  32,  32,  32,  32,  32,
    32,  32,  32,  32, 32,  32,  32,  32,  32,  32,  32,  32,  32,  32,  32,  32,  32,  32,  32,
    32,  32,  32,  32, 32,  32,  32,  32,  32,  32,  32,  32,  32,  32,  32,  32,  32,  32,  32,
    32,  32,  32,  32, 32,  32,  32,  32,  32,  32,  32,  32,  32,  32,  32,  10,  0,   0,   0,
    0,   0,   0,   248, 63, 0,   0,   0,   0,   0,   0,   0,   192, 0,   0,   0,   0,   0,   0,
    10,  64};

// np.save output for np.array([[1, 0], [0, 1]], dtype='|u1').
const std::vector<unsigned char> kGoldenU1 = {
    147, 78,  85,  77,  80, 89,  1,   0,   118, 0,   123, 39,  100, 101, 115, 99,  114, 39,  58,
    32,  39,  124, 117, 49, 39,  44,  32,  39,  102, 111, 114, 116, 114, 97,  110, 95,  111, 114,
    100, 101, 114, 39,  58, 32,  70,  97,  108, 115, 101, 44,  32,  39,  115, 104, 97,  112, 101,
    39,  58,  32,  40,  50, 44,  32,  50,  41,  44,  32,  125, 32,  32,  32,  32,  32,  32,  32,
    32,  32,  32,  32,  32, 32,  32,  32,  32,  32,  32,  32,  32,  32,  32,  32,  32,  32,  32,
    32,  32,  32,  32,  32, 32,  32,  32,  32,  32,  32,  32,  32,  32,  32,  32,  32,  32,  32,
    32,  32,  32,  32,  32, 32,  32,  32,  32,  32,  32,  32,  32,  10,  1,   0,   0,   1};

}  // namespace

TEST_CASE("reads numpy-written f8 and u1 files") {
  const auto p = temp_file("golden_f8.npy");
  write_bytes(p, kGoldenF8);
  const Grid g = read_npy(p);
  CHECK(g.shape() == std::vector<std::size_t>{3});
  CHECK(g[0] == 1.5);
  CHECK(g[1] == -2.0);
  CHECK(g[2] == 3.25);

  const auto q = temp_file("golden_u1.npy");
  write_bytes(q, kGoldenU1);
  const Grid h = read_npy(q);
  CHECK(h.shape() == std::vector<std::size_t>{2, 2});
  CHECK(h[0] == 1.0);
  CHECK(h[1] == 0.0);
  CHECK(h[2] == 0.0);
  CHECK(h[3] == 1.0);
}

TEST_CASE("writer emits the same bytes numpy would") {
  const auto p = temp_file("ours_f8.npy");
  write_npy(p, Grid({3}, {1.5, -2.0, 3.25}), NpyDtype::Float64);
  CHECK(read_bytes(p) == kGoldenF8);

  const auto q = temp_file("ours_u1.npy");
  write_npy(q, Grid({2, 2}, {1.0, 0.0, 0.0, 1.0}), NpyDtype::UInt8);
  CHECK(read_bytes(q) == kGoldenU1);
}

TEST_CASE("round trip reproduces shape and data bit-exactly") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::size_t> shape;
    const auto rank = 1 + rng.next_u64() % 3;
    std::size_t total = 1;
    for (std::size_t a = 0; a < rank; ++a) {
      shape.push_back(1 + rng.next_u64() % 9);
      total *= shape.back();
    }
    std::vector<double> data(total);
    for (double& v : data) v = rng.next_unit() * 2.0 - 1.0;

    const auto p = temp_file("roundtrip.npy");
    const Grid g(shape, data);
    write_npy(p, g);
    const Grid back = read_npy(p);
    CHECK(back.shape() == shape);
    bool identical = true;
    for (std::size_t i = 0; i < total; ++i) {
      if (back[i] != data[i]) identical = false;
    }
    CHECK(identical);
  }
}

TEST_CASE("u1 writing requires binary data") {
  const auto p = temp_file("u1_bad.npy");
  CHECK_THROWS_AS(write_npy(p, Grid({2}, {0.0, 0.5}), NpyDtype::UInt8), NonBinaryValue);
}

TEST_CASE("reader rejects malformed or unsupported files") {
  auto corrupt = kGoldenF8;

  SUBCASE("bad magic") {
    corrupt[0] = 'X';
    const auto p = temp_file("bad_magic.npy");
    write_bytes(p, corrupt);
    CHECK_THROWS_AS(read_npy(p), Error);
  }
  SUBCASE("unsupported version") {
    corrupt[6] = 2;
    const auto p = temp_file("bad_version.npy");
    write_bytes(p, corrupt);
    CHECK_THROWS_AS(read_npy(p), Error);
  }
  SUBCASE("fortran order") {
    // patch 'False' -> 'True ' in the header dict
    const std::string header(corrupt.begin() + 10, corrupt.begin() + 10 + 118);
    const auto at = header.find("False");
    for (std::size_t i = 0; i < 5; ++i) corrupt[10 + at + i] = "True "[i];
    const auto p = temp_file("fortran.npy");
    write_bytes(p, corrupt);
    CHECK_THROWS_AS(read_npy(p), Error);
  }
  SUBCASE("unsupported dtype") {
    const std::string header(corrupt.begin() + 10, corrupt.begin() + 10 + 118);
    const auto at = header.find("<f8");
    corrupt[10 + at + 2] = '4';
    const auto p = temp_file("f4.npy");
    write_bytes(p, corrupt);
    CHECK_THROWS_AS(read_npy(p), Error);
  }
  SUBCASE("truncated payload") {
    corrupt.resize(corrupt.size() - 4);
    const auto p = temp_file("short.npy");
    write_bytes(p, corrupt);
    CHECK_THROWS_AS(read_npy(p), Error);
  }
  SUBCASE("missing file") { CHECK_THROWS_AS(read_npy(temp_file("nope.npy")), Error); }
}

TEST_CASE("pgm export scales linearly with constant grids mapping to 0") {
  const auto p = temp_file("img.pgm");
  write_pgm(p, Grid({2, 3}, {0.0, 0.5, 1.0, 1.0, 0.25, 0.75}));
  const auto bytes = read_bytes(p);
  const std::string header = "P5\n3 2\n255\n";
  REQUIRE(bytes.size() == header.size() + 6);
  CHECK(std::equal(header.begin(), header.end(), bytes.begin()));
  const unsigned char* px = bytes.data() + header.size();
  CHECK(px[0] == 0);
  CHECK(px[1] == 128);  // llround(0.5 * 255)
  CHECK(px[2] == 255);
  CHECK(px[3] == 255);
  CHECK(px[4] == 64);
  CHECK(px[5] == 191);

  const auto q = temp_file("flat.pgm");
  write_pgm(q, Grid::filled({2, 2}, 3.25));
  const auto flat = read_bytes(q);
  const std::string h2 = "P5\n2 2\n255\n";
  REQUIRE(flat.size() == h2.size() + 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(flat[h2.size() + i] == 0);

  CHECK_THROWS_AS(write_pgm(temp_file("bad.pgm"), Grid::zeros({4})), Error);
}
