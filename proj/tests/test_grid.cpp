#include <cmath>
#include <limits>

#include "doctest.h"
#include "segnoise/grid.hpp"
#include "segnoise/rng.hpp"

using namespace segnoise;

TEST_CASE("grid construction validates shape and data") {
  CHECK_NOTHROW(Grid({2, 3}, std::vector<double>(6, 0.0)));
  CHECK_THROWS_AS(Grid({2, 3}, std::vector<double>(5, 0.0)), Error);
  CHECK_THROWS_AS(Grid({}, {}), EmptyShape);
  CHECK_THROWS_AS(Grid({2, 2, 2, 2}, std::vector<double>(16, 0.0)), Error);
  CHECK_THROWS_AS(Grid({0}, {}), Error);
  CHECK_THROWS_AS(Grid({1}, {std::numeric_limits<double>::quiet_NaN()}), Error);
  CHECK_THROWS_AS(Grid({1}, {std::numeric_limits<double>::infinity()}), Error);
}

TEST_CASE("strides are row-major, last axis fastest") {
  const Grid g({2, 3, 4}, std::vector<double>(24, 0.0));
  const auto s = g.strides();
  CHECK(s == std::vector<std::size_t>{12, 4, 1});
}

TEST_CASE("validate_segmentation accepts exactly binary grids") {
  CHECK_NOTHROW(validate_segmentation(Grid({2}, {0.0, 1.0})));
  CHECK_NOTHROW(validate_segmentation(Grid({1}, {1.0})));

  try {
    validate_segmentation(Grid({2}, {0.0, 0.5}));
    FAIL("expected NonBinaryValue");
  } catch (const NonBinaryValue& e) {
    CHECK(e.index == 1);
    CHECK(e.value == 0.5);
  }
}

TEST_CASE("validate_marginal accepts [0,1] grids") {
  CHECK_NOTHROW(validate_marginal(Grid({2}, {0.3, 1.0})));
  CHECK_NOTHROW(validate_marginal(Grid({2}, {0.0, 1.0})));  // binary is a valid marginal

  try {
    validate_marginal(Grid({1}, {-0.1}));
    FAIL("expected OutOfRange");
  } catch (const OutOfRange& e) {
    CHECK(e.index == 0);
    CHECK(e.value == -0.1);
  }
}

TEST_CASE("voxel_measure realizes lambda(unit cube) = 1") {
  CHECK(voxel_measure({4}) == 0.25);
  CHECK(voxel_measure({2, 2}) == 0.25);
  CHECK(voxel_measure({64, 64, 64}) == 1.0 / (64.0 * 64.0 * 64.0));
  CHECK_THROWS_AS(voxel_measure({}), EmptyShape);
}

TEST_CASE("voxel_measure times product is 1 within 1 ulp") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::size_t> shape;
    const auto rank = 1 + rng.next_u64() % 3;
    double product = 1.0;
    for (std::size_t a = 0; a < rank; ++a) {
      shape.push_back(1 + rng.next_u64() % 100);
      product *= static_cast<double>(shape.back());
    }
    const double vm = voxel_measure(shape);
    CHECK(std::abs(vm * product - 1.0) <= std::numeric_limits<double>::epsilon());
  }
}

TEST_CASE("displacement field channels must agree") {
  std::vector<Grid> ok;
  ok.push_back(Grid::zeros({2, 2}));
  ok.push_back(Grid::zeros({2, 2}));
  CHECK_NOTHROW(DisplacementField(std::move(ok)));

  std::vector<Grid> wrong_count;
  wrong_count.push_back(Grid::zeros({2, 2}));
  CHECK_THROWS_AS(DisplacementField(std::move(wrong_count)), ShapeMismatch);

  std::vector<Grid> wrong_shape;
  wrong_shape.push_back(Grid::zeros({2, 2}));
  wrong_shape.push_back(Grid::zeros({2, 3}));
  CHECK_THROWS_AS(DisplacementField(std::move(wrong_shape)), ShapeMismatch);
}
