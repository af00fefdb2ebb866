#include <vector>

#include "doctest.h"
#include "oracle.hpp"

// The oracle is itself checked against hand-derived values so that the
// library-vs-oracle equivalence tests rest on something solid.

namespace {

const std::vector<uint32_t> kExampleGaps = {1,  2,  3,  4,  5,  6,  7,  9,
                                            10, 11, 12, 13, 14, 15, 17, 20,
                                            21, 22, 23, 25, 28, 29};

}  // namespace

TEST_CASE("oracle basics on the full set") {
  std::vector<uint32_t> none;
  CHECK(oracle::conductor_of(none) == 1);
  CHECK(oracle::member(none, 0));
  CHECK(oracle::member(none, 5));
  CHECK(oracle::elements_up_to(none, 3) == std::vector<uint32_t>{0, 1, 2, 3});
  CHECK(oracle::primitive_elements(none, 3) == std::vector<uint32_t>{1});
  CHECK(oracle::seed_rows(none) == std::vector<std::string>{"1"});
}

TEST_CASE("oracle on a hand-computed example") {
  CHECK(oracle::conductor_of(kExampleGaps) == 30);
  CHECK(oracle::member(kExampleGaps, 8));
  CHECK(!oracle::member(kExampleGaps, 9));
  CHECK(oracle::elements_up_to(kExampleGaps, 30) ==
        std::vector<uint32_t>{0, 8, 16, 18, 19, 24, 26, 27, 30});
  // Primitives below the conductor are 8, 18, 19 (16=8+8, 24=8+16,
  // 26=8+18, 27=8+19); 30..37 minus 32 (16+16), 34 (16+18), 35 (16+19),
  // 36 (18+18), 37 (18+19) leaves 30, 31, 33.
  CHECK(oracle::primitive_elements(kExampleGaps, 37) ==
        std::vector<uint32_t>{8, 18, 19, 30, 31, 33});

  CHECK(oracle::seed_rows(kExampleGaps) ==
        std::vector<std::string>{"11010000", "01010000", "01", "0", "10000",
                                 "01", "1", "111"});

  CHECK(oracle::order_seeds(kExampleGaps, 0, 60) ==
        std::vector<uint32_t>{30, 31, 33});
}

TEST_CASE("oracle seed rows on small sets") {
  CHECK(oracle::seed_rows({1}) == std::vector<std::string>{"11"});
  CHECK(oracle::seed_rows({1, 2}) == std::vector<std::string>{"111"});
  // 4 = 2+2 kills the first order-0 bit; both order-1 candidates survive.
  CHECK(oracle::seed_rows({1, 3}) == std::vector<std::string>{"01", "11"});
}

TEST_CASE("oracle children") {
  CHECK(oracle::children({}) ==
        std::vector<std::vector<uint32_t>>{{1}});
  CHECK(oracle::children({1}) ==
        std::vector<std::vector<uint32_t>>{{1, 2}, {1, 3}});
  CHECK(oracle::children({1, 2}) ==
        std::vector<std::vector<uint32_t>>{{1, 2, 3}, {1, 2, 4}, {1, 2, 5}});
  // Children remove one element >= conductor, so each child's gap list is
  // the parent's plus that element.
  for (const auto& child : oracle::children(kExampleGaps)) {
    REQUIRE(child.size() == kExampleGaps.size() + 1);
    CHECK(oracle::conductor_of(child) > 30);
  }
  CHECK(oracle::children(kExampleGaps).size() == 3);
}

TEST_CASE("oracle counts") {
  CHECK(oracle::count_by_genus(3) ==
        std::vector<uint64_t>{1, 1, 2, 4});
  CHECK(oracle::count_by_genus(7) ==
        std::vector<uint64_t>{1, 1, 2, 4, 7, 12, 23, 39});
  CHECK_THROWS_AS(oracle::count_by_genus(19), oracle::BoundExceeded);
}
