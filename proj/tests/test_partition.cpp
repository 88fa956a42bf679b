#include "doctest.h"
#include "multfree/partition.hpp"

#include <algorithm>
#include <functional>

using namespace multfree;

namespace {

std::vector<Partition> all_partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n)
    for (auto& p : partitions_of(n)) out.push_back(p);
  return out;
}

// "at most one cell in each column", counted cell by cell.
bool strip_by_columns(const Partition& outer, const Partition& inner) {
  if (!contains(outer, inner)) return false;
  for (int col = 1; col <= outer[0]; ++col) {
    int cells = 0;
    for (std::size_t row = 0; row < outer.length(); ++row)
      if (inner[row] < col && col <= outer[row]) ++cells;
    if (cells > 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("canonical form strips trailing zeros") {
  CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
  CHECK(Partition({0, 0}).empty());
  CHECK(Partition({2, 2, 1}).size() == 5);
  CHECK(Partition({2, 2, 1}).length() == 3);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("ordering is lexicographic with prefixes smaller") {
  CHECK(Partition{} < Partition{1});
  CHECK(Partition{1} < Partition({1, 1}));
  CHECK(Partition({1, 1}) < Partition{2});
  CHECK(Partition{2} < Partition({2, 1}));
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
  CHECK(conjugate(Partition({2, 1})) == Partition({2, 1}));
  CHECK(conjugate(Partition{4}) == Partition({1, 1, 1, 1}));
}

TEST_CASE("conjugation is an involution up to size 8") {
  for (const auto& p : all_partitions_up_to(8)) {
    const Partition t = conjugate(p);
    CHECK(t.size() == p.size());
    CHECK(conjugate(t) == p);
  }
}

TEST_CASE("contains") {
  CHECK(contains(Partition({2, 1}), Partition({1, 1})));
  CHECK_FALSE(contains(Partition({2, 1}), Partition{3}));
  for (int a = 0; a < 6; ++a) CHECK(contains(Partition{a}, Partition{}));
}

TEST_CASE("skew pair") {
  SkewPair sk(Partition({3, 2}), Partition({1}));
  CHECK(sk.size() == 4);
  CHECK_FALSE(sk.is_horizontal_strip());
  CHECK(SkewPair(Partition({3, 1}), Partition({1})).is_horizontal_strip());
  CHECK_THROWS_AS(SkewPair(Partition({1}), Partition({2})), std::invalid_argument);
}

TEST_CASE("horizontal strips") {
  CHECK(is_horizontal_strip(Partition({2, 1}), Partition({1, 1})));
  CHECK_FALSE(is_horizontal_strip(Partition({2, 2}), Partition({1})));
  CHECK_FALSE(strip_by_columns(Partition({2, 2}), Partition({1})));
  for (int s = 0; s < 7; ++s) CHECK(is_horizontal_strip(Partition{s}, Partition{}));
  CHECK_FALSE(is_horizontal_strip(Partition({1}), Partition({2})));
}

TEST_CASE("interlacing test agrees with column counting up to size 8") {
  const auto all = all_partitions_up_to(8);
  std::size_t checked = 0;
  for (const auto& outer : all)
    for (const auto& inner : all) {
      if (inner.size() > outer.size()) continue;
      REQUIRE(is_horizontal_strip(outer, inner) == strip_by_columns(outer, inner));
      ++checked;
    }
  CHECK(checked > 1000);
}

TEST_CASE("strip predecessors") {
  CHECK(strip_predecessors(Partition({2, 1}), 1) ==
        std::vector<Partition>{Partition({2, 1}), Partition{2}, Partition({1, 1})});
  CHECK(strip_predecessors(Partition{}, 5) == std::vector<Partition>{Partition{}});
  CHECK(strip_predecessors(Partition({2, 1}), -1).empty());

  SUBCASE("constant partitions lose cells only in the last row") {
    for (int m = 1; m <= 4; ++m)
      for (int a = 1; a <= 4; ++a)
        for (int b = 0; b <= a; ++b) {
          std::vector<int> rows(static_cast<std::size_t>(m), a);
          const auto got = strip_predecessors(Partition(rows), b);
          std::vector<Partition> want;
          for (int j = 0; j <= b; ++j) {
            auto r = rows;
            r.back() = a - j;
            want.push_back(Partition(r));
          }
          CHECK(got == want);
        }
  }
}

TEST_CASE("strip predecessors equal the filtered sub-partitions up to size 8") {
  const auto all = all_partitions_up_to(8);
  for (const auto& eta : all)
    for (int bound = 0; bound <= eta.size(); ++bound) {
      std::vector<Partition> want;
      for (const auto& inner : all)
        if (eta.size() - inner.size() <= bound && strip_by_columns(eta, inner))
          want.push_back(inner);
      std::sort(want.begin(), want.end(), std::greater<>());
      REQUIRE(strip_predecessors(eta, bound) == want);
    }
}

TEST_CASE("strip successors invert strip predecessors") {
  const auto all = all_partitions_up_to(6);
  for (const auto& base : all)
    for (int s = 0; s <= 3; ++s)
      for (std::size_t len : {std::size_t{2}, std::size_t{3}, std::size_t{8}}) {
        std::vector<Partition> want;
        for (int n = base.size() + s; n == base.size() + s; ++n)
          for (const auto& p : partitions_of(n, len))
            if (is_horizontal_strip(p, base)) want.push_back(p);
        std::sort(want.begin(), want.end(), std::greater<>());
        CHECK(strip_successors(base, s, len) == want);
      }
}

TEST_CASE("partition enumeration counts") {
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(counts[n]));
  CHECK(partitions_of(4, 2).size() == 3);
}
