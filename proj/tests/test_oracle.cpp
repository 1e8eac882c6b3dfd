#include <stdexcept>

#include "doctest.h"
#include "pellsg/errors.hpp"
#include "pellsg/oracle.hpp"

using pellsg::GeneratorSet;
using pellsg::SemigroupStats;
namespace oracle = pellsg::oracle;

TEST_CASE("brute denumerant") {
  CHECK(oracle::brute_denumerant(GeneratorSet::of({2, 5, 7}), 10) == 2);
  CHECK(oracle::brute_denumerant(GeneratorSet::of({2, 5, 7}), 43) == 17);
  const auto pell4 = GeneratorSet::of({12, 70, 985});
  CHECK(oracle::brute_denumerant(pell4, 0) == 1);
  CHECK(oracle::brute_denumerant(pell4, 1335) >= 1);
  CHECK(oracle::brute_denumerant(pell4, 1323) == 0);
  CHECK(oracle::brute_denumerant(GeneratorSet::of({2, 3}), 12) == 3);
  CHECK(oracle::brute_denumerant(GeneratorSet::of({2, 3, 5, 7}), 10) == 5);
}

TEST_CASE("brute denumerant limits") {
  oracle::OracleOptions opts;
  opts.cap = 100;
  CHECK_THROWS_AS(oracle::brute_denumerant(GeneratorSet::of({2, 3}), 101, opts), pellsg::CapExceeded);
  CHECK_THROWS_AS(oracle::brute_denumerant(GeneratorSet::of({2, 3, 5, 7, 11}), 10), std::invalid_argument);
}

TEST_CASE("brute stats") {
  const auto pell4 = GeneratorSet::of({12, 70, 985});
  CHECK(oracle::brute_stats(pell4, 0) == SemigroupStats{1323, 662, 347209, 0});
  CHECK(oracle::brute_stats(pell4, 2) == SemigroupStats{2163, 1502, 1255669, 2});
  CHECK(oracle::brute_stats(GeneratorSet::of({2, 3}), 0) == SemigroupStats{1, 1, 1, 0});

  const auto all = oracle::brute_stats_upto(pell4, 3);
  REQUIRE(all.size() == 4);
  CHECK(all[1] == SemigroupStats{1743, 1082, 713239, 1});
  CHECK(all[3] == SemigroupStats{2583, 1922, 1974499, 3});

  oracle::OracleOptions opts;
  opts.cap = 2000;
  CHECK_THROWS_AS(oracle::brute_stats(pell4, 3, opts), pellsg::CapExceeded);
}

TEST_CASE("stopping rule: a run of a1 members is followed by members only") {
  const auto gens = GeneratorSet::of({7, 10, 23});
  for (std::uint64_t p = 0; p <= 3; ++p) {
    const auto stats = oracle::brute_stats(gens, p);
    const std::uint64_t g = pellsg::to_u64(stats.frobenius);
    CHECK(oracle::brute_denumerant(gens, g) <= p);
    for (std::uint64_t n = g + 1; n < g + 200; ++n) CHECK(oracle::brute_denumerant(gens, n) >= p + 1);
  }
}
