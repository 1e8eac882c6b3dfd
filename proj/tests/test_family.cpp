#include "doctest.h"
#include "pellsg/errors.hpp"
#include "pellsg/family.hpp"

using pellsg::Family;
using pellsg::GeneratorSet;
using pellsg::PellParams;
using pellsg::ValidityBound;

TEST_CASE("family names round trip") {
  for (auto f : {Family::EvenEvenOdd, Family::OddOddOdd, Family::OddOddEven}) {
    CHECK(pellsg::parse_family(pellsg::family_name(f)) == f);
  }
  CHECK(pellsg::family_name(Family::OddOddEven) == "odd-even");
  CHECK_FALSE(pellsg::parse_family("odd").has_value());
}

TEST_CASE("even family triple") {
  const auto inst = pellsg::build_family(Family::EvenEvenOdd, PellParams(2), 2, 2);
  CHECK(inst.triple == GeneratorSet::of({12, 70, 985}));
  CHECK(inst.p_bound.kind == ValidityBound::Kind::StrictBelow);
  CHECK(inst.p_bound.limit == 4);
  CHECK(inst.p_bound.max_valid() == 3);
  CHECK_FALSE(inst.two_generator_degenerate);

  const auto wider = pellsg::build_family(Family::EvenEvenOdd, PellParams(2), 2, 3);
  CHECK(wider.triple == GeneratorSet::of({12, 70, 5741}));
  CHECK(wider.p_bound.max_valid() == 27);
}

TEST_CASE("odd-index triples") {
  const auto oo = pellsg::build_family(Family::OddOddOdd, PellParams(2), 4, 3);
  CHECK(oo.triple == GeneratorSet::of({985, 5741, 13860}));
  CHECK(oo.p_bound.kind == ValidityBound::Kind::AtMost);
  CHECK(oo.p_bound.max_valid() == 98);
  CHECK(oo.p_bound.describe() == "p <= 98");

  const auto oe = pellsg::build_family(Family::OddOddEven, PellParams(2), 3, 4);
  CHECK(oe.triple == GeneratorSet::of({169, 985, 5741}));
  CHECK(oe.p_bound.max_valid() == 28);

  CHECK(pellsg::build_family(Family::OddOddOdd, PellParams(2), 5, 3).triple ==
        GeneratorSet::of({5741, 33461, 80782}));
  CHECK(pellsg::build_family(Family::OddOddEven, PellParams(2), 5, 6).triple ==
        GeneratorSet::of({5741, 33461, 1136689}));
}

TEST_CASE("a redundant third generator marks the instance degenerate") {
  const auto inst = pellsg::build_family(Family::OddOddOdd, PellParams(2), 1, 3);
  CHECK(inst.two_generator_degenerate);
  CHECK(inst.triple == GeneratorSet::of({5, 29, 70}));
  CHECK(inst.p_bound.max_valid() == 0);
}

TEST_CASE("index constraints") {
  CHECK_THROWS_AS(pellsg::build_family(Family::OddOddOdd, PellParams(2), 3, 4), pellsg::IndexConstraintViolation);
  CHECK_THROWS_AS(pellsg::build_family(Family::OddOddEven, PellParams(2), 3, 3), pellsg::IndexConstraintViolation);
  CHECK_THROWS_AS(pellsg::build_family(Family::OddOddOdd, PellParams(2), 3, 1), pellsg::IndexConstraintViolation);
  CHECK_THROWS_AS(pellsg::build_family(Family::OddOddEven, PellParams(2), 3, 2), pellsg::IndexConstraintViolation);
  CHECK_THROWS_AS(pellsg::build_family(Family::OddOddOdd, PellParams(2), 0, 3), pellsg::IndexConstraintViolation);
  CHECK_THROWS_AS(pellsg::build_family(Family::EvenEvenOdd, PellParams(2), 1, 2), pellsg::IndexConstraintViolation);
  CHECK_THROWS_AS(pellsg::build_family(Family::EvenEvenOdd, PellParams(2), 3, 2), pellsg::IndexConstraintViolation);
  CHECK_THROWS_AS(pellsg::build_family(Family::EvenEvenOdd, PellParams(1), 2, 2), pellsg::IndexConstraintViolation);
}

TEST_CASE("family triples are coprime across a grid") {
  for (std::uint64_t u = 2; u <= 4; ++u) {
    for (std::uint64_t i = 2; i <= 6; ++i) {
      for (std::uint64_t k = i; k <= 2 * i; ++k) {
        CHECK_NOTHROW(pellsg::build_family(Family::EvenEvenOdd, PellParams(u), i, k));
      }
      for (std::uint64_t k = 3; k <= 2 * i; ++k) {
        const auto f = k % 2 == 1 ? Family::OddOddOdd : Family::OddOddEven;
        CHECK_NOTHROW(pellsg::build_family(f, PellParams(u), i, k));
      }
    }
  }
}
