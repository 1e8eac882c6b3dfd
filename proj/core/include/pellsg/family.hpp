#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "pellsg/closed_form.hpp"
#include "pellsg/pell.hpp"
#include "pellsg/semigroup.hpp"

namespace pellsg {

enum class Family {
  EvenEvenOdd,  ///< (P_2i, P_2i+2, P_2i+2k+1)
  OddOddOdd,    ///< (P_2i+1, P_2i+3, P_2i+k+1), k odd
  OddOddEven,   ///< (P_2i+1, P_2i+3, P_2i+k+1), k even
};

/// CLI spelling: "even", "odd-odd", "odd-even".
std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);

/// A Pell triple with the range of levels its closed forms cover.
struct FamilyInstance {
  Family family;
  PellParams params{1};
  std::uint64_t i = 0;
  std::uint64_t k = 0;
  GeneratorSet triple;
  ValidityBound p_bound;
  /// Odd-index triple with k >= 2i+1: the third generator is redundant at
  /// p = 0 and only g_0 has a closed form (the two-generator one).
  bool two_generator_degenerate = false;
};

/// Throws IndexConstraintViolation outside the hypotheses of the closed forms and
/// NonCoprime if the triple is not coprime.
FamilyInstance build_family(Family family, PellParams params, std::uint64_t i, std::uint64_t k);

}  // namespace pellsg
