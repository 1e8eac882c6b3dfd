#include "pellsg/family.hpp"

#include <string>
#include <vector>

#include "pellsg/errors.hpp"

namespace pellsg {

std::string_view family_name(Family family) {
  switch (family) {
    case Family::EvenEvenOdd:
      return "even";
    case Family::OddOddOdd:
      return "odd-odd";
    case Family::OddOddEven:
      return "odd-even";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "even") return Family::EvenEvenOdd;
  if (name == "odd-odd") return Family::OddOddOdd;
  if (name == "odd-even") return Family::OddOddEven;
  return std::nullopt;
}

namespace {

GeneratorSet coprime_triple(std::vector<Integer> values) {
  Integer g = 0;
  for (const auto& v : values) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g != 1) throw NonCoprime("Pell triple has gcd " + to_string(g));
  return GeneratorSet(std::move(values));
}

}  // namespace

FamilyInstance build_family(Family family, PellParams params, std::uint64_t i, std::uint64_t k) {
  const std::string where = std::string(family_name(family)) + " family (u=" + std::to_string(params.u()) +
                            ", i=" + std::to_string(i) + ", k=" + std::to_string(k) + ")";
  if (family == Family::EvenEvenOdd) {
    // even_validity enforces u >= 2 and 2 <= i <= k
    auto bound = even_validity(params, i, k);
    const auto pell = pell_table(params, 2 * i + 2 * k + 1);
    return FamilyInstance{family, params, i, k,
                          coprime_triple({pell[2 * i], pell[2 * i + 2], pell[2 * i + 2 * k + 1]}),
                          std::move(bound), false};
  }

  const bool odd_k = family == Family::OddOddOdd;
  if (i < 1) throw IndexConstraintViolation(where + ": needs i >= 1");
  if ((k % 2 == 1) != odd_k) {
    throw IndexConstraintViolation(where + (odd_k ? ": needs k odd" : ": needs k even"));
  }
  if (k < (odd_k ? 3u : 4u)) {
    throw IndexConstraintViolation(where + (odd_k ? ": needs k >= 3" : ": needs k >= 4"));
  }

  const auto pell = pell_table(params, 2 * i + k + 1);
  auto triple = coprime_triple({pell[2 * i + 1], pell[2 * i + 3], pell[2 * i + k + 1]});
  if (k >= 2 * i + 1) {
    return FamilyInstance{family,
                          params,
                          i,
                          k,
                          std::move(triple),
                          ValidityBound{ValidityBound::Kind::AtMost, Rational(0)},
                          true};
  }
  auto bound = odd_k ? odd_odd_validity(params, i, k) : odd_even_validity(params, i, k);
  return FamilyInstance{family, params, i, k, std::move(triple), std::move(bound), false};
}

}  // namespace pellsg
