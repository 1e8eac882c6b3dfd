#pragma once

#include <cstdint>
#include <string>

#include "pellsg/integer.hpp"
#include "pellsg/pell.hpp"

// Closed forms for the Pell triples
//
//   even family      (P_2i, P_2i+2, P_2i+2k+1),   u >= 2, 2 <= i <= k
//   odd-odd family   (P_2i+1, P_2i+3, P_2i+k+1),  k odd,  3 <= k <= 2i-1
//   odd-even family  (P_2i+1, P_2i+3, P_2i+k+1),  k even, 4 <= k <= 2i
//
// Every formula has a checked form (throws OutOfValidityRange when p lies
// outside the proven range) and an unchecked form selected with
// Validity::Ignore, which evaluates the expression as is.

namespace pellsg {

enum class Validity { Enforce, Ignore };

/// Range of levels p for which a closed form is proven.
struct ValidityBound {
  enum class Kind {
    StrictBelow,  ///< p < limit (limit may be fractional)
    AtMost,       ///< p <= limit (limit integral)
  };

  Kind kind = Kind::AtMost;
  Rational limit;

  bool admits(std::uint64_t p) const;

  /// Largest admitted p, or -1 when none is.
  Integer max_valid() const;

  /// "p < 4", "p < 82/3", "p <= 98"
  std::string describe() const;

  friend bool operator==(const ValidityBound&, const ValidityBound&) = default;
};

// ---- even family ----------------------------------------------------------

/// u(P_2k+1 + 1)/P_2i - 1, exact. Valid levels are p strictly below it.
Rational even_p_limit(PellParams u, std::uint64_t i, std::uint64_t k);
ValidityBound even_validity(PellParams u, std::uint64_t i, std::uint64_t k);

Integer even_frobenius(PellParams u, std::uint64_t i, std::uint64_t k, std::uint64_t p,
                       Validity validity = Validity::Enforce);
Integer even_genus(PellParams u, std::uint64_t i, std::uint64_t k, std::uint64_t p,
                   Validity validity = Validity::Enforce);
Integer even_sylvester(PellParams u, std::uint64_t i, std::uint64_t k, std::uint64_t p,
                       Validity validity = Validity::Enforce);

// ---- odd-index families ---------------------------------------------------

/// Odd k: q is the largest integer <= P_2i+1 / P_k with q == 1 (mod u), and
/// P_2i+1 = q P_k + u r.
struct OddOddParams {
  Integer q;
  Integer r;
  friend bool operator==(const OddOddParams&, const OddOddParams&) = default;
};

/// Even k: q = floor(u P_2i+1 / P_k) and P_2i+1 = q (P_k / u) + r.
struct OddEvenParams {
  Integer q;
  Integer r;
  friend bool operator==(const OddEvenParams&, const OddEvenParams&) = default;
};

/// Which corner of the Apéry layout holds the maximum.
enum class CornerBranch {
  Remainder,  ///< end of the partial (remainder) row
  FullBlock,  ///< end of the last full block row
};

OddOddParams odd_odd_params(PellParams u, std::uint64_t i, std::uint64_t k);
ValidityBound odd_odd_validity(PellParams u, std::uint64_t i, std::uint64_t k);
CornerBranch odd_odd_branch(PellParams u, std::uint64_t i, std::uint64_t k);

/// Candidate maximum minus a_1 at the given corner, for any p (unchecked):
///   Remainder: (r-1) P_2i+3 + (q + (p+1)u - 1) P_2i+k+1 - P_2i+1
///   FullBlock: (P_k-1) P_2i+3 + (q + pu - 1) P_2i+k+1 - P_2i+1
Integer odd_odd_corner(PellParams u, std::uint64_t i, std::uint64_t k, std::uint64_t p,
                       CornerBranch corner);

Integer odd_odd_frobenius(PellParams u, std::uint64_t i, std::uint64_t k, std::uint64_t p,
                          Validity validity = Validity::Enforce);

/// Requires i >= 2.
Integer odd_odd_genus(PellParams u, std::uint64_t i, std::uint64_t k, std::uint64_t p,
                      Validity validity = Validity::Enforce);

OddEvenParams odd_even_params(PellParams u, std::uint64_t i, std::uint64_t k);
ValidityBound odd_even_validity(PellParams u, std::uint64_t i, std::uint64_t k);
CornerBranch odd_even_branch(PellParams u, std::uint64_t i, std::uint64_t k);

///   Remainder: (r-1) P_2i+3 + (q+p) P_2i+k+1 - P_2i+1
///   FullBlock: (P_k/u - 1) P_2i+3 + (q+p-1) P_2i+k+1 - P_2i+1
Integer odd_even_corner(PellParams u, std::uint64_t i, std::uint64_t k, std::uint64_t p,
                        CornerBranch corner);

Integer odd_even_frobenius(PellParams u, std::uint64_t i, std::uint64_t k, std::uint64_t p,
                           Validity validity = Validity::Enforce);

/// Requires i >= 2.
Integer odd_even_genus(PellParams u, std::uint64_t i, std::uint64_t k, std::uint64_t p,
                       Validity validity = Validity::Enforce);

/// g(P_2i+1, P_2i+3) = P_2i+1 P_2i+3 - P_2i+1 - P_2i+3, which is also g_0 of
/// the odd-index triple once k >= 2i+1 (the third generator is redundant).
Integer two_generator_reduction(PellParams u, std::uint64_t i, std::uint64_t k);

}  // namespace pellsg
