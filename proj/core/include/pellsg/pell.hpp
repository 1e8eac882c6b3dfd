#pragma once

#include <cstdint>
#include <vector>

#include "pellsg/integer.hpp"

namespace pellsg {

/// Parameter u of the Pell polynomials P_n(u) = u P_{n-1}(u) + P_{n-2}(u),
/// P_0 = 0, P_1 = 1. u = 1 gives Fibonacci, u = 2 the classical Pell numbers.
class PellParams {
 public:
  /// Throws std::invalid_argument for u = 0.
  explicit PellParams(std::uint64_t u);

  std::uint64_t u() const noexcept { return u_; }

  friend bool operator==(const PellParams&, const PellParams&) = default;

 private:
  std::uint64_t u_;
};

/// P_n(u), exact.
Integer pell(PellParams params, std::uint64_t n);

/// P_0(u), ..., P_{n_max}(u).
std::vector<Integer> pell_table(PellParams params, std::uint64_t n_max);

/// Checks P_{i+k} = P_{i+1} P_k + P_i P_{k-1}. Requires i, k >= 1.
bool check_addition_identity(PellParams params, std::uint64_t i, std::uint64_t k);

/// P_n(u) mod u; 0 for even n and 1 for odd n. Requires u >= 2.
std::uint64_t residue_mod_u(PellParams params, std::uint64_t n);

}  // namespace pellsg
