#include "pellsg/pell.hpp"

#include <stdexcept>

namespace pellsg {

PellParams::PellParams(std::uint64_t u) : u_(u) {
  if (u == 0) throw std::invalid_argument("Pell parameter u must be >= 1");
}

Integer pell(PellParams params, std::uint64_t n) {
  const Integer u = from_u64(params.u());
  Integer prev = 0;
  Integer cur = 1;
  if (n == 0) return prev;
  for (std::uint64_t m = 1; m < n; ++m) {
    Integer next = u * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Integer> pell_table(PellParams params, std::uint64_t n_max) {
  const Integer u = from_u64(params.u());
  std::vector<Integer> table;
  table.reserve(n_max + 1);
  table.emplace_back(0);
  if (n_max >= 1) table.emplace_back(1);
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    table.push_back(u * table[n - 1] + table[n - 2]);
  }
  return table;
}

bool check_addition_identity(PellParams params, std::uint64_t i, std::uint64_t k) {
  if (i == 0 || k == 0) {
    throw std::invalid_argument("addition identity needs i >= 1 and k >= 1");
  }
  const auto p = pell_table(params, i + k);
  return p[i + k] == p[i + 1] * p[k] + p[i] * p[k - 1];
}

std::uint64_t residue_mod_u(PellParams params, std::uint64_t n) {
  const std::uint64_t u = params.u();
  if (u < 2) throw std::invalid_argument("residue_mod_u requires u >= 2");
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), pell(params, n).get_mpz_t(), u);
  return to_u64(r);
}

}  // namespace pellsg
