#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "pellsg/integer.hpp"

namespace pellsg {

/// Sorted, pairwise distinct generators a_1 < a_2 < ... < a_kappa with
/// gcd 1 and kappa >= 2. a_1 = min(A) is the Apéry modulus throughout.
class GeneratorSet {
 public:
  /// Sorts the input. Throws InvalidGenerators if fewer than two values,
  /// a value < 2, a duplicate, or gcd != 1.
  explicit GeneratorSet(std::vector<Integer> generators);

  static GeneratorSet of(std::initializer_list<std::uint64_t> generators);

  /// Parses "a,b,c".
  static GeneratorSet parse(std::string_view csv);

  const std::vector<Integer>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  const Integer& operator[](std::size_t t) const { return gens_[t]; }
  const Integer& modulus() const noexcept { return gens_.front(); }

  /// "a,b,c"
  std::string to_string() const;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::vector<Integer> gens_;
};

/// The p-Apéry set: elements[j] is the least member of S_p congruent to j
/// modulo a_1 (so elements[j] - a_1 is not in S_p).
struct AperySet {
  std::uint64_t level = 0;
  Integer modulus;
  std::vector<Integer> elements;

  const Integer& max_element() const;
};

/// (g_p, n_p, s_p) of one generator set at level p.
struct SemigroupStats {
  Integer frobenius;
  Integer genus;
  Integer sylvester_sum;
  std::uint64_t level = 0;

  friend bool operator==(const SemigroupStats&, const SemigroupStats&) = default;
};

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000;

struct EngineOptions {
  /// Cap on enumerated coordinate tuples across all bound doublings.
  std::uint64_t budget = kDefaultBudget;
};

/// Number of (x_1, ..., x_kappa) >= 0 with sum x_t a_t = n. Zero for n < 0.
Integer denumerant(const GeneratorSet& gens, const Integer& n);

/// n is in S_p, i.e. has at least p + 1 representations.
bool is_member(const GeneratorSet& gens, std::uint64_t p, const Integer& n);

/// Apéry set at level p. Throws BudgetExceeded.
AperySet apery_set(const GeneratorSet& gens, std::uint64_t p,
                   const EngineOptions& options = {});

/// Apéry sets for every level 0..p_max from a single enumeration.
std::vector<AperySet> apery_sets(const GeneratorSet& gens, std::uint64_t p_max,
                                 const EngineOptions& options = {});

/// Frobenius number, genus and Sylvester sum from an Apéry set, computed in
/// exact rationals. Throws NonIntegerResult if the set is inconsistent.
SemigroupStats stats_from_apery(const AperySet& apery);

SemigroupStats compute_stats(const GeneratorSet& gens, std::uint64_t p,
                             const EngineOptions& options = {});

/// compute_stats for every level 0..p_max.
std::vector<SemigroupStats> compute_stats_upto(const GeneratorSet& gens, std::uint64_t p_max,
                                               const EngineOptions& options = {});

}  // namespace pellsg
