#pragma once

#include <cstdint>
#include <vector>

#include "pellsg/integer.hpp"
#include "pellsg/semigroup.hpp"

// Slow reference implementations. They share no arithmetic with the
// Apéry engine and exist to cross-check it.

namespace pellsg::oracle {

struct OracleOptions {
  /// Largest n the oracle will look at.
  std::uint64_t cap = 10'000'000;
};

/// Nested-loop count of all representations of n. Supports 2 <= kappa <= 4.
/// Throws CapExceeded when n > cap.
std::uint64_t brute_denumerant(const GeneratorSet& gens, std::uint64_t n, const OracleOptions& options = {});

/// Scans n = 0, 1, 2, ... and classifies each n by its representation count.
/// The scan ends after a_1 consecutive members of S_p. Throws CapExceeded.
SemigroupStats brute_stats(const GeneratorSet& gens, std::uint64_t p, const OracleOptions& options = {});

/// brute_stats for all levels 0..p_max from one scan.
std::vector<SemigroupStats> brute_stats_upto(const GeneratorSet& gens, std::uint64_t p_max,
                                             const OracleOptions& options = {});

}  // namespace pellsg::oracle
