#include "pellsg/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pellsg/errors.hpp"

namespace pellsg::oracle {

namespace {

using u64 = std::uint64_t;

std::vector<u64> small_generators(const GeneratorSet& gens, const OracleOptions& options) {
  std::vector<u64> out;
  for (const auto& a : gens.generators()) {
    if (!fits_u64(a) || to_u64(a) > options.cap) {
      throw CapExceeded("oracle: generator " + to_string(a) + " exceeds the cap " + std::to_string(options.cap));
    }
    out.push_back(to_u64(a));
  }
  return out;
}

}  // namespace

std::uint64_t brute_denumerant(const GeneratorSet& gens, std::uint64_t n, const OracleOptions& options) {
  if (n > options.cap) {
    throw CapExceeded("oracle: n=" + std::to_string(n) + " exceeds the cap " + std::to_string(options.cap));
  }
  const auto a = small_generators(gens, options);
  u64 count = 0;
  switch (a.size()) {
    case 2:
      for (u64 x2 = 0; x2 * a[1] <= n; ++x2) {
        if ((n - x2 * a[1]) % a[0] == 0) ++count;
      }
      break;
    case 3:
      for (u64 x3 = 0; x3 * a[2] <= n; ++x3) {
        for (u64 x2 = 0; x3 * a[2] + x2 * a[1] <= n; ++x2) {
          if ((n - x3 * a[2] - x2 * a[1]) % a[0] == 0) ++count;
        }
      }
      break;
    case 4:
      for (u64 x4 = 0; x4 * a[3] <= n; ++x4) {
        for (u64 x3 = 0; x4 * a[3] + x3 * a[2] <= n; ++x3) {
          for (u64 x2 = 0; x4 * a[3] + x3 * a[2] + x2 * a[1] <= n; ++x2) {
            if ((n - x4 * a[3] - x3 * a[2] - x2 * a[1]) % a[0] == 0) ++count;
          }
        }
      }
      break;
    default:
      throw std::invalid_argument("oracle: brute_denumerant supports 2 to 4 generators");
  }
  return count;
}

std::vector<SemigroupStats> brute_stats_upto(const GeneratorSet& gens, std::uint64_t p_max,
                                             const OracleOptions& options) {
  const auto a = small_generators(gens, options);
  const u64 a1 = a[0];
  const u64 saturate = p_max + 1;

  // ways[t][n]: representations of n using the first t+1 generators, capped at
  // p_max + 1 (min(x, c) + min(y, c) capped again equals min(x + y, c)).
  std::vector<std::vector<u64>> ways(a.size());

  // A gap at level p is a gap at every higher level, so the top level has the
  // latest gap and decides when the scan may stop.
  struct Tally {
    bool has_gap = false;
    u64 last_gap = 0;
    u64 gaps = 0;
    __extension__ unsigned __int128 gap_sum = 0;
  };
  std::vector<Tally> tallies(saturate);
  const Tally& top = tallies.back();
  for (auto& w : ways) w.reserve(4096);

  for (u64 n = 0, residue = 0;; ++n, residue = residue + 1 == a1 ? 0 : residue + 1) {
    if (n > options.cap) {
      throw CapExceeded("oracle: scan for " + gens.to_string() + " passed the cap " + std::to_string(options.cap));
    }
    ways[0].push_back(residue == 0 ? 1 : 0);
    for (std::size_t t = 1; t < a.size(); ++t) {
      u64 w = ways[t - 1][n];
      if (n >= a[t]) w += ways[t][n - a[t]];
      ways[t].push_back(std::min(w, saturate));
    }
    // n is a gap exactly at the levels p >= reps
    for (u64 p = ways.back()[n]; p < saturate; ++p) {
      Tally& tally = tallies[p];
      tally.has_gap = true;
      tally.last_gap = n;
      ++tally.gaps;
      tally.gap_sum += n;
    }
    // n in S_p implies n + a1 in S_p, so a1 consecutive members end the gaps.
    const u64 run = top.has_gap ? n - top.last_gap : n + 1;
    if (run >= a1) break;
  }

  std::vector<SemigroupStats> out;
  for (u64 p = 0; p < saturate; ++p) {
    const Tally& tally = tallies[p];
    SemigroupStats s;
    s.level = p;
    s.frobenius = tally.has_gap ? from_u64(tally.last_gap) : Integer(-1);
    s.genus = from_u64(tally.gaps);
    s.sylvester_sum = (from_u64(static_cast<u64>(tally.gap_sum >> 64)) << 64) +
                      from_u64(static_cast<u64>(tally.gap_sum));
    out.push_back(std::move(s));
  }
  return out;
}

SemigroupStats brute_stats(const GeneratorSet& gens, std::uint64_t p, const OracleOptions& options) {
  return brute_stats_upto(gens, p, options).back();
}

}  // namespace pellsg::oracle
