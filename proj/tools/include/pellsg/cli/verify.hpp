#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pellsg/family.hpp"
#include "pellsg/oracle.hpp"
#include "pellsg/semigroup.hpp"

namespace pellsg::cli {

enum class Quantity { Frobenius, Genus, SylvesterSum };

/// "g", "n", "s"
const char* quantity_tag(Quantity q);
std::optional<Quantity> parse_quantity(std::string_view tag);

/// Closed-form value of a family instance, or nullopt when the family has no
/// closed form for that quantity. With Validity::Enforce a level outside the
/// proven range throws OutOfValidityRange.
std::optional<Integer> family_formula(const FamilyInstance& instance, Quantity quantity, std::uint64_t p,
                                      Validity validity);

Integer stats_value(const SemigroupStats& stats, Quantity quantity);

/// Something to verify: a family instance (formula vs engine) or raw
/// generators (engine vs oracle), over levels 0..p_max.
struct VerifyTarget {
  std::optional<FamilyInstance> family;
  std::optional<GeneratorSet> generators;
  std::uint64_t p_max = 0;
  bool with_oracle = false;

  const GeneratorSet& triple() const;
  std::string label() const;
};

struct VerifyOptions {
  EngineOptions engine;
  oracle::OracleOptions oracle;
};

struct InstanceReport {
  std::string label;
  std::string generators;
  std::uint64_t p_max = 0;
  /// Proven range, "" for raw generators.
  std::string bound;
  /// Comparisons made at levels inside the proven range (all levels for raw
  /// generators), and how many of them failed.
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  /// First level inside the proven range with a mismatch.
  std::optional<std::uint64_t> first_failure;
  /// First level outside the proven range where the closed form misses.
  std::optional<std::uint64_t> first_breakdown;
  bool oracle_used = false;
  /// Oracle requested but the scan cap was reached.
  bool oracle_skipped = false;
  /// Engine ran out of budget; counts as a failure.
  std::optional<std::string> error;

  bool passed() const { return failures == 0 && !error; }
};

struct VerifyReport {
  std::vector<InstanceReport> instances;

  bool passed() const;
  std::uint64_t failed_count() const;
};

InstanceReport verify_instance(const VerifyTarget& target, const VerifyOptions& options = {});

enum class Grid { Default, Extended };

/// default: every legal instance of the three families with u in {2,3} and
/// first generator <= 6000, levels 0..min(last valid + 1, 12).
/// extended: u in {2,...,5}, first generator <= 40000, levels up to 30, plus
/// the worked instances over their whole range and one level past it.
std::vector<VerifyTarget> grid_targets(Grid grid);

VerifyReport run_verify(const std::vector<VerifyTarget>& targets, const VerifyOptions& options = {});

/// "PASS even u=2 i=2 k=2 [12,70,985] p=0..5 valid p < 4: 12 checks; breakdown at p=4"
std::string describe(const InstanceReport& report);

}  // namespace pellsg::cli
