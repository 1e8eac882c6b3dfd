#include "pellsg/cli/verify.hpp"

#include <algorithm>

#include "pellsg/closed_form.hpp"
#include "pellsg/errors.hpp"

namespace pellsg::cli {

namespace {

constexpr Quantity kQuantities[] = {Quantity::Frobenius, Quantity::Genus, Quantity::SylvesterSum};

std::uint64_t levels_through(const FamilyInstance& inst, std::uint64_t one_past_cap) {
  const Integer last = inst.p_bound.max_valid() + 1;
  if (last < 0) return 0;
  return std::min<std::uint64_t>(fits_u64(last) ? to_u64(last) : one_past_cap, one_past_cap);
}

void add_family_grid(std::vector<VerifyTarget>& out, std::uint64_t u, const Integer& a1_max,
                     std::uint64_t p_cap) {
  const PellParams params(u);
  for (std::uint64_t i = 2;; ++i) {
    if (pell(params, 2 * i) > a1_max) break;
    for (std::uint64_t k = i; k <= 2 * i; ++k) {
      auto inst = build_family(Family::EvenEvenOdd, params, i, k);
      const auto p_max = levels_through(inst, p_cap);
      out.push_back({std::move(inst), std::nullopt, p_max, false});
    }
  }
  for (std::uint64_t i = 2;; ++i) {
    if (pell(params, 2 * i + 1) > a1_max) break;
    for (std::uint64_t k = 3; k <= 2 * i; ++k) {
      auto inst = build_family(k % 2 == 1 ? Family::OddOddOdd : Family::OddOddEven, params, i, k);
      const auto p_max = levels_through(inst, p_cap);
      out.push_back({std::move(inst), std::nullopt, p_max, false});
    }
  }
}

}  // namespace

const char* quantity_tag(Quantity q) {
  switch (q) {
    case Quantity::Frobenius:
      return "g";
    case Quantity::Genus:
      return "n";
    case Quantity::SylvesterSum:
      return "s";
  }
  return "?";
}

std::optional<Quantity> parse_quantity(std::string_view tag) {
  for (auto q : kQuantities) {
    if (tag == quantity_tag(q)) return q;
  }
  return std::nullopt;
}

std::optional<Integer> family_formula(const FamilyInstance& inst, Quantity quantity, std::uint64_t p,
                                      Validity validity) {
  const auto u = inst.params;
  const auto i = inst.i, k = inst.k;
  if (inst.family == Family::EvenEvenOdd) {
    switch (quantity) {
      case Quantity::Frobenius:
        return even_frobenius(u, i, k, p, validity);
      case Quantity::Genus:
        return even_genus(u, i, k, p, validity);
      case Quantity::SylvesterSum:
        return even_sylvester(u, i, k, p, validity);
    }
  }
  if (quantity == Quantity::SylvesterSum) return std::nullopt;
  if (inst.two_generator_degenerate) {
    if (quantity != Quantity::Frobenius) return std::nullopt;
    if (!inst.p_bound.admits(p)) {
      if (validity == Validity::Ignore) return std::nullopt;
      throw OutOfValidityRange(inst.p_bound.describe(), "p=" + std::to_string(p) +
                                                            " is outside the range " + inst.p_bound.describe() +
                                                            " of the two-generator reduction");
    }
    return two_generator_reduction(u, i, k);
  }
  const bool odd_k = inst.family == Family::OddOddOdd;
  if (quantity == Quantity::Frobenius) {
    return odd_k ? odd_odd_frobenius(u, i, k, p, validity) : odd_even_frobenius(u, i, k, p, validity);
  }
  return odd_k ? odd_odd_genus(u, i, k, p, validity) : odd_even_genus(u, i, k, p, validity);
}

Integer stats_value(const SemigroupStats& stats, Quantity quantity) {
  switch (quantity) {
    case Quantity::Frobenius:
      return stats.frobenius;
    case Quantity::Genus:
      return stats.genus;
    case Quantity::SylvesterSum:
      return stats.sylvester_sum;
  }
  return 0;
}

const GeneratorSet& VerifyTarget::triple() const { return family ? family->triple : *generators; }

std::string VerifyTarget::label() const {
  if (!family) return "gens";
  return std::string(family_name(family->family)) + " u=" + std::to_string(family->params.u()) +
         " i=" + std::to_string(family->i) + " k=" + std::to_string(family->k);
}

bool VerifyReport::passed() const {
  return std::all_of(instances.begin(), instances.end(), [](const auto& r) { return r.passed(); });
}

std::uint64_t VerifyReport::failed_count() const {
  return static_cast<std::uint64_t>(
      std::count_if(instances.begin(), instances.end(), [](const auto& r) { return !r.passed(); }));
}

InstanceReport verify_instance(const VerifyTarget& target, const VerifyOptions& options) {
  InstanceReport report;
  report.label = target.label();
  report.generators = target.triple().to_string();
  report.p_max = target.p_max;
  if (target.family) report.bound = target.family->p_bound.describe();

  std::vector<SemigroupStats> engine;
  try {
    engine = compute_stats_upto(target.triple(), target.p_max, options.engine);
  } catch (const BudgetExceeded& e) {
    report.error = e.what();
    return report;
  }

  std::vector<SemigroupStats> brute;
  if (target.with_oracle) {
    try {
      brute = oracle::brute_stats_upto(target.triple(), target.p_max, options.oracle);
      report.oracle_used = true;
    } catch (const CapExceeded&) {
      report.oracle_skipped = true;
    }
  }

  const auto fail = [&](std::uint64_t p) {
    ++report.failures;
    if (!report.first_failure) report.first_failure = p;
  };

  for (std::uint64_t p = 0; p <= target.p_max; ++p) {
    const bool in_range = !target.family || target.family->p_bound.admits(p);
    for (auto q : kQuantities) {
      const Integer value = stats_value(engine[p], q);
      if (report.oracle_used) {
        ++report.checks;
        if (stats_value(brute[p], q) != value) fail(p);
      }
      if (!target.family) continue;
      const auto formula = family_formula(*target.family, q, p, Validity::Ignore);
      if (!formula) continue;
      if (in_range) {
        ++report.checks;
        if (*formula != value) fail(p);
      } else if (*formula != value && !report.first_breakdown) {
        report.first_breakdown = p;
      }
    }
  }
  return report;
}

std::vector<VerifyTarget> grid_targets(Grid grid) {
  std::vector<VerifyTarget> out;
  if (grid == Grid::Default) {
    for (std::uint64_t u : {2, 3}) add_family_grid(out, u, 6000, 12);
    return out;
  }

  for (std::uint64_t u : {2, 3, 4, 5}) add_family_grid(out, u, 40000, 30);
  for (auto& t : out) t.with_oracle = t.triple().modulus() <= 200;

  const PellParams two(2);
  const auto worked = [&](Family f, std::uint64_t i, std::uint64_t k, std::uint64_t p_max, bool oracle) {
    out.push_back({build_family(f, two, i, k), std::nullopt, p_max, oracle});
  };
  worked(Family::EvenEvenOdd, 2, 2, 5, true);
  worked(Family::EvenEvenOdd, 2, 3, 28, true);
  worked(Family::OddOddOdd, 4, 3, 100, false);
  worked(Family::OddOddOdd, 3, 3, 17, true);
  worked(Family::OddOddEven, 3, 4, 29, false);
  worked(Family::OddOddEven, 5, 6, 2, false);
  worked(Family::OddOddOdd, 1, 3, 0, true);
  worked(Family::OddOddOdd, 2, 5, 0, true);
  return out;
}

VerifyReport run_verify(const std::vector<VerifyTarget>& targets, const VerifyOptions& options) {
  VerifyReport report;
  report.instances.reserve(targets.size());
  for (const auto& t : targets) report.instances.push_back(verify_instance(t, options));
  return report;
}

std::string describe(const InstanceReport& r) {
  std::string line = r.passed() ? "PASS " : "FAIL ";
  line += r.label + " [" + r.generators + "] p=0.." + std::to_string(r.p_max);
  if (!r.bound.empty()) line += ", valid " + r.bound;
  if (r.error) return line + ", error: " + *r.error;
  line += ", " + std::to_string(r.checks) + " checks";
  if (r.failures) {
    line += ", " + std::to_string(r.failures) + " failed (first at p=" + std::to_string(*r.first_failure) + ")";
  }
  if (r.oracle_used) line += ", oracle";
  if (r.oracle_skipped) line += ", oracle skipped (cap)";
  if (r.first_breakdown) {
    line += ", breakdown at p=" + std::to_string(*r.first_breakdown);
  } else if (!r.bound.empty()) {
    line += ", no breakdown up to p=" + std::to_string(r.p_max);
  }
  return line;
}

}  // namespace pellsg::cli
