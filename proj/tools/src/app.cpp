#include "pellsg/cli/app.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "pellsg/cli/record.hpp"
#include "pellsg/cli/tables.hpp"
#include "pellsg/cli/verify.hpp"
#include "pellsg/errors.hpp"

namespace pellsg::cli {

namespace {

/// Reported to the user with exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_u64(std::string_view text, const std::string& what) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw UsageError(what + ": expected a nonnegative integer, got '" + std::string(text) + "'");
  }
  return v;
}

std::uint64_t resolve_budget(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("PELLSG_BUDGET")) return parse_u64(env, "PELLSG_BUDGET");
  return kDefaultBudget;
}

std::string budget_hint(const BudgetExceeded& e) {
  return std::string(e.what()) + "; rerun with a larger --budget (current " + std::to_string(e.budget()) + ")";
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + path + "'");
  file << text;
}

struct TargetFlags {
  std::string gens;
  std::string family;
  std::optional<std::uint64_t> u, i, k;

  bool has_family() const { return !family.empty(); }

  void add_to(CLI::App& cmd) {
    cmd.add_option("--gens", gens, "Raw generators, e.g. 12,70,985");
    cmd.add_option("--family", family, "Pell triple family")->check(CLI::IsMember({"even", "odd-odd", "odd-even"}));
    cmd.add_option("--u", u, "Pell polynomial parameter");
    cmd.add_option("--i", i, "First family index");
    cmd.add_option("--k", k, "Second family index");
  }

  /// Exactly one of the returned fields is set.
  std::pair<std::optional<FamilyInstance>, std::optional<GeneratorSet>> resolve() const {
    if (gens.empty() == family.empty()) throw UsageError("give exactly one of --gens or --family");
    if (!gens.empty()) {
      if (u || i || k) throw UsageError("--u/--i/--k only apply with --family");
      return {std::nullopt, GeneratorSet::parse(gens)};
    }
    if (!u || !i || !k) throw UsageError("--family needs --u, --i and --k");
    return {build_family(*parse_family(family), PellParams(*u), *i, *k), std::nullopt};
  }
};

// ---- compute --------------------------------------------------------------

struct ComputeFlags {
  TargetFlags target;
  std::optional<std::uint64_t> p;
  std::string p_range;
  std::string what = "g,n,s";
  std::string source = "engine";
  std::string format = "jsonl";
  std::optional<std::uint64_t> budget;
  bool force_formula = false;
  std::string output;
};

std::vector<Quantity> parse_what(const std::string& what) {
  std::vector<Quantity> out;
  std::stringstream ss(what);
  std::string tag;
  while (std::getline(ss, tag, ',')) {
    const auto q = parse_quantity(tag);
    if (!q) throw UsageError("--what: unknown quantity '" + tag + "' (expected g, n or s)");
    if (std::find(out.begin(), out.end(), *q) == out.end()) out.push_back(*q);
  }
  if (out.empty()) throw UsageError("--what: no quantities given");
  return out;
}

std::pair<std::uint64_t, std::uint64_t> parse_levels(const ComputeFlags& f) {
  if (f.p.has_value() == !f.p_range.empty()) throw UsageError("give exactly one of --p or --p-range");
  if (f.p) return {*f.p, *f.p};
  const auto dots = f.p_range.find("..");
  if (dots == std::string::npos) throw UsageError("--p-range: expected LO..HI, got '" + f.p_range + "'");
  const auto lo = parse_u64(std::string_view(f.p_range).substr(0, dots), "--p-range");
  const auto hi = parse_u64(std::string_view(f.p_range).substr(dots + 2), "--p-range");
  if (lo > hi) throw UsageError("--p-range: LO must not exceed HI");
  return {lo, hi};
}

int run_compute(const ComputeFlags& f, std::ostream& out, std::ostream& err) {
  const auto quantities = parse_what(f.what);
  const auto [lo, hi] = parse_levels(f);
  const auto [family, raw] = f.target.resolve();
  const GeneratorSet& gens = family ? family->triple : *raw;
  const bool use_engine = f.source != "formula";
  const bool use_formula = f.source != "engine";
  if (use_formula && !family) throw UsageError("closed forms need --family; raw generators only have the engine");

  std::vector<SemigroupStats> engine;
  if (use_engine) {
    EngineOptions options;
    options.budget = resolve_budget(f.budget);
    try {
      engine = compute_stats_upto(gens, hi, options);
    } catch (const BudgetExceeded& e) {
      err << "error: " << budget_hint(e) << '\n';
      return kExitUsage;
    }
  }

  std::ostringstream buffer;
  if (f.format == "csv") buffer << kCsvHeader << '\n';
  bool all_agree = true;
  for (std::uint64_t p = lo; p <= hi; ++p) {
    OutputRecord record;
    record.family = family ? std::string(family_name(family->family)) : "gens";
    if (family) {
      record.u = family->params.u();
      record.i = family->i;
      record.k = family->k;
    }
    record.generators = gens.generators();
    record.p = p;
    for (auto q : quantities) {
      QuantityValues values{quantity_tag(q), {}};
      if (use_formula) {
        std::optional<Integer> v;
        try {
          v = family_formula(*family, q, p, f.force_formula ? Validity::Ignore : Validity::Enforce);
        } catch (const OutOfValidityRange& e) {
          err << "error: " << e.what() << "; pass --force-formula to evaluate it anyway\n";
          return kExitUsage;
        }
        if (!v && f.source == "formula") {
          throw UsageError(std::string("no closed form for ") + quantity_tag(q) + " of the " + record.family +
                           " family at p=" + std::to_string(p));
        }
        if (v) {
          values.sources.emplace_back("closed_form", *v);
          if (!family->p_bound.admits(p)) record.forced = true;
        }
      }
      if (use_engine) values.sources.emplace_back("engine", stats_value(engine[p], q));
      record.values.push_back(std::move(values));
    }
    all_agree = all_agree && record.consistent();
    if (f.format == "csv") {
      write_csv_rows(buffer, record);
    } else {
      write_jsonl(buffer, record);
    }
  }
  emit(buffer.str(), f.output, out);
  return f.source == "both" && !all_agree ? kExitMismatch : kExitOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyFlags {
  TargetFlags target;
  std::string grid;
  std::optional<std::uint64_t> p_max;
  bool with_oracle = false;
  std::optional<std::uint64_t> budget;
  std::uint64_t oracle_cap = oracle::OracleOptions{}.cap;
  bool failures_only = false;
};

int run_verify_cmd(const VerifyFlags& f, std::ostream& out) {
  std::vector<VerifyTarget> targets;
  if (!f.grid.empty()) {
    if (!f.target.gens.empty() || f.target.has_family() || f.p_max) {
      throw UsageError("--grid cannot be combined with --gens, --family or --p-max");
    }
    targets = grid_targets(f.grid == "extended" ? Grid::Extended : Grid::Default);
    if (f.with_oracle) {
      for (auto& t : targets) t.with_oracle = true;
    }
  } else {
    if (!f.p_max) throw UsageError("give --grid, or a target with --p-max");
    auto [family, raw] = f.target.resolve();
    // raw generators have no closed form, so the oracle is the only reference
    targets.push_back({std::move(family), std::move(raw), *f.p_max, f.with_oracle || !f.target.has_family()});
  }

  VerifyOptions options;
  options.engine.budget = resolve_budget(f.budget);
  options.oracle.cap = f.oracle_cap;
  VerifyReport report;
  for (const auto& t : targets) {
    report.instances.push_back(verify_instance(t, options));
    const auto& r = report.instances.back();
    if (!f.failures_only || !r.passed()) out << describe(r) << '\n';
  }
  out << "verify: " << report.instances.size() << " instances, " << report.failed_count() << " failed\n";
  return report.passed() ? kExitOk : kExitMismatch;
}

// ---- table ----------------------------------------------------------------

struct TableFlags {
  std::string preset;
  std::string format = "json";
  std::string output;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"p-numerical semigroups of Pell triples", "pellsg"};
  app.require_subcommand(1);

  ComputeFlags compute;
  auto* cmd_compute = app.add_subcommand("compute", "Compute g_p, n_p, s_p for one generator set");
  compute.target.add_to(*cmd_compute);
  cmd_compute->add_option("--p", compute.p, "Single level p");
  cmd_compute->add_option("--p-range", compute.p_range, "Levels LO..HI");
  cmd_compute->add_option("--what", compute.what, "Comma list of g, n, s")->capture_default_str();
  cmd_compute->add_option("--source", compute.source, "engine, formula or both")
      ->check(CLI::IsMember({"engine", "formula", "both"}))
      ->capture_default_str();
  cmd_compute->add_option("--format", compute.format)->check(CLI::IsMember({"jsonl", "csv"}))->capture_default_str();
  cmd_compute->add_option("--budget", compute.budget, "Enumeration budget (tuple visits)");
  cmd_compute->add_flag("--force-formula", compute.force_formula, "Evaluate closed forms outside their range");
  cmd_compute->add_option("--output", compute.output, "Write to a file instead of stdout");

  VerifyFlags verify;
  auto* cmd_verify = app.add_subcommand("verify", "Cross-check closed forms, engine and oracle");
  verify.target.add_to(*cmd_verify);
  cmd_verify->add_option("--grid", verify.grid)->check(CLI::IsMember({"default", "extended"}));
  cmd_verify->add_option("--p-max", verify.p_max, "Check levels 0..P");
  cmd_verify->add_flag("--with-oracle", verify.with_oracle, "Also compare with the brute-force oracle");
  cmd_verify->add_option("--budget", verify.budget, "Enumeration budget (tuple visits)");
  cmd_verify->add_option("--oracle-cap", verify.oracle_cap, "Largest n the oracle scans")->capture_default_str();
  cmd_verify->add_flag("--failures-only", verify.failures_only, "Print only failing instances");

  TableFlags table;
  auto* cmd_table = app.add_subcommand("table", "Regenerate a table of worked examples");
  cmd_table->add_option("--preset", table.preset)->required()->check(CLI::IsMember(table_presets()));
  cmd_table->add_option("--format", table.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  cmd_table->add_option("--output", table.output, "Write to a file instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (cmd_compute->parsed()) return run_compute(compute, out, err);
    if (cmd_verify->parsed()) return run_verify_cmd(verify, out);
    emit(render_table(table.preset, table.format), table.output, out);
    return kExitOk;
  } catch (const BudgetExceeded& e) {
    err << "error: " << budget_hint(e) << '\n';
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace pellsg::cli
