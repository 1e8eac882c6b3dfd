#include "pellsg/cli/tables.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "pellsg/cli/verify.hpp"
#include "pellsg/closed_form.hpp"
#include "pellsg/family.hpp"

namespace pellsg::cli {

namespace {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

const PellParams kPell2{2};

std::string joined(const GeneratorSet& gens) {
  std::string s;
  for (std::size_t t = 0; t < gens.size(); ++t) {
    if (t) s += ';';
    s += to_string(gens[t]);
  }
  return s;
}

std::string label(const FamilyInstance& inst) {
  return std::string(family_name(inst.family)) + " u=" + std::to_string(inst.params.u()) +
         " i=" + std::to_string(inst.i) + " k=" + std::to_string(inst.k);
}

std::string text(const std::optional<Integer>& v) { return v ? to_string(*v) : std::string(); }

std::string branch_name(CornerBranch b) { return b == CornerBranch::Remainder ? "remainder" : "full-block"; }

Table even_lists() {
  Table t{{"instance", "generators", "p", "g_formula", "g_engine", "n_formula", "n_engine", "s_formula", "s_engine"},
          {}};
  const auto inst = build_family(Family::EvenEvenOdd, kPell2, 2, 2);
  const auto engine = compute_stats_upto(inst.triple, 3);
  for (std::uint64_t p = 0; p <= 3; ++p) {
    std::vector<std::string> row{label(inst), joined(inst.triple), std::to_string(p)};
    for (auto q : {Quantity::Frobenius, Quantity::Genus, Quantity::SylvesterSum}) {
      row.push_back(text(family_formula(inst, q, p, Validity::Enforce)));
      row.push_back(to_string(stats_value(engine[p], q)));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table level_zero_frobenius() {
  Table t{{"instance", "generators", "q", "r", "branch", "p", "g_formula", "g_engine"}, {}};
  struct Case {
    Family family;
    std::uint64_t i, k;
  };
  for (const Case c : {Case{Family::OddOddOdd, 4, 3}, Case{Family::OddOddOdd, 5, 3}, Case{Family::OddOddEven, 3, 4},
                       Case{Family::OddOddEven, 5, 6}}) {
    const auto inst = build_family(c.family, kPell2, c.i, c.k);
    Integer q, r;
    CornerBranch branch;
    if (c.family == Family::OddOddOdd) {
      const auto params = odd_odd_params(kPell2, c.i, c.k);
      q = params.q;
      r = params.r;
      branch = odd_odd_branch(kPell2, c.i, c.k);
    } else {
      const auto params = odd_even_params(kPell2, c.i, c.k);
      q = params.q;
      r = params.r;
      branch = odd_even_branch(kPell2, c.i, c.k);
    }
    t.rows.push_back({label(inst), joined(inst.triple), to_string(q), to_string(r), branch_name(branch), "0",
                      text(family_formula(inst, Quantity::Frobenius, 0, Validity::Enforce)),
                      to_string(compute_stats(inst.triple, 0).frobenius)});
  }
  return t;
}

Table frobenius_breakdown() {
  Table t{{"instance", "generators", "p", "within_validity", "g_formula", "g_remainder_corner", "g_full_block_corner",
           "g_engine"},
          {}};
  struct Case {
    Family family;
    std::uint64_t i, k;
    std::vector<std::uint64_t> levels;
  };
  for (const auto& c : {Case{Family::OddOddOdd, 4, 3, {98, 99, 100}}, Case{Family::OddOddEven, 3, 4, {28, 29}}}) {
    const auto inst = build_family(c.family, kPell2, c.i, c.k);
    const auto engine = compute_stats_upto(inst.triple, c.levels.back());
    for (auto p : c.levels) {
      const auto corner = [&](CornerBranch b) {
        return c.family == Family::OddOddOdd ? odd_odd_corner(kPell2, c.i, c.k, p, b)
                                             : odd_even_corner(kPell2, c.i, c.k, p, b);
      };
      t.rows.push_back({label(inst), joined(inst.triple), std::to_string(p),
                        inst.p_bound.admits(p) ? "true" : "false",
                        text(family_formula(inst, Quantity::Frobenius, p, Validity::Ignore)),
                        to_string(corner(CornerBranch::Remainder)), to_string(corner(CornerBranch::FullBlock)),
                        to_string(engine[p].frobenius)});
    }
  }
  return t;
}

Table genus_breakdown() {
  Table t{{"instance", "generators", "p", "within_validity", "n_formula", "n_engine"}, {}};
  struct Case {
    Family family;
    std::uint64_t i, k;
    std::vector<std::uint64_t> levels;
  };
  for (const auto& c : {Case{Family::OddOddOdd, 3, 3, {16, 17}}, Case{Family::OddOddEven, 3, 4, {28, 29}}}) {
    const auto inst = build_family(c.family, kPell2, c.i, c.k);
    const auto engine = compute_stats_upto(inst.triple, c.levels.back());
    for (auto p : c.levels) {
      t.rows.push_back({label(inst), joined(inst.triple), std::to_string(p),
                        inst.p_bound.admits(p) ? "true" : "false",
                        text(family_formula(inst, Quantity::Genus, p, Validity::Ignore)),
                        to_string(engine[p].genus)});
    }
  }
  return t;
}

Table build(std::string_view preset) {
  if (preset == "paper-3.5") return even_lists();
  if (preset == "paper-4.2") return level_zero_frobenius();
  if (preset == "paper-5.5") return frobenius_breakdown();
  if (preset == "paper-6.1") return genus_breakdown();
  throw std::invalid_argument("unknown preset '" + std::string(preset) + "'");
}

}  // namespace

const std::vector<std::string>& table_presets() {
  static const std::vector<std::string> presets{"paper-3.5", "paper-4.2", "paper-5.5", "paper-6.1"};
  return presets;
}

std::string render_table(std::string_view preset, std::string_view format) {
  if (format != "json" && format != "csv") {
    throw std::invalid_argument("unknown table format '" + std::string(format) + "'");
  }
  const Table t = build(preset);
  if (format == "csv") {
    std::ostringstream out;
    for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << t.columns[c];
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
      out << '\n';
    }
    return out.str();
  }
  nlohmann::ordered_json doc;
  doc["preset"] = std::string(preset);
  doc["columns"] = t.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t c = 0; c < row.size(); ++c) obj[t.columns[c]] = row[c];
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + '\n';
}

}  // namespace pellsg::cli
