#include "pellsg/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "pellsg/errors.hpp"

namespace pellsg {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

// Values below this stay in machine words on the fast paths; sums of two
// such values cannot overflow.
constexpr u64 kWordLimit = u64{1} << 62;

bool below_word_limit(const Integer& v) { return sgn(v) >= 0 && v < from_u64(kWordLimit); }

u64 mod_u64(const Integer& v, u64 m) {
  return static_cast<u64>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(m)));
}

// ---------------------------------------------------------------------------
// Denumerant

// Inverse of a modulo m for coprime a, m (m >= 1).
u64 inverse_mod(u64 a, u64 m) {
  if (m == 1) return 0;
  i128 t = 0, new_t = 1;
  i128 r = m, new_r = a % m;
  while (new_r != 0) {
    const i128 q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

// Counts y in [0, floor(m / a2)] with y a2 == m (mod a1), the two-generator
// denumerant of m with respect to (a1, a2).
class WordPairCounter {
 public:
  WordPairCounter(u64 a1, u64 a2) : a1_(a1), a2_(a2) {
    g_ = std::gcd(a1, a2);
    period_ = a1 / g_;
    inv_ = inverse_mod((a2 / g_) % period_, period_);
  }

  u64 count(u64 m) const {
    if (m % g_ != 0) return 0;
    const u64 y0 = static_cast<u64>((static_cast<u128>((m / g_) % period_) * inv_) % period_);
    const u64 y_max = m / a2_;
    if (y0 > y_max) return 0;
    return (y_max - y0) / period_ + 1;
  }

 private:
  u64 a1_, a2_, g_, period_, inv_;
};

class WidePairCounter {
 public:
  WidePairCounter(const Integer& a1, const Integer& a2) : a1_(a1), a2_(a2) {
    mpz_gcd(g_.get_mpz_t(), a1.get_mpz_t(), a2.get_mpz_t());
    period_ = a1 / g_;
    Integer reduced = (a2 / g_) % period_;
    if (period_ == 1) {
      inv_ = 0;
    } else {
      mpz_invert(inv_.get_mpz_t(), reduced.get_mpz_t(), period_.get_mpz_t());
    }
  }

  Integer count(const Integer& m) const {
    if (!mpz_divisible_p(m.get_mpz_t(), g_.get_mpz_t())) return 0;
    Integer y0 = ((m / g_) % period_) * inv_ % period_;
    Integer y_max = m / a2_;
    if (y0 > y_max) return 0;
    return (y_max - y0) / period_ + 1;
  }

 private:
  Integer a1_, a2_, g_, period_, inv_;
};

// Recursion on the last generator down to the pair (a1, a2). Stops adding
// once the running total reaches `enough` (0 means never).
u128 count_word(const std::vector<u64>& gens, std::size_t top, u64 n, const WordPairCounter& pair,
                u128 enough) {
  if (top == 1) return pair.count(n);
  const u64 a = gens[top];
  u128 total = 0;
  for (u64 rest = n;; rest -= a) {
    total += count_word(gens, top - 1, rest, pair, enough);
    if (enough != 0 && total >= enough) return total;
    if (rest < a) break;
  }
  return total;
}

Integer count_wide(const std::vector<Integer>& gens, std::size_t top, const Integer& n,
                   const WidePairCounter& pair, const Integer& enough) {
  if (top == 1) return pair.count(n);
  const Integer& a = gens[top];
  Integer total = 0;
  for (Integer rest = n;; rest -= a) {
    total += count_wide(gens, top - 1, rest, pair, enough);
    if (enough != 0 && total >= enough) return total;
    if (rest < a) break;
  }
  return total;
}

Integer denumerant_at_least(const GeneratorSet& gens, const Integer& n, const Integer& enough) {
  if (sgn(n) < 0) return 0;
  const auto& a = gens.generators();
  const bool word = below_word_limit(n) &&
                    std::all_of(a.begin(), a.end(), [](const Integer& v) { return below_word_limit(v); });
  if (word) {
    std::vector<u64> w;
    w.reserve(a.size());
    for (const auto& v : a) w.push_back(to_u64(v));
    const WordPairCounter pair(w[0], w[1]);
    const u128 cap = below_word_limit(enough) ? static_cast<u128>(to_u64(enough)) : 0;
    const u128 total = count_word(w, w.size() - 1, to_u64(n), pair, cap);
    const u64 hi = static_cast<u64>(total >> 64);
    const u64 lo = static_cast<u64>(total);
    return (from_u64(hi) << 64) + from_u64(lo);
  }
  const WidePairCounter pair(a[0], a[1]);
  return count_wide(a, a.size() - 1, n, pair, enough);
}

// ---------------------------------------------------------------------------
// Apéry enumeration
//
// For n == j (mod a1), representations of n correspond one-to-one with tuples
// (x_2, ..., x_kappa) whose value v = sum x_t a_t satisfies v <= n and
// v == j (mod a1). Hence m_j^(p) is the (p+1)-th smallest such v, counted with
// multiplicity. Tuples are enumerated up to a bound B that doubles until every
// residue class has collected p+1 values.
//
// Coordinate caps: with L_t = a1 / gcd(a1, a_t), decreasing x_t by L_t keeps
// the residue and lowers the value, so any tuple with x_t >= (p+1) L_t has p+1
// strictly smaller tuples in its class and never matters.

struct NeedsWideValues {};

// Per-residue bounded max-heaps holding the `levels` smallest values.
template <class T>
class ResidueBuckets {
 public:
  ResidueBuckets(u64 modulus, u64 levels)
      : modulus_(modulus), levels_(levels), slots_(modulus * levels), counts_(modulus, 0) {}

  void clear() {
    std::fill(counts_.begin(), counts_.end(), 0);
    full_ = 0;
  }

  void offer(u64 residue, const T& v) {
    T* begin = slots_.data() + residue * levels_;
    u64& count = counts_[residue];
    if (count < levels_) {
      begin[count] = v;
      ++count;
      std::push_heap(begin, begin + count);
      if (count == levels_) ++full_;
    } else if (v < begin[0]) {
      std::pop_heap(begin, begin + levels_);
      begin[levels_ - 1] = v;
      std::push_heap(begin, begin + levels_);
    }
  }

  bool complete() const { return full_ == modulus_; }

  // Ascending values of one residue class; valid once complete().
  std::vector<T> sorted(u64 residue) const {
    std::vector<T> out(slots_.begin() + residue * levels_, slots_.begin() + (residue + 1) * levels_);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  u64 modulus_;
  u64 levels_;
  std::vector<T> slots_;
  std::vector<u64> counts_;
  u64 full_ = 0;
};

template <class T>
T convert(const Integer& v);

template <>
u64 convert<u64>(const Integer& v) {
  return to_u64(v);
}

template <>
Integer convert<Integer>(const Integer& v) {
  return v;
}

Integer to_integer(u64 v) { return from_u64(v); }
const Integer& to_integer(const Integer& v) { return v; }

template <class T>
class TupleWalker {
 public:
  TupleWalker(const GeneratorSet& gens, u64 modulus, u64 levels, u64 budget, u64& visits)
      : modulus_(modulus), budget_(budget), visits_(visits) {
    for (std::size_t t = 1; t < gens.size(); ++t) {
      const Integer& a = gens[t];
      steps_.push_back(convert<T>(a));
      step_residues_.push_back(mod_u64(a, modulus));
      Integer g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), gens.modulus().get_mpz_t());
      const u64 period = modulus / to_u64(g);
      const u128 cap = static_cast<u128>(period) * levels;
      caps_.push_back(cap > kWordLimit ? kWordLimit : static_cast<u64>(cap));
      reach_ += (from_u64(caps_.back()) - 1) * a;
    }
  }

  // Largest value any capped tuple can take.
  const Integer& reach() const { return reach_; }

  void walk(const T& bound, ResidueBuckets<T>& buckets) {
    bound_ = &bound;
    buckets_ = &buckets;
    descend(0, T(0), 0);
  }

 private:
  void descend(std::size_t dim, T value, u64 residue) {
    const T& step = steps_[dim];
    const u64 step_residue = step_residues_[dim];
    const u64 cap = caps_[dim];
    const bool innermost = dim + 1 == steps_.size();
    u64 x = 0;
    for (; x < cap && value <= *bound_; ++x) {
      if (innermost) {
        buckets_->offer(residue, value);
      } else {
        descend(dim + 1, value, residue);
      }
      value += step;
      residue += step_residue;
      if (residue >= modulus_) residue -= modulus_;
    }
    if (innermost) {
      visits_ += x;
      if (visits_ > budget_) {
        throw BudgetExceeded(budget_, "Apéry enumeration exceeded the budget of " +
                                          std::to_string(budget_) +
                                          " tuple visits; raise it with --budget or PELLSG_BUDGET");
      }
    }
  }

  u64 modulus_;
  u64 budget_;
  u64& visits_;
  std::vector<T> steps_;
  std::vector<u64> step_residues_;
  std::vector<u64> caps_;
  Integer reach_ = 0;
  const T* bound_ = nullptr;
  ResidueBuckets<T>* buckets_ = nullptr;
};

template <class T>
std::vector<AperySet> enumerate_apery(const GeneratorSet& gens, u64 levels, u64 budget, u64& visits) {
  const u64 modulus = to_u64(gens.modulus());
  TupleWalker<T> walker(gens, modulus, levels, budget, visits);
  ResidueBuckets<T> buckets(modulus, levels);

  const Integer& reach = walker.reach();
  Integer bound = gens.generators().back();
  if (bound > reach) bound = reach;
  for (;;) {
    if constexpr (std::is_same_v<T, u64>) {
      if (!below_word_limit(bound)) throw NeedsWideValues{};
    }
    const T typed_bound = convert<T>(bound);
    buckets.clear();
    walker.walk(typed_bound, buckets);
    if (buckets.complete()) break;
    if (bound >= reach) {
      throw std::logic_error("exhaustive Apéry enumeration left a residue class short");
    }
    bound *= 2;
    if (bound > reach) bound = reach;
  }

  std::vector<AperySet> sets(levels);
  for (u64 p = 0; p < levels; ++p) {
    sets[p].level = p;
    sets[p].modulus = gens.modulus();
    sets[p].elements.resize(modulus);
  }
  for (u64 j = 0; j < modulus; ++j) {
    const auto values = buckets.sorted(j);
    for (u64 p = 0; p < levels; ++p) sets[p].elements[j] = to_integer(values[p]);
  }
  return sets;
}

}  // namespace

// ---------------------------------------------------------------------------

GeneratorSet::GeneratorSet(std::vector<Integer> generators) : gens_(std::move(generators)) {
  if (gens_.size() < 2) throw InvalidGenerators("need at least two generators");
  std::sort(gens_.begin(), gens_.end());
  if (gens_.front() < 2) {
    throw InvalidGenerators("generators must be >= 2 (a generator of " + pellsg::to_string(gens_.front()) +
                            " is not allowed)");
  }
  if (std::adjacent_find(gens_.begin(), gens_.end()) != gens_.end()) {
    throw InvalidGenerators("generators must be distinct: " + to_string());
  }
  Integer g = 0;
  for (const auto& a : gens_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  if (g != 1) {
    throw InvalidGenerators("generators " + to_string() + " have gcd " + pellsg::to_string(g) + ", need 1");
  }
}

GeneratorSet GeneratorSet::of(std::initializer_list<std::uint64_t> generators) {
  std::vector<Integer> v;
  for (auto a : generators) v.push_back(from_u64(a));
  return GeneratorSet(std::move(v));
}

GeneratorSet GeneratorSet::parse(std::string_view csv) {
  std::vector<Integer> v;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = csv.find(',', start);
    const auto piece = csv.substr(start, comma == std::string_view::npos ? csv.npos : comma - start);
    try {
      v.push_back(parse_integer(piece));
    } catch (const std::invalid_argument& e) {
      throw InvalidGenerators("bad generator list '" + std::string(csv) + "': " + e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return GeneratorSet(std::move(v));
}

std::string GeneratorSet::to_string() const {
  std::string out;
  for (std::size_t t = 0; t < gens_.size(); ++t) {
    if (t) out += ',';
    out += pellsg::to_string(gens_[t]);
  }
  return out;
}

const Integer& AperySet::max_element() const {
  return *std::max_element(elements.begin(), elements.end());
}

Integer denumerant(const GeneratorSet& gens, const Integer& n) {
  return denumerant_at_least(gens, n, Integer(0));
}

bool is_member(const GeneratorSet& gens, std::uint64_t p, const Integer& n) {
  const Integer needed = from_u64(p) + 1;
  return denumerant_at_least(gens, n, needed) >= needed;
}

std::vector<AperySet> apery_sets(const GeneratorSet& gens, std::uint64_t p_max,
                                 const EngineOptions& options) {
  const Integer& a1 = gens.modulus();
  const u64 levels = p_max + 1;
  if (levels == 0 || !fits_u64(a1) || a1 * from_u64(levels) > from_u64(options.budget)) {
    throw BudgetExceeded(options.budget, "Apéry set with modulus " + to_string(a1) + " at level " +
                                             std::to_string(p_max) + " needs more than the budget of " +
                                             std::to_string(options.budget) + " slots");
  }
  u64 visits = 0;
  const bool word_generators = std::all_of(gens.generators().begin(), gens.generators().end(),
                                           [](const Integer& v) { return below_word_limit(v); });
  if (word_generators) {
    try {
      return enumerate_apery<u64>(gens, levels, options.budget, visits);
    } catch (const NeedsWideValues&) {
      // bound outgrew machine words; redo with big integers, budget carries over
    }
  }
  return enumerate_apery<Integer>(gens, levels, options.budget, visits);
}

AperySet apery_set(const GeneratorSet& gens, std::uint64_t p, const EngineOptions& options) {
  auto sets = apery_sets(gens, p, options);
  return std::move(sets.back());
}

SemigroupStats stats_from_apery(const AperySet& apery) {
  const Integer& a1 = apery.modulus;
  if (sgn(a1) <= 0 || !fits_u64(a1) || from_u64(apery.elements.size()) != a1) {
    throw NonIntegerResult("Apéry set size does not match its modulus");
  }
  Integer sum = 0;
  Integer sum_sq = 0;
  for (const auto& m : apery.elements) {
    sum += m;
    mpz_addmul(sum_sq.get_mpz_t(), m.get_mpz_t(), m.get_mpz_t());
  }
  // n = sum/a1 - (a1-1)/2 and s = sum_sq/(2 a1) - sum/2 + (a1^2-1)/12, kept
  // over the common denominators 2 a1 and 12 a1 so integrality is a
  // divisibility test.
  const Integer genus_num = 2 * sum - a1 * (a1 - 1);
  const Integer sylvester_num = 6 * sum_sq - 6 * a1 * sum + a1 * (a1 * a1 - 1);
  const Integer genus_den = 2 * a1, sylvester_den = 12 * a1;
  if (!mpz_divisible_p(genus_num.get_mpz_t(), genus_den.get_mpz_t()) ||
      !mpz_divisible_p(sylvester_num.get_mpz_t(), sylvester_den.get_mpz_t())) {
    throw NonIntegerResult("Apéry set at level " + std::to_string(apery.level) +
                           " gives a non-integer genus or Sylvester sum (" +
                           to_string(make_rational(genus_num, genus_den)) + ", " +
                           to_string(make_rational(sylvester_num, sylvester_den)) + ")");
  }
  SemigroupStats stats;
  stats.frobenius = apery.max_element() - a1;
  mpz_divexact(stats.genus.get_mpz_t(), genus_num.get_mpz_t(), genus_den.get_mpz_t());
  mpz_divexact(stats.sylvester_sum.get_mpz_t(), sylvester_num.get_mpz_t(), sylvester_den.get_mpz_t());
  stats.level = apery.level;
  return stats;
}

SemigroupStats compute_stats(const GeneratorSet& gens, std::uint64_t p, const EngineOptions& options) {
  return stats_from_apery(apery_set(gens, p, options));
}

std::vector<SemigroupStats> compute_stats_upto(const GeneratorSet& gens, std::uint64_t p_max,
                                               const EngineOptions& options) {
  std::vector<SemigroupStats> out;
  for (const auto& set : apery_sets(gens, p_max, options)) out.push_back(stats_from_apery(set));
  return out;
}

}  // namespace pellsg
