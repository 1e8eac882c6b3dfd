#include "pellsg/closed_form.hpp"

#include <string>
#include <vector>

#include "pellsg/errors.hpp"

namespace pellsg {

namespace {

using u64 = std::uint64_t;

std::string describe_indices(PellParams u, u64 i, u64 k) {
  return "u=" + std::to_string(u.u()) + ", i=" + std::to_string(i) + ", k=" + std::to_string(k);
}

[[noreturn]] void reject(const std::string& family, PellParams u, u64 i, u64 k, const std::string& why) {
  throw IndexConstraintViolation(family + " family (" + describe_indices(u, i, k) + "): " + why);
}

void require_even_family(PellParams u, u64 i, u64 k) {
  if (u.u() < 2) reject("even", u, i, k, "needs u >= 2");
  if (i < 2) reject("even", u, i, k, "needs i >= 2");
  if (k < i) reject("even", u, i, k, "needs i <= k");
}

void require_odd_k(PellParams u, u64 i, u64 k) {
  if (k % 2 == 0) reject("odd-odd", u, i, k, "needs k odd");
  if (k < 3) reject("odd-odd", u, i, k, "needs k >= 3");
  if (k + 1 > 2 * i) reject("odd-odd", u, i, k, "needs k <= 2i-1");
}

void require_even_k(PellParams u, u64 i, u64 k) {
  if (k % 2 != 0) reject("odd-even", u, i, k, "needs k even");
  if (k < 4) reject("odd-even", u, i, k, "needs k >= 4");
  if (k > 2 * i) reject("odd-even", u, i, k, "needs k <= 2i");
}

void enforce(const ValidityBound& bound, u64 p, Validity validity, const std::string& what) {
  if (validity == Validity::Ignore || bound.admits(p)) return;
  throw OutOfValidityRange(bound.describe(), "p=" + std::to_string(p) + " is outside the proven range " +
                                                 bound.describe() + " of the " + what);
}

Integer require_integer(const Rational& v, const std::string& what) {
  if (!is_integral(v)) {
    throw NonIntegerResult(what + " evaluated to the non-integer " + to_string(v));
  }
  return v.get_num();
}

Rational q_(const Integer& v) { return Rational(v); }

// Values of the even triple (P_2i, P_2i+2, P_2i+2k+1).
struct EvenTriple {
  Integer u, a, b, c;
  EvenTriple(PellParams params, u64 i, u64 k) {
    const auto pell = pell_table(params, 2 * i + 2 * k + 1);
    u = from_u64(params.u());
    a = pell[2 * i];
    b = pell[2 * i + 2];
    c = pell[2 * i + 2 * k + 1];
  }
};

// Values around the odd-index triple (P_2i+1, P_2i+3, P_2i+k+1).
struct OddTriple {
  Integer u, a, b, c, pk, pk2, p2i;
  OddTriple(PellParams params, u64 i, u64 k) {
    const auto pell = pell_table(params, 2 * i + k + 1);
    u = from_u64(params.u());
    a = pell[2 * i + 1];
    b = pell[2 * i + 3];
    c = pell[2 * i + k + 1];
    pk = pell[k];
    pk2 = pell[k - 2];
    p2i = pell[2 * i];
  }
};

}  // namespace

// ---- ValidityBound --------------------------------------------------------

bool ValidityBound::admits(std::uint64_t p) const {
  const Rational level(from_u64(p));
  return kind == Kind::StrictBelow ? level < limit : level <= limit;
}

Integer ValidityBound::max_valid() const {
  Integer f = floor(limit);
  if (kind == Kind::StrictBelow && is_integral(limit)) f -= 1;
  return f < -1 ? Integer(-1) : f;
}

std::string ValidityBound::describe() const {
  return std::string(kind == Kind::StrictBelow ? "p < " : "p <= ") + to_string(limit);
}

// ---- even family ----------------------------------------------------------

Rational even_p_limit(PellParams u, std::uint64_t i, std::uint64_t k) {
  require_even_family(u, i, k);
  const auto pell = pell_table(u, 2 * k + 1 > 2 * i ? 2 * k + 1 : 2 * i);
  return make_rational(from_u64(u.u()) * (pell[2 * k + 1] + 1), pell[2 * i]) - 1;
}

ValidityBound even_validity(PellParams u, std::uint64_t i, std::uint64_t k) {
  return {ValidityBound::Kind::StrictBelow, even_p_limit(u, i, k)};
}

Integer even_frobenius(PellParams u, std::uint64_t i, std::uint64_t k, std::uint64_t p, Validity validity) {
  enforce(even_validity(u, i, k), p, validity, "even-family Frobenius formula");
  const EvenTriple t(u, i, k);
  const Integer pp = from_u64(p);
  return ((pp + 1) * t.a / t.u - 1) * t.b + (t.u - 1) * t.c - t.a;
}

Integer even_genus(PellParams u, std::uint64_t i, std::uint64_t k, std::uint64_t p, Validity validity) {
  enforce(even_validity(u, i, k), p, validity, "even-family genus formula");
  const EvenTriple t(u, i, k);
  const Integer pp = from_u64(p);
  const Rational value = make_rational((2 * pp + 1) * t.a * t.b, 2 * t.u) -
                         make_rational(t.a + t.b - (t.u - 1) * t.c - 1, 2);
  return require_integer(value, "even-family genus");
}

Integer even_sylvester(PellParams u, std::uint64_t i, std::uint64_t k, std::uint64_t p, Validity validity) {
  enforce(even_validity(u, i, k), p, validity, "even-family Sylvester-sum formula");
  const EvenTriple t(u, i, k);
  const Integer pp = from_u64(p);
  const Integer& a = t.a;
  const Integer& b = t.b;
  const Integer& c = t.c;
  const Integer& uu = t.u;
  const Integer ab = a * b;
  const Integer shifted = a + b - (uu - 1) * c;  // a + b - (u-1) c
  const Integer u2 = uu * uu;

  const Rational quadratic = make_rational(pp * pp * ab * ab, 2 * u2);
  const Rational linear = make_rational(pp * ab * (ab - uu * shifted), 2 * u2);
  const Integer constant_num = ab * (2 * ab - 3 * uu * (shifted - uu)) +
                               u2 * (a * a + b * b - 1 - (uu - 1) * c * (3 * a + 3 * b - (2 * uu - 1) * c));
  const Rational constant = make_rational(constant_num, 12 * u2);
  return require_integer(quadratic + linear + constant, "even-family Sylvester sum");
}

// ---- odd-odd family -------------------------------------------------------

OddOddParams odd_odd_params(PellParams u, std::uint64_t i, std::uint64_t k) {
  require_odd_k(u, i, k);
  const OddTriple t(u, i, k);
  // q = u * ceil(floor(P_2i+1 / P_k) / u) - u + 1
  const Integer ratio = t.a / t.pk;
  Integer ceil_part;
  mpz_cdiv_q(ceil_part.get_mpz_t(), ratio.get_mpz_t(), t.u.get_mpz_t());
  OddOddParams out;
  out.q = t.u * ceil_part - t.u + 1;
  const Integer numerator = t.a - out.q * t.pk;
  out.r = require_integer(make_rational(numerator, t.u), "odd-odd remainder r");
  return out;
}

ValidityBound odd_odd_validity(PellParams u, std::uint64_t i, std::uint64_t k) {
  const auto params = odd_odd_params(u, i, k);
  const Integer uu = from_u64(u.u());
  Integer top;
  mpz_fdiv_q(top.get_mpz_t(), Integer(params.q - 1).get_mpz_t(), uu.get_mpz_t());
  return {ValidityBound::Kind::AtMost, Rational(top)};
}

CornerBranch odd_odd_branch(PellParams u, std::uint64_t i, std::uint64_t k) {
  const auto params = odd_odd_params(u, i, k);
  const OddTriple t(u, i, k);
  const Integer lhs = t.u * params.r * t.p2i;
  const Integer rhs = (t.pk2 - (t.u * t.u + 1) * params.r) * t.a;
  return lhs > rhs ? CornerBranch::Remainder : CornerBranch::FullBlock;
}

Integer odd_odd_corner(PellParams u, std::uint64_t i, std::uint64_t k, std::uint64_t p, CornerBranch corner) {
  const auto params = odd_odd_params(u, i, k);
  const OddTriple t(u, i, k);
  const Integer pp = from_u64(p);
  if (corner == CornerBranch::Remainder) {
    return (params.r - 1) * t.b + (params.q + (pp + 1) * t.u - 1) * t.c - t.a;
  }
  return (t.pk - 1) * t.b + (params.q + pp * t.u - 1) * t.c - t.a;
}

Integer odd_odd_frobenius(PellParams u, std::uint64_t i, std::uint64_t k, std::uint64_t p, Validity validity) {
  enforce(odd_odd_validity(u, i, k), p, validity, "odd-odd Frobenius formula");
  return odd_odd_corner(u, i, k, p, odd_odd_branch(u, i, k));
}

Integer odd_odd_genus(PellParams u, std::uint64_t i, std::uint64_t k, std::uint64_t p, Validity validity) {
  if (i < 2) reject("odd-odd", u, i, k, "genus formula needs i >= 2");
  enforce(odd_odd_validity(u, i, k), p, validity, "odd-odd genus formula");
  const auto params = odd_odd_params(u, i, k);
  const OddTriple t(u, i, k);
  const Integer pp = from_u64(p);
  const Integer& q = params.q;
  const Rational quadratic = make_rational(-pp * pp * t.u * t.pk * t.pk2, 2);
  const Rational linear = make_rational(pp * t.pk * (2 * t.b - t.u * t.pk2), 2);
  const Integer constant_num = (t.a - t.u) * (t.b - t.u) + t.u * (t.u - 1) * (t.c - 1) -
                               q * t.pk2 * (2 * t.a - (q + t.u) * t.pk);
  const Rational constant = make_rational(constant_num, 2 * t.u);
  return require_integer(quadratic + linear + constant, "odd-odd genus");
}

// ---- odd-even family ------------------------------------------------------

OddEvenParams odd_even_params(PellParams u, std::uint64_t i, std::uint64_t k) {
  require_even_k(u, i, k);
  const OddTriple t(u, i, k);
  OddEvenParams out;
  out.q = t.u * t.a / t.pk;
  const Integer block = require_integer(make_rational(t.pk, t.u), "P_k / u");
  out.r = t.a - out.q * block;
  return out;
}

ValidityBound odd_even_validity(PellParams u, std::uint64_t i, std::uint64_t k) {
  return {ValidityBound::Kind::AtMost, Rational(odd_even_params(u, i, k).q)};
}

CornerBranch odd_even_branch(PellParams u, std::uint64_t i, std::uint64_t k) {
  const auto params = odd_even_params(u, i, k);
  const OddTriple t(u, i, k);
  const Rational lhs(t.u * params.r * t.p2i);
  const Rational rhs = (make_rational(t.pk2, t.u) - q_((t.u * t.u + 1) * params.r)) * q_(t.a);
  return lhs > rhs ? CornerBranch::Remainder : CornerBranch::FullBlock;
}

Integer odd_even_corner(PellParams u, std::uint64_t i, std::uint64_t k, std::uint64_t p, CornerBranch corner) {
  const auto params = odd_even_params(u, i, k);
  const OddTriple t(u, i, k);
  const Integer pp = from_u64(p);
  if (corner == CornerBranch::Remainder) {
    return (params.r - 1) * t.b + (params.q + pp) * t.c - t.a;
  }
  return (t.pk / t.u - 1) * t.b + (params.q + pp - 1) * t.c - t.a;
}

Integer odd_even_frobenius(PellParams u, std::uint64_t i, std::uint64_t k, std::uint64_t p,
                           Validity validity) {
  enforce(odd_even_validity(u, i, k), p, validity, "odd-even Frobenius formula");
  return odd_even_corner(u, i, k, p, odd_even_branch(u, i, k));
}

Integer odd_even_genus(PellParams u, std::uint64_t i, std::uint64_t k, std::uint64_t p, Validity validity) {
  if (i < 2) reject("odd-even", u, i, k, "genus formula needs i >= 2");
  enforce(odd_even_validity(u, i, k), p, validity, "odd-even genus formula");
  const auto params = odd_even_params(u, i, k);
  const OddTriple t(u, i, k);
  const Integer pp = from_u64(p);
  const Integer& q = params.q;
  const Integer u2 = t.u * t.u;
  const Rational quadratic = make_rational(-pp * pp * t.pk * t.pk2, 2 * u2);
  const Rational linear = make_rational(pp * t.pk * (2 * t.u * t.b - t.pk2), 2 * u2);
  const Integer constant_num =
      u2 * (t.a - 1) * (t.b - 1) - q * t.pk2 * (2 * t.u * t.a - (q + 1) * t.pk);
  const Rational constant = make_rational(constant_num, 2 * u2);
  return require_integer(quadratic + linear + constant, "odd-even genus");
}

// ---- degenerate k ---------------------------------------------------------

Integer two_generator_reduction(PellParams u, std::uint64_t i, std::uint64_t k) {
  if (i < 1) reject("odd-index", u, i, k, "needs i >= 1");
  if (k < 2 * i + 1) reject("odd-index", u, i, k, "two-generator reduction needs k >= 2i+1");
  const auto pell = pell_table(u, 2 * i + 3);
  const Integer& a = pell[2 * i + 1];
  const Integer& b = pell[2 * i + 3];
  return a * b - a - b;
}

}  // namespace pellsg
