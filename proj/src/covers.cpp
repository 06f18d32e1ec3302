#include "modseries/covers.hpp"

#include <algorithm>
#include <numeric>

namespace modseries::covers {

namespace {

std::vector<long> prime_divisors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

long euler_phi(long n) {
  long out = n;
  for (long p : prime_divisors(n)) out = out / p * (p - 1);
  return out;
}

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

// Kronecker-style symbol (D/p) for D in {-1, -3} and prime p.
int legendre_minus(long d, long p) {
  if (d == -1) {
    if (p == 2) return 0;
    return p % 4 == 1 ? 1 : -1;
  }
  // d == -3
  if (p == 3) return 0;
  return p % 3 == 1 ? 1 : -1;
}

// N^k / 2 * prod (1 - 1/p^2), exact for N >= 3
long projective_full_index(long n, int k) {
  Rat idx = power(Rat(n), k) / 2;
  for (long p : prime_divisors(n)) idx *= make_rat(p * p - 1, p * p);
  if (idx.get_den() != 1) throw std::logic_error("non-integral congruence index");
  return idx.get_num().get_si();
}

void append_factor_points(std::vector<FiberPoints>& out, const Polynomial& poly) {
  for (const auto& [factor, mult] : square_free_decomposition(poly)) {
    Polynomial rest = factor;
    for (const Rat& r : rational_roots(factor)) {
      out.push_back(FiberPoints{r, false, mult, 1});
      rest = divmod(rest, Polynomial::linear_root(r)).first;
    }
    if (rest.degree() >= 1) out.push_back(FiberPoints{rest.monic(), false, mult, rest.degree()});
  }
}

}  // namespace

std::string FiberPoints::describe() const {
  const std::string e = "e=" + std::to_string(multiplicity);
  if (at_infinity) return "x = inf (" + e + ")";
  if (const Rat* r = std::get_if<Rat>(&where)) return "x = " + r->get_str() + " (" + e + ")";
  return "roots of " + std::get<Polynomial>(where).to_string() + " (" + std::to_string(count) +
         " points, " + e + ")";
}

long RamificationProfile::total() const {
  long t = 0;
  for (const auto& p : points) t += p.multiplicity * p.count;
  return t;
}

long RamificationProfile::ramification() const {
  long t = 0;
  for (const auto& p : points) t += (p.multiplicity - 1) * p.count;
  return t;
}

std::vector<long> RamificationProfile::multiplicities() const {
  std::vector<long> out;
  for (const auto& p : points)
    for (long i = 0; i < p.count; ++i) out.push_back(p.multiplicity);
  std::sort(out.rbegin(), out.rend());
  return out;
}

RationalFunction branch_map() {
  const Polynomial x = Polynomial::x();
  const Polynomial num = (x + Polynomial::constant(Rat(27))) * pow(x + Polynomial::constant(Rat(243)), 3);
  return {num, pow(x, 3)};
}

RamificationProfile ramification_profile(const RationalFunction& f, const ProjectivePoint& y0) {
  if (f.is_constant()) throw std::invalid_argument("ramification profile of a constant map");
  RamificationProfile out;
  out.fiber_point = y0;
  const long deg = f.degree();
  if (y0.is_infinite()) {
    append_factor_points(out.points, f.denominator());
    const long excess = f.numerator().degree() - f.denominator().degree();
    if (excess > 0) out.points.push_back(FiberPoints{Rat(0), true, excess, 1});
    return out;
  }
  const Polynomial g = f.numerator() - y0.value() * f.denominator();
  append_factor_points(out.points, g);
  if (f.evaluate(ProjectivePoint::infinity()) == y0) {
    out.points.push_back(FiberPoints{Rat(0), true, deg - g.degree(), 1});
  }
  return out;
}

ProjectivePoint scaling_map(const ProjectivePoint& x) {
  if (x.is_infinite()) return x;
  return Rat(-x.value() / 27);
}

CongruenceInvariants congruence_invariants(GroupKind kind, long level) {
  if (level < 1) throw std::invalid_argument("level must be >= 1");
  const long n = level;
  CongruenceInvariants inv{kind, n, 1, 1, 0, 0, 0};
  const auto primes = prime_divisors(n);
  const bool small_gamma1 = kind == GroupKind::gamma1 && n <= 2;
  if (kind == GroupKind::gamma0 || small_gamma1 || n == 1) {
    Rat idx = n;
    for (long p : primes) idx *= make_rat(p + 1, p);
    inv.index = idx.get_num().get_si();
    inv.cusps = 0;
    for (long d : divisors(n)) inv.cusps += euler_phi(std::gcd(d, n / d));
    inv.nu2 = 1;
    inv.nu3 = 1;
    if (n % 4 == 0) inv.nu2 = 0;
    if (n % 9 == 0) inv.nu3 = 0;
    for (long p : primes) {
      inv.nu2 *= 1 + legendre_minus(-1, p);
      inv.nu3 *= 1 + legendre_minus(-3, p);
    }
  } else if (kind == GroupKind::full) {
    if (n == 2) {
      inv.index = 6;
      inv.cusps = 3;
    } else {
      inv.index = projective_full_index(n, 3);
      inv.cusps = inv.index / n;
    }
  } else {  // gamma1, n >= 3
    inv.index = projective_full_index(n, 2);
    if (n == 4) {
      inv.cusps = 3;
    } else {
      long twice = 0;
      for (long d : divisors(n)) twice += euler_phi(d) * euler_phi(n / d);
      inv.cusps = twice / 2;
    }
    inv.nu3 = n == 3 ? 1 : 0;
  }
  const Rat genus = Rat(1) + make_rat(inv.index, 12) - make_rat(inv.nu2, 4) - make_rat(inv.nu3, 3) -
                    make_rat(inv.cusps, 2);
  Rat g = genus;
  g.canonicalize();
  if (g.get_den() != 1 || g < 0) throw std::logic_error("genus formula gave " + g.get_str());
  inv.genus = g.get_num().get_si();
  return inv;
}

long cover_degree(long n) {
  if (n < 1) throw std::invalid_argument("cover level exponent must be >= 1");
  long level = 1;
  for (long i = 0; i < n; ++i) level *= 3;
  const long top = congruence_invariants(GroupKind::full, level).index;
  const long bottom = congruence_invariants(GroupKind::gamma0, 3).index;
  if (top % bottom != 0) throw std::logic_error("index ratio is not an integer");
  return top / bottom;
}

Polynomial critical_value_polynomial(const RationalFunction& f) {
  const Polynomial& num = f.numerator();
  const Polynomial& den = f.denominator();
  const Polynomial w = num.derivative() * den - num * den.derivative();
  if (w.is_zero()) throw std::invalid_argument("constant map has no critical values");
  const long formal = std::max(num.degree(), den.degree());
  std::vector<std::pair<Rat, Rat>> samples;
  for (long y = 0; y <= w.degree(); ++y) {
    const Polynomial g = num - Rat(y) * den;
    // Res with g taken at its formal degree
    Rat r = resultant(w, g) * power(w.leading_coefficient(), formal - g.degree());
    samples.emplace_back(Rat(y), r);
  }
  return interpolate(samples).monic();
}

RiemannHurwitzResult riemann_hurwitz_check(const RationalFunction& f,
                                           const std::vector<ProjectivePoint>& branch_points) {
  if (f.is_constant()) throw std::invalid_argument("Riemann-Hurwitz check of a constant map");
  Polynomial crit = critical_value_polynomial(f);
  bool has_infinity = false;
  for (const auto& b : branch_points) {
    if (b.is_infinite()) {
      has_infinity = true;
      continue;
    }
    const Polynomial lin = Polynomial::linear_root(b.value());
    while (crit.degree() >= 1) {
      auto [q, r] = divmod(crit, lin);
      if (!r.is_zero()) break;
      crit = q;
    }
  }
  if (crit.degree() >= 1)
    throw MissingBranchPoint("critical values missing from the branch set: roots of " +
                             crit.to_string("y"));
  if (!has_infinity && ramification_profile(f, ProjectivePoint::infinity()).ramification() > 0)
    throw MissingBranchPoint("infinity is a critical value but is not in the branch set");

  RiemannHurwitzResult out{f.degree(), 0, 0, {}};
  for (const auto& b : branch_points) out.total_ramification += ramification_profile(f, b).ramification();
  const long twice_genus = -2 * out.degree + out.total_ramification + 2;
  out.genus = twice_genus / 2;
  const bool ok = twice_genus == 0;
  out.report = boolean_report("riemann-hurwitz", "2g - 2 = -2 deg + sum (e - 1) with g = 0", ok,
                              "2g-2 = -2", "2g-2 = " + std::to_string(twice_genus - 2));
  out.report.notes.push_back("degree " + std::to_string(out.degree) + ", sum(e-1) = " +
                             std::to_string(out.total_ramification) + ", genus " +
                             std::to_string(out.genus));
  return out;
}

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::full:
      return "full";
    case GroupKind::gamma0:
      return "gamma0";
    case GroupKind::gamma1:
      return "gamma1";
  }
  return "?";
}

GroupKind parse_group_kind(const std::string& text) {
  if (text == "full") return GroupKind::full;
  if (text == "gamma0") return GroupKind::gamma0;
  if (text == "gamma1") return GroupKind::gamma1;
  throw std::invalid_argument("unknown congruence subgroup kind '" + text + "'");
}

}  // namespace modseries::covers
