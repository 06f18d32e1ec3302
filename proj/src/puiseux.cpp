#include "modseries/puiseux.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace modseries {

PuiseuxSeries::PuiseuxSeries(LaurentSeries body, long ramification)
    : body_(std::move(body)), ramification_(ramification) {
  if (ramification_ < 1) throw std::invalid_argument("ramification index must be >= 1");
}

PuiseuxSeries PuiseuxSeries::lift(const LaurentSeries& s, long d) { return {s, d}; }

Rat PuiseuxSeries::valuation() const { return make_rat(body_.valuation(), ramification_); }

Rat PuiseuxSeries::precision() const { return make_rat(body_.precision(), ramification_); }

Rat PuiseuxSeries::coefficient(const Rat& exponent) const {
  if (exponent >= precision())
    throw PrecisionError("coefficient at exponent " + exponent.get_str() +
                         " is beyond the known precision " + precision().get_str());
  Rat scaled = exponent * ramification_;
  if (scaled.get_den() != 1) return Rat(0);
  return body_.coefficient(scaled.get_num().get_si());
}

std::vector<std::pair<Rat, Rat>> PuiseuxSeries::terms() const {
  std::vector<std::pair<Rat, Rat>> out;
  const auto c = body_.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    out.emplace_back(make_rat(body_.valuation() + static_cast<long>(i), ramification_), c[i]);
  }
  return out;
}

PuiseuxSeries PuiseuxSeries::rescaled(long new_d) const {
  if (new_d < 1 || new_d % ramification_ != 0)
    throw std::invalid_argument("new ramification must be a positive multiple of the current one");
  return {body_.expanded(new_d / ramification_), new_d};
}

PuiseuxSeries PuiseuxSeries::normalized() const {
  Exponent g = std::gcd<Exponent, Exponent>(ramification_, body_.precision());
  const auto c = body_.coefficients();
  for (std::size_t i = 0; i < c.size() && g > 1; ++i) {
    if (c[i] != 0) g = std::gcd(g, body_.valuation() + static_cast<Exponent>(i));
  }
  if (g <= 1) return *this;
  if (body_.is_zero())
    return {LaurentSeries::zero(body_.variable(), body_.precision() / g), ramification_ / g};
  const Exponent v = body_.valuation() / g;
  const Exponent p = body_.precision() / g;
  std::vector<Rat> out(static_cast<std::size_t>(p - v));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = c[i * static_cast<std::size_t>(g)];
  return {LaurentSeries(body_.variable(), v, std::move(out), p), ramification_ / static_cast<long>(g)};
}

namespace {

// "", "^3" or "^(1/3)"
std::string power_suffix(const Rat& e) {
  if (e == 1) return "";
  if (e.get_den() == 1) return "^" + e.get_str();
  return "^(" + e.get_str() + ")";
}

}  // namespace

std::string PuiseuxSeries::to_string() const {
  if (ramification_ == 1) return body_.to_string();
  std::ostringstream out;
  bool first = true;
  const std::string& x = variable();
  for (const auto& [e, c] : terms()) {
    Rat mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << x;
    out << power_suffix(e);
  }
  if (!first) out << " + ";
  out << "O(" << x << power_suffix(precision()) << ")";
  return out.str();
}

PuiseuxSeries puiseux_arith(const PuiseuxSeries& a, const PuiseuxSeries& b, ArithOp op) {
  const long d = std::lcm(a.ramification(), b.ramification());
  const LaurentSeries x = a.rescaled(d).body();
  const LaurentSeries y = b.rescaled(d).body();
  switch (op) {
    case ArithOp::add:
      return {x + y, d};
    case ArithOp::sub:
      return {x - y, d};
    case ArithOp::mul:
      return {x * y, d};
    case ArithOp::div:
      if (y.is_zero()) throw std::domain_error("division by the zero series");
      return {x / y, d};
  }
  throw std::logic_error("unknown arithmetic operation");
}

PuiseuxSeries pow_int(const PuiseuxSeries& p, long k) {
  return {pow_int(p.body(), k), p.ramification()};
}

bool agrees_with(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  const long d = std::lcm(a.ramification(), b.ramification());
  return agrees_with(a.rescaled(d).body(), b.rescaled(d).body());
}

PuiseuxSeries RootDecomposition::power_back(long m) const {
  const auto c = constant.pow(m).rational_value();
  if (!c) throw std::domain_error("power_back needs a rational m-th power of the constant");
  const Rat e = monomial_exponent * m;
  const PuiseuxSeries u = pow_int(unit, m);
  const long d = std::lcm(u.ramification(), e.get_den().get_si());
  const PuiseuxSeries ud = u.rescaled(d);
  const Rat shift = e * d;
  return {ud.body().shifted(shift.get_num().get_si()).scaled(*c), d};
}

RootDecomposition frac_root(const PuiseuxSeries& p, unsigned long m) {
  if (m == 0) throw std::invalid_argument("root index must be positive");
  if (p.is_zero()) throw std::domain_error("frac_root of the zero series");
  const LaurentSeries& body = p.body();
  const Rat& lead = body.leading_coefficient();
  const LaurentSeries unit = body.shifted(-body.valuation()).scaled(Rat(1) / lead);
  SymbolicConstantRoot constant = exact_root(lead, m)
                                      ? SymbolicConstantRoot::rational(*exact_root(lead, m))
                                      : SymbolicConstantRoot(lead, m);
  return {constant,
          make_rat(body.valuation(), p.ramification() * static_cast<long>(m)),
          PuiseuxSeries(unit_root(unit, m), p.ramification())};
}

RootDecomposition unit_decomposition(const PuiseuxSeries& p) {
  if (p.is_zero()) throw std::domain_error("unit decomposition of the zero series");
  const LaurentSeries& body = p.body();
  const Rat& lead = body.leading_coefficient();
  return {SymbolicConstantRoot::rational(lead), p.valuation(),
          PuiseuxSeries(body.shifted(-body.valuation()).scaled(Rat(1) / lead), p.ramification())};
}

ScaledPuiseux substitute_monomial(const PuiseuxSeries& p, const SymbolicConstantRoot& scale,
                                  const Rat& target_exponent, std::string new_variable) {
  if (target_exponent <= 0)
    throw std::domain_error("substitution exponent must be positive for a series to remain a series");
  const long a = target_exponent.get_num().get_si();
  const long b = target_exponent.get_den().get_si();
  const long d = p.ramification() * b;
  // y^k -> scale^k z^(k a) with z = t^(1/d)
  LaurentSeries body = p.body().expanded(a).with_variable(std::move(new_variable));
  if (body.is_zero()) return {SymbolicConstantRoot::rational(Rat(1)), PuiseuxSeries(body, d)};

  const auto scale_value = scale.rational_value();
  const long n = scale_value ? 1 : static_cast<long>(scale.root_index());
  const Rat step = scale_value ? *scale_value : scale.base();

  std::optional<long> residue;
  std::vector<Rat> coeffs(body.coefficients().begin(), body.coefficients().end());
  const auto src = p.body().coefficients();
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (src[i] == 0) continue;
    const long k = static_cast<long>(p.body().valuation()) + static_cast<long>(i);
    const long r = ((k % n) + n) % n;
    if (residue && *residue != r)
      throw std::domain_error("substitution mixes distinct symbolic constant classes");
    residue = r;
    coeffs[i * static_cast<std::size_t>(a)] *= power(step, (k - r) / n);
  }
  SymbolicConstantRoot factor =
      scale_value ? SymbolicConstantRoot::rational(Rat(1)) : scale.pow(*residue);
  if (auto rv = factor.rational_value()) {
    for (auto& c : coeffs) c *= *rv;
    factor = SymbolicConstantRoot::rational(Rat(1));
  }
  LaurentSeries out(body.variable(), body.valuation(), std::move(coeffs), body.precision());
  return {factor, PuiseuxSeries(std::move(out), d)};
}

}  // namespace modseries
