#include "modseries/constant_root.hpp"

#include <numeric>
#include <stdexcept>

namespace modseries {

SymbolicConstantRoot::SymbolicConstantRoot(Rat base, unsigned long root_index)
    : base_(std::move(base)), root_index_(root_index) {
  if (root_index_ == 0) throw std::invalid_argument("root index must be positive");
  if (base_ == 0) throw std::domain_error("symbolic root of zero");
}

std::optional<Rat> SymbolicConstantRoot::rational_value() const {
  if (root_index_ == 1) return base_;
  return exact_root(base_, root_index_);
}

SymbolicConstantRoot SymbolicConstantRoot::pow(long k) const {
  const long n = static_cast<long>(root_index_);
  long g = std::gcd(k, n);
  if (g == 0) g = n;
  const long num = k / g;
  const unsigned long den = static_cast<unsigned long>(n / g);
  SymbolicConstantRoot out(power(base_, num), den);
  if (auto r = out.rational_value()) return rational(*r);
  return out;
}

std::string SymbolicConstantRoot::to_string() const {
  if (auto r = rational_value()) return r->get_str();
  return "(" + base_.get_str() + ")^(1/" + std::to_string(root_index_) + ")";
}

SymbolicConstantRoot operator*(const SymbolicConstantRoot& a, const SymbolicConstantRoot& b) {
  const unsigned long l = std::lcm(a.root_index_, b.root_index_);
  Rat base = power(a.base_, static_cast<long>(l / a.root_index_)) *
             power(b.base_, static_cast<long>(l / b.root_index_));
  SymbolicConstantRoot out(base, l);
  if (auto r = out.rational_value()) return SymbolicConstantRoot::rational(*r);
  return out;
}

namespace {

// Sign of the real root; 0 marks a non-real (even root of a negative base).
int real_sign(const Rat& base, unsigned long index) {
  if (index % 2 == 1) return sgn(base);
  return base > 0 ? 1 : 0;
}

}  // namespace

bool operator==(const SymbolicConstantRoot& a, const SymbolicConstantRoot& b) {
  if (real_sign(a.base_, a.root_index_) != real_sign(b.base_, b.root_index_)) return false;
  const unsigned long l = std::lcm(a.root_index_, b.root_index_);
  return power(a.base_, static_cast<long>(l / a.root_index_)) ==
         power(b.base_, static_cast<long>(l / b.root_index_));
}

}  // namespace modseries
