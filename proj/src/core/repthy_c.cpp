#include "equichar/repthy_c.hpp"

#include <sstream>

namespace equichar {

namespace {

void check_modulus(Int c) {
  require(c >= 1, ErrorKind::Validation, "character modulus must be positive, got " + std::to_string(c));
}

void check_same(Int a, Int b) {
  if (a != b)
    fail(ErrorKind::ModulusMismatch,
         "modulus mismatch: Z/" + std::to_string(a) + " vs Z/" + std::to_string(b));
}

}  // namespace

CharExponent::CharExponent(Int value, Int modulus) : value_(0), modulus_(modulus) {
  check_modulus(modulus);
  value_ = mod(value, modulus);
}

VirtualCModule::VirtualCModule(Int c) {
  check_modulus(c);
  mult_.assign(static_cast<std::size_t>(c), 0);
}

VirtualCModule::VirtualCModule(Int c, std::vector<Int> mult) : mult_(std::move(mult)) {
  check_modulus(c);
  require(static_cast<Int>(mult_.size()) == c, ErrorKind::Validation,
          "multiplicity vector has length " + std::to_string(mult_.size()) + ", expected " + std::to_string(c));
}

VirtualCModule VirtualCModule::character(Int c, Int l, Int k) {
  VirtualCModule m(c);
  m.mult_[static_cast<std::size_t>(mod(l, c))] = k;
  return m;
}

Int VirtualCModule::dim() const {
  Int d = 0;
  for (Int x : mult_) d = checked_add(d, x);
  return d;
}

bool VirtualCModule::is_actual() const {
  for (Int x : mult_)
    if (x < 0) return false;
  return true;
}

bool VirtualCModule::is_zero() const {
  for (Int x : mult_)
    if (x != 0) return false;
  return true;
}

std::string VirtualCModule::str(bool pretty) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t l = 0; l < mult_.size(); ++l) {
    Int k = mult_[l];
    if (k == 0) continue;
    if (!first) os << (k < 0 ? (pretty ? " ⊖ " : " - ") : (pretty ? " ⊕ " : " + "));
    else if (k < 0) os << (pretty ? "⊖" : "-");
    first = false;
    Int a = k < 0 ? -k : k;
    std::string chr = (pretty ? "ψ^" : "psi^") + std::to_string(l);
    if (a == 1) os << chr;
    else os << '(' << chr << ')' << (pretty ? "^⊕" : "^") << a;
  }
  if (first) os << '0';
  return os.str();
}

VirtualCModule twist(const VirtualCModule& m, const CharExponent& j) {
  check_same(m.modulus(), j.modulus());
  return twist(m, j.value());
}

VirtualCModule twist(const VirtualCModule& m, Int j) {
  Int c = m.modulus();
  std::vector<Int> out(static_cast<std::size_t>(c));
  for (Int l = 0; l < c; ++l) out[static_cast<std::size_t>(l)] = m[l - j];
  return {c, std::move(out)};
}

VirtualCModule dual(const VirtualCModule& m) {
  Int c = m.modulus();
  std::vector<Int> out(static_cast<std::size_t>(c));
  for (Int l = 0; l < c; ++l) out[static_cast<std::size_t>(l)] = m[-l];
  return {c, std::move(out)};
}

VirtualCModule add(const VirtualCModule& a, const VirtualCModule& b) {
  check_same(a.modulus(), b.modulus());
  std::vector<Int> out = a.mult();
  for (std::size_t l = 0; l < out.size(); ++l) out[l] = checked_add(out[l], b.mult()[l]);
  return {a.modulus(), std::move(out)};
}

VirtualCModule sub(const VirtualCModule& a, const VirtualCModule& b) {
  check_same(a.modulus(), b.modulus());
  std::vector<Int> out = a.mult();
  for (std::size_t l = 0; l < out.size(); ++l) out[l] = checked_sub(out[l], b.mult()[l]);
  return {a.modulus(), std::move(out)};
}

VirtualCModule scale(const VirtualCModule& m, Int k) {
  std::vector<Int> out = m.mult();
  for (Int& x : out) x = checked_mul(x, k);
  return {m.modulus(), std::move(out)};
}

const VirtualCModule& materialize(const VirtualCModule& m, const std::string& context) {
  for (Int l = 0; l < m.modulus(); ++l) {
    if (m[l] < 0) {
      std::string msg = "negative multiplicity " + std::to_string(m[l]) + " of psi^" + std::to_string(l);
      if (!context.empty()) msg += " in " + context;
      fail(ErrorKind::NegativeMultiplicity, msg);
    }
  }
  return m;
}

namespace {

void check_chi(const CharExponent& a_chi, Int p) {
  require(is_prime(p), ErrorKind::Validation, std::to_string(p) + " is not prime");
  require(mod(checked_mul(a_chi.value(), p - 1), a_chi.modulus()) == 0, ErrorKind::Validation,
          "chi = psi^" + std::to_string(a_chi.value()) + " does not have order dividing p-1");
}

}  // namespace

VirtualCModule orbit_sum(const VirtualCModule& m, const CharExponent& a_chi, Int p) {
  check_same(m.modulus(), a_chi.modulus());
  check_chi(a_chi, p);
  VirtualCModule out(m.modulus());
  for (Int i = 0; i < p; ++i) out = add(out, twist(m, checked_mul(i, a_chi.value())));
  return out;
}

VirtualCModule recover_orbit_factor(const VirtualCModule& n, const CharExponent& a_chi, Int p) {
  check_same(n.modulus(), a_chi.modulus());
  check_chi(a_chi, p);
  materialize(n, "orbit-sum input");
  VirtualCModule rhs = scale(n, p - 1);
  for (Int i = 1; i <= p - 2; ++i) rhs = sub(rhs, twist(n, checked_mul(i, a_chi.value())));

  std::vector<Int> out(static_cast<std::size_t>(n.modulus()));
  for (Int l = 0; l < n.modulus(); ++l) {
    Int v = rhs[l];
    if (v < 0 || v % p != 0)
      fail(ErrorKind::NotAnOrbitSum, "coefficient " + std::to_string(v) + " of psi^" + std::to_string(l) +
                                         " is not a nonnegative multiple of " + std::to_string(p));
    out[static_cast<std::size_t>(l)] = v / p;
  }
  VirtualCModule m(n.modulus(), std::move(out));
  if (orbit_sum(m, a_chi, p) != n) fail(ErrorKind::NotAnOrbitSum, "recovered factor does not re-sum to the input");
  return m;
}

}  // namespace equichar
