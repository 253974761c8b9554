#include "equichar/oracle/galois_field.hpp"

#include <algorithm>

namespace equichar::oracle {

namespace {

constexpr Int kMaxFieldOrder = Int{1} << 16;

using Poly = std::vector<Int>;  // low degree first, no trailing zeros

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, Int p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const Int lead_inv = inverse_mod(m.back(), p);
  while (a.size() > dm) {
    const Int f = (a.back() * lead_inv) % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t k = 0; k <= dm; ++k) a[shift + k] = mod(a[shift + k] - f * m[k], p);
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, Int p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  trim(out);
  return out;
}

Poly from_code(Int code, Int p, Int len) {
  Poly f(static_cast<std::size_t>(len));
  for (Int k = 0; k < len; ++k) {
    f[static_cast<std::size_t>(k)] = code % p;
    code /= p;
  }
  trim(f);
  return f;
}

Int to_code(const Poly& f, Int p) {
  Int code = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) code = code * p + *it;
  return code;
}

bool irreducible(const Poly& f, Int p) {
  const Int deg = static_cast<Int>(f.size()) - 1;
  for (Int d = 1; 2 * d <= deg; ++d) {
    const Int count = checked_pow(p, static_cast<unsigned>(d));
    for (Int code = 0; code < count; ++code) {
      Poly g = from_code(code, p, d);
      g.resize(static_cast<std::size_t>(d) + 1, 0);
      g[static_cast<std::size_t>(d)] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<Int> prime_factors(Int n) {
  std::vector<Int> out;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

GaloisField GaloisField::build(Int p, Int c) {
  require(is_prime(p), ErrorKind::Validation, "field characteristic must be prime");
  require(c >= 1 && c % p != 0, ErrorKind::Validation, "roots of unity of order c need p not dividing c");
  Int r = 1;
  Int q = p;
  while ((q - 1) % c != 0) {
    ++r;
    q = checked_mul(q, p);
    require(q <= kMaxFieldOrder, ErrorKind::Validation, "field needed for c-th roots of unity is too large");
  }
  return of_degree(p, r);
}

GaloisField GaloisField::of_degree(Int p, Int r) {
  require(is_prime(p) && r >= 1, ErrorKind::Validation, "invalid field parameters");
  const Int q = checked_pow(p, static_cast<unsigned>(r));
  require(q <= kMaxFieldOrder, ErrorKind::Validation, "field is too large for the oracle");

  GaloisField F;
  F.p_ = p;
  F.r_ = r;
  F.q_ = q;

  Poly modulus;
  for (Int code = 0; code < q; ++code) {
    Poly f = from_code(code, p, r);
    f.resize(static_cast<std::size_t>(r) + 1, 0);
    f[static_cast<std::size_t>(r)] = 1;
    if (irreducible(f, p)) {
      modulus = f;
      break;
    }
  }
  require(!modulus.empty(), ErrorKind::Internal, "no irreducible polynomial found");
  F.modulus_.assign(modulus.begin(), modulus.end() - 1);

  auto poly_pow = [&](const Poly& base, Int e) {
    Poly result{1};
    Poly b = base;
    while (e > 0) {
      if (e & 1) result = poly_mod(poly_mul(result, b, p), modulus, p);
      b = poly_mod(poly_mul(b, b, p), modulus, p);
      e >>= 1;
    }
    return result;
  };

  const auto factors = prime_factors(q - 1);
  Poly gen;
  for (Int code = 1; code < q; ++code) {
    Poly g = from_code(code, p, r);
    bool primitive = true;
    for (Int ell : factors)
      if (poly_pow(g, (q - 1) / ell) == Poly{1}) {
        primitive = false;
        break;
      }
    if (primitive) {
      gen = g;
      break;
    }
  }
  require(!gen.empty(), ErrorKind::Internal, "no primitive element found");

  F.exp_.assign(static_cast<std::size_t>(q - 1), 0);
  F.log_.assign(static_cast<std::size_t>(q), -1);
  Poly cur{1};
  for (Int k = 0; k < q - 1; ++k) {
    const Int code = to_code(cur, p);
    F.exp_[static_cast<std::size_t>(k)] = static_cast<Elem>(code);
    F.log_[static_cast<std::size_t>(code)] = k;
    cur = poly_mod(poly_mul(cur, gen, p), modulus, p);
  }

  F.neg_.resize(static_cast<std::size_t>(q));
  for (Int a = 0; a < q; ++a) {
    Int out = 0, pk = 1, x = a;
    for (Int k = 0; k < r; ++k) {
      out += mod(-(x % p), p) * pk;
      x /= p;
      pk *= p;
    }
    F.neg_[static_cast<std::size_t>(a)] = static_cast<Elem>(out);
  }
  if (r > 1 && q <= 1024) {
    F.add_table_.resize(static_cast<std::size_t>(q * q));
    for (Int a = 0; a < q; ++a)
      for (Int b = 0; b < q; ++b)
        F.add_table_[static_cast<std::size_t>(a * q + b)] = F.add_digits(static_cast<Elem>(a), static_cast<Elem>(b));
  }
  if (q <= 256) {
    F.mul_table_.resize(static_cast<std::size_t>(q * q));
    for (Int a = 0; a < q; ++a)
      for (Int b = 0; b < q; ++b)
        F.mul_table_[static_cast<std::size_t>(a * q + b)] = F.mul(static_cast<Elem>(a), static_cast<Elem>(b));
  }
  return F;
}

Elem GaloisField::add_digits(Elem a, Elem b) const {
  Int out = 0, pk = 1;
  Int x = a, y = b;
  for (Int k = 0; k < r_; ++k) {
    out += ((x % p_ + y % p_) % p_) * pk;
    x /= p_;
    y /= p_;
    pk *= p_;
  }
  return static_cast<Elem>(out);
}

Elem GaloisField::inv(Elem a) const {
  require(a != 0, ErrorKind::Internal, "division by zero in F_q");
  const Int l = log_[a];
  return exp_[static_cast<std::size_t>(l == 0 ? 0 : q_ - 1 - l)];
}

Elem GaloisField::pow(Elem a, Int e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  const Int l = mod(checked_mul(log_[a], mod(e, q_ - 1)), q_ - 1);
  return exp_[static_cast<std::size_t>(l)];
}

Elem GaloisField::root_of_unity(Int c) const {
  require(c >= 1 && (q_ - 1) % c == 0, ErrorKind::Validation, "F_q has no primitive root of unity of this order");
  return exp_[static_cast<std::size_t>((q_ - 1) / c % (q_ - 1))];
}

std::string GaloisField::str(Elem a) const {
  if (r_ == 1) return std::to_string(a);
  std::string out;
  Int x = a;
  for (Int k = 0; k < r_; ++k) {
    out.insert(out.begin(), static_cast<char>('0' + x % p_));
    x /= p_;
  }
  return "[" + out + "]";
}

}  // namespace equichar::oracle
