#include "equichar/repthy_g.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace equichar {

namespace {

constexpr Int kMaxHOrder = Int{1} << 40;

void check_length(const GroupShape& shape, Int i) {
  require(i >= 1 && i <= shape.h_order(), ErrorKind::Validation,
          "block length " + std::to_string(i) + " outside 1.." + std::to_string(shape.h_order()));
}

}  // namespace

GroupShape GroupShape::make(Int p, Int n, Int c, Int a_chi) {
  require(is_prime(p), ErrorKind::Validation, "p = " + std::to_string(p) + " is not prime");
  require(n >= 0, ErrorKind::Validation, "n must be nonnegative");
  require(c >= 1, ErrorKind::Validation, "c must be positive");
  require(std::gcd(p, c) == 1, ErrorKind::Validation, "c = " + std::to_string(c) + " is divisible by p");
  Int order = 1;
  for (Int k = 0; k < n; ++k) {
    order = checked_mul(order, p);
    require(order <= kMaxHOrder, ErrorKind::Validation, "p^n is too large");
  }
  GroupShape s{p, n, c, mod(a_chi, c)};
  require(mod(checked_mul(s.a_chi, p - 1), c) == 0, ErrorKind::Validation,
          "chi = psi^" + std::to_string(s.a_chi) + " must have order dividing p-1");
  return s;
}

GroupShape GroupShape::sub_shape() const {
  require(n >= 1, ErrorKind::Validation, "H has no proper index-p subgroup when n = 0");
  return {p, n - 1, c, a_chi};
}

GModuleDecomp GModuleDecomp::indecomposable(const GroupShape& shape, Int l, Int i, Int k) {
  GModuleDecomp m(shape);
  m.add(l, i, k);
  return m;
}

GModuleDecomp GModuleDecomp::jordan(const GroupShape& shape, Int i, const VirtualCModule& v) {
  require(v.modulus() == shape.c, ErrorKind::ModulusMismatch, "J_i(V): V is not a k[Z/c]-module for this shape");
  materialize(v, "J_" + std::to_string(i) + "(V)");
  GModuleDecomp m(shape);
  for (Int l = 0; l < shape.c; ++l) m.add(l, i, v[l]);
  return m;
}

Int GModuleDecomp::multiplicity(Int l, Int i) const {
  auto it = mult_.find({mod(l, shape_.c), i});
  return it == mult_.end() ? 0 : it->second;
}

void GModuleDecomp::add(Int l, Int i, Int k) {
  check_length(shape_, i);
  require(k >= 0, ErrorKind::NegativeMultiplicity, "cannot add a negative multiple of an indecomposable");
  if (k == 0) return;
  Int& slot = mult_[{mod(l, shape_.c), i}];
  slot = checked_add(slot, k);
}

Int GModuleDecomp::summands() const {
  Int s = 0;
  for (const auto& [key, k] : mult_) s = checked_add(s, k);
  return s;
}

std::string GModuleDecomp::str(bool pretty) const {
  if (mult_.empty()) return "0";
  std::vector<std::pair<IndecKey, Int>> items(mult_.begin(), mult_.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.first.second != b.first.second) return a.first.second > b.first.second;
    return a.first.first < b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, k] : items) {
    if (!first) os << (pretty ? " ⊕ " : " + ");
    first = false;
    os << "J_" << key.second;
    if (shape_.c > 1) os << (pretty ? "(ψ^" : "(psi^") << key.first << ')';
    if (k != 1) os << (pretty ? "^⊕" : "^") << k;
  }
  return os.str();
}

GModuleDecomp operator+(const GModuleDecomp& a, const GModuleDecomp& b) {
  require(a.shape() == b.shape(), ErrorKind::ModulusMismatch, "direct sum of modules over different groups");
  GModuleDecomp out = a;
  for (const auto& [key, k] : b.mult()) out.add(key.first, key.second, k);
  return out;
}

void VirtualGModule::add(Int l, Int i, Int k) {
  check_length(shape_, i);
  if (k == 0) return;
  IndecKey key{mod(l, shape_.c), i};
  Int v = checked_add(mult_[key], k);
  if (v == 0) mult_.erase(key);
  else mult_[key] = v;
}

void VirtualGModule::add_jordan(Int i, const VirtualCModule& v) {
  require(v.modulus() == shape_.c, ErrorKind::ModulusMismatch, "J_i(V): V is not a k[Z/c]-module for this shape");
  for (Int l = 0; l < shape_.c; ++l) add(l, i, v[l]);
}

GModuleDecomp VirtualGModule::materialize(const std::string& context) const {
  GModuleDecomp out(shape_);
  for (const auto& [key, k] : mult_) {
    if (k < 0) {
      std::string msg = "negative multiplicity " + std::to_string(k) + " of J_" + std::to_string(key.second) +
                        "(psi^" + std::to_string(key.first) + ")";
      if (!context.empty()) msg += " in " + context;
      fail(ErrorKind::NegativeMultiplicity, msg);
    }
    out.add(key.first, key.second, k);
  }
  return out;
}

Int dim(const GModuleDecomp& m) {
  Int d = 0;
  for (const auto& [key, k] : m.mult()) d = checked_add(d, checked_mul(k, key.second));
  return d;
}

VirtualCModule t_functor(const GModuleDecomp& m, Int j) {
  const GroupShape& s = m.shape();
  require(j >= 1 && j <= s.h_order(), ErrorKind::Validation,
          "T^j needs 1 <= j <= p^n, got j = " + std::to_string(j));
  std::vector<Int> v(static_cast<std::size_t>(s.c), 0);
  Int shift = checked_mul(j - 1, s.a_chi);
  for (const auto& [key, k] : m.mult()) {
    if (key.second < j) continue;
    auto idx = static_cast<std::size_t>(mod(key.first - shift, s.c));
    v[idx] = checked_add(v[idx], k);
  }
  return {s.c, std::move(v)};
}

std::vector<VirtualCModule> t_data(const GModuleDecomp& m) {
  const GroupShape& s = m.shape();
  Int h = s.h_order();
  // Accumulate suffix sums over lengths: T^j gets every block of length >= j.
  std::vector<std::vector<Int>> by_length(static_cast<std::size_t>(h) + 2, std::vector<Int>());
  for (const auto& [key, k] : m.mult()) {
    auto& row = by_length[static_cast<std::size_t>(key.second)];
    if (row.empty()) row.assign(static_cast<std::size_t>(s.c), 0);
    row[static_cast<std::size_t>(key.first)] = checked_add(row[static_cast<std::size_t>(key.first)], k);
  }
  std::vector<VirtualCModule> out;
  out.reserve(static_cast<std::size_t>(h));
  std::vector<Int> socles(static_cast<std::size_t>(s.c), 0);  // by socle exponent
  std::vector<std::vector<Int>> suffix(static_cast<std::size_t>(h) + 1);
  for (Int j = h; j >= 1; --j) {
    const auto& row = by_length[static_cast<std::size_t>(j)];
    if (!row.empty())
      for (std::size_t l = 0; l < socles.size(); ++l) socles[l] = checked_add(socles[l], row[l]);
    suffix[static_cast<std::size_t>(j)] = socles;
  }
  for (Int j = 1; j <= h; ++j) {
    out.push_back(twist(VirtualCModule(s.c, suffix[static_cast<std::size_t>(j)]), -checked_mul(j - 1, s.a_chi)));
  }
  return out;
}

GModuleDecomp from_t_data(const GroupShape& shape, const std::vector<VirtualCModule>& t) {
  Int h = shape.h_order();
  require(static_cast<Int>(t.size()) == h, ErrorKind::Validation,
          "expected " + std::to_string(h) + " layers, got " + std::to_string(t.size()));
  for (const auto& layer : t) {
    require(layer.modulus() == shape.c, ErrorKind::ModulusMismatch, "T-layer over the wrong character group");
    if (!layer.is_actual()) fail(ErrorKind::InconsistentTData, "T-layer has a negative multiplicity");
  }
  // S_j(l): how many blocks of length >= j have socle psi^l.
  auto socle_count = [&](Int j, Int l) -> Int {
    if (j > h) return 0;
    return t[static_cast<std::size_t>(j - 1)][l - checked_mul(j - 1, shape.a_chi)];
  };
  GModuleDecomp out(shape);
  for (Int j = 1; j <= h; ++j) {
    for (Int l = 0; l < shape.c; ++l) {
      Int k = socle_count(j, l) - socle_count(j + 1, l);
      if (k < 0)
        fail(ErrorKind::InconsistentTData, "T^" + std::to_string(j + 1) + " has more copies of the layer over psi^" +
                                               std::to_string(l) + " than T^" + std::to_string(j) + " allows");
      out.add(l, j, k);
    }
  }
  return out;
}

VirtualCModule restrict_to_C(const GModuleDecomp& m) {
  const GroupShape& s = m.shape();
  std::vector<Int> v(static_cast<std::size_t>(s.c), 0);
  for (const auto& [key, k] : m.mult()) {
    // Layers of J_i(psi^l) are psi^{l - t a}, t = 0..i-1; they cycle with period c.
    for (Int t = 0; t < std::min(key.second, s.c); ++t) {
      Int copies = (key.second - t + s.c - 1) / s.c;
      auto idx = static_cast<std::size_t>(mod(key.first - checked_mul(t, s.a_chi), s.c));
      v[idx] = checked_add(v[idx], checked_mul(copies, k));
    }
  }
  return {s.c, std::move(v)};
}

GModuleDecomp restrict_to_Hprime(const GModuleDecomp& m) {
  const GroupShape& s = m.shape();
  GroupShape sub = s.sub_shape();
  std::vector<VirtualCModule> t = t_data(m);
  std::vector<VirtualCModule> grouped;
  Int h_sub = sub.h_order();
  grouped.reserve(static_cast<std::size_t>(h_sub));
  for (Int i = 1; i <= h_sub; ++i) {
    VirtualCModule layer(s.c);
    for (Int j = s.p * i - s.p + 1; j <= s.p * i; ++j) layer = add(layer, t[static_cast<std::size_t>(j - 1)]);
    grouped.push_back(std::move(layer));
  }
  return from_t_data(sub, grouped);
}

GModuleDecomp forget_C(const GModuleDecomp& m) {
  GModuleDecomp out(GroupShape{m.shape().p, m.shape().n, 1, 0});
  for (const auto& [key, k] : m.mult()) out.add(0, key.second, k);
  return out;
}

}  // namespace equichar
