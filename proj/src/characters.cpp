#include "fvect/characters.hpp"

#include <algorithm>

namespace fvect {

i64 CharGroup::normalize(i64 e) const {
  e %= order;
  return e < 0 ? e + order : e;
}

CharGroup char_group(i64 p, i64 r) {
  if (!is_prime(p)) throw validation_error("p must be prime");
  if (r < 1) throw validation_error("r must be at least 1");
  CharGroup G;
  G.p = p;
  G.r = r;
  G.q = checked_pow(p, r, kMaxFieldSize);
  G.order = G.q - 1;
  if (G.order == 0) G.order = 1;
  return G;
}

std::vector<i64> primitive_set(const CharGroup& G) {
  std::vector<i64> out;
  i64 e = G.normalize(1);
  for (i64 i = 0; i < G.r; ++i) {
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    e = G.normalize(e * G.p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_primitive(const CharGroup& G, i64 e) {
  e = G.normalize(e);
  auto prim = primitive_set(G);
  return std::find(prim.begin(), prim.end(), e) != prim.end();
}

bool additivity_oracle(const CharGroup& G, i64 e) {
  e = G.normalize(e);
  auto k = ff_make(G.p, G.r);
  auto chi = [&](i64 code) {
    auto a = k.decode(code);
    if (k.is_zero(a)) return k.zero();
    return k.pow(a, e);
  };
  for (i64 a = 0; a < k.q; ++a)
    for (i64 b = 0; b < k.q; ++b) {
      auto lhs = chi(k.encode(k.add(k.decode(a), k.decode(b))));
      auto rhs = k.add(chi(a), chi(b));
      if (lhs != rhs) return false;
    }
  return true;
}

i64 char_mul(const CharGroup& G, i64 e1, i64 e2) { return G.normalize(e1 + e2); }

i64 char_twist(const CharGroup& G, i64 e, i64 t) {
  t %= G.r;
  if (t < 0) t += G.r;
  i64 out = G.normalize(e);
  for (i64 i = 0; i < t; ++i) out = G.normalize(out * G.p);
  return out;
}

namespace {

void cs_insert(CharSum& f, i64 e, i64 c) {
  if (c == 0) return;
  i64& slot = f.coeffs[f.group.normalize(e)];
  slot += c;
  if (slot == 0) f.coeffs.erase(f.group.normalize(e));
}

void check_same_group(const CharSum& a, const CharSum& b) {
  if (!(a.group == b.group)) throw validation_error("character sums live over different groups");
}

}  // namespace

CharSum cs_make(const CharGroup& G, const std::vector<std::pair<i64, i64>>& terms) {
  CharSum f;
  f.group = G;
  for (auto [e, c] : terms) cs_insert(f, e, c);
  return f;
}

CharSum cs_add(const CharSum& a, const CharSum& b) {
  check_same_group(a, b);
  CharSum out = a;
  for (auto [e, c] : b.coeffs) cs_insert(out, e, c);
  return out;
}

CharSum cs_sub(const CharSum& a, const CharSum& b) {
  check_same_group(a, b);
  CharSum out = a;
  for (auto [e, c] : b.coeffs) cs_insert(out, e, -c);
  return out;
}

CharSum cs_mul(const CharSum& a, const CharSum& b) {
  check_same_group(a, b);
  CharSum out;
  out.group = a.group;
  for (auto [e1, c1] : a.coeffs)
    for (auto [e2, c2] : b.coeffs) cs_insert(out, char_mul(a.group, e1, e2), c1 * c2);
  return out;
}

CharSum cs_twist(const CharSum& a, i64 t) {
  CharSum out;
  out.group = a.group;
  for (auto [e, c] : a.coeffs) cs_insert(out, char_twist(a.group, e, t), c);
  return out;
}

i64 cs_mass(const CharSum& a) {
  i64 total = 0;
  for (auto [e, c] : a.coeffs) total += c;
  return total;
}

i64 cs_coeff(const CharSum& a, i64 e) {
  auto it = a.coeffs.find(a.group.normalize(e));
  return it == a.coeffs.end() ? 0 : it->second;
}

CharSum exp_F(const CharSum& f) {
  const CharGroup& G = f.group;
  i64 mass = 0;
  for (auto [e, c] : f.coeffs) {
    if (c < 0) throw validation_error("exp_F needs an effective character sum");
    mass += c;
  }
  checked_pow(G.p, mass, i64(1) << 62);

  CharSum out = cs_make(G, {{0, 1}});
  for (auto [e, n] : f.coeffs) {
    CharSum factor;
    factor.group = G;
    for (i64 j = 0; j < G.p; ++j) cs_insert(factor, j * e, 1);
    for (i64 i = 0; i < n; ++i) out = cs_mul(out, factor);
  }
  return out;
}

}  // namespace fvect
