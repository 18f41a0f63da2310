#include "fvect/raynaud.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace fvect {

namespace {

bool elt_ok(const GaloisRing& R, const GaloisRing::Elt& a) {
  if (i64(a.size()) != R.s) return false;
  for (i64 c : a)
    if (c < 0 || c >= R.pm) return false;
  return true;
}

// Validates support and returns the sorted primitive exponents.
std::vector<i64> checked_primitive_support(const CharSum& f) {
  std::vector<i64> prim = primitive_set(f.group);
  std::set<i64> prim_set(prim.begin(), prim.end());
  for (const auto& [e, c] : f.coeffs) {
    if (c < 0) throw validation_error("bad support: negative coefficient");
    if (!prim_set.count(e))
      throw validation_error("bad support: exponent " + std::to_string(e) +
                             " is not primitive");
  }
  return prim;
}

}  // namespace

std::vector<std::string> validate_params(const RaynaudParams& P) {
  std::vector<std::string> errs;
  const GaloisRing& R = P.R;
  if (P.pairs.empty()) errs.push_back("at least one generator pair is needed");
  if (!elt_ok(R, P.w)) {
    errs.push_back("w is not an element of the ring");
    return errs;
  }
  for (size_t i = 0; i < P.pairs.size(); ++i) {
    if (!elt_ok(R, P.pairs[i].first) || !elt_ok(R, P.pairs[i].second)) {
      errs.push_back("pair " + std::to_string(i) +
                     " has entries outside the ring");
      return errs;
    }
  }
  if (R.val(P.w) < 1) errs.push_back("w must be divisible by p");
  for (size_t i = 0; i < P.pairs.size(); ++i) {
    if (R.mul(P.pairs[i].first, P.pairs[i].second) != P.w)
      errs.push_back("pair " + std::to_string(i) +
                     " does not multiply to w");
  }
  return errs;
}

void ensure_valid_params(const RaynaudParams& P) {
  auto errs = validate_params(P);
  if (errs.empty()) return;
  std::string msg;
  for (const auto& e : errs) {
    if (!msg.empty()) msg += "; ";
    msg += e;
  }
  throw validation_error(msg);
}

RaynaudParams cartier_dual(const RaynaudParams& P) {
  RaynaudParams D = P;
  for (auto& pr : D.pairs) std::swap(pr.first, pr.second);
  return D;
}

bool relations_hold(const RaynaudParams& P, const RaynaudParams& Q,
                    const std::vector<GaloisRing::Elt>& lambda) {
  const GaloisRing& R = P.R;
  size_t r = P.pairs.size();
  if (lambda.size() != r) return false;
  for (const auto& l : lambda)
    if (!R.is_unit(l)) return false;
  for (size_t i = 0; i < r; ++i) {
    size_t j = (i + 1) % r;
    GaloisRing::Elt lp = R.pow(lambda[i], R.p);
    GaloisRing::Elt x = R.mul(R.mul(lp, P.pairs[i].first), R.inv(lambda[j]));
    if (x != Q.pairs[i].first) return false;
    GaloisRing::Elt y = R.mul(R.mul(R.inv(lp), P.pairs[i].second), lambda[j]);
    if (y != Q.pairs[i].second) return false;
  }
  return true;
}

namespace {

IsoResult iso_exhaustive(const RaynaudParams& P, const RaynaudParams& Q,
                         i64 gate) {
  const GaloisRing& R = P.R;
  i64 r = i64(P.pairs.size());

  std::vector<GaloisRing::Elt> units;
  i64 total = 1;
  for (i64 i = 0; i < R.s; ++i) total *= R.pm;
  for (i64 code = 0; code < total; ++code) {
    GaloisRing::Elt a = R.decode(code);
    if (R.is_unit(a)) units.push_back(a);
  }

  i64 space = 1;
  for (i64 i = 0; i < r; ++i) {
    if (space > gate / i64(units.size()))
      throw size_gate_error("unit tuple search space exceeds the gate");
    space *= i64(units.size());
  }

  std::vector<size_t> idx(size_t(r), 0);
  std::vector<GaloisRing::Elt> lambda(size_t(r), R.zero());
  while (true) {
    for (size_t i = 0; i < size_t(r); ++i) lambda[i] = units[idx[i]];
    if (relations_hold(P, Q, lambda)) return {true, lambda};
    // advance the last index first, so tuples come in lexicographic order
    i64 pos = r - 1;
    while (pos >= 0 && ++idx[size_t(pos)] == units.size()) {
      idx[size_t(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return {false, {}};
}

IsoResult iso_dlog(const RaynaudParams& P, const RaynaudParams& Q) {
  const GaloisRing& R = P.R;
  i64 r = i64(P.pairs.size());
  i64 q = 1;
  for (i64 i = 0; i < R.s; ++i) q *= R.p;
  i64 n = q - 1;

  GaloisRing::Elt g = R.lift(R.kbar.decode(multiplicative_generator(R.kbar)));
  std::vector<i64> dlog(size_t(q), -1);
  GaloisRing::Elt cur = R.one();
  for (i64 t = 0; t < n; ++t) {
    dlog[size_t(R.encode(cur))] = t;
    cur = R.mul(cur, g);
  }

  // Over a field w = 0, so in each pair at most one entry is nonzero.
  // A nonzero entry on edge i pins l_{i+1} = p*l_i + c_i (mod q-1); an
  // all-zero pair leaves the edge free.
  std::vector<bool> constrained(size_t(r), false);
  std::vector<i64> c(size_t(r), 0);
  for (i64 i = 0; i < r; ++i) {
    const auto& [x, y] = P.pairs[size_t(i)];
    const auto& [xq, yq] = Q.pairs[size_t(i)];
    if (R.is_zero(x) != R.is_zero(xq)) return {false, {}};
    if (R.is_zero(y) != R.is_zero(yq)) return {false, {}};
    if (!R.is_zero(x)) {
      constrained[size_t(i)] = true;
      c[size_t(i)] =
          ((dlog[size_t(R.encode(x))] - dlog[size_t(R.encode(xq))]) % n + n) %
          n;
    } else if (!R.is_zero(y)) {
      constrained[size_t(i)] = true;
      c[size_t(i)] =
          ((dlog[size_t(R.encode(yq))] - dlog[size_t(R.encode(y))]) % n + n) %
          n;
    }
  }

  std::vector<i64> l(size_t(r), -1);
  bool any_free =
      std::find(constrained.begin(), constrained.end(), false) !=
      constrained.end();
  if (any_free) {
    // each node whose incoming edge is free starts a chain at l = 0
    for (i64 start = 0; start < r; ++start) {
      if (constrained[size_t((start - 1 + r) % r)]) continue;
      i64 j = start;
      l[size_t(j)] = 0;
      while (constrained[size_t(j)] && l[size_t((j + 1) % r)] < 0) {
        l[size_t((j + 1) % r)] = (R.p * l[size_t(j)] + c[size_t(j)]) % n;
        j = (j + 1) % r;
      }
    }
  } else {
    // full cycle: (p^r - 1) * l_0 = -C (mod q-1) with C the telescoped sum
    i64 C = 0;
    for (i64 j = 0; j < r; ++j) C = (C * R.p + c[size_t(j)]) % n;
    i64 A = (mod_pow(R.p % n, r, n) - 1 + n) % n;
    i64 g0 = std::gcd(A, n);
    i64 rhs = (n - C) % n;
    if (rhs % g0 != 0) return {false, {}};
    i64 n0 = n / g0;
    i64 l0 = 0;
    if (n0 > 1) l0 = (rhs / g0 % n0) * mod_inv(A / g0 % n0, n0) % n0;
    l[0] = l0;
    for (i64 j = 0; j + 1 < r; ++j)
      l[size_t(j + 1)] = (R.p * l[size_t(j)] + c[size_t(j)]) % n;
  }

  std::vector<GaloisRing::Elt> lambda(size_t(r), R.zero());
  for (i64 i = 0; i < r; ++i) lambda[size_t(i)] = R.pow(g, l[size_t(i)]);
  if (!relations_hold(P, Q, lambda))
    throw std::runtime_error("witness verification failed");
  return {true, lambda};
}

}  // namespace

IsoResult is_isomorphic(const RaynaudParams& P, const RaynaudParams& Q,
                        i64 gate) {
  ensure_valid_params(P);
  ensure_valid_params(Q);
  if (!P.R.same_ring(Q.R))
    throw validation_error("presentations live over different rings");
  if (P.pairs.size() != Q.pairs.size())
    throw validation_error("presentations have different lengths");
  if (P.w != Q.w) throw validation_error("presentations have different w");

  // unit rescaling preserves valuations, so mismatched ones settle it early
  for (size_t i = 0; i < P.pairs.size(); ++i) {
    if (P.R.val(P.pairs[i].first) != P.R.val(Q.pairs[i].first) ||
        P.R.val(P.pairs[i].second) != P.R.val(Q.pairs[i].second))
      return {false, {}};
  }

  if (P.R.m == 1) return iso_dlog(P, Q);
  return iso_exhaustive(P, Q, gate);
}

bool is_raynaud_from_crystal(const CharSum& f) {
  std::vector<i64> prim = checked_primitive_support(f);
  for (i64 t : prim)
    if (cs_coeff(f, t) != 1) return false;
  return true;
}

bool raynaud_from_primitive_coefficients(const CharSum& f) {
  std::vector<i64> prim = checked_primitive_support(f);
  CharSum e = exp_F(f);
  for (i64 t : prim) {
    i64 expected = (t == 0) ? 2 : 1;
    if (cs_coeff(e, t) != expected) return false;
  }
  return true;
}

RaynaudAlgebraShape algebra_presentation(const RaynaudParams& P) {
  ensure_valid_params(P);
  RaynaudAlgebraShape shape;
  shape.r = i64(P.pairs.size());
  for (const auto& pr : P.pairs) shape.x.push_back(pr.first);
  return shape;
}

}  // namespace fvect
