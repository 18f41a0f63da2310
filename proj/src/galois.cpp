#include "fvect/galois.hpp"

#include <algorithm>
#include <numeric>

namespace fvect {

namespace {

i64 mod_norm(i64 a, i64 n) {
  a %= n;
  return a < 0 ? a + n : a;
}

// polynomial helpers over Z/n, vectors low-degree-first, not auto-trimmed
using Poly = std::vector<i64>;

i64 poly_deg(const Poly& a) {
  for (i64 i = i64(a.size()) - 1; i >= 0; --i)
    if (a[size_t(i)] != 0) return i;
  return -1;
}

Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, i64 n) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = mod_norm(c[i + j] + a[i] * b[j], n);
  }
  return c;
}

// reduce a modulo a monic polynomial f, in place
void poly_reduce(Poly& a, const Poly& f, i64 n) {
  i64 df = poly_deg(f);
  for (i64 i = i64(a.size()) - 1; i >= df; --i) {
    i64 c = a[size_t(i)];
    if (c == 0) continue;
    a[size_t(i)] = 0;
    for (i64 j = 0; j < df; ++j)
      a[size_t(i - df + j)] = mod_norm(a[size_t(i - df + j)] - c * f[size_t(j)], n);
  }
  a.resize(size_t(df), 0);
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, i64 n) {
  Poly c = poly_mul(a, b, n);
  poly_reduce(c, f, n);
  c.resize(size_t(poly_deg(f)), 0);
  return c;
}

Poly poly_powmod(Poly base, i64 e, const Poly& f, i64 n) {
  i64 df = poly_deg(f);
  Poly r(size_t(df), 0);
  if (df > 0) r[0] = 1 % n;
  base.resize(size_t(std::max<i64>(df, poly_deg(base) + 1)), 0);
  poly_reduce(base, f, n);
  base.resize(size_t(df), 0);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, f, n);
    base = poly_mulmod(base, base, f, n);
    e >>= 1;
  }
  return r;
}

// gcd of polynomials over the field Z/p
Poly poly_gcd(Poly a, Poly b, i64 p) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    // a mod b with b made monic
    i64 lead = b.back();
    if (lead != 1) {
      i64 li = mod_inv(lead, p);
      for (auto& c : b) c = mod_norm(c * li, p);
    }
    i64 db = poly_deg(b);
    while (poly_deg(a) >= db) {
      i64 c = a[size_t(poly_deg(a))];
      i64 shift = poly_deg(a) - db;
      for (i64 j = 0; j <= db; ++j)
        a[size_t(j + shift)] = mod_norm(a[size_t(j + shift)] - c * b[size_t(j)], p);
      a = poly_trim(std::move(a));
    }
    std::swap(a, b);
  }
  return a;
}

// Rabin's test: f (monic, degree s) is irreducible over F_p iff
// x^{p^s} == x (mod f) and gcd(x^{p^{s/t}} - x, f) = 1 for prime t | s.
bool poly_irreducible(const Poly& f, i64 p, i64 s) {
  Poly x = {0, 1};
  auto frob_iter = [&](i64 k) {
    // x^{p^k} mod f by k successive p-th powers
    Poly r = x;
    r.resize(size_t(s), 0);
    if (s == 1) r = {mod_norm(-f[0], p)};
    for (i64 i = 0; i < k; ++i) r = poly_powmod(r, p, f, p);
    return r;
  };
  Poly xq = frob_iter(s);
  Poly xr = x;
  xr.resize(size_t(s), 0);
  if (s == 1) xr = {mod_norm(-f[0], p)};
  if (poly_trim(xq) != poly_trim(xr)) return false;
  for (i64 t : prime_factors(s)) {
    Poly g = frob_iter(s / t);
    for (size_t i = 0; i < g.size() && i < xr.size(); ++i)
      g[i] = mod_norm(g[i] - xr[i], p);
    Poly d = poly_gcd(g, f, p);
    if (poly_deg(d) != 0) return false;
  }
  return true;
}

}  // namespace

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

i64 checked_pow(i64 base, i64 exp, i64 limit) {
  i64 r = 1;
  for (i64 i = 0; i < exp; ++i) {
    if (r > limit / base)
      throw size_gate_error("power " + std::to_string(base) + "^" + std::to_string(exp) +
                            " exceeds size gate " + std::to_string(limit));
    r *= base;
  }
  return r;
}

i64 mod_pow(i64 base, i64 exp, i64 mod) {
  base = mod_norm(base, mod);
  i64 r = 1 % mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

i64 mod_inv(i64 a, i64 mod) {
  i64 t0 = 0, t1 = 1, r0 = mod, r1 = mod_norm(a, mod);
  while (r1 != 0) {
    i64 q = r0 / r1;
    t0 -= q * t1;
    std::swap(t0, t1);
    r0 -= q * r1;
    std::swap(r0, r1);
  }
  if (r0 != 1) throw validation_error("not invertible mod " + std::to_string(mod));
  return mod_norm(t0, mod);
}

std::vector<i64> prime_factors(i64 n) {
  std::vector<i64> fs;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

// ---- FiniteField ----

FiniteField::Elt FiniteField::one() const {
  Elt a(s, 0);
  a[0] = 1 % p;
  return a;
}

FiniteField::Elt FiniteField::gen() const {
  Elt a(s, 0);
  if (s == 1) {
    a[0] = mod_norm(-modulus[0], p);  // x == -c0 in the prime field
  } else {
    a[1] = 1;
  }
  return a;
}

FiniteField::Elt FiniteField::from_int(i64 c) const {
  Elt a(s, 0);
  a[0] = mod_norm(c, p);
  return a;
}

bool FiniteField::is_zero(const Elt& a) const {
  return std::all_of(a.begin(), a.end(), [](i64 c) { return c == 0; });
}

FiniteField::Elt FiniteField::add(const Elt& a, const Elt& b) const {
  Elt c(s);
  for (i64 i = 0; i < s; ++i) c[size_t(i)] = mod_norm(a[size_t(i)] + b[size_t(i)], p);
  return c;
}

FiniteField::Elt FiniteField::sub(const Elt& a, const Elt& b) const {
  Elt c(s);
  for (i64 i = 0; i < s; ++i) c[size_t(i)] = mod_norm(a[size_t(i)] - b[size_t(i)], p);
  return c;
}

FiniteField::Elt FiniteField::neg(const Elt& a) const {
  Elt c(s);
  for (i64 i = 0; i < s; ++i) c[size_t(i)] = mod_norm(-a[size_t(i)], p);
  return c;
}

FiniteField::Elt FiniteField::mul(const Elt& a, const Elt& b) const {
  Poly c = poly_mul(a, b, p);
  poly_reduce(c, modulus, p);
  c.resize(size_t(s), 0);
  return c;
}

FiniteField::Elt FiniteField::pow(const Elt& a, i64 e) const {
  Elt r = one(), base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

FiniteField::Elt FiniteField::inv(const Elt& a) const {
  if (is_zero(a)) throw validation_error("inverse of zero field element");
  return pow(a, q - 2);
}

i64 FiniteField::encode(const Elt& a) const {
  i64 code = 0;
  for (i64 i = s - 1; i >= 0; --i) code = code * p + a[size_t(i)];
  return code;
}

FiniteField::Elt FiniteField::decode(i64 code) const {
  Elt a(s);
  for (i64 i = 0; i < s; ++i) {
    a[size_t(i)] = code % p;
    code /= p;
  }
  return a;
}

FiniteField ff_make(i64 p, i64 s) {
  if (!is_prime(p)) throw validation_error(std::to_string(p) + " is not prime");
  if (s < 1) throw validation_error("extension degree must be >= 1");
  i64 q = checked_pow(p, s, kMaxFieldSize);
  FiniteField k;
  k.p = p;
  k.s = s;
  k.q = q;
  // smallest monic irreducible in lexicographic order, c_0 most significant
  Poly f(size_t(s) + 1, 0);
  f[size_t(s)] = 1;
  for (i64 v = 0; v < q; ++v) {
    // digits of v base p with c_0 the most significant, so numeric order of v
    // is lexicographic order on (c_0, ..., c_{s-1})
    i64 rest = v;
    for (i64 i = s - 1; i >= 0; --i) {
      f[size_t(i)] = rest % p;
      rest /= p;
    }
    if (poly_irreducible(f, p, s)) {
      k.modulus = f;
      return k;
    }
  }
  throw validation_error("no irreducible polynomial found");  // unreachable
}

FiniteField::Elt frobenius(const FiniteField& k, const FiniteField::Elt& a, i64 t) {
  t = mod_norm(t, k.s);
  FiniteField::Elt r = a;
  for (i64 i = 0; i < t; ++i) r = k.pow(r, k.p);
  return r;
}

i64 multiplicative_generator(const FiniteField& k) {
  i64 n = k.q - 1;
  if (n == 1) return 1;
  auto primes = prime_factors(n);
  for (i64 code = 1; code < k.q; ++code) {
    auto g = k.decode(code);
    if (k.is_zero(g)) continue;
    bool ok = true;
    for (i64 ell : primes) {
      if (k.pow(g, n / ell) == k.one()) {
        ok = false;
        break;
      }
    }
    if (ok) return code;
  }
  throw validation_error("no generator found");  // unreachable
}

// ---- GaloisRing ----

GaloisRing::Elt GaloisRing::one() const {
  Elt a(s, 0);
  a[0] = 1 % pm;
  return a;
}

GaloisRing::Elt GaloisRing::from_int(i64 c) const {
  Elt a(s, 0);
  a[0] = mod_norm(c, pm);
  return a;
}

bool GaloisRing::is_zero(const Elt& a) const {
  return std::all_of(a.begin(), a.end(), [](i64 c) { return c == 0; });
}

GaloisRing::Elt GaloisRing::add(const Elt& a, const Elt& b) const {
  Elt c(s);
  for (i64 i = 0; i < s; ++i) c[size_t(i)] = mod_norm(a[size_t(i)] + b[size_t(i)], pm);
  return c;
}

GaloisRing::Elt GaloisRing::sub(const Elt& a, const Elt& b) const {
  Elt c(s);
  for (i64 i = 0; i < s; ++i) c[size_t(i)] = mod_norm(a[size_t(i)] - b[size_t(i)], pm);
  return c;
}

GaloisRing::Elt GaloisRing::neg(const Elt& a) const {
  Elt c(s);
  for (i64 i = 0; i < s; ++i) c[size_t(i)] = mod_norm(-a[size_t(i)], pm);
  return c;
}

GaloisRing::Elt GaloisRing::mul(const Elt& a, const Elt& b) const {
  Poly c = poly_mul(a, b, pm);
  poly_reduce(c, modulus, pm);
  c.resize(size_t(s), 0);
  return c;
}

GaloisRing::Elt GaloisRing::pow(const Elt& a, i64 e) const {
  Elt r = one(), base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

bool GaloisRing::is_unit(const Elt& a) const {
  return !kbar.is_zero(reduce_mod_p(a));
}

GaloisRing::Elt GaloisRing::inv(const Elt& a) const {
  if (!is_unit(a)) throw validation_error("inverse of a non-unit");
  // Newton lift of the residue-field inverse: v <- v(2 - av)
  Elt v = lift(kbar.inv(reduce_mod_p(a)));
  for (i64 prec = 1; prec < m; prec *= 2)
    v = mul(v, sub(from_int(2), mul(a, v)));
  return v;
}

FiniteField::Elt GaloisRing::reduce_mod_p(const Elt& a) const {
  FiniteField::Elt r(s);
  for (i64 i = 0; i < s; ++i) r[size_t(i)] = a[size_t(i)] % p;
  return r;
}

GaloisRing::Elt GaloisRing::lift(const FiniteField::Elt& a) const {
  return Elt(a.begin(), a.end());
}

i64 GaloisRing::val(const Elt& a) const {
  i64 v = m;
  for (i64 c : a) {
    if (c == 0) continue;
    i64 vc = 0;
    while (c % p == 0) {
      c /= p;
      ++vc;
    }
    v = std::min(v, vc);
  }
  return v;
}

GaloisRing::Elt GaloisRing::div_pow_p(const Elt& a, i64 k) const {
  i64 pk = 1;
  for (i64 i = 0; i < k; ++i) pk *= p;
  Elt c(s);
  for (i64 i = 0; i < s; ++i) {
    if (a[size_t(i)] % pk != 0) throw validation_error("inexact division by p^k");
    c[size_t(i)] = a[size_t(i)] / pk;
  }
  return c;
}

i64 GaloisRing::encode(const Elt& a) const {
  i64 code = 0;
  for (i64 i = s - 1; i >= 0; --i) code = code * pm + a[size_t(i)];
  return code;
}

GaloisRing::Elt GaloisRing::decode(i64 code) const {
  Elt a(size_t(s), 0);
  for (i64 i = 0; i < s; ++i) {
    a[size_t(i)] = code % pm;
    code /= pm;
  }
  return a;
}

bool GaloisRing::same_ring(const GaloisRing& o) const {
  return p == o.p && m == o.m && s == o.s && modulus == o.modulus;
}

GaloisRing gr_make(i64 p, i64 m, i64 s) {
  if (m < 1) throw validation_error("Witt length must be >= 1");
  GaloisRing R;
  R.kbar = ff_make(p, s);
  R.p = p;
  R.m = m;
  R.s = s;
  R.pm = checked_pow(p, m, kMaxRingModulus);
  R.modulus = Poly(R.kbar.modulus.begin(), R.kbar.modulus.end());
  return R;
}

GaloisRing::Elt teichmuller(const GaloisRing& R, const FiniteField::Elt& a) {
  GaloisRing::Elt t = R.lift(a);
  for (i64 i = 0; i < R.m; ++i) {
    GaloisRing::Elt next = R.pow(t, R.kbar.q);
    if (next == t) break;
    t = next;
  }
  return t;
}

GaloisRing::Elt gr_frobenius(const GaloisRing& R, const GaloisRing::Elt& a, i64 t) {
  t = mod_norm(t, R.s);
  if (t == 0) return a;
  // Teichmuller digits a = sum t_i p^i; sigma^t maps t_i to its p^t power
  GaloisRing::Elt rest = a, out = R.zero();
  i64 pi = 1;
  for (i64 i = 0; i < R.m; ++i) {
    FiniteField::Elt digit = R.reduce_mod_p(rest);
    GaloisRing::Elt td = teichmuller(R, digit);
    rest = R.div_pow_p(R.sub(rest, td), 1);
    rest.resize(size_t(R.s));
    GaloisRing::Elt moved = teichmuller(R, frobenius(R.kbar, digit, t));
    GaloisRing::Elt scaled(R.s);
    for (i64 j = 0; j < R.s; ++j) scaled[size_t(j)] = mod_norm(moved[size_t(j)] * pi, R.pm);
    out = R.add(out, scaled);
    if (i + 1 < R.m) pi *= R.p;
  }
  return out;
}

// ---- FFMatrix ----

FFMatrix FFMatrix::identity(i64 n) {
  FFMatrix a(n, n);
  for (i64 i = 0; i < n; ++i) a.at(i, i) = 1;
  return a;
}

FFMatrix ff_mat_add(const FiniteField& k, const FFMatrix& a, const FFMatrix& b) {
  FFMatrix c(a.rows, a.cols);
  for (size_t i = 0; i < a.e.size(); ++i)
    c.e[i] = k.encode(k.add(k.decode(a.e[i]), k.decode(b.e[i])));
  return c;
}

FFMatrix ff_mat_sub(const FiniteField& k, const FFMatrix& a, const FFMatrix& b) {
  FFMatrix c(a.rows, a.cols);
  for (size_t i = 0; i < a.e.size(); ++i)
    c.e[i] = k.encode(k.sub(k.decode(a.e[i]), k.decode(b.e[i])));
  return c;
}

FFMatrix ff_mat_mul(const FiniteField& k, const FFMatrix& a, const FFMatrix& b) {
  if (a.cols != b.rows) throw validation_error("matrix shape mismatch in multiply");
  FFMatrix c(a.rows, b.cols);
  for (i64 i = 0; i < a.rows; ++i) {
    for (i64 l = 0; l < a.cols; ++l) {
      i64 ail = a.at(i, l);
      if (ail == 0) continue;
      auto av = k.decode(ail);
      for (i64 j = 0; j < b.cols; ++j) {
        i64 blj = b.at(l, j);
        if (blj == 0) continue;
        c.at(i, j) = k.encode(k.add(k.decode(c.at(i, j)), k.mul(av, k.decode(blj))));
      }
    }
  }
  return c;
}

FFMatrix ff_mat_frob(const FiniteField& k, const FFMatrix& a, i64 t) {
  FFMatrix c(a.rows, a.cols);
  for (size_t i = 0; i < a.e.size(); ++i)
    c.e[i] = k.encode(frobenius(k, k.decode(a.e[i]), t));
  return c;
}

FFMatrix ff_transpose(const FFMatrix& a) {
  FFMatrix c(a.cols, a.rows);
  for (i64 i = 0; i < a.rows; ++i)
    for (i64 j = 0; j < a.cols; ++j) c.at(j, i) = a.at(i, j);
  return c;
}

bool ff_mat_is_zero(const FFMatrix& a) {
  return std::all_of(a.e.begin(), a.e.end(), [](i64 c) { return c == 0; });
}

i64 ff_rref(const FiniteField& k, FFMatrix& a, std::vector<i64>* pivot_cols) {
  i64 rank = 0;
  for (i64 col = 0; col < a.cols && rank < a.rows; ++col) {
    i64 pr = -1;
    for (i64 r = rank; r < a.rows; ++r) {
      if (a.at(r, col) != 0) {
        pr = r;
        break;
      }
    }
    if (pr < 0) continue;
    for (i64 j = 0; j < a.cols; ++j) std::swap(a.at(rank, j), a.at(pr, j));
    auto pinv = k.inv(k.decode(a.at(rank, col)));
    for (i64 j = col; j < a.cols; ++j)
      a.at(rank, j) = k.encode(k.mul(k.decode(a.at(rank, j)), pinv));
    for (i64 r = 0; r < a.rows; ++r) {
      if (r == rank || a.at(r, col) == 0) continue;
      auto f = k.decode(a.at(r, col));
      for (i64 j = col; j < a.cols; ++j) {
        if (a.at(rank, j) == 0) continue;
        a.at(r, j) = k.encode(k.sub(k.decode(a.at(r, j)), k.mul(f, k.decode(a.at(rank, j)))));
      }
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

i64 ff_rank(const FiniteField& k, FFMatrix a) { return ff_rref(k, a); }

FFMatrix ff_kernel_basis(const FiniteField& k, const FFMatrix& a) {
  FFMatrix r = a;
  std::vector<i64> pivots;
  i64 rank = ff_rref(k, r, &pivots);
  std::vector<bool> is_pivot(size_t(a.cols), false);
  for (i64 c : pivots) is_pivot[size_t(c)] = true;
  FFMatrix ker(a.cols, a.cols - rank);
  i64 kcol = 0;
  for (i64 c = 0; c < a.cols; ++c) {
    if (is_pivot[size_t(c)]) continue;
    ker.at(c, kcol) = 1;
    for (i64 i = 0; i < rank; ++i)
      ker.at(pivots[size_t(i)], kcol) = k.encode(k.neg(k.decode(r.at(i, c))));
    ++kcol;
  }
  return ker;
}

FFMatrix ff_column_space(const FiniteField& k, const FFMatrix& a) {
  FFMatrix r = a;
  std::vector<i64> pivots;
  ff_rref(k, r, &pivots);
  FFMatrix basis(a.rows, i64(pivots.size()));
  for (size_t j = 0; j < pivots.size(); ++j)
    for (i64 i = 0; i < a.rows; ++i) basis.at(i, i64(j)) = a.at(i, pivots[j]);
  return basis;
}

FFMatrix ff_hcat(const FFMatrix& a, const FFMatrix& b) {
  if (a.rows != b.rows) throw validation_error("hcat row mismatch");
  FFMatrix c(a.rows, a.cols + b.cols);
  for (i64 i = 0; i < a.rows; ++i) {
    for (i64 j = 0; j < a.cols; ++j) c.at(i, j) = a.at(i, j);
    for (i64 j = 0; j < b.cols; ++j) c.at(i, a.cols + j) = b.at(i, j);
  }
  return c;
}

FFMatrix ff_solve(const FiniteField& k, const FFMatrix& a, const FFMatrix& b) {
  if (a.rows != b.rows) throw validation_error("solve shape mismatch");
  FFMatrix aug = ff_hcat(a, b);
  std::vector<i64> pivots;
  ff_rref(k, aug, &pivots);
  for (i64 c : pivots)
    if (c >= a.cols) throw validation_error("inconsistent linear system");
  FFMatrix x(a.cols, b.cols);
  for (size_t i = 0; i < pivots.size(); ++i)
    for (i64 j = 0; j < b.cols; ++j) x.at(pivots[i], j) = aug.at(i64(i), a.cols + j);
  return x;
}

FFMatrix ff_inverse(const FiniteField& k, const FFMatrix& a) {
  if (a.rows != a.cols) throw validation_error("inverse of a non-square matrix");
  FFMatrix aug = ff_hcat(a, FFMatrix::identity(a.rows));
  std::vector<i64> pivots;
  i64 rank = ff_rref(k, aug, &pivots);
  if (rank != a.rows || (rank > 0 && pivots.back() >= a.cols))
    throw validation_error("matrix not invertible");
  FFMatrix inv(a.rows, a.rows);
  for (i64 i = 0; i < a.rows; ++i)
    for (i64 j = 0; j < a.rows; ++j) inv.at(i, j) = aug.at(i, a.cols + j);
  return inv;
}

// ---- GRMatrix ----

GRMatrix GRMatrix::identity(const GaloisRing& R, i64 n) {
  GRMatrix a(R, n, n);
  for (i64 i = 0; i < n; ++i) a.at(i, i) = R.one();
  return a;
}

GRMatrix GRMatrix::scalar(const GaloisRing& R, i64 n, const GaloisRing::Elt& c) {
  GRMatrix a(R, n, n);
  for (i64 i = 0; i < n; ++i) a.at(i, i) = c;
  return a;
}

GRMatrix gr_mat_add(const GaloisRing& R, const GRMatrix& a, const GRMatrix& b) {
  GRMatrix c(R, a.rows, a.cols);
  for (size_t i = 0; i < a.e.size(); ++i) c.e[i] = R.add(a.e[i], b.e[i]);
  return c;
}

GRMatrix gr_mat_sub(const GaloisRing& R, const GRMatrix& a, const GRMatrix& b) {
  GRMatrix c(R, a.rows, a.cols);
  for (size_t i = 0; i < a.e.size(); ++i) c.e[i] = R.sub(a.e[i], b.e[i]);
  return c;
}

GRMatrix gr_mat_mul(const GaloisRing& R, const GRMatrix& a, const GRMatrix& b) {
  if (a.cols != b.rows) throw validation_error("matrix shape mismatch in multiply");
  GRMatrix c(R, a.rows, b.cols);
  for (i64 i = 0; i < a.rows; ++i)
    for (i64 l = 0; l < a.cols; ++l) {
      const auto& ail = a.at(i, l);
      if (R.is_zero(ail)) continue;
      for (i64 j = 0; j < b.cols; ++j) {
        if (R.is_zero(b.at(l, j))) continue;
        c.at(i, j) = R.add(c.at(i, j), R.mul(ail, b.at(l, j)));
      }
    }
  return c;
}

GRMatrix gr_mat_frob(const GaloisRing& R, const GRMatrix& a, i64 t) {
  GRMatrix c(R, a.rows, a.cols);
  for (size_t i = 0; i < a.e.size(); ++i) c.e[i] = gr_frobenius(R, a.e[i], t);
  return c;
}

GRMatrix gr_mat_scale(const GaloisRing& R, const GRMatrix& a, const GaloisRing::Elt& s) {
  GRMatrix c(R, a.rows, a.cols);
  for (size_t i = 0; i < a.e.size(); ++i) c.e[i] = R.mul(a.e[i], s);
  return c;
}

FFMatrix gr_mat_mod_p(const GaloisRing& R, const GRMatrix& a) {
  FFMatrix c(a.rows, a.cols);
  for (size_t i = 0; i < a.e.size(); ++i) c.e[i] = R.kbar.encode(R.reduce_mod_p(a.e[i]));
  return c;
}

GRMatrix gr_mat_lift(const GaloisRing& R, const FFMatrix& a) {
  GRMatrix c(R, a.rows, a.cols);
  for (size_t i = 0; i < a.e.size(); ++i) c.e[i] = R.lift(R.kbar.decode(a.e[i]));
  return c;
}

bool gr_mat_is_zero(const GRMatrix& a) {
  for (const auto& x : a.e)
    if (!std::all_of(x.begin(), x.end(), [](i64 c) { return c == 0; })) return false;
  return true;
}

GRMatrix gr_inverse(const GaloisRing& R, const GRMatrix& a) {
  if (a.rows != a.cols) throw validation_error("inverse of a non-square matrix");
  i64 n = a.rows;
  GRMatrix w = a, inv = GRMatrix::identity(R, n);
  for (i64 col = 0; col < n; ++col) {
    i64 pr = -1;
    for (i64 r = col; r < n; ++r) {
      if (R.is_unit(w.at(r, col))) {
        pr = r;
        break;
      }
    }
    if (pr < 0) throw validation_error("matrix not invertible over the ring");
    for (i64 j = 0; j < n; ++j) {
      std::swap(w.at(col, j), w.at(pr, j));
      std::swap(inv.at(col, j), inv.at(pr, j));
    }
    auto pinv = R.inv(w.at(col, col));
    for (i64 j = 0; j < n; ++j) {
      w.at(col, j) = R.mul(w.at(col, j), pinv);
      inv.at(col, j) = R.mul(inv.at(col, j), pinv);
    }
    for (i64 r = 0; r < n; ++r) {
      if (r == col || R.is_zero(w.at(r, col))) continue;
      auto f = w.at(r, col);
      for (i64 j = 0; j < n; ++j) {
        w.at(r, j) = R.sub(w.at(r, j), R.mul(f, w.at(col, j)));
        inv.at(r, j) = R.sub(inv.at(r, j), R.mul(f, inv.at(col, j)));
      }
    }
  }
  return inv;
}

// ---- diagonal_reduce ----

DiagonalForm diagonal_reduce(const GaloisRing& R, const GRMatrix& a) {
  DiagonalForm out;
  GRMatrix w = a;
  out.left = GRMatrix::identity(R, a.rows);
  out.right = GRMatrix::identity(R, a.cols);
  i64 n = std::min(a.rows, a.cols);
  out.exponents.assign(size_t(n), R.m);

  auto swap_rows = [&](GRMatrix& mat, i64 r1, i64 r2) {
    for (i64 j = 0; j < mat.cols; ++j) std::swap(mat.at(r1, j), mat.at(r2, j));
  };
  auto swap_cols = [&](GRMatrix& mat, i64 c1, i64 c2) {
    for (i64 i = 0; i < mat.rows; ++i) std::swap(mat.at(i, c1), mat.at(i, c2));
  };

  for (i64 t = 0; t < n; ++t) {
    i64 best = R.m, bi = -1, bj = -1;
    for (i64 i = t; i < a.rows; ++i)
      for (i64 j = t; j < a.cols; ++j) {
        i64 v = R.val(w.at(i, j));
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) break;  // all remaining entries are zero
    if (bi != t) {
      swap_rows(w, t, bi);
      swap_rows(out.left, t, bi);
    }
    if (bj != t) {
      swap_cols(w, t, bj);
      swap_cols(out.right, t, bj);
    }
    // normalize the pivot to exactly p^best
    auto uinv = R.inv(R.div_pow_p(w.at(t, t), best));
    for (i64 j = 0; j < a.cols; ++j) w.at(t, j) = R.mul(w.at(t, j), uinv);
    for (i64 j = 0; j < a.rows; ++j) out.left.at(t, j) = R.mul(out.left.at(t, j), uinv);
    // clear the pivot column, then the pivot row
    for (i64 i = t + 1; i < a.rows; ++i) {
      if (R.is_zero(w.at(i, t))) continue;
      auto qv = R.div_pow_p(w.at(i, t), best);
      for (i64 j = 0; j < a.cols; ++j)
        w.at(i, j) = R.sub(w.at(i, j), R.mul(qv, w.at(t, j)));
      for (i64 j = 0; j < a.rows; ++j)
        out.left.at(i, j) = R.sub(out.left.at(i, j), R.mul(qv, out.left.at(t, j)));
    }
    for (i64 j = t + 1; j < a.cols; ++j) {
      if (R.is_zero(w.at(t, j))) continue;
      auto qv = R.div_pow_p(w.at(t, j), best);
      for (i64 i = 0; i < a.rows; ++i)
        w.at(i, j) = R.sub(w.at(i, j), R.mul(qv, w.at(i, t)));
      for (i64 i = 0; i < a.cols; ++i)
        out.right.at(i, j) = R.sub(out.right.at(i, j), R.mul(qv, out.right.at(i, t)));
    }
    out.exponents[size_t(t)] = best;
  }
  return out;
}

}  // namespace fvect
