#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fvect {

using i64 = std::int64_t;
using u64 = std::uint64_t;

struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct size_gate_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Default size gates: fields stay enumerable, ring residues fit in i64
// products without overflow.
constexpr i64 kMaxFieldSize = i64(1) << 20;
constexpr i64 kMaxRingModulus = i64(1) << 31;

bool is_prime(i64 n);
i64 checked_pow(i64 base, i64 exp, i64 limit);
i64 mod_pow(i64 base, i64 exp, i64 mod);
i64 mod_inv(i64 a, i64 mod);
std::vector<i64> prime_factors(i64 n);

// F_{p^s} = Z/p[x]/(modulus), elements as coefficient vectors of length s
// (low degree first, entries in [0,p)).  Elements can also travel as packed
// integer codes sum c_i p^i, which keeps matrices flat.
struct FiniteField {
  i64 p = 2;
  i64 s = 1;
  i64 q = 2;                  // p^s
  std::vector<i64> modulus;   // monic, degree s, coeffs low-first

  using Elt = std::vector<i64>;

  Elt zero() const { return Elt(s, 0); }
  Elt one() const;
  Elt gen() const;            // class of x
  Elt from_int(i64 c) const;  // constant polynomial

  bool is_zero(const Elt& a) const;
  Elt add(const Elt& a, const Elt& b) const;
  Elt sub(const Elt& a, const Elt& b) const;
  Elt neg(const Elt& a) const;
  Elt mul(const Elt& a, const Elt& b) const;
  Elt pow(const Elt& a, i64 e) const;
  Elt inv(const Elt& a) const;

  i64 encode(const Elt& a) const;
  Elt decode(i64 code) const;
};

FiniteField ff_make(i64 p, i64 s);
FiniteField::Elt frobenius(const FiniteField& k, const FiniteField::Elt& a, i64 t);

// Smallest generator of the cyclic group k^* (as an element code).
i64 multiplicative_generator(const FiniteField& k);

// Galois ring GR(p^m, s) = Z/p^m[x]/(modulus), the length-m truncated Witt
// vectors of F_{p^s}.  The modulus is the field modulus lifted verbatim.
struct GaloisRing {
  i64 p = 2;
  i64 m = 1;
  i64 s = 1;
  i64 pm = 2;                 // p^m
  std::vector<i64> modulus;   // monic, degree s, coeffs in [0, p^m)
  FiniteField kbar;           // residue field

  using Elt = std::vector<i64>;

  Elt zero() const { return Elt(s, 0); }
  Elt one() const;
  Elt from_int(i64 c) const;

  bool is_zero(const Elt& a) const;
  Elt add(const Elt& a, const Elt& b) const;
  Elt sub(const Elt& a, const Elt& b) const;
  Elt neg(const Elt& a) const;
  Elt mul(const Elt& a, const Elt& b) const;
  Elt pow(const Elt& a, i64 e) const;

  bool is_unit(const Elt& a) const;
  Elt inv(const Elt& a) const;        // units only
  FiniteField::Elt reduce_mod_p(const Elt& a) const;
  Elt lift(const FiniteField::Elt& a) const;

  // min p-adic valuation over coefficients; m for the zero element
  i64 val(const Elt& a) const;
  // exact division by p^k (requires val >= k)
  Elt div_pow_p(const Elt& a, i64 k) const;

  // bijection with [0, p^(m*s)), base-p^m digits
  i64 encode(const Elt& a) const;
  Elt decode(i64 code) const;

  bool same_ring(const GaloisRing& other) const;
};

GaloisRing gr_make(i64 p, i64 m, i64 s);
GaloisRing::Elt teichmuller(const GaloisRing& R, const FiniteField::Elt& a);
GaloisRing::Elt gr_frobenius(const GaloisRing& R, const GaloisRing::Elt& a, i64 t);

// Dense matrix over a finite field, entries stored as packed codes.
struct FFMatrix {
  i64 rows = 0, cols = 0;
  std::vector<i64> e;  // row-major codes

  FFMatrix() = default;
  FFMatrix(i64 r, i64 c) : rows(r), cols(c), e(size_t(r * c), 0) {}

  i64& at(i64 r, i64 c) { return e[size_t(r * cols + c)]; }
  i64 at(i64 r, i64 c) const { return e[size_t(r * cols + c)]; }

  static FFMatrix identity(i64 n);
  bool operator==(const FFMatrix& o) const = default;
};

FFMatrix ff_mat_add(const FiniteField& k, const FFMatrix& a, const FFMatrix& b);
FFMatrix ff_mat_sub(const FiniteField& k, const FFMatrix& a, const FFMatrix& b);
FFMatrix ff_mat_mul(const FiniteField& k, const FFMatrix& a, const FFMatrix& b);
FFMatrix ff_mat_frob(const FiniteField& k, const FFMatrix& a, i64 t);
FFMatrix ff_transpose(const FFMatrix& a);
bool ff_mat_is_zero(const FFMatrix& a);

// Gauss-Jordan reduction; returns rank, optionally the pivot columns.
i64 ff_rref(const FiniteField& k, FFMatrix& a, std::vector<i64>* pivot_cols = nullptr);
i64 ff_rank(const FiniteField& k, FFMatrix a);
FFMatrix ff_kernel_basis(const FiniteField& k, const FFMatrix& a);   // columns
FFMatrix ff_column_space(const FiniteField& k, const FFMatrix& a);   // pivot columns of a
FFMatrix ff_inverse(const FiniteField& k, const FFMatrix& a);
// Solve a x = b for each column of b; throws if inconsistent.
FFMatrix ff_solve(const FiniteField& k, const FFMatrix& a, const FFMatrix& b);
FFMatrix ff_hcat(const FFMatrix& a, const FFMatrix& b);

// Dense matrix over a Galois ring.
struct GRMatrix {
  i64 rows = 0, cols = 0;
  std::vector<GaloisRing::Elt> e;

  GRMatrix() = default;
  GRMatrix(const GaloisRing& R, i64 r, i64 c)
      : rows(r), cols(c), e(size_t(r * c), R.zero()) {}

  GaloisRing::Elt& at(i64 r, i64 c) { return e[size_t(r * cols + c)]; }
  const GaloisRing::Elt& at(i64 r, i64 c) const { return e[size_t(r * cols + c)]; }

  static GRMatrix identity(const GaloisRing& R, i64 n);
  static GRMatrix scalar(const GaloisRing& R, i64 n, const GaloisRing::Elt& c);
  bool operator==(const GRMatrix& o) const = default;
};

GRMatrix gr_mat_add(const GaloisRing& R, const GRMatrix& a, const GRMatrix& b);
GRMatrix gr_mat_sub(const GaloisRing& R, const GRMatrix& a, const GRMatrix& b);
GRMatrix gr_mat_mul(const GaloisRing& R, const GRMatrix& a, const GRMatrix& b);
GRMatrix gr_mat_frob(const GaloisRing& R, const GRMatrix& a, i64 t);
GRMatrix gr_mat_scale(const GaloisRing& R, const GRMatrix& a, const GaloisRing::Elt& c);
FFMatrix gr_mat_mod_p(const GaloisRing& R, const GRMatrix& a);
GRMatrix gr_mat_lift(const GaloisRing& R, const FFMatrix& a);
GRMatrix gr_inverse(const GaloisRing& R, const GRMatrix& a);  // throws if not a unit matrix
bool gr_mat_is_zero(const GRMatrix& a);

// Smith-like diagonalization over a Galois ring: every entry is unit * p^v,
// so pivoting on minimal valuation diagonalizes with invertible transforms.
struct DiagonalForm {
  std::vector<i64> exponents;  // min(rows, cols) entries, ascending, in [0, m]
  GRMatrix left, right;        // left * A * right == diag(p^exponents)
};

DiagonalForm diagonal_reduce(const GaloisRing& R, const GRMatrix& a);

}  // namespace fvect
