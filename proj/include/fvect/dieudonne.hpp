#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fvect/characters.hpp"
#include "fvect/galois.hpp"

namespace fvect {

// Componentwise sigma^t-semilinear map between Z/r-graded spaces over F_{p^s}:
// blocks[i] sends component i to component (i + twist) mod r, acting on
// coordinates by v -> blocks[i] * sigma^twist(v).
struct SemilinearMap {
  i64 twist = 0;
  std::vector<FFMatrix> blocks;

  bool operator==(const SemilinearMap& o) const = default;
};

// a after b; twists add and blocks chain through b's component shift.
SemilinearMap sl_compose(const FiniteField& k, const SemilinearMap& a, const SemilinearMap& b);
bool sl_is_zero(const SemilinearMap& a);

// p-torsion module over k = F_{p^s}, graded by the frobenius orbit of the
// standard character of F_{p^r} (component i carries exponent p^i mod (p^r-1),
// and r must divide s). F raises the component index, V lowers it, FV = VF = 0.
struct GradedModule {
  i64 p = 0, r = 0, s = 0;
  FiniteField k;
  CharGroup G;
  std::vector<i64> dims;  // by component index
  SemilinearMap F;        // twist +1
  SemilinearMap V;        // twist -1
};

GradedModule make_graded_module(i64 p, i64 r, i64 s, std::vector<i64> dims,
                                std::vector<FFMatrix> f_blocks, std::vector<FFMatrix> v_blocks);
GradedModule zero_module(i64 p, i64 r, i64 s);

// One message per violated axiom; empty means valid.
std::vector<std::string> validate(const GradedModule& M);
void ensure_valid(const GradedModule& M);

i64 total_dim(const GradedModule& M);
i64 comp_exponent(const GradedModule& M, i64 i);

// Dimension vector as a character sum supported on the primitive exponents.
CharSum cha(const GradedModule& M);
// Character of the corresponding group scheme, exp_F(cha(M)).
CharSum big_char(const GradedModule& M);

// Linear dual: F and V swap roles through the transpose, with a one-step
// frobenius twist keeping the pairing semilinear. An involution on the nose.
GradedModule dual(const GradedModule& M);

// Rewrite the module in new coordinates: component i gets the invertible
// basis matrix B[i] (old coordinates of the new basis vectors).
GradedModule change_basis(const GradedModule& M, const std::vector<FFMatrix>& B);

// Subquotients of the chain M >= VM >= V^2 M >= ... as modules with V = 0
// and the induced F. Throws if V is not nilpotent.
std::vector<GradedModule> v_filtration(const GradedModule& M);

// Fitting decomposition along the linear map V^s: (V-nilpotent, V-bijective).
std::pair<GradedModule, GradedModule> fitting_split(const GradedModule& M);

GradedModule direct_sum(const GradedModule& a, const GradedModule& b);

}  // namespace fvect
