#pragma once

#include <string>
#include <vector>

#include "fvect/characters.hpp"
#include "fvect/dieudonne.hpp"
#include "fvect/galois.hpp"

namespace fvect {

// k[x_1..x_n] / (x_i^p - sum_j a_ij x_j), graded by assigning generator i the
// primitive character of component comp[i]; the relations are homogeneous, so
// a_ij can be nonzero only when comp[j] follows comp[i].
struct AdditiveHopfAlgebra {
  i64 p = 0, r = 0, s = 0, n = 0;
  FiniteField k;
  CharGroup G;
  std::vector<i64> comp;
  FFMatrix a{0, 0};
};

std::vector<std::string> validate_hopf(const AdditiveHopfAlgebra& A);

// Presentation attached to a module with V = 0: one generator per basis
// vector, relation matrix read off F. Throws if V is nonzero.
AdditiveHopfAlgebra from_additive_module(const GradedModule& M);

// Count monomials x^e, e in [0,p-1]^n, by the character exponent
// sum_i e_i p^{comp[i]} mod (p^r - 1).
CharSum isotypic_dims_monomial(const AdditiveHopfAlgebra& A);

// The projector onto the isotypic component of the exponent-t character,
// -sum_{lam in mu_{q-1}} lam^{-t} [lam], as a p^n x p^n matrix over k
// ([lam] scales x_i by lam^{p^{comp[i]}}).
FFMatrix character_projector(const AdditiveHopfAlgebra& A, i64 t);

// Rank of every character projector; the ranks partition p^n.
// Gated at p^n <= 4096.
CharSum isotypic_dims_projector(const AdditiveHopfAlgebra& A);

// Monomial count for the shape R[z_0..z_{r-1}]/(z_i^p - x_i z_{i+1}):
// exponent of z^a is sum a_i p^i mod (p^r - 1).
CharSum raynaud_monomial_dims(i64 r, i64 p);

// Multiplication-structure skeleton of that shape.
struct RaynaudAlgebraShape {
  i64 r = 0;
  std::vector<GaloisRing::Elt> x;
};

}  // namespace fvect
