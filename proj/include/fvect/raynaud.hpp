#pragma once

#include <utility>
#include <vector>

#include "fvect/characters.hpp"
#include "fvect/galois.hpp"
#include "fvect/hopf_oracle.hpp"

namespace fvect {

// Presentation data for a cyclically indexed family of generator pairs
// (x_i, y_i), i in Z/r, over a Galois ring R, subject to x_i * y_i = w
// with w in pR.
struct RaynaudParams {
  GaloisRing R;
  GaloisRing::Elt w;
  std::vector<std::pair<GaloisRing::Elt, GaloisRing::Elt>> pairs;
};

std::vector<std::string> validate_params(const RaynaudParams& P);
void ensure_valid_params(const RaynaudParams& P);

// Swap x_i <-> y_i in every pair.  Involution; preserves validity.
RaynaudParams cartier_dual(const RaynaudParams& P);

struct IsoResult {
  bool isomorphic = false;
  // unit scalars, one per index; empty when not isomorphic
  std::vector<GaloisRing::Elt> lambda;
};

// Whether the change of generators x_i' = lambda_i^p x_i lambda_{i+1}^{-1},
// y_i' = lambda_i^{-p} y_i lambda_{i+1} (indices mod r) carries P to Q.
// Over a field the scalars are found through discrete logarithms; otherwise
// unit tuples are enumerated, subject to |R^x|^r <= gate.
IsoResult is_isomorphic(const RaynaudParams& P, const RaynaudParams& Q,
                        i64 gate = 10'000'000);

// Does a unit tuple carry P to Q?  Used to audit witnesses.
bool relations_hold(const RaynaudParams& P, const RaynaudParams& Q,
                    const std::vector<GaloisRing::Elt>& lambda);

// f must be effective and supported on primitive exponents; otherwise a
// validation error is thrown.
bool is_raynaud_from_crystal(const CharSum& f);

// Same precondition.  Tests f through the coefficients of exp_F(f) at the
// primitive exponents.
bool raynaud_from_primitive_coefficients(const CharSum& f);

// Monogenic presentation of the group algebra attached to P.
RaynaudAlgebraShape algebra_presentation(const RaynaudParams& P);

}  // namespace fvect
