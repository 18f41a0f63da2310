#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fvect/characters.hpp"
#include "fvect/galois.hpp"

namespace fvect {

// Graded semilinear map over a Galois ring: blocks[i] sends component i to
// component (i + shift) mod r, acting on coordinates as x -> B_i sigma^t(x).
// Unlike the residue-field maps, the grading shift and the Frobenius twist
// are independent here.
struct GRGradedMap {
  i64 twist = 0;
  i64 shift = 0;
  std::vector<GRMatrix> blocks;

  bool operator==(const GRGradedMap&) const = default;
};

// Composition a . b; twists add mod s, shifts add mod r.
GRGradedMap gr_map_compose(const GaloisRing& R, const GRGradedMap& a,
                           const GRGradedMap& b);

struct ODParams {
  i64 p = 2;
  i64 f = 1;  // residue degree of the center
  i64 d = 2;  // division-algebra index, >= 2
  // grading shift of Pi; a negative value means the default f
  i64 twist_shift = -1;
};

// Free graded module over GR(p^m, s) with F (twist +1, shift +1),
// V (twist -1, shift -1) and the linear uniformizer Pi (twist 0,
// shift twist_shift), subject to FV = VF = p, Pi^d = p, and Pi
// commuting with F and V.  Total rank is h * f * d^2 for some h >= 1.
struct ODModule {
  ODParams params;
  i64 r = 0;  // f * d grading components
  i64 s = 0;
  i64 m = 2;
  GaloisRing R;
  CharGroup G;
  std::vector<i64> dims;
  GRGradedMap F, V, Pi;
};

ODModule make_od_module(const ODParams& params, i64 m, i64 s,
                        const std::vector<i64>& dims,
                        const std::vector<GRMatrix>& f_blocks,
                        const std::vector<GRMatrix>& v_blocks,
                        const std::vector<GRMatrix>& pi_blocks);

std::vector<std::string> validate_od(const ODModule& M);
void ensure_valid_od(const ODModule& M);

i64 od_total_rank(const ODModule& M);
i64 od_height(const ODModule& M);  // total rank / (f * d^2)

// Graded residue-field dimensions of M / Pi^j M as a character sum;
// 1 <= j <= d, and the cokernel must be killed by p.
CharSum torsion_char(const ODModule& M, i64 j);

// Per-component cokernel dimension of V mod p.
CharSum lie_char(const ODModule& M);
// Complement of lie_char inside the mod-p character.
CharSum omega_char(const ODModule& M);

// torsion_char(M, d) == h * d * (sum over all primitive characters)
bool divcar_check(const ODModule& M);

// With t the torsion character at j = 1, L the Lie character and ts the
// twist shift:  twist(t, ts+1) - twist(t, ts) == L - twist(L, ts).
bool lemma_identity_check(const ODModule& M);

// first: the j = 1 torsion character is a sum of distinct primitive
// characters; second: h == 1 and the Lie character is twist_shift-invariant.
// The two verdicts agree on every valid module.
std::pair<bool, bool> theorem_check(const ODModule& M);

// Lie character supported on the p^i with f | i.
bool is_strict(const ODModule& M);
// Strict, h == 1, and Lie coefficient exactly 1 on each such character.
bool is_special_formal(const ODModule& M);

// Height-one module over GR(p^2, 2) with f = 1, d = 2: per component the
// basis (e, f) with Pi = F: e_i -> f_{i+1}, f_i -> p e_{i+1} and
// V: e_i -> f_{i-1}, f_i -> p e_{i-1}.
ODModule make_special_drinfeld(i64 p);

struct ODGenConfig {
  i64 p = 2, f = 1, d = 2, m = 2, h = 1;
  i64 s = 0;  // 0 means f * d
  // per-component Lie coefficients to hit exactly; default is h on the
  // components divisible by f, 0 elsewhere
  std::optional<std::vector<i64>> target_lie;
};

// Deterministic per seed.  Builds a monomial standard module realizing the
// target Lie character, then conjugates by a random graded unit matrix.
// Throws a validation error when the target is unsatisfiable.
ODModule random_od(u64 seed, const ODGenConfig& cfg);

// Conjugate F, V, Pi by a graded invertible matrix, one block per component.
ODModule od_change_basis(const ODModule& M, const std::vector<GRMatrix>& U);

ODModule od_direct_sum(const ODModule& A, const ODModule& B);

}  // namespace fvect
