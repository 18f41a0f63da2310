#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fvect/galois.hpp"

namespace fvect {

// Multiplicative characters of F_{p^r}, identified with exponents mod q-1:
// the character of exponent e sends a root of unity z to z^e and 0 to 0.
struct CharGroup {
  i64 p = 0;
  i64 r = 0;
  i64 q = 0;      // p^r
  i64 order = 0;  // q - 1 (so 1 when q = 2, leaving only the exponent 0)

  bool operator==(const CharGroup& o) const = default;
  i64 normalize(i64 e) const;
};

CharGroup char_group(i64 p, i64 r);

// Exponents of the Frobenius orbit of the standard character, {p^i mod (q-1)}.
std::vector<i64> primitive_set(const CharGroup& G);
bool is_primitive(const CharGroup& G, i64 e);

// Exhaustive check that z -> z^e (0 -> 0) is additive on F_{p^r}.
bool additivity_oracle(const CharGroup& G, i64 e);

i64 char_mul(const CharGroup& G, i64 e1, i64 e2);
i64 char_twist(const CharGroup& G, i64 e, i64 t);

// Formal Z-linear combination of characters, keyed by normalized exponent.
// Zero coefficients are never stored.
struct CharSum {
  CharGroup group;
  std::map<i64, i64> coeffs;

  bool operator==(const CharSum& o) const = default;
};

CharSum cs_make(const CharGroup& G, const std::vector<std::pair<i64, i64>>& terms);
CharSum cs_add(const CharSum& a, const CharSum& b);
CharSum cs_sub(const CharSum& a, const CharSum& b);
CharSum cs_mul(const CharSum& a, const CharSum& b);
CharSum cs_twist(const CharSum& a, i64 t);
i64 cs_mass(const CharSum& a);  // sum of coefficients
i64 cs_coeff(const CharSum& a, i64 e);

// prod over terms n[chi] of (1 + [chi] + ... + [chi^{p-1}])^n. Input must be
// effective (all coefficients >= 0); the output has mass p^{mass(input)},
// gated below 2^62.
CharSum exp_F(const CharSum& f);

}  // namespace fvect
