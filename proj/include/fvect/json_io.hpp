#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "fvect/dieudonne.hpp"
#include "fvect/galois.hpp"
#include "fvect/od_modules.hpp"
#include "fvect/raynaud.hpp"

namespace fvect {

// Strict JSON (de)serialization for the value types the CLI moves around.
// Parsers check shape and ranges and throw validation_error with a specific
// message; writers emit canonical forms. nlohmann::json keeps object keys
// sorted, so every writer is byte-deterministic.

nlohmann::json ring_to_json(const GaloisRing& R);
// {"p":..,"m":..,"s":..} with an optional "modulus" that must match the
// canonical choice for (p, m, s).
GaloisRing ring_from_json(const nlohmann::json& j);

nlohmann::json charsum_to_json(const CharSum& f);
CharSum charsum_from_json(const nlohmann::json& j);
// bare exponent -> coefficient map, the CLI's output form for characters
nlohmann::json coeffs_to_json(const CharSum& f);

// {"p","r","s","dims":{exp:dim},"F":{"src->dst":[[row..]..]},"V":{..}};
// components are keyed by their character exponent p^i mod (p^r - 1),
// entries are coefficient lists of length s, absent blocks are zero.
nlohmann::json module_to_json(const GradedModule& M);
GradedModule module_from_json(const nlohmann::json& j);

// {"params":{"p","f","d","m","s"[,"twist_shift"]},"dims":{..},"F":{..},
//  "V":{..},"Pi":{..}} in the same keying scheme, entries in [0, p^m).
nlohmann::json od_to_json(const ODModule& M);
ODModule od_from_json(const nlohmann::json& j,
                      std::optional<i64> twist_shift_override = std::nullopt);

// {"w":[..],"pairs":[[[..],[..]],..]}; the ring travels separately.
nlohmann::json raynaud_to_json(const RaynaudParams& P);
RaynaudParams raynaud_from_json(const GaloisRing& R, const nlohmann::json& j);

nlohmann::json witness_to_json(const IsoResult& w);

}  // namespace fvect
