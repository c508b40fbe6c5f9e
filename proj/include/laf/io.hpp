#ifndef LAF_IO_HPP
#define LAF_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "laf/algebra.hpp"
#include "laf/fiber.hpp"
#include "laf/towers.hpp"

namespace laf {

using json = nlohmann::json;

std::string read_file(const std::string& path);

/// FNV-1a 64-bit content digest, hex encoded.
std::string fnv1a_hex(const std::string& bytes);

json load_json_file(const std::string& path);

RingPtr ring_from_json(const json& j);
json ring_to_json(const RingDescriptor& ring);

/// Algebra spec file:
/// { "base": {"kind": "laurent"|"polynomial", "vars": [...]},
///   "rank": n, "basis": ["b1", ...], "unit": ["poly", ... n],
///   "mul": [[["poly", ... n] x n] x n], "commutative": bool }
AlgebraPtr algebra_from_json(const json& j);
json algebra_to_json(const FiniteAlgebra& alg);

/// Character file:
/// { "mode": "exact"|"float", "tolerance": 1e-9, "values": {"x": "1", ...} }
/// Exact values use the rational grammar, float values the "a+bi" form.
Character character_from_json(const json& j);
json character_to_json(const Character& chi);

/// Accepts one character object or an array of them.
std::vector<Character> characters_from_json(const json& j);

/// Tower spec file:
/// { "A": ring, "B": algebra-spec-over-A,
///   "C_over_B": { "rank": m, "unit": [B-coords x m],
///                 "mul": [[[B-coords x m] x m] x m] } }
/// where B-coords is a list of rank(B) poly strings.
Tower tower_from_json(const json& j);

json scalar_to_json(const Scalar& s);
json fiber_report_to_json(const FiberReport& rep);

extern const char* const kVersion;

} // namespace laf

#endif
