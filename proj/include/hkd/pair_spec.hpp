#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "hkd/polytope.hpp"
#include "hkd/toric_region.hpp"

namespace hkd {

using Json = nlohmann::ordered_json;

/// Builtin grammar:
///   simplex | segment | square | anticanonical
///   projective_space:N,DEGREE | hirzebruch:A,C,D | cube:N
///   product(SPEC;SPEC)
/// Throws InvalidInput on malformed or out-of-range input.
Polytope builtin_polytope(std::string_view text);

/// The JSON builtin form {"builtin": "..."} or {"builtin": {"name": ...}},
/// or the explicit form {"ambient_dim", "inequalities": [{"normal",
/// "offset"}], "vertices"?}. Explicit vertices may be rational strings and
/// must match the inequalities when both are given.
Polytope polytope_from_json(const Json& spec);

/// Like polytope_from_json, additionally requiring a full-dimensional lattice
/// polytope.
ToricPair pair_from_json(const Json& spec);

/// Explicit spec of a polytope; re-parses to the same polytope.
Json echo(const Polytope& p);

/// Builtin names with their grammar, for the catalog command.
Json catalog();

/// "p/q" rationals and vectors of them.
Json to_json(const Rational& r);
Json to_json(const QVec& v);

}  // namespace hkd
