#pragma once

#include <nlohmann/json.hpp>

#include "x3ent/cones.hpp"
#include "x3ent/witness.hpp"

namespace x3 {

using nlohmann::json;

// States are accepted either as
//   {"a": [...4], "b": [...4], "z": [...4]}     (z entries: number, "p/q",
//                                                or [re, im])
// or as a dense self-adjoint matrix
//   {"matrix": [[...8]...8]}                    (entries like z above)
// Numbers may be JSON floats (read as exact binary doubles) or "p/q"
// strings. float_seen reports whether any plain float appeared, which picks
// the default evaluation mode. A dense matrix with entries off the
// diagonal/anti-diagonal is projected to its X-part and projected is set:
// criteria verdicts are then only necessary conditions for the original
// state.
XState state_from_json(const json& j, bool* float_seen, bool* projected = nullptr);
json state_to_json(const XState& x);

WitnessX witness_from_json(const json& j, bool* float_seen);
json witness_to_json(const WitnessX& w);

json ghz_to_json(const GhzDiagonal& g);
json certificate_to_json(const Certificate& c);
json lattice_profile_to_json(const LatticeProfile& p);

}  // namespace x3
