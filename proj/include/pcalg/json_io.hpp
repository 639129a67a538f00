#pragma once

#include "pcalg/admissible.hpp"
#include "pcalg/backend.hpp"
#include "pcalg/shift.hpp"
#include "pcalg/solver.hpp"
#include "pcalg/weyl.hpp"

#include <json.hpp>

#include <string>

namespace pcalg {

using nlohmann::json;

// Rationals travel as canonical "p" / "p/q" strings.
json rat_to_json(const Rat& q);
Rat rat_from_json(const json& j);

// WeylElement <-> [[vdeg, wdeg, "p/q"], ...]
json weyl_to_json(const WeylElement& a);
WeylElement weyl_from_json(const json& j);

// ShiftOp inputs: {"gen": "v"} / {"gen": "v^k"} or
// {"columns": {"<col>": {"<row>": "p/q", ...}, ...}} (zero off the listed
// columns). Serialization materializes columns 1..window.
json shift_to_json(const ShiftOp& a, long window);
ShiftOp shift_from_json(const json& j);

// u in F[v] <-> {"coeffs": ["p/q", ...]} (coeffs[i] multiplies v^i)
json vpoly_to_json(const VPoly& u);
VPoly vpoly_from_json(const json& j);

// AdmissiblePoly. admissible_to_json always writes the explicit form
// {"kind","n","r","coeffs":[{"sigma","b","i"?,"coeff"},...]};
// admissible_from_json accepts that form or the multilinear shorthand
// {"[1,2]": "1", "[2,1]": "-1", ...} (order-0 type one).
json admissible_to_json(const AdmissiblePoly& f);
AdmissiblePoly admissible_from_json(const json& j);

// Witnesses: {"backend": ..., "x": [...], "u": {"coeffs": [...]}}
json witness_to_json(const Witness<WeylAlgebra>& w);
json witness_to_json(const Witness<ShiftAlgebra>& w, long window);
json witness_to_json(const Witness<DirectProduct<WeylAlgebra>>& w);
Witness<WeylAlgebra> weyl_witness_from_json(const json& j);

// ReductionTrace: {"steps": [{"kind": ...}, ...]}
json trace_to_json(const ReductionTrace& t);

} // namespace pcalg
