#pragma once

// JSON wire formats shared by the C API and tests.

#include <json.hpp>

#include "twistgrp/heisenberg.hpp"
#include "twistgrp/reps.hpp"
#include "twistgrp/tc_oracle.hpp"
#include "twistgrp/twisted.hpp"
#include "twistgrp/wreath.hpp"

namespace twistgrp::json_io {

using nlohmann::json;

json to_json(const LaurentPoly& p);                  // {"exp": coeff}
LaurentPoly poly_from_json(const json& j);           // object or grammar string

json to_json(const WreathElement& g);
/// Parses the element schema; "k"/"torsion" when present must match `spec`.
WreathElement wreath_from_json(const AbelianSpec& spec, const json& j);

json to_json(const IntMatrix& m);                    // array of rows

json to_json(const RepParams& p);
json to_json(const CharacterValue& v);               // {"terms": [...], "approx": [re, im]}
json to_json(const MonomialOperator& op);            // {"dim", "perm", "phases"}

json to_json(const ReidemeisterReport& r);
json partition_json(const tc::ClassPartition<HeisenbergElement>& part, const PhiN* labels_from);

json character_table(const RepParams& params, std::int64_t radius);

WreathAutomorphism automorphism_from_json(const AbelianSpec& spec, const json& j);
json to_json(const WreathAutomorphism& phi);

/// Checks the subgroup-preservation conclusions on one automorphism.
json automorphism_report(const WreathAutomorphism& phi, std::mt19937_64& rng, int samples);

}  // namespace twistgrp::json_io
