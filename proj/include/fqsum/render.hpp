#pragma once

#include "fqsum/identities.hpp"

#include <json.hpp>

#include <string>

namespace fqsum {

using Json = nlohmann::ordered_json;

// {"n": n, "coeffs": ["c0", "c1", ...]} with decimal-string coefficients.
Json to_json(const CycInt& v);
// {"q": q, "exponent": e}
Json to_json(const Character& chi);
Json field_description(const FieldTable& field);
// The wall time is only included on request so that reports stay byte-identical
// across runs.
Json to_json(const VerifyReport& report, bool include_timing = false);

std::string mode_name(VerifyMode mode);
std::string to_human(const VerifyReport& report);

}  // namespace fqsum
