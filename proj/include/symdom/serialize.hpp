#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "symdom/factor.hpp"

namespace symdom {

using json = nlohmann::json;

/// {"type":"rect","rows":R,"cols":C} | {"type":"spin","dim":N} |
/// {"type":"hilbert","dim":N} | {"type":"polydisc","d":D} | {"type":"sum","parts":[...]}
json factor_to_json(const Factor& f);
Factor factor_from_json(const json& j);

/// Array of [re, im] pairs, row-major for matrices.
json element_to_json(const Element& e);
Element element_from_json(const json& j, const Factor& f);

json complex_to_json(cplx z);
cplx complex_from_json(const json& j);

/// Reads a number or a [re, im] pair.
cplx scalar_from_json(const json& j);

/// Throws Error(invalid_spec) naming `where` when `j` has a key outside `allowed`.
void require_keys(const json& j, const std::vector<std::string>& allowed, const std::string& where);
const json& require_field(const json& j, const std::string& key, const std::string& where);

}  // namespace symdom
