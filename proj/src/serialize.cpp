#include "symdom/serialize.hpp"

#include <algorithm>

namespace symdom {

void require_keys(const json& j, const std::vector<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw Error(ErrorCode::invalid_spec, where + ": expected an object");
    for (const auto& item : j.items())
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end())
            throw Error(ErrorCode::invalid_spec, where + ": unknown key '" + item.key() + "'");
}

const json& require_field(const json& j, const std::string& key, const std::string& where) {
    if (!j.is_object() || !j.contains(key))
        throw Error(ErrorCode::invalid_spec, where + ": missing key '" + key + "'");
    return j.at(key);
}

namespace {

int positive_int(const json& j, const std::string& key, const std::string& where) {
    const json& v = require_field(j, key, where);
    if (!v.is_number_integer() || v.get<long long>() < 1)
        throw Error(ErrorCode::invalid_spec, where + ": '" + key + "' must be a positive integer");
    return v.get<int>();
}

}  // namespace

json factor_to_json(const Factor& f) {
    switch (f.kind()) {
    case Factor::Kind::rectangular: return {{"type", "rect"}, {"rows", f.rows()}, {"cols", f.cols()}};
    case Factor::Kind::spin: return {{"type", "spin"}, {"dim", f.dim()}};
    case Factor::Kind::hilbert: return {{"type", "hilbert"}, {"dim", f.dim()}};
    case Factor::Kind::direct_sum: {
        if (f.is_polydisc()) return {{"type", "polydisc"}, {"d", f.dim()}};
        json parts = json::array();
        for (const auto& p : f.parts()) parts.push_back(factor_to_json(p));
        return {{"type", "sum"}, {"parts", parts}};
    }
    }
    return {};
}

Factor factor_from_json(const json& j) {
    const std::string where = "factor";
    const json& type = require_field(j, "type", where);
    if (!type.is_string()) throw Error(ErrorCode::invalid_spec, "factor: 'type' must be a string");
    const std::string t = type.get<std::string>();
    if (t == "rect") {
        require_keys(j, {"type", "rows", "cols"}, where);
        return Factor::rectangular(positive_int(j, "rows", where), positive_int(j, "cols", where));
    }
    if (t == "spin") {
        require_keys(j, {"type", "dim"}, where);
        return Factor::spin(positive_int(j, "dim", where));
    }
    if (t == "hilbert") {
        require_keys(j, {"type", "dim"}, where);
        return Factor::hilbert(positive_int(j, "dim", where));
    }
    if (t == "polydisc") {
        require_keys(j, {"type", "d"}, where);
        return Factor::polydisc(positive_int(j, "d", where));
    }
    if (t == "sum") {
        require_keys(j, {"type", "parts"}, where);
        const json& parts = require_field(j, "parts", where);
        if (!parts.is_array() || parts.empty())
            throw Error(ErrorCode::invalid_spec, "factor: 'parts' must be a non-empty array");
        std::vector<Factor> fs;
        for (const auto& p : parts) fs.push_back(factor_from_json(p));
        return Factor::direct_sum(fs);
    }
    throw Error(ErrorCode::invalid_spec, "factor: unknown type '" + t + "'");
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw Error(ErrorCode::invalid_spec, "expected a [re, im] pair, got " + j.dump());
    return {j[0].get<double>(), j[1].get<double>()};
}

cplx scalar_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    return complex_from_json(j);
}

json element_to_json(const Element& e) {
    json out = json::array();
    for (int k = 0; k < e.dim(); ++k) out.push_back(complex_to_json(e[k]));
    return out;
}

Element element_from_json(const json& j, const Factor& f) {
    if (!j.is_array()) throw Error(ErrorCode::invalid_spec, "element must be an array of [re, im] pairs");
    if (static_cast<int>(j.size()) != f.dim())
        throw Error(ErrorCode::invalid_spec, "element has " + std::to_string(j.size()) + " entries, " +
                                                 f.describe() + " needs " + std::to_string(f.dim()));
    CVec v(f.dim());
    for (int k = 0; k < f.dim(); ++k) v[k] = complex_from_json(j[static_cast<std::size_t>(k)]);
    return Element(f, v);
}

}  // namespace symdom
