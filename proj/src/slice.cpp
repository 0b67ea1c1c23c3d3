#include "symdom/slice.hpp"

#include <cmath>
#include <limits>

#include "symdom/serialize.hpp"
#include "symdom/triple.hpp"

namespace symdom {

using json = nlohmann::json;

json slice_to_json(const Slice& s) {
    return {{"origin", element_to_json(s.origin)},
            {"u", element_to_json(s.u)},
            {"v", element_to_json(s.v)},
            {"range", {s.lo, s.hi}},
            {"steps", s.steps}};
}

Slice slice_from_json(const json& j, const Factor& f) {
    require_keys(j, {"origin", "u", "v", "range", "steps"}, "slice");
    Slice s{Element::zero(f), element_from_json(require_field(j, "u", "slice"), f),
            element_from_json(require_field(j, "v", "slice"), f)};
    if (j.contains("origin")) s.origin = element_from_json(j.at("origin"), f);
    if (j.contains("range")) {
        const json& r = j.at("range");
        if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number() ||
            !(r[0].get<double>() < r[1].get<double>()))
            throw Error(ErrorCode::invalid_spec, "slice: 'range' must be [lo, hi] with lo < hi");
        s.lo = r[0].get<double>();
        s.hi = r[1].get<double>();
    }
    if (j.contains("steps")) {
        const json& st = j.at("steps");
        if (!st.is_number_integer() || st.get<long long>() < 1 || st.get<long long>() > 2001)
            throw Error(ErrorCode::invalid_spec, "slice: 'steps' must be an integer in [1, 2001]");
        s.steps = st.get<int>();
    }
    return s;
}

std::vector<GridRow> horoball_grid(const HorofunctionData& F, const Slice& slice, const std::vector<double>& s_list,
                                   const Tolerances& tol) {
    for (double s : s_list)
        if (!(s > 0.0)) throw Error(ErrorCode::invalid_argument, "hororadii must be positive");
    std::vector<GridRow> rows;
    rows.reserve(static_cast<std::size_t>(slice.steps) * slice.steps);
    for (int j = 0; j < slice.steps; ++j) {
        for (int i = 0; i < slice.steps; ++i) {
            const double a = slice.parameter(i);
            const double b = slice.parameter(j);
            GridRow row{a, b, slice.point(a, b), false, std::numeric_limits<double>::quiet_NaN(), {}};
            row.in_ball = element_norm(row.x) < 1.0;
            if (row.in_ball) {
                row.F = eval_F_bisect(F, row.x, tol);
                for (double s : s_list) row.member.push_back(F.membership_value(s, row.x) < 1.0);
            } else {
                row.member.assign(s_list.size(), false);
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace symdom
