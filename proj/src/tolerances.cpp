#include "symdom/tolerances.hpp"

#include <utility>

#include "symdom/types.hpp"

namespace symdom {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::factor_mismatch: return "factor_mismatch";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::outside_ball: return "outside_ball";
    case ErrorCode::singular_operator: return "singular_operator";
    case ErrorCode::not_tripotent: return "not_tripotent";
    case ErrorCode::non_orthogonal_frame: return "non_orthogonal_frame";
    case ErrorCode::invalid_spec: return "invalid_spec";
    case ErrorCode::iteration_cap: return "iteration_cap";
    case ErrorCode::io: return "io";
    }
    return "unknown";
}

namespace {

using Field = double Tolerances::*;

const std::vector<std::pair<std::string, Field>>& table() {
    static const std::vector<std::pair<std::string, Field>> t = {
        {"identity", &Tolerances::identity},
        {"tripotent", &Tolerances::tripotent},
        {"cluster", &Tolerances::cluster},
        {"rank", &Tolerances::rank},
        {"unit_threshold", &Tolerances::unit_threshold},
        {"sigma_floor", &Tolerances::sigma_floor},
        {"closure", &Tolerances::closure},
        {"cluster_tol", &Tolerances::cluster_tol},
        {"eh_tol", &Tolerances::eh_tol},
        {"invariance", &Tolerances::invariance},
        {"bisect", &Tolerances::bisect},
        {"sequence_fluct", &Tolerances::sequence_fluct},
        {"capture", &Tolerances::capture},
        {"norm_identity", &Tolerances::norm_identity},
        {"inverse", &Tolerances::inverse},
        {"exact", &Tolerances::exact},
        {"cross_method", &Tolerances::cross_method},
    };
    return t;
}

}  // namespace

void Tolerances::set(const std::string& name, double value) {
    for (const auto& [n, f] : table()) {
        if (n == name) {
            if (!(value > 0.0))
                throw Error(ErrorCode::invalid_spec, "tolerance '" + name + "' must be positive");
            this->*f = value;
            return;
        }
    }
    throw Error(ErrorCode::invalid_spec, "unknown tolerance '" + name + "'");
}

double Tolerances::get(const std::string& name) const {
    for (const auto& [n, f] : table())
        if (n == name) return this->*f;
    throw Error(ErrorCode::invalid_spec, "unknown tolerance '" + name + "'");
}

const std::vector<std::string>& Tolerances::names() {
    static const std::vector<std::string> n = [] {
        std::vector<std::string> out;
        for (const auto& entry : table()) out.push_back(entry.first);
        return out;
    }();
    return n;
}

}  // namespace symdom
