#include "mopg/utility.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mopg {

std::string utility_kind_name(UtilityKind kind) {
    switch (kind) {
    case UtilityKind::alpha_fair_inverse: return "alpha_fair_inverse";
    case UtilityKind::sum_log: return "sum_log";
    case UtilityKind::weighted_sum: return "weighted_sum";
    }
    throw std::logic_error("utility_kind_name: unknown kind");
}

UtilityKind utility_kind_from_name(const std::string& name) {
    if (name == "alpha_fair_inverse") return UtilityKind::alpha_fair_inverse;
    if (name == "sum_log") return UtilityKind::sum_log;
    if (name == "weighted_sum") return UtilityKind::weighted_sum;
    throw std::invalid_argument("unknown utility kind: " + name);
}

void UtilitySpec::validate(int num_objectives) const {
    if (!(scale > 0.0)) throw std::invalid_argument("UtilitySpec: scale must be > 0");
    if (!(clamp_floor > 0.0)) throw std::invalid_argument("UtilitySpec: clamp_floor must be > 0");
    if (kind == UtilityKind::weighted_sum) {
        if (static_cast<int>(weights.size()) != num_objectives) {
            throw std::invalid_argument("UtilitySpec: weighted_sum needs one weight per objective");
        }
    } else if (!weights.empty()) {
        throw std::invalid_argument("UtilitySpec: weights are only valid for weighted_sum");
    }
}

namespace {

double clamp_component(const UtilitySpec& u, double j, bool* clamped) {
    if (j < 0.0) throw std::invalid_argument("utility: negative return component");
    if (j < u.clamp_floor) {
        if (clamped != nullptr) *clamped = true;
        return u.clamp_floor;
    }
    return j;
}

} // namespace

double utility_value(const UtilitySpec& u, std::span<const double> j, bool* clamped) {
    double sum = 0.0;
    switch (u.kind) {
    case UtilityKind::alpha_fair_inverse:
        for (double v : j) sum -= u.scale / clamp_component(u, v, clamped);
        return sum;
    case UtilityKind::sum_log:
        for (double v : j) sum += std::log(clamp_component(u, v, clamped) / u.scale);
        return sum;
    case UtilityKind::weighted_sum:
        for (std::size_t m = 0; m < j.size(); ++m) {
            if (j[m] < 0.0) throw std::invalid_argument("utility: negative return component");
            sum += u.weights[m] * j[m];
        }
        return sum;
    }
    throw std::logic_error("utility_value: unknown kind");
}

void utility_partials_into(const UtilitySpec& u, std::span<const double> j,
                           std::span<double> out, bool* clamped) {
    switch (u.kind) {
    case UtilityKind::alpha_fair_inverse:
        for (std::size_t m = 0; m < j.size(); ++m) {
            const double v = clamp_component(u, j[m], clamped);
            out[m] = u.scale / (v * v);
        }
        return;
    case UtilityKind::sum_log:
        for (std::size_t m = 0; m < j.size(); ++m) {
            out[m] = 1.0 / clamp_component(u, j[m], clamped);
        }
        return;
    case UtilityKind::weighted_sum:
        for (std::size_t m = 0; m < j.size(); ++m) {
            if (j[m] < 0.0) throw std::invalid_argument("utility: negative return component");
            out[m] = u.weights[m];
        }
        return;
    }
    throw std::logic_error("utility_partials: unknown kind");
}

std::vector<double> utility_partials(const UtilitySpec& u, std::span<const double> j,
                                     bool* clamped) {
    std::vector<double> out(j.size());
    utility_partials_into(u, j, out, clamped);
    return out;
}

double utility_partial_bound(const UtilitySpec& u, double floor_delta) {
    const double d = std::max(floor_delta, u.clamp_floor);
    switch (u.kind) {
    case UtilityKind::alpha_fair_inverse: return u.scale / (d * d);
    case UtilityKind::sum_log: return 1.0 / d;
    case UtilityKind::weighted_sum: {
        double m = 0.0;
        for (double w : u.weights) m = std::max(m, std::abs(w));
        return m;
    }
    }
    throw std::logic_error("utility_partial_bound: unknown kind");
}

double utility_partial_lipschitz(const UtilitySpec& u, double floor_delta) {
    const double d = std::max(floor_delta, u.clamp_floor);
    switch (u.kind) {
    case UtilityKind::alpha_fair_inverse: return 2.0 * u.scale / (d * d * d);
    case UtilityKind::sum_log: return 1.0 / (d * d);
    case UtilityKind::weighted_sum: return 0.0;
    }
    throw std::logic_error("utility_partial_lipschitz: unknown kind");
}

} // namespace mopg
