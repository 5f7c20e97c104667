#pragma once

#include <span>
#include <string>
#include <vector>

namespace mopg {

// Concave scalarizations of the M-vector of returns. alpha_fair_inverse is
// f(J) = -sum_k scale / J_k, sum_log is f(J) = sum_k log(J_k / scale), and
// weighted_sum is the linear anchor f(J) = sum_k weights_k J_k for which the
// gradient estimator must reduce to plain per-objective REINFORCE.
enum class UtilityKind { alpha_fair_inverse, sum_log, weighted_sum };

std::string utility_kind_name(UtilityKind kind);
UtilityKind utility_kind_from_name(const std::string& name);

struct UtilitySpec {
    UtilityKind kind = UtilityKind::sum_log;
    double scale = 1.0;          // the constant c
    double clamp_floor = 1e-6;   // eps_J; components below it are lifted before evaluation
    std::vector<double> weights; // weighted_sum only

    void validate(int num_objectives) const;
};

// f(J) after clamping each component at clamp_floor (weighted_sum skips the
// clamp). Sets *clamped when any component was lifted. Negative components
// are an argument error.
double utility_value(const UtilitySpec& u, std::span<const double> j, bool* clamped = nullptr);

// Exact partial derivatives df/dJ_m at the clamped point:
// alpha_fair_inverse -> scale / J_m^2, sum_log -> 1 / J_m, weighted -> w_m.
void utility_partials_into(const UtilitySpec& u, std::span<const double> j,
                           std::span<double> out, bool* clamped = nullptr);
std::vector<double> utility_partials(const UtilitySpec& u, std::span<const double> j,
                                     bool* clamped = nullptr);

// Bound C on |df/dJ_m| over the box [floor_delta, inf)^M.
double utility_partial_bound(const UtilitySpec& u, double floor_delta);

// Lipschitz constant L_f of the partials over the same box.
double utility_partial_lipschitz(const UtilitySpec& u, double floor_delta);

} // namespace mopg
