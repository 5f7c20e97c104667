#include "mopg/estimator.hpp"

#include <stdexcept>

namespace mopg {

std::string gradient_variant_name(GradientVariant variant) {
    switch (variant) {
    case GradientVariant::reward_to_go: return "reward_to_go";
    case GradientVariant::full_return: return "full_return";
    }
    throw std::logic_error("gradient_variant_name: unknown variant");
}

GradientVariant gradient_variant_from_name(const std::string& name) {
    if (name == "reward_to_go") return GradientVariant::reward_to_go;
    if (name == "full_return") return GradientVariant::full_return;
    throw std::invalid_argument("unknown gradient variant: " + name);
}

ReturnEstimate estimate_returns(std::span<const Trajectory> trajs,
                                const DiscountSchedule& schedule) {
    if (trajs.empty()) throw std::invalid_argument("estimate_returns: empty trajectory list");
    const int horizon = trajs[0].size();
    const int m = trajs[0].num_objectives();
    ReturnEstimate est;
    est.j_hat.assign(m, 0.0);
    est.n2 = static_cast<int>(trajs.size());
    est.horizon = horizon;
    est.gamma = schedule.gamma;
    for (const Trajectory& traj : trajs) {
        if (traj.size() != horizon || traj.num_objectives() != m) {
            throw std::invalid_argument("estimate_returns: mixed trajectory shapes");
        }
        const std::vector<double> ret = episode_return(traj, schedule);
        for (int i = 0; i < m; ++i) est.j_hat[i] += ret[i];
    }
    for (int i = 0; i < m; ++i) est.j_hat[i] /= est.n2;
    return est;
}

void single_gradient_accumulate(const Trajectory& traj, std::span<const double> partials,
                                const SoftmaxPolicy& policy, const DiscountSchedule& schedule,
                                GradientVariant variant, std::span<double> out) {
    const int horizon = traj.size();
    const int m = traj.num_objectives();
    if (static_cast<int>(partials.size()) != m) {
        throw std::invalid_argument("single_gradient: partials size must equal M");
    }
    if (horizon != schedule.horizon) {
        throw std::invalid_argument("single_gradient: trajectory horizon does not match schedule");
    }
    if (static_cast<int>(out.size()) != policy.dim()) {
        throw std::invalid_argument("single_gradient: output dimension mismatch");
    }

    // Backward pass: coeff[t] = sum_m partials[m] * sum_{h=t}^{H-1} gamma^h r_m.
    // The absolute discount gamma^h makes the recursion
    // tail_m(t) = gamma^t r_m(t) + tail_m(t+1).
    std::vector<double> coeff(horizon);
    std::vector<double> tail(m, 0.0);
    std::vector<double> discount(horizon);
    {
        double d = 1.0;
        for (int t = 0; t < horizon; ++t) {
            discount[t] = d;
            d *= schedule.gamma;
        }
    }
    for (int t = horizon - 1; t >= 0; --t) {
        std::span<const double> r = traj.rewards(t);
        double c = 0.0;
        for (int i = 0; i < m; ++i) {
            tail[i] += discount[t] * r[i];
            c += partials[i] * tail[i];
        }
        coeff[t] = c;
    }
    if (variant == GradientVariant::full_return) {
        for (int t = 1; t < horizon; ++t) coeff[t] = coeff[0];
    }

    // Forward pass: out[row s_t] += coeff[t] * (indicator(a_t) - pi(.|s_t)).
    const int num_actions = policy.num_actions();
    std::vector<double> probs(num_actions);
    for (int t = 0; t < horizon; ++t) {
        const int s = traj.state(t);
        const int a = traj.action(t);
        policy.action_probabilities_into(s, probs);
        double* row = out.data() + static_cast<std::size_t>(s) * num_actions;
        const double c = coeff[t];
        for (int ap = 0; ap < num_actions; ++ap) row[ap] -= c * probs[ap];
        row[a] += c;
    }
}

std::vector<double> single_gradient(const Trajectory& traj, std::span<const double> partials,
                                    const SoftmaxPolicy& policy, const DiscountSchedule& schedule,
                                    GradientVariant variant) {
    std::vector<double> out(static_cast<std::size_t>(policy.dim()), 0.0);
    single_gradient_accumulate(traj, partials, policy, schedule, variant, out);
    return out;
}

GradientEstimate batch_gradient(std::span<const Trajectory> trajs_i, const ReturnEstimate& returns,
                                const UtilitySpec& utility, const SoftmaxPolicy& policy,
                                const DiscountSchedule& schedule, GradientVariant variant,
                                bool* clamped) {
    if (trajs_i.empty()) throw std::invalid_argument("batch_gradient: empty trajectory list");
    const std::vector<double> partials = utility_partials(utility, returns.j_hat, clamped);
    GradientEstimate est;
    est.omega.assign(static_cast<std::size_t>(policy.dim()), 0.0);
    est.n1 = static_cast<int>(trajs_i.size());
    est.variant = variant;
    for (const Trajectory& traj : trajs_i) {
        single_gradient_accumulate(traj, partials, policy, schedule, variant, est.omega);
    }
    const double inv = 1.0 / est.n1;
    for (double& v : est.omega) v *= inv;
    return est;
}

} // namespace mopg
