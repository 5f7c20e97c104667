#pragma once

#include <span>
#include <string>
#include <vector>

#include "mopg/mdp.hpp"
#include "mopg/policy.hpp"
#include "mopg/utility.hpp"

namespace mopg {

// Empirical truncated returns J-hat_{m,H} averaged over the tau_j batch.
struct ReturnEstimate {
    std::vector<double> j_hat;
    int n2 = 0;
    int horizon = 0;
    double gamma = 1.0;
};

// reward_to_go weights each step's score by the discounted tail from that
// step; full_return weights every step by the whole-episode return. Both
// have the same expectation, the tail form is the estimator proper.
enum class GradientVariant { reward_to_go, full_return };

std::string gradient_variant_name(GradientVariant variant);
GradientVariant gradient_variant_from_name(const std::string& name);

// Parameter-space ascent direction omega averaged over the tau_i batch.
struct GradientEstimate {
    std::vector<double> omega;
    int n1 = 0;
    GradientVariant variant = GradientVariant::reward_to_go;
};

// Mean of episode_return over a non-empty batch of equal-horizon rollouts.
ReturnEstimate estimate_returns(std::span<const Trajectory> trajs,
                                const DiscountSchedule& schedule);

// One-trajectory estimate of grad_theta f(J):
//   sum_t score(s_t, a_t) * sum_m partials[m] * tail_m(t)
// where tail_m(t) = sum_{h=t}^{H-1} gamma^h r_m (absolute discounting) and
// the partials were evaluated once at J-hat from the independent tau_j
// batch and are passed in frozen. Accumulates into out (dimension d).
void single_gradient_accumulate(const Trajectory& traj, std::span<const double> partials,
                                const SoftmaxPolicy& policy, const DiscountSchedule& schedule,
                                GradientVariant variant, std::span<double> out);

std::vector<double> single_gradient(const Trajectory& traj, std::span<const double> partials,
                                    const SoftmaxPolicy& policy, const DiscountSchedule& schedule,
                                    GradientVariant variant);

// Mean of single_gradient over trajs_i with partials frozen at returns.j_hat.
// trajs_i must have been sampled independently of the batch behind returns.
// Summation order is fixed by trajectory index, so the reduction is
// deterministic. Sets *clamped when the partials evaluation hit the floor.
GradientEstimate batch_gradient(std::span<const Trajectory> trajs_i, const ReturnEstimate& returns,
                                const UtilitySpec& utility, const SoftmaxPolicy& policy,
                                const DiscountSchedule& schedule, GradientVariant variant,
                                bool* clamped = nullptr);

} // namespace mopg
