#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "mopg/policy.hpp"
#include "mopg/rng.hpp"

namespace mopg {

struct TabularModel;

// Shape of a vector-reward MDP: |S|, |A|, number of objectives M, and the
// per-step per-objective reward bound.
struct MdpSpec {
    int num_states = 1;
    int num_actions = 1;
    int num_objectives = 1;
    double reward_max = 1.0;

    void validate() const;
};

// gamma in (0, 1] and episode length H. gamma = 1 is allowed only for
// truncated (finite-H) computations; infinite-horizon oracles reject it.
struct DiscountSchedule {
    double gamma = 1.0;
    int horizon = 1;

    void validate() const;
};

// One environment rollout of exactly H steps, stored column-wise. Rewards
// are t-major: reward(t, m) = rewards_[t * M + m].
class Trajectory {
  public:
    Trajectory() = default;

    void reset(int horizon, int num_objectives);

    int size() const { return static_cast<int>(states_.size()); }
    int num_objectives() const { return num_objectives_; }

    int state(int t) const { return states_[t]; }
    int action(int t) const { return actions_[t]; }
    double reward(int t, int m) const {
        return rewards_[static_cast<std::size_t>(t) * num_objectives_ + m];
    }
    std::span<const double> rewards(int t) const {
        return {rewards_.data() + static_cast<std::size_t>(t) * num_objectives_,
                static_cast<std::size_t>(num_objectives_)};
    }

    void set_step(int t, int s, int a, std::span<const double> rewards);

  private:
    int num_objectives_ = 0;
    std::vector<std::int32_t> states_;
    std::vector<std::int32_t> actions_;
    std::vector<double> rewards_;
};

// Immutable environment description. Rollout state lives entirely in the
// caller's loop, so concurrent rollouts over distinct streams are safe.
class Environment {
  public:
    virtual ~Environment() = default;

    const MdpSpec& spec() const { return spec_; }

    virtual int sample_initial(RngStream& rng) const = 0;

    // Writes the M reward components for (s, a) and samples the next state.
    virtual int step(int s, int a, RngStream& rng, std::span<double> rewards) const = 0;

    // Explicit (P, rbar, rho) when tractable; nullptr otherwise.
    virtual const TabularModel* tabular_model() const { return nullptr; }

  protected:
    explicit Environment(MdpSpec spec) : spec_(spec) { spec_.validate(); }

    MdpSpec spec_;
};

// Rolls out H steps: s0 ~ rho, a_t ~ pi(.|s_t), s_{t+1} ~ P(.|s_t, a_t).
// Identical (env, policy, schedule, stream) inputs yield identical output.
void sample_trajectory_into(const Environment& env, const SoftmaxPolicy& policy,
                            const DiscountSchedule& schedule, RngStream& rng, Trajectory& out);
Trajectory sample_trajectory(const Environment& env, const SoftmaxPolicy& policy,
                             const DiscountSchedule& schedule, RngStream& rng);

// Same rollout fed by a frozen PolicyTable (hot path of the trainer).
void sample_trajectory_into(const Environment& env, const PolicyTable& table,
                            const DiscountSchedule& schedule, RngStream& rng, Trajectory& out);

// sum_{h=t}^{H-1} gamma^h r_m(s_h, a_h). Discounting is absolute (gamma^h,
// not gamma^{h-t}); the two agree at gamma = 1.
double tail_return(const Trajectory& traj, const DiscountSchedule& schedule, int t, int m);

// Vector of per-objective discounted sums over the whole episode.
std::vector<double> episode_return(const Trajectory& traj, const DiscountSchedule& schedule);

// Debug dump, one step per line: t,state,action,r_0,...,r_{M-1}.
void dump_trajectory_csv(std::ostream& os, const Trajectory& traj);

} // namespace mopg
