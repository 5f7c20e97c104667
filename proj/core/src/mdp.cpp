#include "mopg/mdp.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace mopg {

void MdpSpec::validate() const {
    if (num_states < 1 || num_actions < 1 || num_objectives < 1) {
        throw std::invalid_argument("MdpSpec: all counts must be >= 1");
    }
    if (!(reward_max >= 0.0)) {
        throw std::invalid_argument("MdpSpec: reward_max must be >= 0");
    }
}

void DiscountSchedule::validate() const {
    if (!(gamma > 0.0 && gamma <= 1.0)) {
        throw std::invalid_argument("DiscountSchedule: gamma must lie in (0, 1]");
    }
    if (horizon < 1) {
        throw std::invalid_argument("DiscountSchedule: horizon must be >= 1");
    }
}

void Trajectory::reset(int horizon, int num_objectives) {
    num_objectives_ = num_objectives;
    states_.assign(horizon, 0);
    actions_.assign(horizon, 0);
    rewards_.assign(static_cast<std::size_t>(horizon) * num_objectives, 0.0);
}

void Trajectory::set_step(int t, int s, int a, std::span<const double> rewards) {
    states_[t] = s;
    actions_[t] = a;
    double* dst = rewards_.data() + static_cast<std::size_t>(t) * num_objectives_;
    for (int m = 0; m < num_objectives_; ++m) dst[m] = rewards[m];
}

namespace {

void check_dimensions(const Environment& env, int policy_states, int policy_actions) {
    if (env.spec().num_states != policy_states || env.spec().num_actions != policy_actions) {
        throw std::invalid_argument("sample_trajectory: environment/policy dimension mismatch");
    }
}

template <typename ActionSource>
void rollout(const Environment& env, const ActionSource& actions,
             const DiscountSchedule& schedule, RngStream& rng, Trajectory& out) {
    schedule.validate();
    const int horizon = schedule.horizon;
    const int m = env.spec().num_objectives;
    out.reset(horizon, m);
    std::vector<double> rewards(m);
    int s = env.sample_initial(rng);
    for (int t = 0; t < horizon; ++t) {
        const int a = actions(s, rng);
        const int next = env.step(s, a, rng, rewards);
        out.set_step(t, s, a, rewards);
        s = next;
    }
}

} // namespace

void sample_trajectory_into(const Environment& env, const SoftmaxPolicy& policy,
                            const DiscountSchedule& schedule, RngStream& rng, Trajectory& out) {
    check_dimensions(env, policy.num_states(), policy.num_actions());
    rollout(env, [&policy](int s, RngStream& r) { return policy.sample_action(s, r); },
            schedule, rng, out);
}

Trajectory sample_trajectory(const Environment& env, const SoftmaxPolicy& policy,
                             const DiscountSchedule& schedule, RngStream& rng) {
    Trajectory out;
    sample_trajectory_into(env, policy, schedule, rng, out);
    return out;
}

void sample_trajectory_into(const Environment& env, const PolicyTable& table,
                            const DiscountSchedule& schedule, RngStream& rng, Trajectory& out) {
    check_dimensions(env, table.num_states(), table.num_actions());
    rollout(env, [&table](int s, RngStream& r) { return table.sample_action(s, r); },
            schedule, rng, out);
}

double tail_return(const Trajectory& traj, const DiscountSchedule& schedule, int t, int m) {
    if (t < 0 || t >= traj.size()) {
        throw std::out_of_range("tail_return: step index out of range");
    }
    if (m < 0 || m >= traj.num_objectives()) {
        throw std::out_of_range("tail_return: objective index out of range");
    }
    double discount = 1.0;
    for (int h = 0; h < t; ++h) discount *= schedule.gamma;
    double sum = 0.0;
    for (int h = t; h < traj.size(); ++h) {
        sum += discount * traj.reward(h, m);
        discount *= schedule.gamma;
    }
    return sum;
}

std::vector<double> episode_return(const Trajectory& traj, const DiscountSchedule& schedule) {
    const int m = traj.num_objectives();
    std::vector<double> total(m, 0.0);
    double discount = 1.0;
    for (int t = 0; t < traj.size(); ++t) {
        std::span<const double> r = traj.rewards(t);
        for (int i = 0; i < m; ++i) total[i] += discount * r[i];
        discount *= schedule.gamma;
    }
    return total;
}

void dump_trajectory_csv(std::ostream& os, const Trajectory& traj) {
    char buf[64];
    for (int t = 0; t < traj.size(); ++t) {
        os << t << ',' << traj.state(t) << ',' << traj.action(t);
        for (int m = 0; m < traj.num_objectives(); ++m) {
            std::snprintf(buf, sizeof(buf), "%.17g", traj.reward(t, m));
            os << ',' << buf;
        }
        os << '\n';
    }
}

} // namespace mopg
