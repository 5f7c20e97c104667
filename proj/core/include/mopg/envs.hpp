#pragma once

#include <memory>
#include <span>
#include <vector>

#include "mopg/mdp.hpp"

namespace mopg {

// Explicit (P, rbar, rho) representation backing the exact DP oracles.
struct TabularModel {
    int num_states = 0;
    int num_actions = 0;
    int num_objectives = 0;
    std::vector<double> transition;      // [s][a][s'] row-major
    std::vector<double> expected_reward; // [s][a][m]
    std::vector<double> initial;         // [s]

    double p(int s, int a, int s2) const {
        return transition[(static_cast<std::size_t>(s) * num_actions + a) * num_states + s2];
    }
    double r(int s, int a, int m) const {
        return expected_reward[(static_cast<std::size_t>(s) * num_actions + a) * num_objectives + m];
    }
    double rho(int s) const { return initial[s]; }

    double& p_ref(int s, int a, int s2) {
        return transition[(static_cast<std::size_t>(s) * num_actions + a) * num_states + s2];
    }
    double& r_ref(int s, int a, int m) {
        return expected_reward[(static_cast<std::size_t>(s) * num_actions + a) * num_objectives + m];
    }

    void resize(int states, int actions, int objectives);

    // Rows sum to 1 within 1e-12, probabilities nonnegative, rewards within
    // [0, reward_max].
    void validate(double reward_max) const;
};

// Environment that samples straight from an explicit TabularModel. Rewards
// are the model's expected rewards (deterministic given (s, a)).
std::shared_ptr<const Environment> make_tabular(TabularModel model, double reward_max);

// Downlink scheduler: each of num_users channels is good or bad (state is
// the bitmask, bit u set = good), the action picks one user, and only that
// user's objective sees its current rate. Channels toggle independently
// after every step.
struct WirelessConfig {
    int num_users = 4;
    std::vector<double> good_rates{1.5, 2.25, 1.25, 1.5};
    std::vector<double> bad_rates{0.768, 1.0, 0.384, 1.12};
    double toggle_prob = 0.1;
    int default_horizon = 500;

    void validate() const;
};

std::shared_ptr<const Environment> make_wireless(const WirelessConfig& config);

// Server draining num_queues queues with Poisson arrivals. The state packs
// all queue lengths (each in [0, queue_cap]) into one id; serving a
// nonempty queue yields reward 1 on that queue's objective. Arrivals land
// after service and clamp at the cap.
struct QueueConfig {
    int num_queues = 4;
    std::vector<double> arrival_rates{0.08, 0.16, 0.24, 0.32};
    int queue_cap = 5;
    int default_horizon = 500;

    void validate() const;
};

std::shared_ptr<const Environment> make_queuing(const QueueConfig& config);

// Fixed 2-state/2-action/2-objective MDP with simple rational entries, a
// full TabularModel, and uniform rho; small enough for exact enumeration.
std::shared_ptr<const Environment> make_synthetic_two_state();

// Queue-length tuple <-> state id (little-endian base queue_cap+1).
int encode_queue_lengths(std::span<const int> lengths, int queue_cap);
void decode_queue_lengths(int id, int queue_cap, std::span<int> lengths);

} // namespace mopg
