#include "mopg/envs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mopg {

void TabularModel::resize(int states, int actions, int objectives) {
    num_states = states;
    num_actions = actions;
    num_objectives = objectives;
    transition.assign(static_cast<std::size_t>(states) * actions * states, 0.0);
    expected_reward.assign(static_cast<std::size_t>(states) * actions * objectives, 0.0);
    initial.assign(states, 0.0);
}

void TabularModel::validate(double reward_max) const {
    constexpr double kTol = 1e-12;
    for (int s = 0; s < num_states; ++s) {
        for (int a = 0; a < num_actions; ++a) {
            double sum = 0.0;
            for (int s2 = 0; s2 < num_states; ++s2) {
                const double v = p(s, a, s2);
                if (v < 0.0) throw std::invalid_argument("TabularModel: negative probability");
                sum += v;
            }
            if (std::abs(sum - 1.0) > kTol) {
                throw std::invalid_argument("TabularModel: transition row does not sum to 1");
            }
            for (int m = 0; m < num_objectives; ++m) {
                const double v = r(s, a, m);
                if (v < 0.0 || v > reward_max) {
                    throw std::invalid_argument("TabularModel: reward outside [0, reward_max]");
                }
            }
        }
    }
    double rho_sum = 0.0;
    for (int s = 0; s < num_states; ++s) {
        if (initial[s] < 0.0) throw std::invalid_argument("TabularModel: negative initial mass");
        rho_sum += initial[s];
    }
    if (std::abs(rho_sum - 1.0) > kTol) {
        throw std::invalid_argument("TabularModel: initial distribution does not sum to 1");
    }
}

namespace {

class TabularEnv final : public Environment {
  public:
    TabularEnv(TabularModel model, double reward_max)
        : Environment(MdpSpec{model.num_states, model.num_actions, model.num_objectives,
                              reward_max}),
          model_(std::move(model)) {
        model_.validate(reward_max);
    }

    int sample_initial(RngStream& rng) const override { return rng.categorical(model_.initial); }

    int step(int s, int a, RngStream& rng, std::span<double> rewards) const override {
        for (int m = 0; m < model_.num_objectives; ++m) rewards[m] = model_.r(s, a, m);
        const std::size_t off =
            (static_cast<std::size_t>(s) * model_.num_actions + a) * model_.num_states;
        return rng.categorical(
            std::span<const double>(model_.transition.data() + off, model_.num_states));
    }

    const TabularModel* tabular_model() const override { return &model_; }

  private:
    TabularModel model_;
};

class WirelessEnv final : public Environment {
  public:
    explicit WirelessEnv(const WirelessConfig& config)
        : Environment(MdpSpec{1 << config.num_users, config.num_users, config.num_users,
                              max_rate(config)}),
          config_(config) {
        // Tabular form only at sizes where the |S|^2 |A| table stays small.
        if (config_.num_users <= 8) {
            build_model();
        }
    }

    int sample_initial(RngStream& rng) const override {
        int s = 0;
        for (int u = 0; u < config_.num_users; ++u) {
            if (rng.uniform01() < 0.5) s |= 1 << u;
        }
        return s;
    }

    int step(int s, int a, RngStream& rng, std::span<double> rewards) const override {
        for (int m = 0; m < config_.num_users; ++m) rewards[m] = 0.0;
        rewards[a] = (s >> a & 1) ? config_.good_rates[a] : config_.bad_rates[a];
        int next = s;
        for (int u = 0; u < config_.num_users; ++u) {
            if (rng.uniform01() < config_.toggle_prob) next ^= 1 << u;
        }
        return next;
    }

    const TabularModel* tabular_model() const override {
        return model_.num_states > 0 ? &model_ : nullptr;
    }

  private:
    static double max_rate(const WirelessConfig& config) {
        double m = 0.0;
        for (double v : config.good_rates) m = std::max(m, v);
        for (double v : config.bad_rates) m = std::max(m, v);
        return m;
    }

    void build_model() {
        const int n = config_.num_users;
        const int states = 1 << n;
        model_.resize(states, n, n);
        for (int s = 0; s < states; ++s) {
            model_.initial[s] = 1.0 / states;
            for (int a = 0; a < n; ++a) {
                model_.r_ref(s, a, a) = (s >> a & 1) ? config_.good_rates[a] : config_.bad_rates[a];
                for (int s2 = 0; s2 < states; ++s2) {
                    double prob = 1.0;
                    for (int u = 0; u < n; ++u) {
                        const bool flipped = ((s ^ s2) >> u & 1) != 0;
                        prob *= flipped ? config_.toggle_prob : 1.0 - config_.toggle_prob;
                    }
                    model_.p_ref(s, a, s2) = prob;
                }
            }
        }
    }

    WirelessConfig config_;
    TabularModel model_;
};

class QueueEnv final : public Environment {
  public:
    explicit QueueEnv(const QueueConfig& config)
        : Environment(MdpSpec{num_states_for(config), config.num_queues, config.num_queues, 1.0}),
          config_(config) {}

    int sample_initial(RngStream&) const override {
        return 0; // all queues empty
    }

    int step(int s, int a, RngStream& rng, std::span<double> rewards) const override {
        const int n = config_.num_queues;
        int lengths[kMaxQueues];
        decode_queue_lengths(s, config_.queue_cap, std::span<int>(lengths, n));
        for (int m = 0; m < n; ++m) rewards[m] = 0.0;
        if (lengths[a] > 0) {
            --lengths[a];
            rewards[a] = 1.0;
        }
        for (int k = 0; k < n; ++k) {
            lengths[k] = std::min(config_.queue_cap, lengths[k] + rng.poisson(config_.arrival_rates[k]));
        }
        return encode_queue_lengths(std::span<const int>(lengths, n), config_.queue_cap);
    }

  private:
    static constexpr int kMaxQueues = 16;

    static int num_states_for(const QueueConfig& config) {
        if (config.num_queues > kMaxQueues) {
            throw std::invalid_argument("QueueConfig: too many queues");
        }
        long long states = 1;
        for (int k = 0; k < config.num_queues; ++k) {
            states *= config.queue_cap + 1;
            if (states > (1LL << 30)) {
                throw std::invalid_argument("QueueConfig: state space too large");
            }
        }
        return static_cast<int>(states);
    }

    QueueConfig config_;
};

} // namespace

void WirelessConfig::validate() const {
    if (num_users < 1 || num_users > 16) {
        throw std::invalid_argument("WirelessConfig: num_users must lie in [1, 16]");
    }
    if (static_cast<int>(good_rates.size()) != num_users ||
        static_cast<int>(bad_rates.size()) != num_users) {
        throw std::invalid_argument("WirelessConfig: rate tables must have one entry per user");
    }
    for (double v : good_rates) {
        if (v < 0.0) throw std::invalid_argument("WirelessConfig: rates must be >= 0");
    }
    for (double v : bad_rates) {
        if (v < 0.0) throw std::invalid_argument("WirelessConfig: rates must be >= 0");
    }
    if (!(toggle_prob >= 0.0 && toggle_prob <= 1.0)) {
        throw std::invalid_argument("WirelessConfig: toggle_prob must lie in [0, 1]");
    }
    if (default_horizon < 1) {
        throw std::invalid_argument("WirelessConfig: default_horizon must be >= 1");
    }
}

void QueueConfig::validate() const {
    if (num_queues < 1) throw std::invalid_argument("QueueConfig: num_queues must be >= 1");
    if (static_cast<int>(arrival_rates.size()) != num_queues) {
        throw std::invalid_argument("QueueConfig: one arrival rate per queue required");
    }
    for (double v : arrival_rates) {
        if (!(v > 0.0)) throw std::invalid_argument("QueueConfig: arrival rates must be > 0");
    }
    if (queue_cap < 1) throw std::invalid_argument("QueueConfig: queue_cap must be >= 1");
    if (default_horizon < 1) {
        throw std::invalid_argument("QueueConfig: default_horizon must be >= 1");
    }
}

std::shared_ptr<const Environment> make_tabular(TabularModel model, double reward_max) {
    return std::make_shared<TabularEnv>(std::move(model), reward_max);
}

std::shared_ptr<const Environment> make_wireless(const WirelessConfig& config) {
    config.validate();
    return std::make_shared<WirelessEnv>(config);
}

std::shared_ptr<const Environment> make_queuing(const QueueConfig& config) {
    config.validate();
    return std::make_shared<QueueEnv>(config);
}

std::shared_ptr<const Environment> make_synthetic_two_state() {
    TabularModel model;
    model.resize(2, 2, 2);
    // Transitions: action 0 drifts toward state 0, action 1 toward state 1.
    model.p_ref(0, 0, 0) = 0.75;
    model.p_ref(0, 0, 1) = 0.25;
    model.p_ref(0, 1, 0) = 0.25;
    model.p_ref(0, 1, 1) = 0.75;
    model.p_ref(1, 0, 0) = 0.5;
    model.p_ref(1, 0, 1) = 0.5;
    model.p_ref(1, 1, 0) = 0.125;
    model.p_ref(1, 1, 1) = 0.875;
    // Objective 0 pays mostly in state 0, objective 1 mostly in state 1, so
    // the two objectives pull the policy in opposite directions.
    model.r_ref(0, 0, 0) = 1.0;
    model.r_ref(0, 0, 1) = 0.0;
    model.r_ref(0, 1, 0) = 0.5;
    model.r_ref(0, 1, 1) = 0.25;
    model.r_ref(1, 0, 0) = 0.0;
    model.r_ref(1, 0, 1) = 1.0;
    model.r_ref(1, 1, 0) = 0.25;
    model.r_ref(1, 1, 1) = 0.75;
    model.initial[0] = 0.5;
    model.initial[1] = 0.5;
    return make_tabular(std::move(model), 1.0);
}

int encode_queue_lengths(std::span<const int> lengths, int queue_cap) {
    const int base = queue_cap + 1;
    int id = 0;
    int mult = 1;
    for (std::size_t k = 0; k < lengths.size(); ++k) {
        id += lengths[k] * mult;
        mult *= base;
    }
    return id;
}

void decode_queue_lengths(int id, int queue_cap, std::span<int> lengths) {
    const int base = queue_cap + 1;
    for (std::size_t k = 0; k < lengths.size(); ++k) {
        lengths[k] = id % base;
        id /= base;
    }
}

} // namespace mopg
