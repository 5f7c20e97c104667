#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "mopg/rng.hpp"

namespace mopg {

// Tabular softmax policy: pi(a|s) = softmax(theta[s, .]). The parameter
// table flattens row-major to a vector of dimension |S|*|A|, which is the
// space every gradient estimate lives in.
class SoftmaxPolicy {
  public:
    SoftmaxPolicy(int num_states, int num_actions);

    // All-zero table perturbed entrywise by N(0, stddev^2).
    static SoftmaxPolicy gaussian_init(int num_states, int num_actions, double stddev,
                                       std::uint64_t seed);

    int num_states() const { return num_states_; }
    int num_actions() const { return num_actions_; }
    int dim() const { return num_states_ * num_actions_; }

    double theta(int s, int a) const { return theta_[index(s, a)]; }
    void set_theta(int s, int a, double v) { theta_[index(s, a)] = v; }

    std::span<const double> flat() const { return theta_; }
    std::vector<double>& mutable_flat() { return theta_; }
    void set_flat(std::span<const double> values);

    int index(int s, int a) const { return s * num_actions_ + a; }

    // softmax(theta[s, .]) with max-subtraction; entries sum to 1.
    void action_probabilities_into(int s, std::span<double> out) const;
    std::vector<double> action_probabilities(int s) const;

    int sample_action(int s, RngStream& rng) const;

    // Row-s slice of grad_theta log pi(a|s): 1{a'=a} - pi(a'|s).
    void score_row_into(int s, int a, std::span<double> out) const;

    // Dense parameter-space score vector; zero outside row s.
    std::vector<double> score(int s, int a) const;

    // Flat snapshot as "state,action,value" lines.
    void save_csv(std::ostream& os) const;
    static SoftmaxPolicy load_csv(std::istream& is);

  private:
    int num_states_;
    int num_actions_;
    std::vector<double> theta_;
};

// Per-state action distributions frozen for one sampling phase. Sampling
// through the table and through the policy directly consume the stream
// identically and return identical actions.
class PolicyTable {
  public:
    explicit PolicyTable(const SoftmaxPolicy& policy);

    int num_states() const { return num_states_; }
    int num_actions() const { return num_actions_; }

    std::span<const double> row(int s) const {
        return {probs_.data() + static_cast<std::size_t>(s) * num_actions_,
                static_cast<std::size_t>(num_actions_)};
    }

    int sample_action(int s, RngStream& rng) const { return rng.categorical(row(s)); }

  private:
    int num_states_;
    int num_actions_;
    std::vector<double> probs_;
};

} // namespace mopg
