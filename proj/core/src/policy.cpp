#include "mopg/policy.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mopg {

SoftmaxPolicy::SoftmaxPolicy(int num_states, int num_actions)
    : num_states_(num_states), num_actions_(num_actions),
      theta_(static_cast<std::size_t>(num_states) * num_actions, 0.0) {
    if (num_states < 1 || num_actions < 1) {
        throw std::invalid_argument("SoftmaxPolicy: state/action counts must be >= 1");
    }
}

SoftmaxPolicy SoftmaxPolicy::gaussian_init(int num_states, int num_actions, double stddev,
                                           std::uint64_t seed) {
    SoftmaxPolicy policy(num_states, num_actions);
    RngStream rng = RngStream::derive(seed, 0, StreamPurpose::policy_init, 0);
    for (double& v : policy.theta_) v = rng.normal(0.0, stddev);
    return policy;
}

void SoftmaxPolicy::set_flat(std::span<const double> values) {
    if (static_cast<int>(values.size()) != dim()) {
        throw std::invalid_argument("SoftmaxPolicy::set_flat: dimension mismatch");
    }
    std::copy(values.begin(), values.end(), theta_.begin());
}

void SoftmaxPolicy::action_probabilities_into(int s, std::span<double> out) const {
    const double* row = theta_.data() + static_cast<std::size_t>(s) * num_actions_;
    double max_logit = row[0];
    for (int a = 1; a < num_actions_; ++a) max_logit = std::max(max_logit, row[a]);
    double sum = 0.0;
    for (int a = 0; a < num_actions_; ++a) {
        out[a] = std::exp(row[a] - max_logit);
        sum += out[a];
    }
    const double inv = 1.0 / sum;
    for (int a = 0; a < num_actions_; ++a) out[a] *= inv;
}

std::vector<double> SoftmaxPolicy::action_probabilities(int s) const {
    std::vector<double> probs(num_actions_);
    action_probabilities_into(s, probs);
    return probs;
}

int SoftmaxPolicy::sample_action(int s, RngStream& rng) const {
    std::vector<double> probs(num_actions_);
    action_probabilities_into(s, probs);
    return rng.categorical(probs);
}

void SoftmaxPolicy::score_row_into(int s, int a, std::span<double> out) const {
    action_probabilities_into(s, out);
    for (int ap = 0; ap < num_actions_; ++ap) out[ap] = -out[ap];
    out[a] += 1.0;
}

std::vector<double> SoftmaxPolicy::score(int s, int a) const {
    std::vector<double> dense(static_cast<std::size_t>(dim()), 0.0);
    score_row_into(s, a, std::span<double>(dense).subspan(
                             static_cast<std::size_t>(s) * num_actions_, num_actions_));
    return dense;
}

void SoftmaxPolicy::save_csv(std::ostream& os) const {
    os << "state,action,value\n";
    char buf[64];
    for (int s = 0; s < num_states_; ++s) {
        for (int a = 0; a < num_actions_; ++a) {
            std::snprintf(buf, sizeof(buf), "%.17g", theta(s, a));
            os << s << ',' << a << ',' << buf << '\n';
        }
    }
}

SoftmaxPolicy SoftmaxPolicy::load_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("policy csv: empty input");
    struct Entry { int s, a; double v; };
    std::vector<Entry> entries;
    int max_s = -1, max_a = -1;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        Entry e{};
        char c1 = 0, c2 = 0;
        if (!(ls >> e.s >> c1 >> e.a >> c2 >> e.v) || c1 != ',' || c2 != ',') {
            throw std::invalid_argument("policy csv: malformed line: " + line);
        }
        max_s = std::max(max_s, e.s);
        max_a = std::max(max_a, e.a);
        entries.push_back(e);
    }
    if (entries.empty()) throw std::invalid_argument("policy csv: no entries");
    SoftmaxPolicy policy(max_s + 1, max_a + 1);
    for (const Entry& e : entries) policy.set_theta(e.s, e.a, e.v);
    return policy;
}

PolicyTable::PolicyTable(const SoftmaxPolicy& policy)
    : num_states_(policy.num_states()), num_actions_(policy.num_actions()),
      probs_(static_cast<std::size_t>(policy.dim())) {
    for (int s = 0; s < num_states_; ++s) {
        policy.action_probabilities_into(
            s, std::span<double>(probs_.data() + static_cast<std::size_t>(s) * num_actions_,
                                 static_cast<std::size_t>(num_actions_)));
    }
}

} // namespace mopg
