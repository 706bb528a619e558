#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "dilemma/node_set.hpp"
#include "dilemma/poset.hpp"
#include "dilemma/rule.hpp"
#include "dilemma/table.hpp"

namespace dilemma {

enum class StateOfNature { PQ, PnQ, nPQ, nPnQ };

inline constexpr std::array<StateOfNature, 4> all_states = {
    StateOfNature::PQ, StateOfNature::PnQ, StateOfNature::nPQ, StateOfNature::nPnQ};

StateOfNature parse_state(std::string_view name);
std::string_view to_string(StateOfNature s);

// Competence of each voter: one shared theta, or one theta per voter.
// Values must lie in [0, 1]; the endpoints are degenerate but well-defined laws.
class CompetenceProfile {
public:
    static CompetenceProfile homogeneous(double theta);
    static CompetenceProfile per_voter(std::vector<double> thetas);

    bool is_homogeneous() const { return homogeneous_; }
    // Shared value; for per-voter profiles throws unless all values coincide.
    double theta() const;
    // Per-voter values; a homogeneous profile reports its single value.
    const std::vector<double>& thetas() const { return thetas_; }
    double theta_of(std::size_t voter) const { return homogeneous_ ? thetas_[0] : thetas_.at(voter); }
    bool all_equal() const;

    // Throws structural_error when a per-voter profile does not have n entries.
    void require_size(int n) const;

    friend bool operator<(const CompetenceProfile& a, const CompetenceProfile& b) {
        return std::tie(a.homogeneous_, a.thetas_) < std::tie(b.homogeneous_, b.thetas_);
    }
    friend bool operator==(const CompetenceProfile&, const CompetenceProfile&) = default;

private:
    CompetenceProfile(bool homogeneous, std::vector<double> thetas);

    bool homogeneous_ = true;
    std::vector<double> thetas_;
};

// Prior weights on the three negative states.
struct NegativePrior {
    double pnq = 1.0;
    double npq = 0.0;
    double npnq = 0.0;

    void validate() const;
};

struct RuleEvaluation {
    double p_fp = 0.0;
    double p_fn = 0.0;
    double loss = 0.0;
    double w = 0.5;
};

// Law of one voter's table (mass on the unit tables x, y, z, t).
struct UnitLaw {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double t = 0.0;
};

UnitLaw single_vote_law(StateOfNature state, double theta);

// Exact n!/(x!y!z!t!) by integer recurrence, rounded to double once.
double multinomial(const VoteTable& T);

// Probabilities of every ordered table of size n under one state.
class TableLaw {
public:
    TableLaw(int n, StateOfNature state, const CompetenceProfile& profile);

    int committee_size() const { return n_; }
    StateOfNature state() const { return state_; }

    // Probability of the ordered tuple (x,y,z,t); transposes are distinct
    // outcomes.
    double operator()(const VoteTable& T) const;
    // Indexed like enumerate_ordered_tables(n).
    const std::vector<double>& ordered() const { return probs_; }

    // Mass of each extended-poset node: P(T) + P(transpose T) when y != z.
    std::vector<double> node_masses(const Poset& extended) const;

private:
    std::size_t slot(const VoteTable& T) const;

    int n_;
    StateOfNature state_;
    std::vector<std::int32_t> index_;
    std::vector<double> probs_;
};

double table_prob(const VoteTable& T, StateOfNature state, const CompetenceProfile& profile);

// Memo of table laws keyed by (n, state, profile). Safe under concurrent
// lookup and insertion.
class LawCache {
public:
    std::shared_ptr<const TableLaw> get(int n, StateOfNature state, const CompetenceProfile& profile);
    std::size_t size() const;

private:
    using Key = std::tuple<int, StateOfNature, CompetenceProfile>;
    mutable std::shared_mutex mutex_;
    std::map<Key, std::shared_ptr<const TableLaw>> laws_;
};

// Per-node masses for the four states plus rule-level sums over node sets.
// Sums always run over node indices in ascending order, so the same node set
// gives bit-identical results however it was produced.
class RuleEvaluator {
public:
    RuleEvaluator(const Poset& extended, const CompetenceProfile& profile, LawCache* cache = nullptr);

    const Poset& poset() const { return *poset_; }
    const std::vector<double>& masses(StateOfNature s) const { return masses_[static_cast<int>(s)]; }

    // Mass of the positive set under a state.
    double positive_mass(const NodeSet& positives, StateOfNature s) const;
    // Mass of the null set under a state.
    double null_mass(const NodeSet& positives, StateOfNature s) const;

    double fp(const NodeSet& positives) const { return positive_mass(positives, StateOfNature::PnQ); }
    double fn(const NodeSet& positives) const { return null_mass(positives, StateOfNature::PQ); }
    double fp_bayes(const NodeSet& positives, const NegativePrior& prior) const;
    RuleEvaluation evaluate(const NodeSet& positives, double w) const;

private:
    const Poset* poset_;
    std::array<std::vector<double>, 4> masses_;
};

void require_weight(double w);

double rule_fp(const DecisionRule& rule, const CompetenceProfile& profile);
double rule_fn(const DecisionRule& rule, const CompetenceProfile& profile);
double rule_fp_bayes(const DecisionRule& rule, const CompetenceProfile& profile, const NegativePrior& prior);
RuleEvaluation loss(const DecisionRule& rule, double w, const CompetenceProfile& profile);

}  // namespace dilemma
