#include "dilemma/probability.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include <boost/multiprecision/cpp_int.hpp>

#include "dilemma/error.hpp"

namespace dilemma {

StateOfNature parse_state(std::string_view name) {
    if (name == "PQ") return StateOfNature::PQ;
    if (name == "PnQ") return StateOfNature::PnQ;
    if (name == "nPQ") return StateOfNature::nPQ;
    if (name == "nPnQ") return StateOfNature::nPnQ;
    throw invalid_parameter("unknown state of nature '" + std::string(name) +
                            "' (expected PQ, PnQ, nPQ or nPnQ)");
}

std::string_view to_string(StateOfNature s) {
    switch (s) {
        case StateOfNature::PQ: return "PQ";
        case StateOfNature::PnQ: return "PnQ";
        case StateOfNature::nPQ: return "nPQ";
        case StateOfNature::nPnQ: return "nPnQ";
    }
    return "?";
}

namespace {

void require_probability(double theta) {
    if (!(theta >= 0.0 && theta <= 1.0))
        throw invalid_parameter("competence must lie in [0, 1], got " + std::to_string(theta));
}

bool p_true(StateOfNature s) { return s == StateOfNature::PQ || s == StateOfNature::PnQ; }
bool q_true(StateOfNature s) { return s == StateOfNature::PQ || s == StateOfNature::nPQ; }

}  // namespace

CompetenceProfile::CompetenceProfile(bool homogeneous, std::vector<double> thetas)
    : homogeneous_(homogeneous), thetas_(std::move(thetas)) {
    if (thetas_.empty()) throw invalid_parameter("competence profile is empty");
    for (double t : thetas_) require_probability(t);
}

CompetenceProfile CompetenceProfile::homogeneous(double theta) { return {true, {theta}}; }

CompetenceProfile CompetenceProfile::per_voter(std::vector<double> thetas) {
    return {false, std::move(thetas)};
}

double CompetenceProfile::theta() const {
    if (!all_equal()) throw invalid_parameter("competence profile is not homogeneous");
    return thetas_[0];
}

bool CompetenceProfile::all_equal() const {
    return std::all_of(thetas_.begin(), thetas_.end(), [&](double t) { return t == thetas_[0]; });
}

void CompetenceProfile::require_size(int n) const {
    if (!homogeneous_ && static_cast<int>(thetas_.size()) != n)
        throw structural_error("profile has " + std::to_string(thetas_.size()) +
                               " competences for a committee of " + std::to_string(n));
}

void NegativePrior::validate() const {
    if (!(pnq >= 0 && npq >= 0 && npnq >= 0) || std::abs(pnq + npq + npnq - 1.0) > 1e-12)
        throw invalid_parameter("negative prior must be non-negative and sum to 1");
}

UnitLaw single_vote_law(StateOfNature state, double theta) {
    require_probability(theta);
    const double p = p_true(state) ? theta : 1.0 - theta;  // believes P
    const double q = q_true(state) ? theta : 1.0 - theta;  // believes Q
    return {p * q, p * (1.0 - q), (1.0 - p) * q, (1.0 - p) * (1.0 - q)};
}

namespace {

using boost::multiprecision::cpp_int;

// Rows 0..n of Pascal's triangle.
std::vector<std::vector<cpp_int>> pascal(int n) {
    std::vector<std::vector<cpp_int>> rows(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        auto& row = rows[m];
        row.assign(static_cast<std::size_t>(m) + 1, 1);
        for (int k = 1; k < m; ++k) row[k] = rows[m - 1][k - 1] + rows[m - 1][k];
    }
    return rows;
}

double multinomial(const VoteTable& T, const std::vector<std::vector<cpp_int>>& c) {
    const int n = T.size();
    const cpp_int m = c[n][T.x] * c[n - T.x][T.y] * c[n - T.x - T.y][T.z];
    return m.convert_to<double>();
}

}  // namespace

double multinomial(const VoteTable& T) {
    require_table(T);
    return multinomial(T, pascal(T.size()));
}

TableLaw::TableLaw(int n, StateOfNature state, const CompetenceProfile& profile) : n_(n), state_(state) {
    require_committee_size(n);
    profile.require_size(n);
    const auto tables = enumerate_ordered_tables(n);
    const std::size_t side = static_cast<std::size_t>(n) + 1;
    index_.assign(side * side * side, -1);
    for (std::size_t k = 0; k < tables.size(); ++k) index_[slot(tables[k])] = static_cast<std::int32_t>(k);
    probs_.assign(tables.size(), 0.0);

    if (profile.is_homogeneous()) {
        const double th = profile.theta();
        const auto binom = pascal(n);
        std::vector<double> right_pow(2 * side), wrong_pow(2 * side);
        for (std::size_t e = 0; e < right_pow.size(); ++e) {
            right_pow[e] = std::pow(th, static_cast<double>(e));
            wrong_pow[e] = std::pow(1.0 - th, static_cast<double>(e));
        }
        for (std::size_t k = 0; k < tables.size(); ++k) {
            const auto [x, y, z, t] = tables[k];
            int right = 0, wrong = 0;
            switch (state) {
                case StateOfNature::PQ: right = 2 * x + y + z; wrong = y + z + 2 * t; break;
                case StateOfNature::PnQ: right = x + 2 * y + t; wrong = x + 2 * z + t; break;
                case StateOfNature::nPQ: right = x + 2 * z + t; wrong = x + 2 * y + t; break;
                case StateOfNature::nPnQ: right = y + z + 2 * t; wrong = 2 * x + y + z; break;
            }
            probs_[k] = multinomial(tables[k], binom) * right_pow[right] * wrong_pow[wrong];
        }
        return;
    }

    // Fold voters one at a time; cur holds the law of the partial table
    // (x,y,z) of the first `voters` votes, t implied.
    std::vector<double> cur(side * side * side, 0.0), next(cur.size());
    auto at = [side](int x, int y, int z) { return (x * side + y) * side + z; };
    cur[at(0, 0, 0)] = 1.0;
    for (int voters = 0; voters < n; ++voters) {
        const auto law = single_vote_law(state, profile.theta_of(static_cast<std::size_t>(voters)));
        std::fill(next.begin(), next.end(), 0.0);
        for (int x = 0; x <= voters; ++x)
            for (int y = 0; x + y <= voters; ++y)
                for (int z = 0; x + y + z <= voters; ++z) {
                    const double p = cur[at(x, y, z)];
                    if (p == 0.0) continue;
                    next[at(x + 1, y, z)] += p * law.x;
                    next[at(x, y + 1, z)] += p * law.y;
                    next[at(x, y, z + 1)] += p * law.z;
                    next[at(x, y, z)] += p * law.t;
                }
        cur.swap(next);
    }
    for (std::size_t k = 0; k < tables.size(); ++k) {
        const auto& T = tables[k];
        probs_[k] = cur[at(T.x, T.y, T.z)];
    }
}

std::size_t TableLaw::slot(const VoteTable& T) const {
    const std::size_t side = static_cast<std::size_t>(n_) + 1;
    return (T.x * side + T.y) * side + T.z;
}

double TableLaw::operator()(const VoteTable& T) const {
    if (T.x < 0 || T.y < 0 || T.z < 0 || T.t < 0 || T.size() != n_)
        throw structural_error("table " + to_string(T) + " does not have size " + std::to_string(n_));
    return probs_[static_cast<std::size_t>(index_[slot(T)])];
}

std::vector<double> TableLaw::node_masses(const Poset& extended) const {
    if (extended.mode() != PosetMode::extended || extended.committee_size() != n_)
        throw structural_error("node masses need the extended poset of the same committee size");
    std::vector<double> out(extended.size());
    for (std::size_t i = 0; i < extended.size(); ++i) {
        const auto& T = extended.node_table(i);
        out[i] = (*this)(T);
        if (T.y != T.z) out[i] += (*this)(transpose(T));
    }
    return out;
}

double table_prob(const VoteTable& T, StateOfNature state, const CompetenceProfile& profile) {
    require_table(T);
    return TableLaw(T.size(), state, profile)(T);
}

std::shared_ptr<const TableLaw> LawCache::get(int n, StateOfNature state, const CompetenceProfile& profile) {
    Key key{n, state, profile};
    {
        std::shared_lock lock(mutex_);
        if (auto it = laws_.find(key); it != laws_.end()) return it->second;
    }
    auto law = std::make_shared<const TableLaw>(n, state, profile);
    std::unique_lock lock(mutex_);
    return laws_.emplace(std::move(key), std::move(law)).first->second;
}

std::size_t LawCache::size() const {
    std::shared_lock lock(mutex_);
    return laws_.size();
}

RuleEvaluator::RuleEvaluator(const Poset& extended, const CompetenceProfile& profile, LawCache* cache)
    : poset_(&extended) {
    if (extended.mode() != PosetMode::extended)
        throw invalid_parameter("rule evaluation runs over the extended poset");
    const int n = extended.committee_size();
    profile.require_size(n);
    for (auto s : all_states) {
        if (cache) {
            masses_[static_cast<int>(s)] = cache->get(n, s, profile)->node_masses(extended);
        } else {
            masses_[static_cast<int>(s)] = TableLaw(n, s, profile).node_masses(extended);
        }
    }
}

double RuleEvaluator::positive_mass(const NodeSet& positives, StateOfNature s) const {
    const auto& m = masses(s);
    double sum = 0.0;
    positives.for_each([&](std::size_t i) { sum += m[i]; });
    return sum;
}

double RuleEvaluator::null_mass(const NodeSet& positives, StateOfNature s) const {
    const auto& m = masses(s);
    double sum = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (!positives.test(i)) sum += m[i];
    return sum;
}

double RuleEvaluator::fp_bayes(const NodeSet& positives, const NegativePrior& prior) const {
    prior.validate();
    const double tn = prior.pnq * null_mass(positives, StateOfNature::PnQ) +
                      prior.npq * null_mass(positives, StateOfNature::nPQ) +
                      prior.npnq * null_mass(positives, StateOfNature::nPnQ);
    return 1.0 - tn;
}

RuleEvaluation RuleEvaluator::evaluate(const NodeSet& positives, double w) const {
    require_weight(w);
    RuleEvaluation e;
    e.w = w;
    e.p_fp = fp(positives);
    e.p_fn = fn(positives);
    e.loss = w * e.p_fp + (1.0 - w) * e.p_fn;
    return e;
}

void require_weight(double w) {
    if (!(w > 0.0 && w < 1.0)) throw invalid_parameter("weight w must lie in (0, 1), got " + std::to_string(w));
}

double rule_fp(const DecisionRule& rule, const CompetenceProfile& profile) {
    const Poset extended(rule.committee_size(), PosetMode::extended);
    return RuleEvaluator(extended, profile).fp(rule.positives());
}

double rule_fn(const DecisionRule& rule, const CompetenceProfile& profile) {
    const Poset extended(rule.committee_size(), PosetMode::extended);
    return RuleEvaluator(extended, profile).fn(rule.positives());
}

double rule_fp_bayes(const DecisionRule& rule, const CompetenceProfile& profile, const NegativePrior& prior) {
    const Poset extended(rule.committee_size(), PosetMode::extended);
    return RuleEvaluator(extended, profile).fp_bayes(rule.positives(), prior);
}

RuleEvaluation loss(const DecisionRule& rule, double w, const CompetenceProfile& profile) {
    require_weight(w);
    const Poset extended(rule.committee_size(), PosetMode::extended);
    return RuleEvaluator(extended, profile).evaluate(rule.positives(), w);
}

}  // namespace dilemma
