#include "dilemma/ranking.hpp"

#include <algorithm>
#include <thread>

#include "dilemma/antichain.hpp"
#include "dilemma/error.hpp"
#include "dilemma/optimal.hpp"

namespace dilemma {

RankingMode parse_ranking_mode(std::string_view name) {
    if (name == "extended") return RankingMode::extended;
    if (name == "compact") return RankingMode::compact;
    throw invalid_parameter("unknown ranking mode '" + std::string(name) + "' (expected extended or compact)");
}

std::string_view to_string(RankingMode mode) {
    return mode == RankingMode::extended ? "extended" : "compact";
}

namespace {

struct Candidate {
    double loss;
    double p_fp;
    double p_fn;
    NodeSet positives;
    std::vector<std::size_t> antichain;  // node indices of the enumerated poset
};

bool better(const Candidate& a, const Candidate& b) {
    if (a.loss != b.loss) return a.loss < b.loss;
    if (a.p_fp != b.p_fp) return a.p_fp < b.p_fp;
    return lexicographic_less(a.positives, b.positives);
}

// Bounded collection of the k best candidates seen so far.
class TopK {
public:
    explicit TopK(std::size_t k) : k_(k) {}

    void offer(Candidate&& c) {
        if (items_.size() == k_ && !better(c, items_.back())) return;
        auto pos = std::upper_bound(items_.begin(), items_.end(), c, better);
        items_.insert(pos, std::move(c));
        if (items_.size() > k_) items_.pop_back();
    }

    void merge(TopK&& other) {
        for (auto& c : other.items_) offer(std::move(c));
    }

    std::vector<Candidate>& items() { return items_; }

private:
    std::size_t k_;
    std::vector<Candidate> items_;
};

std::string names_for(const NodeSet& positives, const std::vector<std::pair<std::string_view, NodeSet>>& classical) {
    std::string out;
    for (const auto& [name, set] : classical) {
        if (set == positives) {
            if (!out.empty()) out += '/';
            out += name;
        }
    }
    return out;
}

std::vector<std::pair<std::string_view, NodeSet>> classical_sets(const Poset& extended) {
    std::vector<std::pair<std::string_view, NodeSet>> out;
    for (auto kind : {ClassicalRule::premiss_based, ClassicalRule::conclusion_based, ClassicalRule::path_based})
        out.emplace_back(short_name(kind), classical_rule(kind, extended).positives());
    return out;
}

}  // namespace

std::vector<RankedRule> rank_rules(const RankingRequest& req) {
    require_committee_size(req.n);
    require_weight(req.w);
    req.profile.require_size(req.n);
    if (req.k < 1) throw invalid_parameter("k must be at least 1");

    const Poset extended(req.n, PosetMode::extended);
    const Poset quotient(req.n, PosetMode::quotient);
    const Poset& enumerated = req.mode == RankingMode::extended ? extended : quotient;
    const AntichainEnumerator enumerator(enumerated, req.force);
    const RuleEvaluator evaluator(extended, req.profile);

    // Extended-node members of each enumerated node.
    std::vector<NodeSet> members(enumerated.size(), extended.empty_set());
    for (std::size_t i = 0; i < extended.size(); ++i) {
        if (req.mode == RankingMode::extended) {
            members[i].set(i);
        } else {
            members[*quotient.index_of(extended.node_class(i))].set(i);
        }
    }

    auto consider = [&](TopK& top, const std::vector<std::size_t>& antichain, const NodeSet& upper) {
        NodeSet positives = extended.empty_set();
        if (req.mode == RankingMode::extended) {
            positives = upper;
        } else {
            upper.for_each([&](std::size_t c) { positives |= members[c]; });
        }
        const auto e = evaluator.evaluate(positives, req.w);
        top.offer({e.loss, e.p_fp, e.p_fn, std::move(positives), antichain});
    };

    const unsigned workers = std::max(1u, req.threads);
    std::vector<TopK> partial(workers, TopK(req.k));
    auto work = [&](unsigned id) {
        if (id == 0)
            enumerator.visit_empty([&](const auto& a, const NodeSet& u) { consider(partial[0], a, u); });
        for (std::size_t first = id; first < enumerator.partition_count(); first += workers)
            enumerator.for_each_from(first, [&](const auto& a, const NodeSet& u) { consider(partial[id], a, u); });
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
        for (auto& t : pool) t.join();
    }
    for (unsigned id = 1; id < workers; ++id) partial[0].merge(std::move(partial[id]));

    const auto classical = classical_sets(extended);
    std::vector<RankedRule> out;
    std::size_t rank = 0;
    for (auto& c : partial[0].items()) {
        RankedRule r{++rank, DecisionRule(extended, c.positives), {}, {}, {}, {}};
        if (req.mode == RankingMode::extended) {
            r.antichain_tables = r.rule.antichain();
        } else {
            for (auto i : c.antichain) r.antichain_classes.push_back(quotient.node_class(i));
        }
        r.evaluation = {c.p_fp, c.p_fn, c.loss, req.w};
        r.name = names_for(c.positives, classical);
        out.push_back(std::move(r));
    }
    return out;
}

RuleEvaluation evaluate_rule(const DecisionRule& rule, double w, const CompetenceProfile& profile) {
    return loss(rule, w, profile);
}

std::string classical_name(const DecisionRule& rule) {
    const Poset extended(rule.committee_size(), PosetMode::extended);
    return names_for(rule.positives(), classical_sets(extended));
}

}  // namespace dilemma
