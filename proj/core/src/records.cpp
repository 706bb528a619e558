#include "dilemma/records.hpp"

#include "dilemma/antichain.hpp"
#include "dilemma/error.hpp"

namespace dilemma {

using nlohmann::json;

json ranking_record(const RankingRequest& request, const std::vector<RankedRule>& rules) {
    json rec;
    rec["mode"] = std::string(to_string(request.mode));
    rec["n"] = request.n;
    rec["w"] = request.w;
    rec["thetas"] = request.profile.thetas();
    rec["rules"] = json::array();
    for (const auto& r : rules) {
        json e;
        e["rank"] = r.rank;
        json ac = json::array();
        if (request.mode == RankingMode::extended) {
            for (const auto& T : r.antichain_tables) ac.push_back({T.x, T.y, T.z, T.t});
        } else {
            for (const auto& c : r.antichain_classes) ac.push_back({c.rho, c.alpha});
        }
        e["antichain"] = std::move(ac);
        if (!r.name.empty()) e["name"] = r.name;
        e["p_fp"] = r.evaluation.p_fp;
        e["p_fn"] = r.evaluation.p_fn;
        e["loss"] = r.evaluation.loss;
        rec["rules"].push_back(std::move(e));
    }
    return rec;
}

DecisionRule rule_from_record(const json& record, const json& entry) {
    const int n = record.at("n").get<int>();
    const auto mode = parse_ranking_mode(record.at("mode").get<std::string>());
    const Poset extended(n, PosetMode::extended);
    const auto& ac = entry.at("antichain");
    if (mode == RankingMode::extended) {
        std::vector<std::size_t> nodes;
        for (const auto& t : ac) {
            const VoteTable T{t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>(), t.at(3).get<int>()};
            const auto i = extended.index_of(T);
            if (!i) throw structural_error("record table " + to_string(T) + " does not fit n");
            nodes.push_back(*i);
        }
        return {extended, upper_set(extended, nodes)};
    }
    const Poset quotient(n, PosetMode::quotient);
    std::vector<std::size_t> nodes;
    for (const auto& c : ac) {
        const auto i = quotient.index_of(TableClass{c.at(0).get<int>(), c.at(1).get<int>()});
        if (!i) throw structural_error("record class does not fit n");
        nodes.push_back(*i);
    }
    const NodeSet classes = upper_set(quotient, nodes);
    NodeSet positives = extended.empty_set();
    for (std::size_t i = 0; i < extended.size(); ++i)
        if (classes.test(*quotient.index_of(extended.node_class(i)))) positives.set(i);
    return {extended, std::move(positives)};
}

json simulation_record(const SimulationSpec& spec, const SimulationResult& result) {
    json rec;
    rec["rng"] = std::string(simulation_rng_id);
    json s;
    s["n"] = spec.n;
    s["state"] = std::string(to_string(spec.state));
    s["thetas"] = spec.profile.thetas();
    s["trials"] = spec.trials;
    s["seed"] = spec.seed;
    if (spec.rule) {
        json ac = json::array();
        for (const auto& T : spec.rule->antichain()) ac.push_back({T.x, T.y, T.z, T.t});
        s["rule_antichain"] = std::move(ac);
    }
    rec["spec"] = std::move(s);
    rec["tables"] = json::array();
    for (std::size_t k = 0; k < result.tables.size(); ++k) {
        const auto& T = result.tables[k];
        rec["tables"].push_back({{"table", {T.x, T.y, T.z, T.t}},
                                 {"count", result.counts[k]},
                                 {"frequency", result.frequencies[k]},
                                 {"stderr", result.stderrs[k]}});
    }
    if (result.positive_count) {
        rec["positive"] = {{"count", *result.positive_count},
                           {"rate", result.positive_rate},
                           {"stderr", result.positive_stderr}};
    }
    return rec;
}

}  // namespace dilemma
