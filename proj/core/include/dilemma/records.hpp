#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "dilemma/ranking.hpp"
#include "dilemma/simulate.hpp"

namespace dilemma {

// { mode, n, w, thetas[], rules: [ { rank, antichain, name?, p_fp, p_fn, loss } ] }
// antichain is [[x,y,z,t]...] in extended mode and [[rho,alpha]...] in compact
// mode. Doubles are written in shortest round-trip form.
nlohmann::json ranking_record(const RankingRequest& request, const std::vector<RankedRule>& rules);

// Rebuilds the rule of one entry of a ranking record from its antichain.
DecisionRule rule_from_record(const nlohmann::json& record, const nlohmann::json& entry);

// Spec echo, rng identifier, per-table counts, frequencies and standard errors.
nlohmann::json simulation_record(const SimulationSpec& spec, const SimulationResult& result);

}  // namespace dilemma
