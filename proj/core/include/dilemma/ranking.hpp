#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dilemma/probability.hpp"
#include "dilemma/rule.hpp"

namespace dilemma {

// extended: every admissible rule (antichains of the extended poset).
// compact: rules constant on (rho, alpha) classes (antichains of the quotient).
enum class RankingMode { extended, compact };

RankingMode parse_ranking_mode(std::string_view name);
std::string_view to_string(RankingMode mode);

inline constexpr std::size_t default_top_k = 5;

struct RankingRequest {
    int n = 3;
    double w = 0.5;
    CompetenceProfile profile = CompetenceProfile::homogeneous(0.7);
    RankingMode mode = RankingMode::extended;
    std::size_t k = default_top_k;
    bool force = false;
    // Worker count; the ranking does not depend on it.
    unsigned threads = 1;
};

struct RankedRule {
    std::size_t rank = 0;
    DecisionRule rule;
    // Display antichain: minimal tables (extended) or minimal classes (compact).
    std::vector<VoteTable> antichain_tables;
    std::vector<TableClass> antichain_classes;
    RuleEvaluation evaluation;
    // "pb", "cb", "hb" or several joined by '/', empty when not classical.
    std::string name;
};

// Top-k rules by loss over the whole admissible family of the requested mode.
// Ties are broken by smaller p_fp, then by the positive-set bitset compared
// lexicographically in node order.
std::vector<RankedRule> rank_rules(const RankingRequest& request);

RuleEvaluation evaluate_rule(const DecisionRule& rule, double w, const CompetenceProfile& profile);

// Names of the classical rules whose positive set equals the rule's.
std::string classical_name(const DecisionRule& rule);

}  // namespace dilemma
