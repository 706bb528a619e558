#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "dilemma/probability.hpp"
#include "dilemma/rule.hpp"

namespace dilemma {

// Trials are split into blocks of block_size; block b draws from
// std::mt19937_64 seeded with splitmix64(seed + (b + 1) * 0x9E3779B97F4A7C15).
// Uniforms are (draw >> 11) * 2^-53. Results do not depend on the worker count.
inline constexpr std::uint64_t simulation_block_size = std::uint64_t{1} << 16;
inline constexpr std::string_view simulation_rng_id = "mt19937_64+splitmix64-block-seeds/65536";

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t block_seed(std::uint64_t seed, std::uint64_t block);

struct SimulationSpec {
    int n = 3;
    StateOfNature state = StateOfNature::PQ;
    CompetenceProfile profile = CompetenceProfile::homogeneous(0.7);
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    std::optional<DecisionRule> rule;
    unsigned threads = 1;
};

struct SimulationResult {
    std::uint64_t trials = 0;
    // Ordered tables in enumerate_ordered_tables order.
    std::vector<VoteTable> tables;
    std::vector<std::uint64_t> counts;
    std::vector<double> frequencies;
    // sqrt(p(1-p)/trials) for each frequency.
    std::vector<double> stderrs;
    std::optional<std::uint64_t> positive_count;
    double positive_rate = 0.0;
    double positive_stderr = 0.0;
};

double binomial_stderr(double p, std::uint64_t trials);

SimulationResult simulate(const SimulationSpec& spec);

}  // namespace dilemma
