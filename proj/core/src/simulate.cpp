#include "dilemma/simulate.hpp"

#include <cmath>
#include <random>
#include <thread>

#include "dilemma/error.hpp"

namespace dilemma {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t block_seed(std::uint64_t seed, std::uint64_t block) {
    return splitmix64(seed + (block + 1) * 0x9E3779B97F4A7C15ull);
}

double binomial_stderr(double p, std::uint64_t trials) {
    return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

namespace {

struct Tally {
    std::vector<std::uint64_t> counts;
    std::uint64_t positives = 0;
};

}  // namespace

SimulationResult simulate(const SimulationSpec& spec) {
    require_committee_size(spec.n);
    spec.profile.require_size(spec.n);
    if (spec.trials < 1) throw invalid_parameter("trials must be at least 1");
    if (spec.rule && spec.rule->committee_size() != spec.n)
        throw structural_error("rule committee size does not match the simulation");

    const int n = spec.n;
    const std::size_t side = static_cast<std::size_t>(n) + 1;
    SimulationResult out;
    out.trials = spec.trials;
    out.tables = enumerate_ordered_tables(n);
    std::vector<std::int32_t> index(side * side * side, -1);
    for (std::size_t k = 0; k < out.tables.size(); ++k) {
        const auto& T = out.tables[k];
        index[(T.x * side + T.y) * side + T.z] = static_cast<std::int32_t>(k);
    }
    std::vector<char> decision(out.tables.size(), 0);
    if (spec.rule)
        for (std::size_t k = 0; k < out.tables.size(); ++k) decision[k] = spec.rule->decides(out.tables[k]);

    std::vector<double> thetas(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) thetas[k] = spec.profile.theta_of(static_cast<std::size_t>(k));
    const bool p_true = spec.state == StateOfNature::PQ || spec.state == StateOfNature::PnQ;
    const bool q_true = spec.state == StateOfNature::PQ || spec.state == StateOfNature::nPQ;

    const std::uint64_t blocks = (spec.trials + simulation_block_size - 1) / simulation_block_size;
    auto run_block = [&](std::uint64_t b, Tally& tally) {
        std::mt19937_64 rng(block_seed(spec.seed, b));
        auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
        const std::uint64_t begin = b * simulation_block_size;
        const std::uint64_t end = std::min(spec.trials, begin + simulation_block_size);
        for (std::uint64_t trial = begin; trial < end; ++trial) {
            int cell[4] = {0, 0, 0, 0};
            for (int k = 0; k < n; ++k) {
                const bool believes_p = (uniform() < thetas[k]) == p_true;
                const bool believes_q = (uniform() < thetas[k]) == q_true;
                ++cell[(believes_p ? 0 : 2) + (believes_q ? 0 : 1)];
            }
            const auto k = static_cast<std::size_t>(index[(cell[0] * side + cell[1]) * side + cell[2]]);
            ++tally.counts[k];
            if (decision[k]) ++tally.positives;
        }
    };

    const unsigned workers = std::max(1u, spec.threads);
    std::vector<Tally> tallies(workers, Tally{std::vector<std::uint64_t>(out.tables.size(), 0), 0});
    auto work = [&](unsigned id) {
        for (std::uint64_t b = id; b < blocks; b += workers) run_block(b, tallies[id]);
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
        for (auto& t : pool) t.join();
    }

    out.counts.assign(out.tables.size(), 0);
    std::uint64_t positives = 0;
    for (const auto& t : tallies) {
        for (std::size_t k = 0; k < out.counts.size(); ++k) out.counts[k] += t.counts[k];
        positives += t.positives;
    }
    const double trials = static_cast<double>(spec.trials);
    for (auto c : out.counts) {
        const double p = static_cast<double>(c) / trials;
        out.frequencies.push_back(p);
        out.stderrs.push_back(binomial_stderr(p, spec.trials));
    }
    if (spec.rule) {
        out.positive_count = positives;
        out.positive_rate = static_cast<double>(positives) / trials;
        out.positive_stderr = binomial_stderr(out.positive_rate, spec.trials);
    }
    return out;
}

}  // namespace dilemma
