#include "dilemma/antichain.hpp"

#include <string>

#include "dilemma/error.hpp"

namespace dilemma {

int enumeration_limit(PosetMode mode) { return mode == PosetMode::extended ? 5 : 9; }

void require_enumerable(const Poset& poset, bool force) {
    if (!force && poset.committee_size() > enumeration_limit(poset.mode()))
        throw bounds_exceeded("enumerating all rules of the " + std::string(to_string(poset.mode())) +
                              " poset is limited to n <= " +
                              std::to_string(enumeration_limit(poset.mode())) +
                              " without the force flag");
}

AntichainEnumerator::AntichainEnumerator(const Poset& poset, bool force) : poset_(&poset) {
    require_enumerable(poset, force);
    up_.reserve(poset.size());
    comparable_.reserve(poset.size());
    for (std::size_t i = 0; i < poset.size(); ++i) {
        up_.push_back(poset.up_closure(i));
        comparable_.push_back(up_.back() | poset.down_closure(i));
    }
}

std::vector<std::vector<std::size_t>> enumerate_antichains(const Poset& poset, bool force) {
    std::vector<std::vector<std::size_t>> out;
    AntichainEnumerator(poset, force).for_each(
        [&](const std::vector<std::size_t>& a, const NodeSet&) { out.push_back(a); });
    return out;
}

std::uint64_t count_antichains(const Poset& poset, bool force) {
    std::uint64_t count = 0;
    AntichainEnumerator(poset, force).for_each([&](const auto&, const NodeSet&) { ++count; });
    return count;
}

bool is_antichain(const Poset& poset, std::span<const std::size_t> nodes) {
    for (std::size_t a = 0; a < nodes.size(); ++a) {
        if (nodes[a] >= poset.size()) return false;
        for (std::size_t b = a + 1; b < nodes.size(); ++b)
            if (nodes[a] == nodes[b] || poset.comparable(nodes[a], nodes[b])) return false;
    }
    return true;
}

bool is_upper_set(const Poset& poset, const NodeSet& set) {
    if (set.width() != poset.size()) return false;
    bool closed = true;
    set.for_each([&](std::size_t i) {
        for (auto j : poset.successors(i))
            if (!set.test(j)) closed = false;
    });
    return closed;
}

NodeSet upper_set(const Poset& poset, std::span<const std::size_t> antichain) {
    if (!is_antichain(poset, antichain)) throw structural_error("nodes do not form an antichain");
    NodeSet out = poset.empty_set();
    for (auto i : antichain) out |= poset.up_closure(i);
    return out;
}

std::vector<std::size_t> minimal_elements(const Poset& poset, const NodeSet& set) {
    if (!is_upper_set(poset, set)) throw structural_error("node set is not an upper set");
    std::vector<std::size_t> out;
    set.for_each([&](std::size_t i) {
        for (auto j : poset.predecessors(i))
            if (set.test(j)) return;
        out.push_back(i);
    });
    return out;
}

std::int64_t max_antichain_size(int n, PosetMode mode) {
    require_committee_size(n);
    const std::int64_t m = n;
    switch (mode) {
        case PosetMode::extended: return (m + 3) * (m + 1) / 8;
        case PosetMode::quotient: return (m + 1) / 2;
        case PosetMode::optimality_reduced:
            return static_cast<std::int64_t>(widest_antichain_size(Poset(n, mode)));
    }
    return 0;
}

std::size_t widest_antichain_size(const Poset& poset) {
    const std::size_t N = poset.size();
    std::vector<std::vector<std::size_t>> strictly_above(N);
    for (std::size_t i = 0; i < N; ++i) {
        auto up = poset.up_closure(i);
        up.reset(i);
        strictly_above[i] = up.indices();
    }
    // Kuhn's augmenting paths on the bipartite graph left i -> right j, i < j.
    std::vector<std::ptrdiff_t> match_right(N, -1);
    std::size_t matching = 0;
    std::vector<char> visited;
    auto augment = [&](auto&& self, std::size_t i) -> bool {
        for (auto j : strictly_above[i]) {
            if (visited[j]) continue;
            visited[j] = 1;
            if (match_right[j] < 0 || self(self, static_cast<std::size_t>(match_right[j]))) {
                match_right[j] = static_cast<std::ptrdiff_t>(i);
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < N; ++i) {
        visited.assign(N, 0);
        if (augment(augment, i)) ++matching;
    }
    return N - matching;
}

}  // namespace dilemma
