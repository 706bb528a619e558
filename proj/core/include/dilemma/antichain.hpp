#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dilemma/node_set.hpp"
#include "dilemma/poset.hpp"

namespace dilemma {

// Largest committee size for which full antichain enumeration runs without a
// force flag.
int enumeration_limit(PosetMode mode);

// Throws bounds_exceeded when the poset is above enumeration_limit and force
// is not set.
void require_enumerable(const Poset& poset, bool force);

// Streams every antichain of a poset exactly once, together with the upper set
// it generates. Antichains are emitted as ascending index lists: first the
// empty antichain, then, for each node index `first` in ascending order, all
// antichains whose least index is `first` in depth-first order. Each
// `first` block is independent, so workers may enumerate disjoint blocks.
class AntichainEnumerator {
public:
    explicit AntichainEnumerator(const Poset& poset, bool force = false);

    const Poset& poset() const { return *poset_; }
    std::size_t partition_count() const { return poset_->size(); }

    // f(const std::vector<std::size_t>& antichain, const NodeSet& upper_set)
    template <class F>
    void for_each(F&& f) const {
        visit_empty(f);
        for (std::size_t first = 0; first < poset_->size(); ++first) for_each_from(first, f);
    }

    template <class F>
    void visit_empty(F&& f) const {
        const std::vector<std::size_t> none;
        f(none, NodeSet(poset_->size()));
    }

    template <class F>
    void for_each_from(std::size_t first, F&& f) const {
        std::vector<std::size_t> chosen{first};
        extend(first + 1, chosen, comparable_[first], up_[first], f);
    }

private:
    template <class F>
    void extend(std::size_t start, std::vector<std::size_t>& chosen, const NodeSet& blocked,
                const NodeSet& upper, F& f) const {
        f(static_cast<const std::vector<std::size_t>&>(chosen), upper);
        for (std::size_t i = start; i < poset_->size(); ++i) {
            if (blocked.test(i)) continue;
            chosen.push_back(i);
            extend(i + 1, chosen, blocked | comparable_[i], upper | up_[i], f);
            chosen.pop_back();
        }
    }

    const Poset* poset_;
    std::vector<NodeSet> up_;
    std::vector<NodeSet> comparable_;
};

std::vector<std::vector<std::size_t>> enumerate_antichains(const Poset& poset, bool force = false);
std::uint64_t count_antichains(const Poset& poset, bool force = false);

bool is_antichain(const Poset& poset, std::span<const std::size_t> nodes);
bool is_upper_set(const Poset& poset, const NodeSet& set);

// Throws structural_error if the input is not an antichain.
NodeSet upper_set(const Poset& poset, std::span<const std::size_t> antichain);
// Throws structural_error if the input is not an upper set.
std::vector<std::size_t> minimal_elements(const Poset& poset, const NodeSet& set);

// Closed forms: (n+3)(n+1)/8 for the extended poset, (n+1)/2 for the quotient.
// The optimality-reduced poset has no closed form here and is computed with
// widest_antichain_size.
std::int64_t max_antichain_size(int n, PosetMode mode);

// Width of a finite poset by Dilworth's theorem: node count minus a maximum
// matching of the strict comparability relation.
std::size_t widest_antichain_size(const Poset& poset);

}  // namespace dilemma
