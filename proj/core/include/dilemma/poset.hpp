#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dilemma/node_set.hpp"
#include "dilemma/table.hpp"

namespace dilemma {

// extended: canonical tables (transposes identified) under the order generated
//   by moving one vote from t to y or z, or from y or z to x.
// quotient: (rho, alpha) classes with covers (rho,alpha) < (rho+1, alpha-+1).
// optimality_reduced: classes with the extra relations (rho,alpha) < (rho,alpha-2)
//   that hold for every optimal rule.
enum class PosetMode { extended, quotient, optimality_reduced };

PosetMode parse_poset_mode(std::string_view name);
std::string_view to_string(PosetMode mode);

struct Cover {
    std::size_t lower = 0;
    std::size_t upper = 0;

    friend bool operator==(const Cover&, const Cover&) = default;
};

// Immutable after construction; safe to share across threads.
class Poset {
public:
    // Committee sizes up to this bound get a precomputed reachability bitmap;
    // larger posets answer comparability queries by graph search.
    static constexpr int reachability_bitmap_limit = 9;

    Poset(int n, PosetMode mode);

    int committee_size() const { return n_; }
    PosetMode mode() const { return mode_; }
    std::size_t size() const { return classes_.size(); }
    bool has_tables() const { return mode_ == PosetMode::extended; }

    // For extended posets the class of the node's canonical table.
    const TableClass& node_class(std::size_t i) const { return classes_[i]; }
    // Extended posets only.
    const VoteTable& node_table(std::size_t i) const;
    std::string label(std::size_t i) const;

    // rho for extended and quotient posets; height above the minimum for the
    // optimality-reduced poset, where rho is not a rank function.
    int rank(std::size_t i) const { return rank_[i]; }

    const std::vector<Cover>& covers() const { return covers_; }
    const std::vector<std::size_t>& successors(std::size_t i) const { return succ_[i]; }
    const std::vector<std::size_t>& predecessors(std::size_t i) const { return pred_[i]; }

    std::size_t bottom() const { return bottom_; }
    std::size_t top() const { return top_; }

    // Transposed tables map to the same node.
    std::optional<std::size_t> index_of(const VoteTable& T) const;
    std::optional<std::size_t> index_of(const TableClass& c) const;

    bool leq(std::size_t i, std::size_t j) const;
    bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }

    // {j : i <= j} and {j : j <= i}; both include i.
    NodeSet up_closure(std::size_t i) const;
    NodeSet down_closure(std::size_t i) const;

    NodeSet empty_set() const { return NodeSet(size()); }

private:
    void add_cover(std::size_t lower, std::size_t upper);
    void finalize();
    NodeSet search(std::size_t from, bool upward) const;

    int n_;
    PosetMode mode_;
    std::vector<TableClass> classes_;
    std::vector<VoteTable> tables_;
    std::vector<int> rank_;
    std::vector<Cover> covers_;
    std::vector<std::vector<std::size_t>> succ_;
    std::vector<std::vector<std::size_t>> pred_;
    std::vector<std::int32_t> lookup_;
    std::vector<NodeSet> up_;
    std::vector<NodeSet> down_;
    std::size_t bottom_ = 0;
    std::size_t top_ = 0;
};

Poset build_poset(int n, PosetMode mode);

// Graphviz DOT: one node per table or class, one edge per cover, nodes of the
// same rank grouped with rank=same.
void write_dot(const Poset& poset, std::ostream& os);

}  // namespace dilemma
