#pragma once

#include <functional>
#include <span>
#include <vector>

#include "dilemma/node_set.hpp"
#include "dilemma/poset.hpp"
#include "dilemma/table.hpp"

namespace dilemma {

// A decision rule stored as its set of positive canonical tables (bitset over
// the node order of the extended poset). Transposed tables share a node, so
// transpose symmetry holds by construction. The antichain is the set of
// minimal positive tables; admissible means the positives form an upper set.
class DecisionRule {
public:
    DecisionRule(const Poset& extended, NodeSet positives);

    static DecisionRule none(const Poset& extended);
    static DecisionRule all(const Poset& extended);
    // Exactly the listed tables (and their transposes) are positive; no
    // upward closure is taken.
    static DecisionRule from_tables(const Poset& extended, std::span<const VoteTable> tables);
    // Every table whose class is listed is positive.
    static DecisionRule from_classes(const Poset& extended, std::span<const TableClass> classes);
    // Throws structural_error when the predicate disagrees on a transposed pair.
    static DecisionRule from_predicate(const Poset& extended,
                                       const std::function<bool(const VoteTable&)>& decides_c);

    int committee_size() const { return n_; }
    const NodeSet& positives() const { return positives_; }
    const std::vector<VoteTable>& antichain() const { return antichain_; }
    bool admissible() const { return admissible_; }

    // True when the rule decides C on T.
    bool decides(const VoteTable& T) const;

    std::vector<VoteTable> positive_tables() const { return positive_tables_; }
    std::vector<TableClass> positive_classes() const;

    // Every class is either entirely positive or entirely null.
    bool class_constant() const;

    // Rule order: the positive set of *this is contained in that of other.
    bool precedes(const DecisionRule& other) const { return positives_.is_subset_of(other.positives_); }

    friend bool operator==(const DecisionRule& a, const DecisionRule& b) {
        return a.n_ == b.n_ && a.positives_ == b.positives_;
    }

private:
    int n_;
    NodeSet positives_;
    std::vector<VoteTable> positive_tables_;
    std::vector<VoteTable> antichain_;
    bool admissible_ = false;
};

// Minimal classes of a class-constant admissible rule in the quotient poset.
std::vector<TableClass> class_antichain(const DecisionRule& rule, const Poset& quotient);

}  // namespace dilemma
