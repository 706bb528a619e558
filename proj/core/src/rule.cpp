#include "dilemma/rule.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dilemma/antichain.hpp"
#include "dilemma/error.hpp"

namespace dilemma {

DecisionRule::DecisionRule(const Poset& extended, NodeSet positives)
    : n_(extended.committee_size()), positives_(std::move(positives)) {
    if (extended.mode() != PosetMode::extended)
        throw invalid_parameter("decision rules are defined over the extended poset");
    if (positives_.width() != extended.size())
        throw structural_error("positive set width does not match the table count");
    positives_.for_each([&](std::size_t i) { positive_tables_.push_back(extended.node_table(i)); });
    admissible_ = is_upper_set(extended, positives_);
    if (admissible_) {
        for (auto i : minimal_elements(extended, positives_)) antichain_.push_back(extended.node_table(i));
    } else {
        // Minimal elements of the positive set as a subposet.
        positives_.for_each([&](std::size_t i) {
            bool minimal = true;
            positives_.for_each([&](std::size_t j) {
                if (j != i && extended.leq(j, i)) minimal = false;
            });
            if (minimal) antichain_.push_back(extended.node_table(i));
        });
    }
}

DecisionRule DecisionRule::none(const Poset& extended) { return {extended, extended.empty_set()}; }

DecisionRule DecisionRule::all(const Poset& extended) {
    NodeSet s = extended.empty_set();
    s.fill();
    return {extended, std::move(s)};
}

DecisionRule DecisionRule::from_tables(const Poset& extended, std::span<const VoteTable> tables) {
    NodeSet s = extended.empty_set();
    for (const auto& T : tables) {
        const auto i = extended.index_of(T);
        if (!i) throw invalid_parameter("table " + to_string(T) + " does not match the committee size");
        s.set(*i);
    }
    return {extended, std::move(s)};
}

DecisionRule DecisionRule::from_classes(const Poset& extended, std::span<const TableClass> classes) {
    const std::set<TableClass> wanted(classes.begin(), classes.end());
    NodeSet s = extended.empty_set();
    for (std::size_t i = 0; i < extended.size(); ++i)
        if (wanted.count(extended.node_class(i))) s.set(i);
    return {extended, std::move(s)};
}

DecisionRule DecisionRule::from_predicate(const Poset& extended,
                                          const std::function<bool(const VoteTable&)>& decides_c) {
    NodeSet s = extended.empty_set();
    for (std::size_t i = 0; i < extended.size(); ++i) {
        const auto& T = extended.node_table(i);
        const bool v = decides_c(T);
        if (v != decides_c(transpose(T)))
            throw structural_error("rule predicate differs on transposed tables " + to_string(T));
        if (v) s.set(i);
    }
    return {extended, std::move(s)};
}

bool DecisionRule::decides(const VoteTable& T) const {
    if (T.size() != n_) throw structural_error("table size does not match the rule's committee size");
    const auto C = canonical(T);
    return std::binary_search(positive_tables_.begin(), positive_tables_.end(), C,
                              [](const VoteTable& a, const VoteTable& b) {
                                  // positive_tables_ follows node order: rho desc, x desc, y desc
                                  if (a.rho() != b.rho()) return a.rho() > b.rho();
                                  if (a.x != b.x) return a.x > b.x;
                                  return a.y > b.y;
                              });
}

std::vector<TableClass> DecisionRule::positive_classes() const {
    std::set<TableClass> s;
    for (const auto& T : positive_tables_) s.insert(table_class(T));
    return {s.begin(), s.end()};
}

bool DecisionRule::class_constant() const {
    std::map<TableClass, int> seen;  // bit 1: some positive, bit 2: some null
    for (const auto& T : enumerate_tables(n_)) seen[table_class(T)] |= decides(T) ? 1 : 2;
    return std::all_of(seen.begin(), seen.end(), [](const auto& kv) { return kv.second != 3; });
}

std::vector<TableClass> class_antichain(const DecisionRule& rule, const Poset& quotient) {
    if (quotient.mode() == PosetMode::extended || quotient.committee_size() != rule.committee_size())
        throw invalid_parameter("class antichains need a quotient poset of the same committee size");
    if (!rule.class_constant()) throw structural_error("rule is not constant on (rho, alpha) classes");
    NodeSet s = quotient.empty_set();
    for (const auto& c : rule.positive_classes()) s.set(*quotient.index_of(c));
    std::vector<TableClass> out;
    for (auto i : minimal_elements(quotient, s)) out.push_back(quotient.node_class(i));
    return out;
}

}  // namespace dilemma
