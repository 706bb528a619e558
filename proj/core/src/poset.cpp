#include "dilemma/poset.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "dilemma/error.hpp"

namespace dilemma {

PosetMode parse_poset_mode(std::string_view name) {
    if (name == "extended") return PosetMode::extended;
    if (name == "quotient") return PosetMode::quotient;
    if (name == "optimality_reduced" || name == "reduced") return PosetMode::optimality_reduced;
    throw invalid_parameter("unknown poset mode '" + std::string(name) + "'");
}

std::string_view to_string(PosetMode mode) {
    switch (mode) {
        case PosetMode::extended: return "extended";
        case PosetMode::quotient: return "quotient";
        case PosetMode::optimality_reduced: return "optimality_reduced";
    }
    return "?";
}

namespace {

bool valid_class(int rho, int alpha, int n) {
    const int abs_rho = rho < 0 ? -rho : rho;
    return alpha >= 0 && abs_rho + alpha <= n;
}

}  // namespace

Poset::Poset(int n, PosetMode mode) : n_(n), mode_(mode) {
    require_committee_size(n);
    const std::size_t side = static_cast<std::size_t>(n) + 1;

    if (mode == PosetMode::extended) {
        tables_ = enumerate_tables(n);
        classes_.reserve(tables_.size());
        lookup_.assign(side * side * side, -1);
        for (std::size_t i = 0; i < tables_.size(); ++i) {
            const auto& T = tables_[i];
            classes_.push_back(table_class(T));
            lookup_[(T.x * side + T.y) * side + T.z] = static_cast<std::int32_t>(i);
        }
    } else {
        classes_ = enumerate_classes(n);
        lookup_.assign((2 * side - 1) * side, -1);
        for (std::size_t i = 0; i < classes_.size(); ++i) {
            const auto& c = classes_[i];
            lookup_[(c.rho + n) * side + c.alpha] = static_cast<std::int32_t>(i);
        }
    }
    succ_.resize(size());
    pred_.resize(size());

    switch (mode) {
        case PosetMode::extended:
            for (std::size_t i = 0; i < tables_.size(); ++i) {
                const auto [x, y, z, t] = tables_[i];
                const VoteTable moves[] = {{x, y, z + 1, t - 1},
                                           {x, y + 1, z, t - 1},
                                           {x + 1, y - 1, z, t},
                                           {x + 1, y, z - 1, t}};
                for (const auto& S : moves)
                    if (S.x >= 0 && S.y >= 0 && S.z >= 0 && S.t >= 0) add_cover(i, *index_of(S));
            }
            break;
        case PosetMode::quotient:
            for (std::size_t i = 0; i < classes_.size(); ++i) {
                const auto [rho, alpha] = classes_[i];
                if (valid_class(rho + 1, alpha - 1, n)) add_cover(i, *index_of(TableClass{rho + 1, alpha - 1}));
                if (valid_class(rho + 1, alpha + 1, n)) add_cover(i, *index_of(TableClass{rho + 1, alpha + 1}));
            }
            break;
        case PosetMode::optimality_reduced:
            for (std::size_t i = 0; i < classes_.size(); ++i) {
                const auto [rho, alpha] = classes_[i];
                if (valid_class(rho, alpha - 2, n)) add_cover(i, *index_of(TableClass{rho, alpha - 2}));
                if (valid_class(rho + 1, alpha + 1, n)) add_cover(i, *index_of(TableClass{rho + 1, alpha + 1}));
            }
            add_cover(*index_of(TableClass{n - 1, 1}), *index_of(TableClass{n, 0}));
            break;
    }
    finalize();
}

void Poset::add_cover(std::size_t lower, std::size_t upper) {
    auto& s = succ_[lower];
    if (std::find(s.begin(), s.end(), upper) != s.end()) return;
    s.push_back(upper);
    pred_[upper].push_back(lower);
    covers_.push_back({lower, upper});
}

void Poset::finalize() {
    for (auto& s : succ_) std::sort(s.begin(), s.end());
    for (auto& p : pred_) std::sort(p.begin(), p.end());
    std::sort(covers_.begin(), covers_.end(), [](const Cover& a, const Cover& b) {
        return a.lower != b.lower ? a.lower < b.lower : a.upper < b.upper;
    });

    // Kahn order from the minimum upward.
    std::vector<std::size_t> indeg(size()), order;
    order.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
        indeg[i] = pred_[i].size();
        if (indeg[i] == 0) order.push_back(i);
    }
    for (std::size_t k = 0; k < order.size(); ++k)
        for (auto j : succ_[order[k]])
            if (--indeg[j] == 0) order.push_back(j);
    if (order.size() != size()) throw structural_error("cover relation contains a cycle");

    bottom_ = *index_of(VoteTable{0, 0, 0, n_});
    top_ = *index_of(VoteTable{n_, 0, 0, 0});
    if (mode_ != PosetMode::extended) {
        bottom_ = *index_of(TableClass{-n_, 0});
        top_ = *index_of(TableClass{n_, 0});
    }

    rank_.assign(size(), 0);
    if (mode_ == PosetMode::optimality_reduced) {
        for (auto i : order)
            for (auto j : succ_[i]) rank_[j] = std::max(rank_[j], rank_[i] + 1);
    } else {
        for (std::size_t i = 0; i < size(); ++i) rank_[i] = classes_[i].rho;
    }

    if (n_ <= reachability_bitmap_limit) {
        up_.assign(size(), NodeSet(size()));
        down_.assign(size(), NodeSet(size()));
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            up_[*it].set(*it);
            for (auto j : succ_[*it]) up_[*it] |= up_[j];
        }
        for (auto i : order) {
            down_[i].set(i);
            for (auto j : pred_[i]) down_[i] |= down_[j];
        }
    }
}

const VoteTable& Poset::node_table(std::size_t i) const {
    if (mode_ != PosetMode::extended)
        throw invalid_parameter("nodes of a " + std::string(to_string(mode_)) + " poset are classes");
    return tables_[i];
}

std::string Poset::label(std::size_t i) const {
    return mode_ == PosetMode::extended ? to_string(tables_[i]) : to_string(classes_[i]);
}

std::optional<std::size_t> Poset::index_of(const VoteTable& T) const {
    if (T.x < 0 || T.y < 0 || T.z < 0 || T.t < 0 || T.size() != n_) return std::nullopt;
    if (mode_ != PosetMode::extended) return index_of(table_class(T));
    const auto C = canonical(T);
    const std::size_t side = static_cast<std::size_t>(n_) + 1;
    const auto v = lookup_[(C.x * side + C.y) * side + C.z];
    if (v < 0) return std::nullopt;
    return static_cast<std::size_t>(v);
}

std::optional<std::size_t> Poset::index_of(const TableClass& c) const {
    if (mode_ == PosetMode::extended) return std::nullopt;
    if (!valid_class(c.rho, c.alpha, n_) || (c.rho + c.alpha - n_) % 2 != 0) return std::nullopt;
    const std::size_t side = static_cast<std::size_t>(n_) + 1;
    const auto v = lookup_[(c.rho + n_) * side + c.alpha];
    if (v < 0) return std::nullopt;
    return static_cast<std::size_t>(v);
}

NodeSet Poset::search(std::size_t from, bool upward) const {
    NodeSet seen(size());
    std::vector<std::size_t> stack{from};
    seen.set(from);
    while (!stack.empty()) {
        const auto i = stack.back();
        stack.pop_back();
        for (auto j : upward ? succ_[i] : pred_[i]) {
            if (!seen.test(j)) {
                seen.set(j);
                stack.push_back(j);
            }
        }
    }
    return seen;
}

bool Poset::leq(std::size_t i, std::size_t j) const {
    if (i == j) return true;
    if (!up_.empty()) return up_[i].test(j);
    if (mode_ != PosetMode::optimality_reduced && rank_[j] <= rank_[i]) return false;
    return search(i, true).test(j);
}

NodeSet Poset::up_closure(std::size_t i) const {
    return up_.empty() ? search(i, true) : up_[i];
}

NodeSet Poset::down_closure(std::size_t i) const {
    return down_.empty() ? search(i, false) : down_[i];
}

Poset build_poset(int n, PosetMode mode) { return Poset(n, mode); }

void write_dot(const Poset& poset, std::ostream& os) {
    os << "digraph hasse {\n";
    os << "  // n=" << poset.committee_size() << " mode=" << to_string(poset.mode()) << "\n";
    os << "  rankdir=BT;\n  node [shape=plaintext];\n";
    for (std::size_t i = 0; i < poset.size(); ++i)
        os << "  v" << i << " [label=\"" << poset.label(i) << "\"];\n";
    std::map<int, std::vector<std::size_t>, std::greater<>> levels;
    for (std::size_t i = 0; i < poset.size(); ++i) levels[poset.rank(i)].push_back(i);
    for (const auto& [rank, nodes] : levels) {
        os << "  { rank=same; // rank " << rank << "\n   ";
        for (auto i : nodes) os << " v" << i << ';';
        os << "\n  }\n";
    }
    for (const auto& c : poset.covers()) os << "  v" << c.lower << " -> v" << c.upper << ";\n";
    os << "}\n";
}

}  // namespace dilemma
