#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "dilemma/poset.hpp"
#include "dilemma/rule.hpp"
#include "dilemma/table.hpp"

namespace dilemma {

// Sign pattern of a class:
//   A: rho <= 0, never positive in an optimal rule for w >= 1/2;
//   B: rho > alpha, positive for every competence when w <= 1/2;
//   C: 0 < rho < alpha, positive on a competence window that depends on w.
enum class TableType { A, B, C };

std::string_view to_string(TableType type);

// Throws invalid_parameter for rho == alpha > 0, which no odd committee produces.
TableType classify(const TableClass& c);

// Odds ratio eta = theta / (1 - theta) and its inverse.
constexpr double odds(double theta) { return theta / (1.0 - theta); }
constexpr double competence_from_odds(double eta) { return eta / (1.0 + eta); }

// Right-hand side of the goodness test, 2(1 - w) / w.
double goodness_threshold(double w);

// G(eta) = eta^(-rho-alpha) + eta^(-rho+alpha) for eta > 1.
double g_eval(const TableClass& c, double eta);
// G'(eta) = eta^(-rho-1) [ (alpha-rho) eta^alpha - (alpha+rho) eta^(-alpha) ].
double g_derivative(const TableClass& c, double eta);

// Unique critical point ((alpha+rho)/(alpha-rho))^(1/(2 alpha)) of G for a
// type-C class; throws invalid_parameter otherwise.
double eta_star(const TableClass& c);

// Throws invalid_parameter unless 1/2 < theta < 1.
void require_competence(double theta);

// Moving the class (and its transposes) into the positive set strictly lowers
// the loss: G(theta / (1 - theta)) < 2(1 - w) / w. Equality counts as bad.
bool is_good(const TableClass& c, double w, double theta);
bool is_good(const VoteTable& T, double w, double theta);

// Open competence interval (lo, hi) inside (1/2, 1).
struct ThetaInterval {
    double lo = 0.5;
    double hi = 1.0;
};

struct GoodnessProfile {
    TableClass cls;
    TableType type = TableType::A;
    // Disjoint, ascending.
    std::vector<ThetaInterval> good;
    // Competence values where G(eta) equals the threshold, ascending.
    std::vector<double> roots;
    // Set when the minimum of G lies within the guard band of the threshold
    // (type C with 1/2 < w <= 2/3); no intervals are reported then.
    bool degenerate_tangency = false;
};

inline constexpr double default_root_tolerance = 1e-12;
inline constexpr double tangency_guard = 1e-14;

// Solves G(eta) = 2(1 - w)/w by bisection to |d eta| <= tol inside the
// brackets known for each type, and returns the competence intervals on which
// the class is good.
GoodnessProfile goodness_intervals(const TableClass& c, double w, double tol = default_root_tolerance);

// Rule whose positive set is exactly the good tables.
DecisionRule optimal_rule(const Poset& extended, double w, double theta);
DecisionRule optimal_rule(int n, double w, double theta);

// Premiss-based rule optimal iff theta >= w and eta + eta^(-n) >= 2(1 - w)/w.
bool pb_optimal(int n, double w, double theta);
// theta >= w and theta >= 2(1 - w)/(2 - w); implies pb_optimal for every n.
bool pb_optimal_sufficient(double w, double theta);

// Competence above which the exact pb-optimality test holds for every larger
// competence: max(w, theta_r) where theta_r solves eta + eta^(-n) = 2(1-w)/w
// on the increasing branch (eta above n^(1/(n+1))). Returns nullopt if no such
// competence exists below 1.
std::optional<double> pb_optimality_boundary(int n, double w, double tol = default_root_tolerance);

enum class ClassicalRule { premiss_based, conclusion_based, path_based };

ClassicalRule parse_classical_rule(std::string_view name);
std::string_view short_name(ClassicalRule kind);

// pb: x+y > z+t and x+z > y+t;  cb: x > y+z+t;  hb: x > z+t and x > y+t.
bool classical_decision(ClassicalRule kind, const VoteTable& T);
DecisionRule classical_rule(ClassicalRule kind, const Poset& extended);
DecisionRule classical_rule(ClassicalRule kind, int n);

}  // namespace dilemma
