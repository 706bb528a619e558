#include "dilemma/optimal.hpp"

#include <cmath>
#include <string>

#include "dilemma/error.hpp"
#include "dilemma/probability.hpp"

namespace dilemma {

std::string_view to_string(TableType type) {
    switch (type) {
        case TableType::A: return "a";
        case TableType::B: return "b";
        case TableType::C: return "c";
    }
    return "?";
}

TableType classify(const TableClass& c) {
    if (c.alpha < 0) throw invalid_parameter("alpha must be non-negative in " + to_string(c));
    if (c.rho <= 0) return TableType::A;
    if (c.rho > c.alpha) return TableType::B;
    if (c.rho < c.alpha) return TableType::C;
    throw invalid_parameter("class " + to_string(c) + " has rho == alpha, impossible for odd n");
}

double goodness_threshold(double w) {
    require_weight(w);
    return 2.0 * (1.0 - w) / w;
}

namespace {

double g_unchecked(const TableClass& c, double eta) {
    return std::pow(eta, -c.rho - c.alpha) + std::pow(eta, -c.rho + c.alpha);
}

// Bisection on a bracket where f(lo) and f(hi) have opposite signs.
template <class F>
double bisect(F f, double lo, double hi, double tol) {
    const bool rising = f(lo) < 0.0;
    for (int iter = 0; iter < 4000 && hi - lo > tol; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if ((f(mid) < 0.0) == rising) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double g_eval(const TableClass& c, double eta) {
    if (!(eta > 1.0)) throw invalid_parameter("G is evaluated on eta > 1, got " + std::to_string(eta));
    return g_unchecked(c, eta);
}

double g_derivative(const TableClass& c, double eta) {
    if (!(eta > 1.0)) throw invalid_parameter("G' is evaluated on eta > 1, got " + std::to_string(eta));
    return std::pow(eta, -c.rho - 1) *
           ((c.alpha - c.rho) * std::pow(eta, c.alpha) - (c.alpha + c.rho) * std::pow(eta, -c.alpha));
}

double eta_star(const TableClass& c) {
    if (classify(c) != TableType::C)
        throw invalid_parameter("G has an interior minimum only for type c classes, got " + to_string(c));
    return std::pow(static_cast<double>(c.alpha + c.rho) / (c.alpha - c.rho), 1.0 / (2.0 * c.alpha));
}

void require_competence(double theta) {
    if (!(theta > 0.5 && theta < 1.0))
        throw invalid_parameter("competence must lie in (1/2, 1), got " + std::to_string(theta));
}

bool is_good(const TableClass& c, double w, double theta) {
    require_competence(theta);
    const double xi = goodness_threshold(w);
    return g_unchecked(c, odds(theta)) < xi;
}

bool is_good(const VoteTable& T, double w, double theta) { return is_good(table_class(T), w, theta); }

GoodnessProfile goodness_intervals(const TableClass& c, double w, double tol) {
    if (!(tol > 0.0)) throw invalid_parameter("root tolerance must be positive");
    const double xi = goodness_threshold(w);
    GoodnessProfile out;
    out.cls = c;
    out.type = classify(c);
    auto f = [&](double eta) { return g_unchecked(c, eta) - xi; };
    auto root = [&](double lo, double hi) {
        const double theta = competence_from_odds(bisect(f, lo, hi, tol));
        out.roots.push_back(theta);
        return theta;
    };
    // Past this point G >= eta^(alpha - rho) >= xi.
    auto upper_bound = [&] { return std::pow(xi, 1.0 / (c.alpha - c.rho)); };

    switch (out.type) {
        case TableType::A:
            if (w >= 0.5) break;
            out.good.push_back({0.5, root(1.0, upper_bound())});
            break;
        case TableType::B:
            if (w <= 0.5) {
                out.good.push_back({0.5, 1.0});
                break;
            }
            out.good.push_back({root(1.0, std::pow(w / (1.0 - w), 1.0 / (c.rho - c.alpha))), 1.0});
            break;
        case TableType::C: {
            const double es = eta_star(c);
            if (w <= 0.5) {
                out.good.push_back({0.5, root(es, std::max(es, upper_bound()))});
                break;
            }
            if (w > 2.0 / 3.0) break;
            const double gmin = g_unchecked(c, es);
            if (std::abs(gmin - xi) <= tangency_guard) {
                out.degenerate_tangency = true;
                break;
            }
            if (gmin > xi) break;
            double hi = std::max(es, upper_bound());
            while (f(hi) < 0.0) hi *= 2.0;
            const double first = root(1.0, es);
            const double second = root(es, hi);
            out.good.push_back({first, second});
            break;
        }
    }
    return out;
}

DecisionRule optimal_rule(const Poset& extended, double w, double theta) {
    require_competence(theta);
    require_weight(w);
    NodeSet positives = extended.empty_set();
    for (std::size_t i = 0; i < extended.size(); ++i)
        if (is_good(extended.node_class(i), w, theta)) positives.set(i);
    return {extended, std::move(positives)};
}

DecisionRule optimal_rule(int n, double w, double theta) {
    return optimal_rule(Poset(n, PosetMode::extended), w, theta);
}

bool pb_optimal(int n, double w, double theta) {
    require_committee_size(n);
    require_competence(theta);
    const double xi = goodness_threshold(w);
    const double eta = odds(theta);
    return theta >= w && eta + std::pow(eta, -n) >= xi;
}

bool pb_optimal_sufficient(double w, double theta) {
    require_weight(w);
    require_competence(theta);
    return theta >= w && theta >= 2.0 * (1.0 - w) / (2.0 - w);
}

std::optional<double> pb_optimality_boundary(int n, double w, double tol) {
    require_committee_size(n);
    const double xi = goodness_threshold(w);
    auto h = [&](double eta) { return eta + std::pow(eta, -n) - xi; };
    const double eta_min = std::pow(static_cast<double>(n), 1.0 / (n + 1));
    double theta_r = 0.5;
    if (h(eta_min) < 0.0) {
        // h grows without bound past eta_min; eta = xi + 1 already satisfies it.
        double hi = std::max(eta_min * 2.0, xi + 1.0);
        theta_r = competence_from_odds(bisect(h, eta_min, hi, tol));
    }
    const double boundary = std::max(w, theta_r);
    if (boundary >= 1.0) return std::nullopt;
    return std::max(boundary, 0.5);
}

ClassicalRule parse_classical_rule(std::string_view name) {
    if (name == "pb" || name == "premiss-based") return ClassicalRule::premiss_based;
    if (name == "cb" || name == "conclusion-based") return ClassicalRule::conclusion_based;
    if (name == "hb" || name == "path-based") return ClassicalRule::path_based;
    throw invalid_parameter("unknown classical rule '" + std::string(name) + "' (expected pb, cb or hb)");
}

std::string_view short_name(ClassicalRule kind) {
    switch (kind) {
        case ClassicalRule::premiss_based: return "pb";
        case ClassicalRule::conclusion_based: return "cb";
        case ClassicalRule::path_based: return "hb";
    }
    return "?";
}

bool classical_decision(ClassicalRule kind, const VoteTable& T) {
    const auto [x, y, z, t] = T;
    switch (kind) {
        case ClassicalRule::premiss_based: return x + y > z + t && x + z > y + t;
        case ClassicalRule::conclusion_based: return x > y + z + t;
        case ClassicalRule::path_based: return x > z + t && x > y + t;
    }
    return false;
}

DecisionRule classical_rule(ClassicalRule kind, const Poset& extended) {
    return DecisionRule::from_predicate(extended,
                                        [kind](const VoteTable& T) { return classical_decision(kind, T); });
}

DecisionRule classical_rule(ClassicalRule kind, int n) {
    return classical_rule(kind, Poset(n, PosetMode::extended));
}

}  // namespace dilemma
