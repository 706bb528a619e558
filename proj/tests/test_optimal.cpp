#include <doctest.h>

#include <cmath>

#include "dilemma/antichain.hpp"
#include "dilemma/error.hpp"
#include "dilemma/optimal.hpp"
#include "dilemma/probability.hpp"
#include "oracles.hpp"

using namespace dilemma;

namespace {

// Roots of G(theta/(1-theta)) = 2(1-w)/w on (1/2, 1) by a fine sign scan and
// plain bisection in theta.
std::vector<double> scan_roots(int rho, int alpha, double w) {
    const double xi = 2 * (1 - w) / w;
    auto f = [&](double th) { return oracle::g(rho, alpha, th / (1 - th)) - xi; };
    std::vector<double> roots;
    const int steps = 20000;
    double a = 0.5 + 1e-9;
    double fa = f(a);
    for (int i = 1; i <= steps; ++i) {
        const double b = 0.5 + 0.4999999 * i / steps;
        const double fb = f(b);
        if ((fa < 0) != (fb < 0)) {
            double lo = a, hi = b;
            for (int k = 0; k < 200; ++k) {
                const double mid = 0.5 * (lo + hi);
                ((f(mid) < 0) == (f(lo) < 0) ? lo : hi) = mid;
            }
            roots.push_back(0.5 * (lo + hi));
        }
        a = b;
        fa = fb;
    }
    return roots;
}

double class_root(int rho, int alpha) {
    const auto g = goodness_intervals(TableClass{rho, alpha}, 0.5);
    REQUIRE(g.roots.size() == 1);
    return g.roots[0];
}

std::vector<std::vector<bool>> extended_relation(const std::vector<oracle::Tab>& tables) {
    std::vector<std::vector<bool>> R(tables.size(), std::vector<bool>(tables.size()));
    for (std::size_t i = 0; i < tables.size(); ++i)
        for (std::size_t j = 0; j < tables.size(); ++j) R[i][j] = oracle::leq_canonical(tables[i], tables[j]);
    return R;
}

}  // namespace

TEST_CASE("competence thresholds of type c classes at w = 1/2") {
    CHECK(std::round(class_root(3, 4) * 1e4) / 1e4 == doctest::Approx(0.6658).epsilon(1e-12));
    CHECK(std::round(class_root(2, 3) * 1e4) / 1e4 == doctest::Approx(0.6628).epsilon(1e-12));
    CHECK(std::round(class_root(1, 2) * 1e4) / 1e4 == doctest::Approx(0.6478).epsilon(1e-12));
    CHECK(std::round(class_root(2, 5) * 1e4) / 1e4 == doctest::Approx(0.5449).epsilon(1e-12));
    CHECK(std::round(class_root(1, 4) * 1e4) / 1e4 == doctest::Approx(0.5326).epsilon(1e-12));
    CHECK(std::round(class_root(1, 6) * 1e4) / 1e4 == doctest::Approx(0.5141).epsilon(1e-12));
    CHECK(std::round(class_root(3, 10) * 1e4) / 1e4 == doctest::Approx(0.5160).epsilon(1e-12));
    CHECK(class_root(3, 10) > class_root(1, 6));
}

TEST_CASE("roots agree with an independent scan") {
    for (double w : {0.2, 0.35, 0.5, 0.55, 0.6, 0.65, 0.7, 0.9})
        for (int n = 1; n <= 15; n += 2)
            for (const auto& c : enumerate_classes(n)) {
                CAPTURE(w);
                CAPTURE(to_string(c));
                const auto g = goodness_intervals(c, w);
                if (g.degenerate_tangency) continue;
                auto expect = scan_roots(c.rho, c.alpha, w);
                // The tie at theta = 1/2 for w = 1/2 is not a crossing.
                REQUIRE(g.roots.size() == expect.size());
                for (std::size_t i = 0; i < expect.size(); ++i) CHECK(std::abs(g.roots[i] - expect[i]) < 1e-9);
            }
}

TEST_CASE("intervals agree with the pointwise goodness test") {
    for (double w : {0.3, 0.5, 0.6, 0.8})
        for (const auto& c : enumerate_classes(9)) {
            const auto g = goodness_intervals(c, w);
            for (int i = 1; i < 100; ++i) {
                const double th = 0.5 + 0.5 * i / 100.0;
                bool inside = false;
                bool near_edge = false;
                for (const auto& iv : g.good) {
                    inside = inside || (th > iv.lo && th < iv.hi);
                    near_edge = near_edge || std::abs(th - iv.lo) < 1e-9 || std::abs(th - iv.hi) < 1e-9;
                }
                if (!near_edge) CHECK(is_good(c, w, th) == inside);
            }
        }
}

TEST_CASE("the threshold equation holds at each root") {
    for (double w : {0.3, 0.5, 0.6})
        for (const auto& c : enumerate_classes(11)) {
            const auto g = goodness_intervals(c, w);
            for (double th : g.roots) CHECK(std::abs(g_eval(c, odds(th)) - goodness_threshold(w)) < 1e-9);
        }
}

TEST_CASE("derivative of G by finite differences") {
    for (const auto& c : enumerate_classes(9))
        for (double eta : {1.05, 1.5, 2.0, 4.0}) {
            const double h = 1e-6;
            const double fd = (oracle::g(c.rho, c.alpha, eta + h) - oracle::g(c.rho, c.alpha, eta - h)) / (2 * h);
            CHECK(g_derivative(c, eta) == doctest::Approx(fd).epsilon(1e-6));
            CHECK(g_eval(c, eta) == doctest::Approx(oracle::g(c.rho, c.alpha, eta)).epsilon(1e-14));
        }
    for (const auto& c : enumerate_classes(9)) {
        if (classify(c) != TableType::C) continue;
        CHECK(std::abs(g_derivative(c, eta_star(c))) < 1e-9);
    }
    CHECK_THROWS_AS(eta_star(TableClass{3, 0}), invalid_parameter);
}

TEST_CASE("class types") {
    CHECK(classify(TableClass{0, 1}) == TableType::A);
    CHECK(classify(TableClass{-3, 0}) == TableType::A);
    CHECK(classify(TableClass{3, 0}) == TableType::B);
    CHECK(classify(TableClass{2, 1}) == TableType::B);
    CHECK(classify(TableClass{1, 2}) == TableType::C);
    CHECK(to_string(TableType::C) == "c");
    for (int n = 1; n <= 31; n += 2)
        for (const auto& c : enumerate_classes(n)) CHECK_NOTHROW(classify(c));
}

TEST_CASE("good tables form an upper set in every order") {
    const Poset e(7, PosetMode::extended);
    const Poset r(7, PosetMode::optimality_reduced);
    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j) {
            const double w = (i + 0.5) / 20;
            const double th = 0.5 + 0.5 * (j + 0.5) / 20;
            const auto rule = optimal_rule(e, w, th);
            REQUIRE(rule.admissible());
            NodeSet classes = r.empty_set();
            for (std::size_t k = 0; k < r.size(); ++k)
                if (is_good(r.node_class(k), w, th)) classes.set(k);
            REQUIRE(is_upper_set(r, classes));
            CHECK(rule.class_constant());
        }
}

TEST_CASE("optimal rule attains the least loss over all admissible rules") {
    for (int n : {3, 5}) {
        const auto tables = oracle::canonical_tables(n);
        const auto families = oracle::upper_sets(extended_relation(tables));
        for (double w : {0.3, 0.5, 0.7})
            for (double th : {0.55, 0.6, 2.0 / 3.0, 0.75, 0.9}) {
                double best = 2.0;
                for (const auto& in : families) {
                    const double l = oracle::brute_loss(n, w, th, [&](const oracle::Tab& T) {
                        const oracle::Tab c = T.y >= T.z ? T : oracle::Tab{T.x, T.z, T.y, T.t};
                        return in[std::find(tables.begin(), tables.end(), c) - tables.begin()];
                    });
                    best = std::min(best, l);
                }
                const auto rule = optimal_rule(n, w, th);
                CHECK(std::abs(loss(rule, w, CompetenceProfile::homogeneous(th)).loss - best) < 1e-12);
            }
    }
}

TEST_CASE("premiss-based optimality region") {
    for (int n : {3, 5, 7})
        for (int i = 0; i < 200; ++i)
            for (int j = 0; j < 200; ++j) {
                const double th = 0.5 + 0.5 * (i + 0.5) / 200;
                const double w = (j + 0.5) / 200;
                if (pb_optimal_sufficient(w, th)) REQUIRE(pb_optimal(n, w, th));
            }
    // The exact test says the optimal rule is premiss-based.
    for (int n : {3, 5, 7}) {
        const Poset e(n, PosetMode::extended);
        const auto pb = classical_rule(ClassicalRule::premiss_based, e);
        for (int i = 0; i < 40; ++i)
            for (int j = 0; j < 40; ++j) {
                const double th = 0.5 + 0.5 * (i + 0.5) / 40;
                const double w = (j + 0.5) / 40;
                CAPTURE(n);
                CAPTURE(th);
                CAPTURE(w);
                CHECK(pb_optimal(n, w, th) == (optimal_rule(e, w, th) == pb));
            }
    }
}

TEST_CASE("premiss-based optimality boundary at w = 1/2") {
    double prev = 0.0;
    for (int n = 3; n <= 41; n += 2) {
        const auto b = pb_optimality_boundary(n, 0.5);
        REQUIRE(b.has_value());
        CHECK(*b > prev);
        CHECK(*b <= 2.0 / 3.0);
        const double eta = odds(*b);
        CHECK(std::abs(eta + std::pow(eta, -n) - 2.0) < 1e-9);
        prev = *b;
    }
    const double b3 = *pb_optimality_boundary(3, 0.5);
    CHECK(b3 > 0.64);
    CHECK(b3 == doctest::Approx(class_root(1, 2)).epsilon(1e-10));
    CHECK(2.0 / 3.0 - *pb_optimality_boundary(99, 0.5) < 1e-3);
}

TEST_CASE("classical rules") {
    CHECK(classical_decision(ClassicalRule::premiss_based, VoteTable{1, 1, 1, 0}));
    CHECK_FALSE(classical_decision(ClassicalRule::conclusion_based, VoteTable{1, 1, 1, 0}));
    CHECK_FALSE(classical_decision(ClassicalRule::path_based, VoteTable{1, 1, 1, 0}));
    CHECK(classical_decision(ClassicalRule::path_based, VoteTable{2, 0, 0, 1}));
    for (auto k : {ClassicalRule::premiss_based, ClassicalRule::conclusion_based, ClassicalRule::path_based}) {
        CHECK(parse_classical_rule(short_name(k)) == k);
        for (int n : {3, 5, 7}) CHECK(classical_rule(k, n).admissible());
    }
    // (2,0,0,1) and (1,1,1,0) share the class (1,0) but cb splits them.
    const auto cb = classical_rule(ClassicalRule::conclusion_based, 3);
    CHECK(cb.decides(VoteTable{2, 0, 0, 1}));
    CHECK_FALSE(cb.decides(VoteTable{1, 1, 1, 0}));
    CHECK_FALSE(cb.class_constant());
    CHECK(classical_rule(ClassicalRule::premiss_based, 3).class_constant());
    CHECK_THROWS_AS(parse_classical_rule("majority"), invalid_parameter);
}

TEST_CASE("optimal-rule inputs are validated") {
    CHECK_THROWS_AS(optimal_rule(3, 0.5, 0.5), invalid_parameter);
    CHECK_THROWS_AS(optimal_rule(3, 0.5, 1.0), invalid_parameter);
    CHECK_THROWS_AS(optimal_rule(3, 1.0, 0.7), invalid_parameter);
    CHECK_THROWS_AS(optimal_rule(4, 0.5, 0.7), invalid_parameter);
    CHECK_THROWS_AS(goodness_intervals(TableClass{1, 2}, 0.5, 0.0), invalid_parameter);
    CHECK_THROWS_AS(is_good(TableClass{1, 2}, 0.5, 0.4), invalid_parameter);
}
