#include "cli.hpp"

#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dilemma/antichain.hpp"
#include "dilemma/error.hpp"
#include "dilemma/optimal.hpp"
#include "dilemma/poset.hpp"
#include "dilemma/probability.hpp"
#include "dilemma/ranking.hpp"
#include "dilemma/records.hpp"
#include "dilemma/simulate.hpp"

namespace dilemma::cli {

namespace {

using nlohmann::json;

struct Options {
    int n = 3;
    double w = 0.5;
    std::string theta = "0.7";
    std::string format = "text";
    int precision = -1;  // subcommand default when negative
    bool force = false;
    unsigned threads = 1;
    std::size_t k = default_top_k;
    std::string mode;
    std::string table;
    std::string state = "PQ";
    std::string rule = "none";
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 1;
    int grid = 200;
    double tol = default_root_tolerance;
    std::string only_type;
};

double parse_double(const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw invalid_parameter("not a number: '" + text + "'");
    }
    if (used != text.size()) throw invalid_parameter("not a number: '" + text + "'");
    return v;
}

CompetenceProfile parse_profile(const std::string& text, int n) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(parse_double(item));
    if (values.empty()) throw invalid_parameter("--theta is empty");
    if (values.size() == 1) return CompetenceProfile::homogeneous(values[0]);
    if (static_cast<int>(values.size()) != n)
        throw invalid_parameter("--theta needs 1 or n = " + std::to_string(n) + " values, got " +
                                std::to_string(values.size()));
    return CompetenceProfile::per_voter(std::move(values));
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (format == a) return;
    throw invalid_parameter("unsupported --format '" + format + "' for this command");
}

std::string sig(double v, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << v;
    return os.str();
}

std::string fixed(double v, int decimals) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(decimals) << v;
    return os.str();
}

std::string join_tables(const std::vector<VoteTable>& ts) {
    std::string s = "{";
    for (std::size_t i = 0; i < ts.size(); ++i) s += (i ? " " : "") + to_string(ts[i]);
    return s + "}";
}

std::string join_classes(const std::vector<TableClass>& cs) {
    std::string s = "{";
    for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? " " : "") + to_string(cs[i]);
    return s + "}";
}

json tables_json(const std::vector<VoteTable>& ts) {
    json a = json::array();
    for (const auto& T : ts) a.push_back({T.x, T.y, T.z, T.t});
    return a;
}

json classes_json(const std::vector<TableClass>& cs) {
    json a = json::array();
    for (const auto& c : cs) a.push_back({c.rho, c.alpha});
    return a;
}

std::string profile_text(const CompetenceProfile& p, int digits) {
    std::string s;
    for (std::size_t i = 0; i < p.thetas().size(); ++i) s += (i ? "," : "") + sig(p.thetas()[i], digits);
    return s;
}

// Best rule for a per-voter profile comes from the extended ranking.
DecisionRule best_rule(int n, double w, const CompetenceProfile& profile, const Poset& extended, bool force,
                       unsigned threads, std::string& method) {
    if (profile.all_equal()) {
        method = "good-tables";
        return optimal_rule(extended, w, profile.theta());
    }
    method = "ranking";
    RankingRequest req{n, w, profile, RankingMode::extended, 1, force, threads};
    return rank_rules(req).front().rule;
}

int cmd_optimal(const Options& o, std::ostream& out) {
    require_format(o.format, {"text", "json"});
    const int digits = o.precision < 0 ? 6 : o.precision;
    const auto profile = parse_profile(o.theta, o.n);
    const Poset extended(o.n, PosetMode::extended);
    std::string method;
    const auto rule = best_rule(o.n, o.w, profile, extended, o.force, o.threads, method);
    const auto e = evaluate_rule(rule, o.w, profile);
    const auto name = classical_name(rule);
    const bool by_class = rule.class_constant();
    std::vector<TableClass> classes;
    if (by_class) classes = class_antichain(rule, Poset(o.n, PosetMode::quotient));

    if (o.format == "json") {
        json j{{"n", o.n}, {"w", o.w}, {"thetas", profile.thetas()}, {"method", method},
               {"antichain", tables_json(rule.antichain())},
               {"positive_classes", classes_json(rule.positive_classes())},
               {"p_fp", e.p_fp}, {"p_fn", e.p_fn}, {"loss", e.loss}};
        if (by_class) j["class_antichain"] = classes_json(classes);
        if (!name.empty()) j["name"] = name;
        out << j.dump(2) << '\n';
        return exit_ok;
    }
    out << "n=" << o.n << " w=" << sig(o.w, digits) << " theta=" << profile_text(profile, digits) << " ("
        << method << ")\n";
    out << "antichain " << join_tables(rule.antichain()) << '\n';
    if (by_class) out << "classes   " << join_classes(classes) << '\n';
    out << "positive classes " << join_classes(rule.positive_classes()) << '\n';
    if (!name.empty()) out << "name " << name << '\n';
    out << "p_fp=" << sig(e.p_fp, digits) << " p_fn=" << sig(e.p_fn, digits) << " loss=" << sig(e.loss, digits)
        << '\n';
    return exit_ok;
}

int cmd_rank(const Options& o, std::ostream& out) {
    require_format(o.format, {"text", "json"});
    const int digits = o.precision < 0 ? 6 : o.precision;
    const auto profile = parse_profile(o.theta, o.n);
    std::vector<RankingMode> modes;
    if (o.mode.empty() || o.mode == "both") {
        modes = {RankingMode::extended, RankingMode::compact};
    } else {
        modes = {parse_ranking_mode(o.mode)};
    }
    json records = json::array();
    for (auto mode : modes) {
        RankingRequest req{o.n, o.w, profile, mode, o.k, o.force, o.threads};
        const auto ranked = rank_rules(req);
        if (o.format == "json") {
            records.push_back(ranking_record(req, ranked));
            continue;
        }
        out << "Ranking (" << to_string(mode) << (mode == RankingMode::extended ? " form (x,y,z,t)" : " form (rho,alpha)")
            << ")  n=" << o.n << " w=" << sig(o.w, digits) << " theta=" << profile_text(profile, digits) << '\n';
        for (const auto& r : ranked) {
            out << "  " << r.rank << ". "
                << (mode == RankingMode::extended ? join_tables(r.antichain_tables) : join_classes(r.antichain_classes));
            if (!r.name.empty()) out << "  " << r.name;
            out << "  loss=" << sig(r.evaluation.loss, digits) << '\n';
        }
    }
    if (o.format == "json") out << json{{"rankings", records}}.dump(2) << '\n';
    return exit_ok;
}

std::string roots_text(const GoodnessProfile& g, int decimals) {
    if (g.roots.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < g.roots.size(); ++i) s += (i ? "/" : "") + fixed(g.roots[i], decimals);
    return s;
}

std::string intervals_text(const GoodnessProfile& g, int decimals) {
    if (g.degenerate_tangency) return "degenerate-tangency";
    if (g.good.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < g.good.size(); ++i)
        s += (i ? " " : "") + std::string("(") + fixed(g.good[i].lo, decimals) + "," + fixed(g.good[i].hi, decimals) + ")";
    return s;
}

int cmd_classify(const Options& o, std::ostream& out) {
    require_format(o.format, {"text", "json", "csv"});
    const int decimals = o.precision < 0 ? 4 : o.precision;
    std::optional<TableType> only;
    if (!o.only_type.empty()) {
        if (o.only_type == "a") only = TableType::A;
        else if (o.only_type == "b") only = TableType::B;
        else if (o.only_type == "c") only = TableType::C;
        else throw invalid_parameter("--type must be a, b or c");
    }
    json rows = json::array();
    if (o.format == "csv") out << "rho,alpha,type,roots,good_intervals\n";
    if (o.format == "text") out << "class theta0 type good\n";
    for (const auto& c : enumerate_classes(o.n)) {
        const auto g = goodness_intervals(c, o.w, o.tol);
        if (only && g.type != *only) continue;
        if (o.format == "json") {
            json iv = json::array();
            for (const auto& i : g.good) iv.push_back({i.lo, i.hi});
            rows.push_back({{"rho", c.rho}, {"alpha", c.alpha}, {"type", std::string(to_string(g.type))},
                            {"roots", g.roots}, {"good", iv}, {"degenerate_tangency", g.degenerate_tangency}});
        } else if (o.format == "csv") {
            out << c.rho << ',' << c.alpha << ',' << to_string(g.type) << ',' << roots_text(g, decimals) << ','
                << intervals_text(g, decimals) << '\n';
        } else {
            out << to_string(c) << ' ' << roots_text(g, decimals) << ' ' << to_string(g.type) << ' '
                << intervals_text(g, decimals) << '\n';
        }
    }
    if (o.format == "json") out << json{{"n", o.n}, {"w", o.w}, {"classes", rows}}.dump(2) << '\n';
    return exit_ok;
}

int cmd_decide(const Options& o, std::ostream& out) {
    require_format(o.format, {"text", "json"});
    const int digits = o.precision < 0 ? 6 : o.precision;
    if (o.table.empty()) throw invalid_parameter("--table is required");
    const VoteTable T = parse_table(o.table);
    if (T.size() != o.n)
        throw invalid_parameter("table " + to_string(T) + " has " + std::to_string(T.size()) + " votes, n = " +
                                std::to_string(o.n));
    const auto profile = parse_profile(o.theta, o.n);
    const auto c = table_class(T);
    bool verdict = false;
    json j{{"table", {T.x, T.y, T.z, T.t}}, {"class", {c.rho, c.alpha}}};
    std::string detail;
    if (profile.all_equal()) {
        const double theta = profile.theta();
        verdict = is_good(c, o.w, theta);
        const double g = g_eval(c, odds(theta));
        const double xi = goodness_threshold(o.w);
        j["type"] = std::string(to_string(classify(c)));
        j["G"] = g;
        j["threshold"] = xi;
        detail = "type=" + std::string(to_string(classify(c))) + "\tG=" + sig(g, digits) + "\tthreshold=" + sig(xi, digits);
    } else {
        const Poset extended(o.n, PosetMode::extended);
        std::string method;
        verdict = best_rule(o.n, o.w, profile, extended, o.force, o.threads, method).decides(T);
        detail = "method=" + method;
        j["method"] = method;
    }
    j["verdict"] = verdict ? "C" : "notC";
    if (o.format == "json") {
        out << j.dump(2) << '\n';
    } else {
        out << (verdict ? "C" : "¬C") << '\t' << to_string(T) << "\tclass=" << to_string(c) << '\t' << detail << '\n';
    }
    return exit_ok;
}

int cmd_region(const Options& o, std::ostream& out) {
    require_format(o.format, {"csv", "text"});
    require_committee_size(o.n);
    if (o.grid < 1) throw invalid_parameter("--grid must be positive");
    const int digits = o.precision < 0 ? 6 : o.precision;
    out << "theta,w,pb_optimal_exact,pb_optimal_sufficient\n";
    for (int i = 0; i < o.grid; ++i) {
        const double theta = 0.5 + 0.5 * (i + 0.5) / o.grid;
        for (int j = 0; j < o.grid; ++j) {
            const double w = (j + 0.5) / o.grid;
            out << sig(theta, digits) << ',' << sig(w, digits) << ',' << pb_optimal(o.n, w, theta) << ','
                << pb_optimal_sufficient(w, theta) << '\n';
        }
    }
    return exit_ok;
}

int cmd_hasse(const Options& o, std::ostream& out) {
    require_format(o.format == "text" ? std::string("dot") : o.format, {"dot"});
    const auto mode = parse_poset_mode(o.mode.empty() ? "quotient" : o.mode);
    write_dot(Poset(o.n, mode), out);
    return exit_ok;
}

int cmd_simulate(const Options& o, std::ostream& out) {
    require_format(o.format == "text" ? std::string("json") : o.format, {"json"});
    SimulationSpec spec;
    spec.n = o.n;
    spec.state = parse_state(o.state);
    spec.profile = parse_profile(o.theta, o.n);
    spec.trials = o.trials;
    spec.seed = o.seed;
    spec.threads = o.threads;
    if (o.rule == "optimal") {
        const Poset extended(o.n, PosetMode::extended);
        std::string method;
        spec.rule = best_rule(o.n, o.w, spec.profile, extended, o.force, o.threads, method);
    } else if (o.rule != "none") {
        spec.rule = classical_rule(parse_classical_rule(o.rule), o.n);
    }
    const auto result = simulate(spec);
    out << simulation_record(spec, result).dump(2) << '\n';
    return exit_ok;
}

int cmd_count(const Options& o, std::ostream& out) {
    require_format(o.format, {"text", "json"});
    require_committee_size(o.n);
    const auto whitney = whitney_numbers(o.n);
    const Poset reduced(o.n, PosetMode::optimality_reduced);
    std::optional<std::uint64_t> reduced_upper;
    if (o.force || o.n <= enumeration_limit(PosetMode::optimality_reduced))
        reduced_upper = count_antichains(reduced, true);
    const auto ext_width = max_antichain_size(o.n, PosetMode::extended);
    const auto quo_width = max_antichain_size(o.n, PosetMode::quotient);

    if (o.format == "json") {
        json w = json::object();
        for (const auto& [rho, count] : whitney) w[std::to_string(rho)] = count;
        json j{{"n", o.n},
               {"tables", canonical_table_count(o.n)},
               {"ordered_tables", ordered_table_count(o.n)},
               {"classes", class_count(o.n)},
               {"whitney", w},
               {"max_antichain_extended", ext_width},
               {"max_antichain_quotient", quo_width}};
        if (reduced_upper) j["reduced_upper_sets"] = *reduced_upper;
        out << j.dump(2) << '\n';
        return exit_ok;
    }
    out << "tables=" << canonical_table_count(o.n) << '\n';
    out << "ordered-tables=" << ordered_table_count(o.n) << '\n';
    out << "classes=" << class_count(o.n) << '\n';
    if (reduced_upper) {
        out << "reduced-upper-sets=" << *reduced_upper << '\n';
    } else {
        out << "reduced-upper-sets=skipped (n > " << enumeration_limit(PosetMode::optimality_reduced)
            << ", pass --force)\n";
    }
    out << "max-antichain-extended=" << ext_width << '\n';
    out << "max-antichain-quotient=" << quo_width << '\n';
    out << "whitney=";
    bool first = true;
    for (auto it = whitney.rbegin(); it != whitney.rend(); ++it) {
        out << (first ? "" : " ") << it->first << ':' << it->second;
        first = false;
    }
    out << '\n';
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Optimal decision rules for the two-premiss discursive dilemma"};
    app.name(args.empty() ? "dilemma" : args[0]);
    app.require_subcommand(1, 1);
    Options o;

    auto add_n = [&](CLI::App* s) { s->add_option("--n", o.n, "Committee size (odd, 1..99)")->required(); };
    auto add_w = [&](CLI::App* s) { s->add_option("--w", o.w, "Weight of a false positive, 0 < w < 1"); };
    auto add_theta = [&](CLI::App* s) {
        s->add_option("--theta", o.theta, "Competence: one value or n comma-separated per-voter values");
    };
    auto add_format = [&](CLI::App* s, const std::string& help) { s->add_option("--format", o.format, help); };
    auto add_precision = [&](CLI::App* s) {
        s->add_option("--precision", o.precision, "Significant digits for text output (default 6)");
    };
    auto add_force = [&](CLI::App* s) { s->add_flag("--force", o.force, "Allow enumeration beyond the default bounds"); };
    auto add_threads = [&](CLI::App* s) { s->add_option("--threads", o.threads, "Worker threads"); };

    auto* optimal = app.add_subcommand("optimal", "Print the optimal rule and its evaluation");
    add_n(optimal), add_w(optimal), add_theta(optimal), add_format(optimal, "text | json"), add_precision(optimal),
        add_force(optimal), add_threads(optimal);

    auto* rank = app.add_subcommand("rank", "Top-k rules in extended and compact form");
    add_n(rank), add_w(rank), add_theta(rank), add_format(rank, "text | json"), add_precision(rank), add_force(rank),
        add_threads(rank);
    rank->add_option("--mode", o.mode, "extended | compact | both (default both)");
    rank->add_option("--k", o.k, "Number of rules per ranking (default 5)");

    auto* classify_cmd = app.add_subcommand("classify", "Type and competence intervals of goodness per class");
    add_n(classify_cmd), add_w(classify_cmd), add_format(classify_cmd, "text | json | csv");
    classify_cmd->add_option("--precision", o.precision, "Decimals for competence thresholds (default 4)");
    classify_cmd->add_option("--tol", o.tol, "Bisection tolerance on eta (default 1e-12)");
    classify_cmd->add_option("--type", o.only_type, "Only list classes of this type (a, b or c)");

    auto* decide = app.add_subcommand("decide", "Verdict of the optimal rule on one table");
    add_n(decide), add_w(decide), add_theta(decide), add_format(decide, "text | json"), add_precision(decide),
        add_force(decide), add_threads(decide);
    decide->add_option("--table", o.table, "Votes x,y,z,t")->required();

    auto* region = app.add_subcommand("region", "CSV grid of premiss-based optimality over (theta, w)");
    add_n(region), add_format(region, "csv"), add_precision(region);
    region->add_option("--grid", o.grid, "Grid points per axis (default 200)");

    auto* hasse = app.add_subcommand("hasse", "Hasse diagram in DOT format");
    add_n(hasse), add_format(hasse, "dot");
    hasse->add_option("--mode", o.mode, "extended | quotient | reduced (default quotient)");

    auto* sim = app.add_subcommand("simulate", "Monte Carlo simulation of committee votes");
    add_n(sim), add_w(sim), add_theta(sim), add_format(sim, "json"), add_force(sim), add_threads(sim);
    sim->add_option("--state", o.state, "PQ | PnQ | nPQ | nPnQ");
    sim->add_option("--trials", o.trials, "Number of trials");
    sim->add_option("--seed", o.seed, "64-bit seed");
    sim->add_option("--rule", o.rule, "none | pb | cb | hb | optimal");

    auto* count = app.add_subcommand("count", "Table counts, Whitney numbers and antichain widths");
    add_n(count), add_format(count, "text | json"), add_force(count);

    std::vector<const char*> argv;
    std::vector<std::string> storage = args;
    if (storage.empty()) storage.emplace_back("dilemma");
    for (auto& a : storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return exit_usage;
    }

    try {
        if (optimal->parsed()) return cmd_optimal(o, out);
        if (rank->parsed()) return cmd_rank(o, out);
        if (classify_cmd->parsed()) return cmd_classify(o, out);
        if (decide->parsed()) return cmd_decide(o, out);
        if (region->parsed()) return cmd_region(o, out);
        if (hasse->parsed()) return cmd_hasse(o, out);
        if (sim->parsed()) return cmd_simulate(o, out);
        if (count->parsed()) return cmd_count(o, out);
    } catch (const invalid_parameter& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const structural_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
    err << app.help();
    return exit_usage;
}

}  // namespace dilemma::cli
