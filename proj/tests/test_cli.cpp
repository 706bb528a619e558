#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "dilemma");
    std::ostringstream out, err;
    const int code = dilemma::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("count") {
    const auto r = run({"count", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("tables=13\n") != std::string::npos);
    CHECK(r.out.find("classes=10\n") != std::string::npos);
    CHECK(r.out.find("reduced-upper-sets=12\n") != std::string::npos);
    const auto j = nlohmann::json::parse(run({"count", "--n", "5", "--format", "json"}).out);
    CHECK(j.at("tables") == 34);
    CHECK(j.at("max_antichain_extended") == 6);
    CHECK(j.at("max_antichain_quotient") == 3);
    CHECK(run({"count", "--n", "21"}).out.find("skipped") != std::string::npos);
}

TEST_CASE("classify prints four-decimal thresholds") {
    const auto r = run({"classify", "--n", "7", "--w", "0.5"});
    CHECK(r.code == 0);
    for (const char* row : {"(3,4) 0.6658 c", "(2,3) 0.6628 c", "(1,2) 0.6478 c", "(2,5) 0.5449 c", "(1,4) 0.5326 c",
                            "(1,6) 0.5141 c"})
        CHECK(r.out.find(row) != std::string::npos);
    CHECK(run({"classify", "--n", "13"}).out.find("(3,10) 0.5160 c") != std::string::npos);
    const auto only = lines(run({"classify", "--n", "7", "--type", "b"}).out);
    for (std::size_t i = 1; i < only.size(); ++i) CHECK(only[i].find(" b ") != std::string::npos);
    const auto csv = lines(run({"classify", "--n", "3", "--format", "csv"}).out);
    CHECK(csv.front() == "rho,alpha,type,roots,good_intervals");
    CHECK(csv.size() == 11);
    const auto j = nlohmann::json::parse(run({"classify", "--n", "3", "--format", "json"}).out);
    CHECK(j.at("classes").size() == 10);
}

TEST_CASE("decide") {
    auto r = run({"decide", "--n", "3", "--w", "0.5", "--theta", "0.7", "--table", "1,1,1,0"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("C\t", 0) == 0);
    r = run({"decide", "--n", "3", "--w", "0.5", "--theta", "0.7", "--table", "0,1,1,1"});
    CHECK(r.out.rfind("¬C\t", 0) == 0);
    // A type-c class flips once competence passes its threshold.
    CHECK(run({"decide", "--n", "3", "--theta", "0.6", "--table", "1,2,0,0"}).out.rfind("C\t", 0) == 0);
    CHECK(run({"decide", "--n", "3", "--theta", "0.7", "--table", "1,2,0,0"}).out.rfind("¬C\t", 0) == 0);
    r = run({"decide", "--n", "3", "--theta", "0.6,0.7,0.8", "--table", "2,0,0,1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("method=ranking") != std::string::npos);
    const auto j = nlohmann::json::parse(run({"decide", "--n", "3", "--table", "3,0,0,0", "--format", "json"}).out);
    CHECK(j.at("verdict") == "C");
}

TEST_CASE("optimal and rank") {
    auto r = run({"optimal", "--n", "3", "--w", "0.5", "--theta", "0.7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("name pb") != std::string::npos);
    r = run({"rank", "--n", "3", "--w", "0.5", "--theta", "0.6,0.7,0.8"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Ranking (extended") != std::string::npos);
    CHECK(r.out.find("Ranking (compact") != std::string::npos);
    const auto j = nlohmann::json::parse(run({"rank", "--n", "3", "--theta", "0.7", "--format", "json", "--k", "3"}).out);
    REQUIRE(j.at("rankings").size() == 2);
    CHECK(j.at("rankings")[0].at("rules").size() == 3);
    CHECK(j.at("rankings")[1].at("mode") == "compact");
    const auto opt = nlohmann::json::parse(run({"optimal", "--n", "3", "--theta", "0.7", "--format", "json"}).out);
    CHECK(opt.at("loss").get<double>() == j.at("rankings")[0].at("rules")[0].at("loss").get<double>());
}

TEST_CASE("region") {
    const auto r = run({"region", "--n", "5", "--grid", "20"});
    CHECK(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 401);
    CHECK(ls[0] == "theta,w,pb_optimal_exact,pb_optimal_sufficient");
    for (std::size_t i = 1; i < ls.size(); ++i) {
        // Sufficient implies exact.
        CHECK(ls[i].substr(ls[i].size() - 3) != "0,1");
    }
}

TEST_CASE("hasse") {
    const auto r = run({"hasse", "--n", "3", "--mode", "reduced"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("digraph", 0) == 0);
    CHECK(run({"hasse", "--n", "3", "--mode", "extended"}).out.find("(1,1,1,0)") != std::string::npos);
}

TEST_CASE("simulate") {
    const auto r = run({"simulate", "--n", "3", "--theta", "0.6", "--trials", "10000", "--seed", "5", "--rule", "pb"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("spec").at("trials") == 10000);
    CHECK(j.contains("positive"));
    CHECK(run({"simulate", "--n", "3", "--trials", "10000", "--seed", "5", "--rule", "pb", "--theta", "0.6"}).out == r.out);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"count"}).code == 2);
    CHECK(run({"count", "--n", "4"}).code == 2);
    CHECK(run({"optimal", "--n", "3", "--theta", "0.4"}).code == 2);
    CHECK(run({"optimal", "--n", "3", "--theta", "0.6,0.7"}).code == 2);
    CHECK(run({"decide", "--n", "3", "--table", "1,1,1,1"}).code == 2);
    CHECK(run({"rank", "--n", "7"}).code == 2);
    CHECK(run({"rank", "--n", "3", "--format", "xml"}).code == 2);
    const auto r = run({"count", "--n", "4"});
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
    const auto h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("classify") != std::string::npos);
}
