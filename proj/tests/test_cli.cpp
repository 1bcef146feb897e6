#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "planeperm/cli.hpp"
#include "planeperm/report.hpp"

using namespace planeperm;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("dist commands print the requested quantities") {
    const CliResult bid = run({"dist", "bid", "2 4 1 3"});
    CHECK(bid.code == 0);
    CHECK(contains(bid.out, "cycles = 1"));
    CHECK(contains(bid.out, "bid = 2"));
    CHECK(bid.err.empty());

    const CliResult bounds = run({"dist", "td-bounds", "3 2 1"});
    CHECK(bounds.code == 0);
    CHECK(contains(bounds.out, "lower_best = 2"));
    CHECK(contains(bounds.out, "upper = 2"));

    const CliResult gamma = run({"dist", "td-bounds", "3 2 1", "--gamma", "0 1 2 3"});
    CHECK(gamma.code == 0);
    CHECK(contains(gamma.out, "parity_ok = true"));

    const CliResult rev = run({"dist", "reversal-bound", "--", "2 -4 -1 3"});
    CHECK(rev.code == 0);
    CHECK(contains(rev.out, "bound = 4"));
    CHECK(contains(rev.out, "exact = true"));

    const CliResult bg = run({"dist", "bg-bound", "--", "-3 1 2 -4"});
    CHECK(bg.code == 0);
    CHECK(contains(bg.out, "components = 2"));
    CHECK(contains(bg.out, "bg_bound = 3"));
    CHECK(contains(bg.out, "theta_bound = 3"));
    CHECK(contains(bg.out, "relation_holds = true"));
}

TEST_CASE("sort bid emits a verifiable trace") {
    const CliResult trace = run({"sort", "bid", "2 4 1 3", "--trace"});
    CHECK(trace.code == 0);
    CHECK(contains(trace.out, "moves = 2"));
    CHECK(contains(trace.out, "step 1 = transpose (2,2,3,4): 2 1 3 4, cycles 1 -> 3"));
    CHECK(contains(trace.out, "step 2 = transpose (1,1,2,2): 1 2 3 4, cycles 3 -> 5"));
    CHECK(contains(trace.out, "final = 1 2 3 4"));

    const CliResult expanded = run({"sort", "bid", "3 2 1", "--transpositions", "--trace"});
    CHECK(expanded.code == 0);
    CHECK(contains(expanded.out, "moves = 2"));
    CHECK(contains(expanded.out, "transpose (1,2,3,3)"));
    CHECK(contains(expanded.out, "transpose (2,2,3,3)"));

    const CliResult sorted = run({"sort", "bid", "1 2 3", "--trace"});
    CHECK(sorted.code == 0);
    CHECK(contains(sorted.out, "moves = 0"));
    CHECK(contains(sorted.out, "already sorted (0 moves)"));
    CHECK(contains(sorted.out, "final = 1 2 3"));
}

TEST_CASE("sort reversal requires the greedy flag and reports reversals") {
    CHECK(run({"sort", "reversal", "--", "-3 1 2 -4"}).code == 2);

    const CliResult trace = run({"sort", "reversal", "--greedy", "--trace", "--",
                                 "-3 1 2 -4"});
    CHECK(trace.code == 0);
    CHECK(contains(trace.out, "moves = 3"));
    CHECK(contains(trace.out, "step 1 = reversal (4,4): -3 1 2 4, cycles 3 -> 5"));
    CHECK(contains(trace.out, "step 2 = reversal (1,3): -2 -1 3 4, cycles 5 -> 7"));
    CHECK(contains(trace.out, "step 3 = reversal (1,2): 1 2 3 4, cycles 7 -> 9"));
    CHECK(contains(trace.out, "success = true"));
    CHECK(contains(trace.out, "final = 1 2 3 4"));
}

TEST_CASE("census commands print distance distributions") {
    const CliResult formula = run({"census", "bid", "--n", "4", "--formula"});
    CHECK(formula.code == 0);
    CHECK(contains(formula.out, "d=0 = 1"));
    CHECK(contains(formula.out, "d=1 = 15"));
    CHECK(contains(formula.out, "d=2 = 8"));
    CHECK(contains(formula.out, "total = 24"));

    const CliResult bfs = run({"census", "bid", "--n", "4"});
    CHECK(bfs.code == 0);
    CHECK(contains(bfs.out, "d=1 = 15"));

    const CliResult td = run({"census", "td", "--n", "3"});
    CHECK(td.code == 0);
    CHECK(contains(td.out, "d=2 = 1"));

    const CliResult rev = run({"census", "reversal", "--n", "2"});
    CHECK(rev.code == 0);
    CHECK(contains(rev.out, "d=3 = 1"));
    CHECK(contains(rev.out, "total = 8"));
}

TEST_CASE("verify commands report pass verdicts on exhaustive ranges") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"verify", "zagier", "--n", "4"},
          std::vector<std::string>{"verify", "bid-census", "--n", "4"},
          std::vector<std::string>{"verify", "theorem53", "--n", "3"},
          std::vector<std::string>{"verify", "relation", "--n", "3"},
          std::vector<std::string>{"verify", "reversal-bound", "--n", "3"}}) {
        const CliResult r = run(args);
        CAPTURE(args[1]);
        CHECK(r.code == 0);
        CHECK(contains(r.out, "verdict = PASS"));
    }

    const CliResult c72 = run({"verify", "conjecture72", "--n", "3"});
    CHECK(c72.code == 0);
    CHECK(contains(c72.out, "verdict = PASS"));
    CHECK(contains(c72.out, "states_checked = 58"));
    CHECK(contains(c72.out, "n=3 = 48"));

    const CliResult c71 = run({"verify", "conjecture71", "--n", "3"});
    CHECK(c71.code == 0);
    CHECK(contains(c71.out, "verdict = PASS"));
    CHECK(contains(c71.out, "states_checked = 29"));
}

TEST_CASE("identical seeds reproduce identical bytes") {
    const std::vector<std::string> args = {"verify", "relation", "--n", "6",
                                           "--samples", "10", "--seed", "42"};
    const CliResult first = run(args);
    const CliResult second = run(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(contains(first.out, "verdict = PASS"));

    const std::vector<std::string> sampled = {"verify", "reversal-bound", "--n", "5",
                                              "--samples", "50", "--seed", "7"};
    CHECK(run(sampled).out == run(sampled).out);
}

TEST_CASE("poly dist prints the gap polynomial with witnesses") {
    const CliResult poly = run({"poly", "dist", "--pi", "2 1"});
    CHECK(poly.code == 0);
    CHECK(contains(poly.out, "poly = z^-1 + z"));
    CHECK(contains(poly.out, "min_exponent = -1"));
    CHECK(contains(poly.out, "max_exponent = 1"));
    CHECK(contains(poly.out, "argmin = 1 2"));
    CHECK(contains(poly.out, "argmax = 2 1"));

    CHECK(run({"poly", "dist", "--pi", "2 3 1", "--stat", "odd"}).code == 0);
    CHECK(run({"poly", "dist", "--pi", "2 1", "--stat", "bogus"}).code == 2);
}

TEST_CASE("oracle dist answers reference distances") {
    const CliResult td = run({"oracle", "dist", "--moves", "transposition", "3 2 1"});
    CHECK(td.code == 0);
    CHECK(contains(td.out, "distance = 2"));

    const CliResult bid = run({"oracle", "dist", "--moves", "block", "3 2 1"});
    CHECK(bid.code == 0);
    CHECK(contains(bid.out, "distance = 1"));

    const CliResult rev = run({"oracle", "dist", "--moves", "reversal", "--", "-3 1 2 -4"});
    CHECK(rev.code == 0);
    CHECK(contains(rev.out, "distance = 3"));
}

TEST_CASE("machine output is valid json and round-trips") {
    const CliResult machine = run({"--machine", "dist", "td-bounds", "3 2 1"});
    CHECK(machine.code == 0);
    const nlohmann::ordered_json j = nlohmann::ordered_json::parse(machine.out);
    CHECK(j.at("command") == "dist td-bounds");
    CHECK(j.at("input").at("sequence") == "3 2 1");
    bool found = false;
    for (const auto& item : j.at("items")) {
        if (item.at("key") == "lower_best") {
            CHECK(item.at("value") == 2);
            found = true;
        }
    }
    CHECK(found);

    const Report parsed = Report::from_machine(j);
    CHECK(parsed.to_machine() == j);
    CHECK(parsed.command == "dist td-bounds");
}

TEST_CASE("domain errors exit one with a message on stderr") {
    const CliResult dup = run({"dist", "bid", "2 2 3"});
    CHECK(dup.code == 1);
    CHECK(dup.out.empty());
    CHECK(contains(dup.err, "error: sequence entry 2 appears twice"));

    const CliResult capped = run({"census", "reversal", "--n", "9"});
    CHECK(capped.code == 1);
    CHECK(contains(capped.err, "error: n = 9 exceeds the signed_bfs cap (5)"));

    // raising the cap admits larger searches
    const CliResult raised = run({"census", "reversal", "--n", "6", "--cap", "6"});
    CHECK(raised.code == 0);
    CHECK(contains(raised.out, "total = 46080"));
}

TEST_CASE("usage errors exit two and help exits zero") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"dist", "bid"}).code == 2);
    CHECK(run({"census", "bid"}).code == 2);

    const CliResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(contains(help.out, "dist"));
    CHECK(contains(help.out, "verify"));
}
