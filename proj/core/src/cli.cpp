#include "planeperm/cli.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "planeperm/block_distance.hpp"
#include "planeperm/enumerate.hpp"
#include "planeperm/errors.hpp"
#include "planeperm/oracle.hpp"
#include "planeperm/report.hpp"
#include "planeperm/signed_reversal.hpp"
#include "planeperm/text_io.hpp"

namespace planeperm {
namespace {

struct CliContext {
    bool machine = false;
    std::uint64_t seed = 0;
    int cap_override = -1;
    std::ostream* out = nullptr;

    Caps caps() const {
        if (cap_override < 0) return Caps{};
        return Caps{cap_override, cap_override, cap_override, cap_override};
    }

    void print(Report report) const {
        if (cap_override >= 0) report.input["cap"] = cap_override;
        if (machine)
            *out << report.to_machine().dump(2) << "\n";
        else
            *out << to_text(report);
    }
};

void add_item(Report& r, std::string key, nlohmann::ordered_json value, std::string provenance) {
    r.items.push_back(ReportItem{std::move(key), std::move(value), std::move(provenance)});
}

void require_cap(int n, int cap, const char* name) {
    if (n <= cap) return;
    std::ostringstream msg;
    msg << "n = " << n << " exceeds the " << name << " cap (" << cap << ")";
    throw CapExceeded(msg.str());
}

SignedPermutation random_signed(int n, std::mt19937_64& rng) {
    std::vector<int> values(static_cast<std::size_t>(n));
    std::iota(values.begin(), values.end(), 1);
    for (int t = n - 1; t > 0; --t)
        std::swap(values[static_cast<std::size_t>(t)],
                  values[static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(t + 1))]);
    for (int t = 0; t < n; ++t)
        if (rng() & 1) values[static_cast<std::size_t>(t)] = -values[static_cast<std::size_t>(t)];
    return SignedPermutation(std::move(values));
}

void add_trace(Report& r, const SortTrace& trace, bool show_steps, const char* prov) {
    add_item(r, "moves", static_cast<long long>(trace.steps.size()), prov);
    if (show_steps) {
        if (trace.steps.empty()) add_item(r, "trace", "already sorted (0 moves)", "");
        int t = 0;
        for (const SortStep& step : trace.steps) {
            std::ostringstream key;
            key << "step " << ++t;
            std::ostringstream val;
            if (step.reversal) {
                val << "reversal (" << step.reversal->i << "," << step.reversal->j << "): ";
            } else {
                const Interchange& h = step.move;
                val << (h.is_transpose() ? "transpose (" : "interchange (") << h.i << "," << h.j
                    << "," << h.k << "," << h.l << "): ";
            }
            val << format_int_sequence(step.state_after) << ", cycles " << step.cycles_before
                << " -> " << step.cycles_after;
            add_item(r, key.str(), val.str(), "");
        }
    }
    add_item(r, "final", format_int_sequence(trace.final_sequence), "");
}

void run_dist_td_bounds(const CliContext& ctx, const std::string& perm,
                        const std::string& gamma_text) {
    const Sequence s = Sequence::parse(perm);
    Report r;
    r.command = "dist td-bounds";
    r.input["sequence"] = format_int_sequence(s.values());
    const bool custom = !gamma_text.empty();
    Bounds b;
    if (custom) {
        const Permutation gamma = parse_one_line(gamma_text, GroundSet::zero_to(s.size()));
        r.input["gamma"] = format_one_line(gamma);
        b = td_bounds(s, gamma);
    } else {
        b = td_bounds(s);
    }
    add_item(r, "lower_cycles", b.lower_cycles, "half cycle-count gap");
    add_item(r, "lower_odd", b.lower_odd, "half odd-cycle-count gap");
    add_item(r, "lower_even", b.lower_even, "half even-cycle-count gap");
    add_item(r, "lower_best", b.lower_best, "largest of the three lower bounds");
    add_item(r, "upper", b.upper, "cycle gap n+1-C, met by pairs of adjacent-block swaps");
    if (custom) add_item(r, "parity_ok", b.parity_ok, "all three gaps were even");
    ctx.print(r);
}

void run_dist_bid(const CliContext& ctx, const std::string& perm) {
    const Sequence s = Sequence::parse(perm);
    Report r;
    r.command = "dist bid";
    r.input["sequence"] = format_int_sequence(s.values());
    add_item(r, "cycles", cycle_count(augment(s).product),
             "cycle count of the augmented product");
    add_item(r, "bid", bid_exact(s), "exact block-interchange distance (n+1-C)/2");
    ctx.print(r);
}

void run_dist_reversal_bound(const CliContext& ctx, const std::string& perm) {
    const SignedPermutation a = SignedPermutation::parse(perm);
    const SkewEmbedding e = skew_embed(a);
    Report r;
    r.command = "dist reversal-bound";
    r.input["sequence"] = format_int_sequence(a.values());
    add_item(r, "cycles", cycle_count(e.pi), "cycle count of the skew-embedding product");
    add_item(r, "bound", reversal_lower_bound(a), "reversal lower bound (2n+1-C)/2");
    add_item(r, "exact", e.exact, "a negative entry exists");
    ctx.print(r);
}

void run_dist_bg_bound(const CliContext& ctx, const std::string& perm) {
    const SignedPermutation a = SignedPermutation::parse(perm);
    const BreakpointMetrics m = breakpoint_metrics(a);
    Report r;
    r.command = "dist bg-bound";
    r.input["sequence"] = format_int_sequence(a.values());
    add_item(r, "components", m.c_bg, "breakpoint-graph component count");
    add_item(r, "bg_bound", m.bg_bound, "n+1 - components");
    add_item(r, "theta_bound", m.theta_bound, "(2n+2 - C(theta1*theta2))/2");
    add_item(r, "relation_holds", m.relation_holds, "C(skew product) == 2*components - 1");
    ctx.print(r);
}

void run_sort_bid(const CliContext& ctx, const std::string& perm, bool transpositions,
                  bool show_trace) {
    const Sequence s = Sequence::parse(perm);
    Report r;
    r.command = "sort bid";
    r.input["sequence"] = format_int_sequence(s.values());
    r.input["transpositions"] = transpositions;
    add_item(r, "bid", bid_exact(s), "exact block-interchange distance (n+1-C)/2");
    const SortTrace trace = sort_by_block_interchanges(s, transpositions);
    const char* prov = transpositions
                           ? "cycle-gaining interchanges, non-adjacent ones split into two "
                             "adjacent swaps"
                           : "cycle-gaining interchange construction";
    add_trace(r, trace, show_trace, prov);
    ctx.print(r);
}

void run_sort_reversal(const CliContext& ctx, const std::string& perm, bool show_trace) {
    const SignedPermutation a = SignedPermutation::parse(perm);
    Report r;
    r.command = "sort reversal";
    r.input["sequence"] = format_int_sequence(a.values());
    add_item(r, "bound", reversal_lower_bound(a), "reversal lower bound (2n+1-C)/2");
    const SortTrace trace = greedy_sort_reversals(a);
    add_item(r, "success", trace.success, "sorted within the stall budget");
    add_trace(r, trace, show_trace, "verified cycle-gaining reversal, greedy fallback");
    ctx.print(r);
}

void run_census(const CliContext& ctx, const std::string& which, int n, bool formula) {
    Report r;
    r.command = "census " + which;
    r.input["n"] = n;
    if (which == "bid" && formula) {
        r.input["formula"] = true;
        BigInt total = 0;
        for (const auto& [d, count] : bid_census_formula(n)) {
            std::ostringstream key;
            key << "d=" << d;
            add_item(r, key.str(), count.str(), "closed form 2*c(n+2,n+1-2k)/((n+1)(n+2))");
            total += count;
        }
        add_item(r, "total", total.str(), "sum of all classes (n!)");
    } else {
        const MoveKind kind = which == "bid"  ? MoveKind::block_interchange
                              : which == "td" ? MoveKind::transposition
                                              : MoveKind::reversal;
        std::ostringstream prov;
        prov << "breadth-first search over " << to_string(kind) << " moves";
        long long total = 0;
        for (const auto& [d, count] : census(n, kind, ctx.caps())) {
            std::ostringstream key;
            key << "d=" << d;
            add_item(r, key.str(), count, prov.str());
            total += count;
        }
        add_item(r, "total", total, "states visited");
    }
    ctx.print(r);
}

void run_verify_zagier(const CliContext& ctx, int n) {
    Report r;
    r.command = "verify zagier";
    r.input["n"] = n;
    bool ok = true;
    for (int m = 1; m <= n; ++m)
        if (zagier_census(m, ctx.caps()) != zagier_formula(m)) ok = false;
    add_item(r, "verdict", ok ? "PASS" : "FAIL",
             "enumeration of full cycles vs closed form 2*c(n+1,k)/(n(n+1)) for n = 1..N");
    for (const auto& [k, count] : zagier_formula(n)) {
        std::ostringstream key;
        key << "k=" << k;
        add_item(r, key.str(), count.str(), "closed form at the top size");
    }
    ctx.print(r);
}

void run_verify_bid_census(const CliContext& ctx, int n) {
    Report r;
    r.command = "verify bid-census";
    r.input["n"] = n;
    bool ok = true;
    long long states = 0;
    for (int m = 1; m <= n; ++m) {
        std::map<int, BigInt> by_bfs;
        for (const auto& [d, count] : census(m, MoveKind::block_interchange, ctx.caps())) {
            by_bfs[d] = count;
            states += count;
        }
        if (by_bfs != bid_census_formula(m)) ok = false;
    }
    add_item(r, "verdict", ok ? "PASS" : "FAIL", "BFS census vs closed form for n = 1..N");
    add_item(r, "states", states, "all sequences of each size");
    ctx.print(r);
}

void run_verify_conjecture(const CliContext& ctx, Conjecture which, int n) {
    Report r;
    r.command = which == Conjecture::c71 ? "verify conjecture71" : "verify conjecture72";
    r.input["n"] = n;
    const ConjectureReport rep = check_conjecture(which, n, ctx.caps());
    add_item(r, "verdict", rep.counterexample ? "FAIL" : "PASS",
             "cycle-membership conclusion on every tested state, n = 1..N");
    add_item(r, "states_checked", rep.states_checked, "states where the conclusion was tested");
    for (const auto& [m, count] : rep.checked_by_n) {
        std::ostringstream key;
        key << "n=" << m;
        add_item(r, key.str(), count, "tested states of this size");
    }
    if (rep.counterexample)
        add_item(r, "counterexample", format_int_sequence(rep.counterexample->values()),
                 "first in enumeration order");
    ctx.print(r);
}

void run_verify_relation(const CliContext& ctx, int n, long long samples) {
    Report r;
    r.command = "verify relation";
    r.input["n"] = n;
    long long states = 0;
    long long holds = 0;
    std::optional<SignedPermutation> failure;
    auto check = [&states, &holds, &failure](const SignedPermutation& a) {
        ++states;
        if (breakpoint_metrics(a).relation_holds)
            ++holds;
        else if (!failure)
            failure = a;
    };
    if (samples > 0) {
        r.input["samples"] = samples;
        r.input["seed"] = ctx.seed;
        std::mt19937_64 rng(ctx.seed);
        for (long long t = 0; t < samples; ++t) check(random_signed(n, rng));
    } else {
        require_cap(n, ctx.caps().enumeration, "enumeration");
        for_each_signed_sequence(n, check);
    }
    add_item(r, "verdict", states == holds ? "PASS" : "FAIL",
             "C(skew product) == 2*components - 1 on each state");
    add_item(r, "states", states,
             samples > 0 ? "sampled signed sequences" : "all signed sequences of size n");
    if (failure)
        add_item(r, "counterexample", format_int_sequence(failure->values()),
                 "first failure seen");
    ctx.print(r);
}

void run_verify_theorem53(const CliContext& ctx, int n) {
    Report r;
    r.command = "verify theorem53";
    r.input["n"] = n;
    require_cap(n, ctx.caps().enumeration, "enumeration");
    const GroundSet g = GroundSet::one_to(n);
    long long checked = 0;
    bool ok = true;
    for_each_permutation(g, [&g, &checked, &ok](const Permutation& alpha) {
        if (!ok) return;
        ++checked;
        const CycleGap gap = max_cycle_gap(alpha);
        int observed = 0;
        for_each_permutation(g, [&observed, &alpha](const Permutation& gamma) {
            observed = std::max(
                observed, std::abs(cycle_count(compose(alpha, gamma)) - cycle_count(gamma)));
        });
        const int at_inverse = cycle_count(compose(alpha, gap.witness_inverse)) -
                               cycle_count(gap.witness_inverse);
        const int at_identity = cycle_count(compose(alpha, gap.witness_identity)) -
                                cycle_count(gap.witness_identity);
        if (observed != gap.value || at_inverse != gap.value || at_identity != -gap.value)
            ok = false;
    });
    add_item(r, "verdict", ok ? "PASS" : "FAIL",
             "max cycle gap equals n - C, attained at the inverse and at the identity");
    add_item(r, "permutations", checked, "all permutations of 1..n");
    ctx.print(r);
}

void run_verify_reversal_bound(const CliContext& ctx, int n, long long samples) {
    Report r;
    r.command = "verify reversal-bound";
    r.input["n"] = n;
    const std::vector<int> table = distance_table(n, MoveKind::reversal, ctx.caps());
    long long states = 0;
    long long tight = 0;
    bool ok = true;
    auto check = [&states, &tight, &ok, &table](const SignedPermutation& a) {
        ++states;
        const int bound = reversal_lower_bound(a);
        const int d = table[signed_rank(a.values())];
        if (bound > d) ok = false;
        if (bound == d) ++tight;
    };
    if (samples > 0) {
        r.input["samples"] = samples;
        r.input["seed"] = ctx.seed;
        std::mt19937_64 rng(ctx.seed);
        for (long long t = 0; t < samples; ++t) check(random_signed(n, rng));
    } else {
        for_each_signed_sequence(n, check);
    }
    add_item(r, "verdict", ok ? "PASS" : "FAIL", "bound never exceeds the BFS distance");
    add_item(r, "states", states,
             samples > 0 ? "sampled signed sequences" : "all signed sequences of size n");
    add_item(r, "tight", tight, "states where the bound equals the distance");
    ctx.print(r);
}

void run_poly_dist(const CliContext& ctx, const std::string& pi_text,
                   const std::string& stat_name) {
    const std::vector<int> tokens = parse_int_sequence(pi_text);
    std::vector<int> sorted_tokens = tokens;
    std::sort(sorted_tokens.begin(), sorted_tokens.end());
    const GroundSet g(sorted_tokens);
    const Permutation pi = parse_one_line(pi_text, g);
    const CycleStatKind kind = stat_name == "cycles" ? CycleStatKind::cycles
                               : stat_name == "odd"  ? CycleStatKind::odd
                                                     : CycleStatKind::even;
    Report r;
    r.command = "poly dist";
    r.input["pi"] = format_one_line(pi);
    r.input["stat"] = stat_name;
    const LaurentPoly poly = distribution_poly(pi, kind, ctx.caps());
    add_item(r, "poly", format_laurent(poly),
             "sum over gamma of z^(stat(pi*gamma) - stat(gamma))");
    add_item(r, "min_exponent", poly.min_exponent(), "");
    add_item(r, "max_exponent", poly.max_exponent(), "");
    add_item(r, "argmin", format_one_line(poly.argmin()), "first gamma attaining the minimum");
    add_item(r, "argmax", format_one_line(poly.argmax()), "first gamma attaining the maximum");
    long long terms = 0;
    for (const auto& [e, c] : poly.coeff) terms += c;
    add_item(r, "terms", terms, "one term per gamma");
    ctx.print(r);
}

void run_oracle_dist(const CliContext& ctx, const std::string& moves, const std::string& perm) {
    Report r;
    r.command = "oracle dist";
    r.input["moves"] = moves;
    int d = 0;
    if (moves == "reversal") {
        const SignedPermutation a = SignedPermutation::parse(perm);
        r.input["sequence"] = format_int_sequence(a.values());
        d = bfs_distance(a, ctx.caps());
    } else {
        const MoveKind kind =
            moves == "block" ? MoveKind::block_interchange : MoveKind::transposition;
        const Sequence s = Sequence::parse(perm);
        r.input["sequence"] = format_int_sequence(s.values());
        d = bfs_distance(s, kind, ctx.caps());
    }
    std::ostringstream prov;
    prov << "breadth-first search over " << (moves == "block" ? "block-interchange" : moves)
         << " moves";
    add_item(r, "distance", d, prov.str());
    ctx.print(r);
}

// Lets global options (--machine, --seed, --cap) appear after a subcommand.
void enable_fallthrough(CLI::App* app) {
    for (CLI::App* sub : app->get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
        enable_fallthrough(sub);
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"plane-permutation sorting toolkit"};
    app.name("planeperm");

    CliContext ctx;
    ctx.out = &out;
    app.add_flag("--machine", ctx.machine, "emit JSON instead of text");
    app.add_option("--seed", ctx.seed, "seed for sampled checks (default 0)");
    app.add_option("--cap", ctx.cap_override, "override every search cap");
    app.require_subcommand(1);

    std::string perm;
    std::string gamma;
    std::string pi_text;
    std::string moves_name;
    std::string stat_name = "cycles";
    int n = 0;
    long long samples = 0;
    bool formula = false;
    bool transpositions = false;
    bool show_trace = false;
    bool greedy = false;

    CLI::App* dist = app.add_subcommand("dist", "distance bounds and exact distances");
    dist->require_subcommand(1);
    CLI::App* dist_td = dist->add_subcommand("td-bounds", "transposition-distance bounds");
    dist_td->add_option("perm", perm, "permutation of 1..n, one line")->required();
    dist_td->add_option("--gamma", gamma, "comparison permutation of {0..n}, one line");
    dist_td->callback([&] { run_dist_td_bounds(ctx, perm, gamma); });
    CLI::App* dist_bid = dist->add_subcommand("bid", "exact block-interchange distance");
    dist_bid->add_option("perm", perm, "permutation of 1..n, one line")->required();
    dist_bid->callback([&] { run_dist_bid(ctx, perm); });
    CLI::App* dist_rev = dist->add_subcommand("reversal-bound", "signed reversal lower bound");
    dist_rev->add_option("perm", perm, "signed sequence, one line")->required();
    dist_rev->callback([&] { run_dist_reversal_bound(ctx, perm); });
    CLI::App* dist_bg = dist->add_subcommand("bg-bound", "breakpoint-graph lower bound");
    dist_bg->add_option("perm", perm, "signed sequence, one line")->required();
    dist_bg->callback([&] { run_dist_bg_bound(ctx, perm); });

    CLI::App* sort_cmd = app.add_subcommand("sort", "construct sorting move sequences");
    sort_cmd->require_subcommand(1);
    CLI::App* sort_bid = sort_cmd->add_subcommand("bid", "sort by block interchanges");
    sort_bid->add_option("perm", perm, "permutation of 1..n, one line")->required();
    sort_bid->add_flag("--transpositions", transpositions,
                       "split non-adjacent interchanges into two adjacent swaps");
    sort_bid->add_flag("--trace", show_trace, "show each step");
    sort_bid->callback([&] { run_sort_bid(ctx, perm, transpositions, show_trace); });
    CLI::App* sort_rev = sort_cmd->add_subcommand("reversal", "sort a signed sequence");
    sort_rev->add_option("perm", perm, "signed sequence, one line")->required();
    sort_rev->add_flag("--greedy", greedy, "greedy cycle-gaining strategy")->required();
    sort_rev->add_flag("--trace", show_trace, "show each step");
    sort_rev->callback([&] { run_sort_reversal(ctx, perm, show_trace); });

    CLI::App* census_cmd = app.add_subcommand("census", "distance distribution by size");
    census_cmd->require_subcommand(1);
    CLI::App* census_bid = census_cmd->add_subcommand("bid", "block-interchange distances");
    census_bid->add_option("--n", n, "sequence size")->required();
    census_bid->add_flag("--formula", formula, "closed form instead of BFS");
    census_bid->callback([&] { run_census(ctx, "bid", n, formula); });
    CLI::App* census_td = census_cmd->add_subcommand("td", "transposition distances");
    census_td->add_option("--n", n, "sequence size")->required();
    census_td->callback([&] { run_census(ctx, "td", n, false); });
    CLI::App* census_rev = census_cmd->add_subcommand("reversal", "signed reversal distances");
    census_rev->add_option("--n", n, "sequence size")->required();
    census_rev->callback([&] { run_census(ctx, "reversal", n, false); });

    CLI::App* verify = app.add_subcommand("verify", "exhaustive and sampled checks");
    verify->require_subcommand(1);
    CLI::App* v_zagier = verify->add_subcommand("zagier", "full-cycle census vs closed form");
    v_zagier->add_option("--n", n, "check all sizes up to n")->required();
    v_zagier->callback([&] { run_verify_zagier(ctx, n); });
    CLI::App* v_census = verify->add_subcommand("bid-census", "distance census vs closed form");
    v_census->add_option("--n", n, "check all sizes up to n")->required();
    v_census->callback([&] { run_verify_bid_census(ctx, n); });
    CLI::App* v_c71 = verify->add_subcommand("conjecture71", "crossing-pair cycle membership");
    v_c71->add_option("--n", n, "check all sizes up to n")->required();
    v_c71->callback([&] { run_verify_conjecture(ctx, Conjecture::c71, n); });
    CLI::App* v_c72 = verify->add_subcommand("conjecture72", "unconditional cycle membership");
    v_c72->add_option("--n", n, "check all sizes up to n")->required();
    v_c72->callback([&] { run_verify_conjecture(ctx, Conjecture::c72, n); });
    CLI::App* v_rel = verify->add_subcommand("relation", "breakpoint component relation");
    v_rel->add_option("--n", n, "sequence size")->required();
    v_rel->add_option("--samples", samples, "random states instead of enumeration");
    v_rel->callback([&] { run_verify_relation(ctx, n, samples); });
    CLI::App* v_t53 = verify->add_subcommand("theorem53", "max cycle gap and its witnesses");
    v_t53->add_option("--n", n, "ground size")->required();
    v_t53->callback([&] { run_verify_theorem53(ctx, n); });
    CLI::App* v_rb = verify->add_subcommand("reversal-bound", "lower bound vs BFS distance");
    v_rb->add_option("--n", n, "sequence size")->required();
    v_rb->add_option("--samples", samples, "random states instead of enumeration");
    v_rb->callback([&] { run_verify_reversal_bound(ctx, n, samples); });

    CLI::App* poly_cmd = app.add_subcommand("poly", "cycle-statistic distribution polynomials");
    poly_cmd->require_subcommand(1);
    CLI::App* poly_dist = poly_cmd->add_subcommand("dist", "distribution over all gamma");
    poly_dist->add_option("--pi", pi_text, "one-line permutation; ground = its sorted values")
        ->required();
    poly_dist->add_option("--stat", stat_name, "cycle statistic (default cycles)")
        ->check(CLI::IsMember({"cycles", "odd", "even"}));
    poly_dist->callback([&] { run_poly_dist(ctx, pi_text, stat_name); });

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force reference answers");
    oracle_cmd->require_subcommand(1);
    CLI::App* oracle_dist = oracle_cmd->add_subcommand("dist", "BFS distance to the identity");
    oracle_dist->add_option("--moves", moves_name, "move set")
        ->required()
        ->check(CLI::IsMember({"transposition", "block", "reversal"}));
    oracle_dist->add_option("perm", perm, "sequence (signed for reversal moves)")->required();
    oracle_dist->callback([&] { run_oracle_dist(ctx, moves_name, perm); });

    enable_fallthrough(&app);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace planeperm
