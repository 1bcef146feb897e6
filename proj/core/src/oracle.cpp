#include "planeperm/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "planeperm/enumerate.hpp"
#include "planeperm/errors.hpp"

namespace planeperm {

const char* to_string(MoveKind kind) {
    switch (kind) {
        case MoveKind::transposition: return "transposition";
        case MoveKind::block_interchange: return "block-interchange";
        case MoveKind::reversal: return "reversal";
    }
    return "?";
}

const char* to_string(CycleStatKind kind) {
    switch (kind) {
        case CycleStatKind::cycles: return "cycles";
        case CycleStatKind::odd: return "odd";
        case CycleStatKind::even: return "even";
    }
    return "?";
}

namespace {

void check_cap(int n, int cap, const char* name) {
    if (n <= cap) return;
    std::ostringstream msg;
    msg << "n = " << n << " exceeds the " << name << " cap (" << cap << ")";
    throw CapExceeded(msg.str());
}

// 1-based inclusive block positions, i <= j < k <= l.
std::vector<int> swap_blocks(const std::vector<int>& v, int i, int j, int k, int l) {
    std::vector<int> out;
    out.reserve(v.size());
    out.insert(out.end(), v.begin(), v.begin() + (i - 1));
    out.insert(out.end(), v.begin() + (k - 1), v.begin() + l);
    out.insert(out.end(), v.begin() + j, v.begin() + (k - 1));
    out.insert(out.end(), v.begin() + (i - 1), v.begin() + j);
    out.insert(out.end(), v.begin() + l, v.end());
    return out;
}

std::vector<int> reverse_negate(const std::vector<int>& v, int i, int j) {
    std::vector<int> out = v;
    std::reverse(out.begin() + (i - 1), out.begin() + j);
    for (int t = i - 1; t < j; ++t) out[t] = -out[t];
    return out;
}

template <typename F>
void for_each_move_result(const std::vector<int>& v, MoveKind kind, F&& f) {
    const int n = static_cast<int>(v.size());
    switch (kind) {
        case MoveKind::reversal:
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j) f(reverse_negate(v, i, j));
            return;
        case MoveKind::transposition:
            for (int i = 1; i <= n; ++i)
                for (int j = i; j < n; ++j)
                    for (int l = j + 1; l <= n; ++l) f(swap_blocks(v, i, j, j + 1, l));
            return;
        case MoveKind::block_interchange:
            for (int i = 1; i <= n; ++i)
                for (int j = i; j < n; ++j)
                    for (int k = j + 1; k <= n; ++k)
                        for (int l = k; l <= n; ++l) f(swap_blocks(v, i, j, k, l));
            return;
    }
}

std::uint64_t state_count(int n, bool with_signs) {
    if (n > 20) throw std::invalid_argument("state space does not fit in 64 bits");
    std::uint64_t total = 1;
    for (int t = 2; t <= n; ++t) total *= static_cast<std::uint64_t>(t);
    if (with_signs) total <<= n;
    return total;
}

std::vector<int> bfs_from(const std::vector<int>& start, MoveKind kind) {
    const int n = static_cast<int>(start.size());
    const bool with_signs = kind == MoveKind::reversal;
    auto rank = [with_signs](const std::vector<int>& v) {
        return with_signs ? signed_rank(v) : lehmer_rank(v);
    };
    auto unrank = [with_signs, n](std::uint64_t r) {
        return with_signs ? signed_unrank(r, n) : lehmer_unrank(r, n);
    };

    std::vector<int> dist(state_count(n, with_signs), -1);
    std::queue<std::uint64_t> frontier;
    dist[rank(start)] = 0;
    frontier.push(rank(start));
    while (!frontier.empty()) {
        const std::uint64_t r = frontier.front();
        frontier.pop();
        const std::vector<int> v = unrank(r);
        const int d = dist[r];
        for_each_move_result(v, kind, [&dist, &frontier, &rank, d](const std::vector<int>& w) {
            const std::uint64_t wr = rank(w);
            if (dist[wr] < 0) {
                dist[wr] = d + 1;
                frontier.push(wr);
            }
        });
    }
    return dist;
}

std::vector<int> sorted_values(int n) {
    std::vector<int> values(static_cast<std::size_t>(n));
    std::iota(values.begin(), values.end(), 1);
    return values;
}

void check_bfs_cap(int n, MoveKind kind, const Caps& caps) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (kind == MoveKind::reversal)
        check_cap(n, caps.signed_bfs, "signed_bfs");
    else
        check_cap(n, caps.unsigned_bfs, "unsigned_bfs");
}

}  // namespace

std::uint64_t lehmer_rank(const std::vector<int>& values) {
    const int n = static_cast<int>(values.size());
    std::uint64_t r = 0;
    for (int t = 0; t < n; ++t) {
        int smaller = 0;
        for (int u = t + 1; u < n; ++u)
            if (values[u] < values[t]) ++smaller;
        r = r * static_cast<std::uint64_t>(n - t) + static_cast<std::uint64_t>(smaller);
    }
    return r;
}

std::vector<int> lehmer_unrank(std::uint64_t rank, int n) {
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    for (int t = n - 1; t >= 0; --t) {
        const std::uint64_t base = static_cast<std::uint64_t>(n - t);
        digits[t] = static_cast<int>(rank % base);
        rank /= base;
    }
    if (rank != 0) throw std::invalid_argument("rank out of range");
    std::vector<int> pool = sorted_values(n);
    std::vector<int> values;
    values.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
        values.push_back(pool[digits[t]]);
        pool.erase(pool.begin() + digits[t]);
    }
    return values;
}

std::uint64_t signed_rank(const std::vector<int>& values) {
    const int n = static_cast<int>(values.size());
    std::vector<int> mags(values.size());
    std::uint64_t bits = 0;
    for (int t = 0; t < n; ++t) {
        mags[t] = std::abs(values[t]);
        if (values[t] < 0) bits |= 1ull << t;
    }
    return (lehmer_rank(mags) << n) | bits;
}

std::vector<int> signed_unrank(std::uint64_t rank, int n) {
    std::vector<int> values = lehmer_unrank(rank >> n, n);
    for (int t = 0; t < n; ++t)
        if (rank >> t & 1) values[t] = -values[t];
    return values;
}

std::vector<int> distance_table(int n, MoveKind kind, const Caps& caps) {
    check_bfs_cap(n, kind, caps);
    return bfs_from(sorted_values(n), kind);
}

int bfs_distance(const Sequence& s, MoveKind kind, const Caps& caps) {
    if (kind == MoveKind::reversal)
        throw std::invalid_argument("reversal distance takes a signed sequence");
    check_bfs_cap(s.size(), kind, caps);
    const std::vector<int> dist = bfs_from(s.values(), kind);
    const int d = dist[lehmer_rank(sorted_values(s.size()))];
    if (d < 0) throw std::logic_error("identity not reached by BFS");
    return d;
}

int bfs_distance(const Sequence& from, const Sequence& to, MoveKind kind, const Caps& caps) {
    if (kind == MoveKind::reversal)
        throw std::invalid_argument("reversal distance takes a signed sequence");
    if (from.size() != to.size())
        throw std::invalid_argument("endpoints must have the same size");
    check_bfs_cap(from.size(), kind, caps);
    const std::vector<int> dist = bfs_from(from.values(), kind);
    const int d = dist[lehmer_rank(to.values())];
    if (d < 0) throw std::logic_error("target not reached by BFS");
    return d;
}

int bfs_distance(const SignedPermutation& a, const Caps& caps) {
    check_bfs_cap(a.size(), MoveKind::reversal, caps);
    const std::vector<int> dist = bfs_from(a.values(), MoveKind::reversal);
    const int d = dist[signed_rank(sorted_values(a.size()))];
    if (d < 0) throw std::logic_error("identity not reached by BFS");
    return d;
}

std::map<int, long long> census(int n, MoveKind kind, const Caps& caps) {
    const std::vector<int> dist = distance_table(n, kind, caps);
    std::map<int, long long> counts;
    for (const int d : dist) {
        if (d < 0) throw std::logic_error("move graph is disconnected");
        ++counts[d];
    }
    return counts;
}

std::map<int, BigInt> zagier_census(int n, const Caps& caps) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    check_cap(n, caps.enumeration, "enumeration");
    const GroundSet g = GroundSet::one_to(n);
    const Permutation full = Permutation::successor_cycle(g, g.elements());
    std::map<int, BigInt> counts;
    for_each_full_cycle(g, [&counts, &full](const Permutation& omega) {
        ++counts[cycle_count(compose(omega, full))];
    });
    return counts;
}

std::map<int, BigInt> zagier_formula(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    const std::vector<BigInt> row = stirling_first_row(n + 1);
    const BigInt denom = BigInt(n) * (n + 1);
    std::map<int, BigInt> counts;
    BigInt total = 0;
    for (int k = n; k >= 1; k -= 2) {
        const BigInt numer = 2 * row[static_cast<std::size_t>(k)];
        if (numer % denom != 0)
            throw std::logic_error("cycle census division is not exact");
        counts[k] = numer / denom;
        total += counts[k];
    }
    if (total != factorial(n - 1))
        throw std::logic_error("cycle census must sum to (n-1)!");
    return counts;
}

namespace {

int stat_of(const CycleCounts& c, CycleStatKind kind) {
    switch (kind) {
        case CycleStatKind::cycles: return c.total;
        case CycleStatKind::odd: return c.odd;
        case CycleStatKind::even: return c.even;
    }
    return 0;
}

}  // namespace

int LaurentPoly::min_exponent() const {
    if (coeff.empty()) throw std::logic_error("empty polynomial");
    return coeff.begin()->first;
}

int LaurentPoly::max_exponent() const {
    if (coeff.empty()) throw std::logic_error("empty polynomial");
    return coeff.rbegin()->first;
}

const Permutation& LaurentPoly::argmin() const { return first_witness.at(min_exponent()); }

const Permutation& LaurentPoly::argmax() const { return first_witness.at(max_exponent()); }

LaurentPoly distribution_poly(const Permutation& pi, CycleStatKind stat, const Caps& caps) {
    check_cap(pi.size(), caps.enumeration, "enumeration");
    LaurentPoly poly;
    poly.ground_size = pi.size();
    for_each_permutation(pi.ground(), [&poly, &pi, stat](const Permutation& gamma) {
        const int e =
            stat_of(cycle_counts(compose(pi, gamma)), stat) - stat_of(cycle_counts(gamma), stat);
        const auto [it, inserted] = poly.coeff.try_emplace(e, 0);
        ++it->second;
        if (inserted) poly.first_witness.emplace(e, gamma);
    });
    return poly;
}

std::string format_laurent(const LaurentPoly& poly) {
    if (poly.coeff.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : poly.coeff) {
        if (!first) out << " + ";
        first = false;
        if (e == 0) {
            out << c;
            continue;
        }
        if (c != 1) out << c << " ";
        out << "z";
        if (e != 1) out << "^" << e;
    }
    return out.str();
}

namespace {

bool same_cycle(const Permutation& pi, int x, int y) {
    if (x == y) return true;
    for (int z = pi(x); z != x; z = pi(z))
        if (z == y) return true;
    return false;
}

}  // namespace

ConjectureReport check_conjecture(Conjecture which, int n_max, const Caps& caps) {
    if (n_max < 1) throw std::invalid_argument("n_max must be positive");
    check_cap(n_max, caps.conjecture, "conjecture");
    ConjectureReport report;
    report.id = which;
    report.n_max = n_max;
    for (int n = 1; n <= n_max && !report.counterexample; ++n) {
        report.checked_by_n[n] = 0;
        for_each_signed_sequence(n, [&report, which, n](const SignedPermutation& a) {
            if (report.counterexample) return;
            const SkewEmbedding e = skew_embed(a);
            if (which == Conjecture::c71 && !(e.exact && !crossing_pairs(e).empty())) return;
            ++report.states_checked;
            ++report.checked_by_n[n];
            if (!same_cycle(e.pi, n, e.sequence[static_cast<std::size_t>(n)]))
                report.counterexample = a;
        });
    }
    return report;
}

TightnessReport reversal_tightness_report(int n_max, const Caps& caps) {
    if (n_max < 1) throw std::invalid_argument("n_max must be positive");
    check_cap(n_max, caps.signed_bfs, "signed_bfs");
    TightnessReport report;
    for (int n = 1; n <= n_max; ++n) {
        const std::vector<int> dist = bfs_from(sorted_values(n), MoveKind::reversal);
        TightnessRow row;
        row.n = n;
        for_each_signed_sequence(n, [&](const SignedPermutation& a) {
            ++row.states;
            const int bound = reversal_lower_bound(a);
            if (bound == dist[signed_rank(a.values())]) ++row.bound_equals_distance;
            if (breakpoint_metrics(a).relation_holds)
                ++row.relation_holds;
            else
                report.relation_failures.push_back(a);
            const SortTrace greedy = greedy_sort_reversals(a);
            if (greedy.success && static_cast<int>(greedy.steps.size()) == bound)
                ++row.greedy_equals_bound;
        });
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace planeperm
