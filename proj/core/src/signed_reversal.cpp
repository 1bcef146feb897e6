#include "planeperm/signed_reversal.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "planeperm/text_io.hpp"

namespace planeperm {

SignedPermutation::SignedPermutation(std::vector<int> values) : values_(std::move(values)) {
    const int n = static_cast<int>(values_.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : values_) {
        const int mag = std::abs(v);
        if (mag < 1 || mag > n) {
            std::ostringstream msg;
            msg << "entry " << v << " has magnitude outside 1.." << n;
            throw std::invalid_argument(msg.str());
        }
        if (seen[mag]) {
            std::ostringstream msg;
            msg << "magnitude " << mag << " appears twice";
            throw std::invalid_argument(msg.str());
        }
        seen[mag] = 1;
    }
}

SignedPermutation SignedPermutation::identity(int n) {
    std::vector<int> values(n);
    std::iota(values.begin(), values.end(), 1);
    return SignedPermutation(std::move(values));
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
    return SignedPermutation(parse_int_sequence(text));
}

bool SignedPermutation::is_sorted_positive() const {
    for (int i = 0; i < size(); ++i)
        if (values_[i] != i + 1) return false;
    return true;
}

SignedPermutation apply_reversal(const SignedPermutation& a, const Reversal& r) {
    if (r.i < 1 || r.i > r.j || r.j > a.size()) {
        std::ostringstream msg;
        msg << "reversal (" << r.i << "," << r.j << ") is outside 1.." << a.size();
        throw std::invalid_argument(msg.str());
    }
    std::vector<int> values = a.values();
    std::reverse(values.begin() + (r.i - 1), values.begin() + r.j);
    for (int t = r.i - 1; t < r.j; ++t) values[t] = -values[t];
    return SignedPermutation(std::move(values));
}

PlanePermutation SkewEmbedding::plane() const {
    return PlanePermutation(sequence, pi);
}

SkewEmbedding skew_embed(const SignedPermutation& a) {
    const int n = a.size();
    std::vector<int> seq;
    seq.reserve(2 * static_cast<std::size_t>(n) + 1);
    seq.push_back(0);
    for (int v : a.values()) seq.push_back(v);
    for (int t = n - 1; t >= 0; --t) seq.push_back(-a.values()[t]);

    GroundSet g = GroundSet::signed_zero_to(n);
    std::vector<int> cyc;
    cyc.reserve(2 * static_cast<std::size_t>(n) + 1);
    for (int t = 1; t <= n; ++t) cyc.push_back(-t);
    for (int v = n; v >= 0; --v) cyc.push_back(v);

    SkewEmbedding e;
    e.predecessor = Permutation::from_cycle(g, cyc);
    e.pi = compose(e.predecessor, Permutation::successor_cycle(g, seq));
    e.exact = std::any_of(a.values().begin(), a.values().end(), [](int v) { return v < 0; });
    e.n = n;
    e.sequence = std::move(seq);
    return e;
}

Interchange to_interchange(const Reversal& r, int n) {
    if (r.i < 1 || r.i > r.j || r.j > n) {
        std::ostringstream msg;
        msg << "reversal (" << r.i << "," << r.j << ") is outside 1.." << n;
        throw std::invalid_argument(msg.str());
    }
    return Interchange{r.i, r.j, 2 * n + 1 - r.j, 2 * n + 1 - r.i};
}

int reversal_lower_bound(const SignedPermutation& a) {
    const int gap = 2 * a.size() + 1 - cycle_count(skew_embed(a).pi);
    if (gap % 2 != 0)
        throw std::logic_error("cycle gap of an even permutation must be even");
    return gap / 2;
}

std::vector<int> crossing_pairs(const SkewEmbedding& e) {
    std::vector<int> hits;
    const int m = 2 * e.n + 1;
    for (int i = 1; i <= e.n; ++i)
        if (e.pi(e.sequence[i - 1]) == e.sequence[m - i]) hits.push_back(i);
    return hits;
}

std::optional<Reversal> two_reversal_candidate(const SkewEmbedding& e) {
    int i = 0;
    int lowest = 0;
    for (int t = 1; t <= e.n; ++t) {
        if (e.sequence[t] < lowest) {
            lowest = e.sequence[t];
            i = t;
        }
    }
    if (i == 0) return std::nullopt;
    if (lowest == -e.n) return Reversal{i, e.n};

    // lowest-1 cannot appear in a (it would be more negative), so it sits in
    // the mirror half, at the mirror of the position of -(lowest-1) = |lowest|+1.
    int q = 0;
    for (int t = e.n + 1; t <= 2 * e.n; ++t) {
        if (e.sequence[t] == lowest - 1) {
            q = t;
            break;
        }
    }
    if (q == 0) throw std::logic_error("mirror half must contain the predecessor value");
    const int j = 2 * e.n - q;
    const int p = i - 1;
    return p < j ? Reversal{i, j} : Reversal{j + 1, i - 1};
}

std::optional<Reversal> find_two_reversal(const SkewEmbedding& e) {
    const PlanePermutation state = e.plane();
    auto gains_two = [&state, &e](const Reversal& r) {
        return classify_gain(state, to_interchange(r, e.n)).delta_cycles == 2;
    };
    if (std::optional<Reversal> cand = two_reversal_candidate(e); cand && gains_two(*cand))
        return cand;
    for (int i = 1; i <= e.n; ++i)
        for (int j = i; j <= e.n; ++j)
            if (gains_two(Reversal{i, j})) return Reversal{i, j};
    return std::nullopt;
}

SortTrace greedy_sort_reversals(const SignedPermutation& start) {
    SignedPermutation a = start;
    const int n = a.size();
    SortTrace trace;
    int best_seen = cycle_count(skew_embed(a).pi);
    int stall = 0;

    while (!a.is_sorted_positive()) {
        const SkewEmbedding e = skew_embed(a);
        const int before = cycle_count(e.pi);

        std::optional<Reversal> r = find_two_reversal(e);
        if (!r) {
            int best_delta = std::numeric_limits<int>::min();
            for (int i = 1; i <= n; ++i) {
                for (int j = i; j <= n; ++j) {
                    const Reversal cand{i, j};
                    const int delta =
                        cycle_count(skew_embed(apply_reversal(a, cand)).pi) - before;
                    if (delta > best_delta) {
                        best_delta = delta;
                        r = cand;
                    }
                }
            }
        }

        a = apply_reversal(a, *r);
        const int after = cycle_count(skew_embed(a).pi);
        trace.steps.push_back(SortStep{to_interchange(*r, n), *r, before, after, a.values()});

        if (after > best_seen) {
            best_seen = after;
            stall = 0;
        } else if (++stall > 2 * n) {
            trace.success = false;
            break;
        }
    }

    trace.final_sequence = a.values();
    return trace;
}

namespace {

int find_root(std::vector<int>& parent, int v) {
    while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    return v;
}

}  // namespace

BreakpointMetrics breakpoint_metrics(const SignedPermutation& a) {
    const int n = a.size();
    const GroundSet g = GroundSet::breakpoint_set(n);

    std::vector<int> b;
    b.reserve(2 * static_cast<std::size_t>(n) + 2);
    b.push_back(0);
    for (int v : a.values()) {
        b.push_back(-v);
        b.push_back(v);
    }
    b.push_back(-(n + 1));

    std::vector<std::vector<int>> theta1_pairs;
    std::vector<std::vector<int>> theta2_pairs;
    for (int t = 0; t <= n; ++t) theta1_pairs.push_back({b[2 * t], b[2 * t + 1]});
    for (int t = 0; t <= n; ++t) theta2_pairs.push_back({t, -(t + 1)});

    BreakpointMetrics m;
    m.theta1 = Permutation::from_cycles(g, theta1_pairs);
    m.theta2 = Permutation::from_cycles(g, theta2_pairs);

    std::vector<int> parent(g.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto join = [&parent, &g](int x, int y) {
        parent[find_root(parent, g.index_of(x))] = find_root(parent, g.index_of(y));
    };
    for (const auto& pair : theta1_pairs) join(pair[0], pair[1]);
    for (const auto& pair : theta2_pairs) join(pair[0], pair[1]);
    int components = 0;
    for (int v = 0; v < g.size(); ++v)
        if (find_root(parent, v) == v) ++components;
    m.c_bg = components;

    const int c_product = cycle_count(compose(m.theta1, m.theta2));
    if (c_product != 2 * m.c_bg)
        throw std::logic_error("component count must be half the cycle count of theta1*theta2");

    m.bg_bound = n + 1 - m.c_bg;
    m.theta_bound = (2 * n + 2 - c_product) / 2;
    m.relation_holds = cycle_count(skew_embed(a).pi) == 2 * m.c_bg - 1;
    return m;
}

}  // namespace planeperm
