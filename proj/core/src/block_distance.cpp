#include "planeperm/block_distance.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "planeperm/text_io.hpp"

namespace planeperm {

Sequence::Sequence(std::vector<int> values) : values_(std::move(values)) {
    const int n = static_cast<int>(values_.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : values_) {
        if (v < 1 || v > n) {
            std::ostringstream msg;
            msg << "sequence entry " << v << " is outside 1.." << n;
            throw std::invalid_argument(msg.str());
        }
        if (seen[v]) {
            std::ostringstream msg;
            msg << "sequence entry " << v << " appears twice";
            throw std::invalid_argument(msg.str());
        }
        seen[v] = 1;
    }
}

Sequence Sequence::identity(int n) {
    std::vector<int> values(n);
    for (int i = 0; i < n; ++i) values[i] = i + 1;
    return Sequence(std::move(values));
}

Sequence Sequence::parse(std::string_view text) {
    return Sequence(parse_int_sequence(text));
}

bool Sequence::is_sorted() const {
    for (int i = 0; i < size(); ++i)
        if (values_[i] != i + 1) return false;
    return true;
}

PlanePermutation AugmentedCycle::plane() const {
    return PlanePermutation(sequence, product);
}

AugmentedCycle augment(const Sequence& s) {
    const int n = s.size();
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(n) + 1);
    seq.push_back(0);
    seq.insert(seq.end(), s.values().begin(), s.values().end());

    GroundSet g = GroundSet::zero_to(n);
    std::vector<int> countdown(static_cast<std::size_t>(n) + 1);
    for (int r = 0; r <= n; ++r) countdown[r] = n - r;
    Permutation predecessor = Permutation::from_cycle(g, countdown);
    Permutation product = compose(predecessor, Permutation::successor_cycle(g, seq));
    return AugmentedCycle{std::move(seq), std::move(predecessor), std::move(product)};
}

namespace {

int ceil_half(int gap, bool& parity_ok) {
    if (gap % 2 != 0) parity_ok = false;
    return (gap + 1) / 2;
}

}  // namespace

Bounds td_bounds(const Sequence& s, const Permutation& gamma) {
    AugmentedCycle ac = augment(s);
    if (gamma.ground() != ac.product.ground())
        throw std::invalid_argument("gamma must act on {0..n}");

    CycleCounts at_gamma = cycle_counts(gamma);
    CycleCounts moved = cycle_counts(compose(ac.product, gamma));

    Bounds b;
    b.lower_cycles = ceil_half(std::abs(moved.total - at_gamma.total), b.parity_ok);
    b.lower_odd = ceil_half(std::abs(moved.odd - at_gamma.odd), b.parity_ok);
    b.lower_even = ceil_half(std::abs(moved.even - at_gamma.even), b.parity_ok);
    b.lower_best = std::max({b.lower_cycles, b.lower_odd, b.lower_even});
    b.upper = s.size() + 1 - cycle_count(ac.product);
    return b;
}

Bounds td_bounds(const Sequence& s) {
    return td_bounds(s, augment(s).product.inverse());
}

int bid_exact(const Sequence& s) {
    const int gap = s.size() + 1 - cycle_count(augment(s).product);
    if (gap % 2 != 0)
        throw std::logic_error("cycle gap of an even permutation must be even");
    return gap / 2;
}

Interchange find_gain_interchange(const PlanePermutation& p) {
    const std::vector<int>& seq = p.seq();
    const int m = p.size();  // n+1 entries
    const int n = m - 1;

    const GroundSet& g = p.ground();
    for (int idx = 0; idx < m; ++idx)
        if (g.element(idx) != idx)
            throw std::invalid_argument("state must live on the ground set {0..n}");
    if (seq[0] != 0) throw std::invalid_argument("sequence must be anchored at 0");
    const Permutation& pi = p.pi();
    for (int r = 0; r < m; ++r) {
        // diagonal = successor map  <=>  pi(s_{r-1}) = s_r - 1 (mod n+1)
        if (pi(seq[(r + m - 1) % m]) != (seq[r] + n) % m)
            throw std::invalid_argument("state diagonal is not the successor map");
    }

    std::vector<int> pos(m);
    for (int r = 0; r < m; ++r) pos[seq[r]] = r;

    int x = 0;
    for (int v = n - 1; v >= 1; --v) {
        if (pos[v + 1] < pos[v]) {
            x = v;
            break;
        }
    }
    if (x == 0) throw std::invalid_argument("already sorted: no descent to fix");

    const int i = pos[x + 1];
    const int k = pos[x] + 1;
    // Largest value above x strictly between x+1 and x; the window is
    // nonempty because it contains s_i = x+1.
    int y = 0;
    for (int r = i; r <= k - 2; ++r)
        if (seq[r] > x) y = std::max(y, seq[r]);
    const int j = pos[y];
    const int l = (y == n) ? n : pos[y + 1] - 1;

    Interchange h = (l == k - 1) ? Interchange{i, j, j + 1, l} : Interchange{i, j, k, l};
    validate_interchange(h, m);
    return h;
}

SortTrace sort_by_block_interchanges(const Sequence& s, bool expand_to_transpositions) {
    PlanePermutation state = augment(s).plane();
    SortTrace trace;

    auto apply_and_record = [&trace, &state](const Interchange& h) {
        const int before = cycle_count(state.pi());
        state = apply_interchange(state, h);
        const int after = cycle_count(state.pi());
        std::vector<int> user(state.seq().begin() + 1, state.seq().end());
        trace.steps.push_back(SortStep{h, std::nullopt, before, after, std::move(user)});
        return after - before;
    };

    while (!state.pi().is_identity()) {
        const Interchange h = find_gain_interchange(state);
        int gained = 0;
        if (expand_to_transpositions && !h.is_transpose()) {
            // Swap the right block past the middle, then put the left block
            // after it: two adjacent-block swaps with the same end state.
            const int shift = h.l - h.k + 1;
            gained += apply_and_record(Interchange{h.i, h.k - 1, h.k, h.l});
            gained += apply_and_record(Interchange{h.i + shift, h.j + shift, h.j + shift + 1, h.l});
        } else {
            gained = apply_and_record(h);
        }
        if (gained != 2) throw std::logic_error("sort step failed to gain two cycles");
    }

    trace.final_sequence.assign(state.seq().begin() + 1, state.seq().end());
    return trace;
}

std::map<int, BigInt> bid_census_formula(int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    const std::vector<BigInt> row = stirling_first_row(n + 2);
    const BigInt denom = BigInt(n + 1) * (n + 2);

    std::map<int, BigInt> census;
    BigInt total = 0;
    for (int k = 0; 2 * k <= n; ++k) {
        const BigInt numer = 2 * row[static_cast<std::size_t>(n + 1 - 2 * k)];
        if (numer % denom != 0)
            throw std::logic_error("census formula division is not exact");
        census[k] = numer / denom;
        total += census[k];
    }
    if (total != factorial(n))
        throw std::logic_error("census counts must sum to n!");
    return census;
}

CycleGap max_cycle_gap(const Permutation& alpha) {
    CycleGap gap;
    gap.value = alpha.size() - cycle_count(alpha);
    gap.witness_inverse = alpha.inverse();
    gap.witness_identity = Permutation::identity(alpha.ground());
    return gap;
}

}  // namespace planeperm
