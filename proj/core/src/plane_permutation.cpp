#include "planeperm/plane_permutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

namespace planeperm {

void validate_interchange(const Interchange& h, int n) {
    if (!(1 <= h.i && h.i <= h.j && h.j < h.k && h.k <= h.l && h.l <= n - 1))
        throw std::invalid_argument("interchange (" + std::to_string(h.i) + "," +
                                    std::to_string(h.j) + "," + std::to_string(h.k) + "," +
                                    std::to_string(h.l) + ") is out of range for length " +
                                    std::to_string(n));
}

PlanePermutation::PlanePermutation(std::vector<int> seq, Permutation pi)
    : seq_(std::move(seq)), pi_(std::move(pi)) {
    if (static_cast<int>(seq_.size()) != pi_.size())
        throw std::invalid_argument("sequence length does not match the ground set");
    std::vector<char> seen(seq_.size(), 0);
    for (int x : seq_) {
        int idx = pi_.ground().index_of(x);
        if (seen[idx])
            throw std::invalid_argument("sequence repeats element " + std::to_string(x));
        seen[idx] = 1;
    }
}

Permutation PlanePermutation::sequence_cycle() const {
    return Permutation::successor_cycle(ground(), seq_);
}

Permutation PlanePermutation::diagonal() const {
    return compose(sequence_cycle(), pi_.inverse());
}

std::string PlanePermutation::two_row() const {
    int n = size();
    std::vector<std::string> top(n), bottom(n);
    for (int r = 0; r < n; ++r) {
        top[r] = std::to_string(seq_[r]);
        bottom[r] = std::to_string(pi_.apply(seq_[r]));
    }
    std::ostringstream out;
    for (const auto* row : {&top, &bottom}) {
        for (int r = 0; r < n; ++r) {
            size_t width = std::max(top[r].size(), bottom[r].size());
            if (r) out << ' ';
            out << std::string(width - (*row)[r].size(), ' ') << (*row)[r];
        }
        if (row == &top) out << '\n';
    }
    return out.str();
}

PlanePermutation apply_interchange(const PlanePermutation& p, const Interchange& h) {
    int n = p.size();
    validate_interchange(h, n);
    const auto& s = p.seq();
    const auto& g = p.ground();

    std::vector<int> seq;
    seq.reserve(n);
    seq.insert(seq.end(), s.begin(), s.begin() + h.i);
    seq.insert(seq.end(), s.begin() + h.k, s.begin() + h.l + 1);
    seq.insert(seq.end(), s.begin() + h.j + 1, s.begin() + h.k);
    seq.insert(seq.end(), s.begin() + h.i, s.begin() + h.j + 1);
    seq.insert(seq.end(), s.begin() + h.l + 1, s.end());

    // The new pi is the unique one keeping the diagonal fixed: it sends x to
    // diagonal^-1(successor of x in the new sequence), where diagonal^-1
    // maps s_r to pi(s_{r-1}).
    std::vector<int> diag_inv(n);
    for (int r = 0; r < n; ++r)
        diag_inv[g.index_of(s[r])] = p.pi().apply(s[(r + n - 1) % n]);
    std::vector<int> image(n);
    for (int r = 0; r < n; ++r)
        image[g.index_of(seq[r])] = diag_inv[g.index_of(seq[(r + 1) % n])];

    return PlanePermutation(PlanePermutation::unchecked_t{}, std::move(seq),
                            Permutation::from_images(g, std::move(image)));
}

const char* to_string(GainCase c) {
    switch (c) {
        case GainCase::transpose_1: return "transpose case 1";
        case GainCase::transpose_2: return "transpose case 2";
        case GainCase::transpose_3: return "transpose case 3";
        case GainCase::transpose_4: return "transpose case 4";
        case GainCase::transpose_5: return "transpose case 5";
        case GainCase::transpose_6: return "transpose case 6";
        case GainCase::interchange_a: return "interchange case a";
        case GainCase::interchange_b: return "interchange case b";
        case GainCase::interchange_c: return "interchange case c";
        case GainCase::interchange_d: return "interchange case d";
        case GainCase::interchange_e: return "interchange case e";
        case GainCase::other: return "other";
    }
    return "?";
}

namespace {

// Elements of {targets} in the order the pi-walk from start first meets them.
std::vector<int> encounter_order(const Permutation& pi, int start,
                                 const std::vector<int>& targets) {
    std::vector<int> order;
    for (int x = pi.apply(start); x != start; x = pi.apply(x))
        if (std::find(targets.begin(), targets.end(), x) != targets.end()) order.push_back(x);
    return order;
}

GainCase match_case(const Permutation& pi, const Interchange& h, const std::vector<int>& s) {
    int a = s[h.i - 1], b = s[h.j], k = s[h.k - 1], l = s[h.l];
    if (h.is_transpose()) {
        auto from_a = encounter_order(pi, a, {b, l});
        if (from_a.size() == 2)
            return from_a[0] == l ? GainCase::transpose_2 : GainCase::transpose_3;
        if (from_a.size() == 1 && from_a[0] == b) return GainCase::transpose_4;
        if (from_a.size() == 1 && from_a[0] == l) return GainCase::transpose_6;
        auto from_b = encounter_order(pi, b, {l});
        return from_b.empty() ? GainCase::transpose_1 : GainCase::transpose_5;
    }
    auto from_a = encounter_order(pi, a, {b, k, l});
    if (from_a.size() == 3) {
        if (from_a == std::vector<int>{b, l, k}) return GainCase::interchange_a;
        if (from_a == std::vector<int>{k, b, l}) return GainCase::interchange_b;
        if (from_a == std::vector<int>{k, l, b}) return GainCase::interchange_c;
        if (from_a == std::vector<int>{l, b, k}) return GainCase::interchange_d;
        return GainCase::other;
    }
    if (from_a == std::vector<int>{k} && !encounter_order(pi, b, {l}).empty())
        return GainCase::interchange_e;
    return GainCase::other;
}

int implied_delta(GainCase c) {
    switch (c) {
        case GainCase::transpose_1: return -2;
        case GainCase::transpose_2:
        case GainCase::interchange_a:
        case GainCase::interchange_b:
        case GainCase::interchange_c:
        case GainCase::interchange_d:
        case GainCase::interchange_e: return +2;
        default: return 0;
    }
}

}  // namespace

GainClassification classify_gain(const PlanePermutation& p, const Interchange& h) {
    validate_interchange(h, p.size());
    CycleCounts before = cycle_counts(p.pi());
    PlanePermutation q = apply_interchange(p, h);
    CycleCounts after = cycle_counts(q.pi());

    GainClassification out;
    out.delta_cycles = after.total - before.total;
    out.delta_odd = after.odd - before.odd;
    out.delta_even = after.even - before.even;
    out.case_label = match_case(p.pi(), h, p.seq());

    bool consistent = out.case_label == GainCase::other
                          ? out.delta_cycles != +2
                          : out.delta_cycles == implied_delta(out.case_label);
    if (!consistent)
        throw std::logic_error("gain classification disagrees with recomputed cycle delta");
    return out;
}

}  // namespace planeperm
