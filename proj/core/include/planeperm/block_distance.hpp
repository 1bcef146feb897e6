#pragma once

#include <map>
#include <optional>
#include <vector>

#include "planeperm/plane_permutation.hpp"
#include "planeperm/stirling.hpp"

namespace planeperm {

// A sequence to sort: a permutation of 1..n in one-line form.
class Sequence {
public:
    explicit Sequence(std::vector<int> values);
    static Sequence identity(int n);
    static Sequence parse(std::string_view text);

    int size() const { return static_cast<int>(values_.size()); }
    const std::vector<int>& values() const { return values_; }
    bool is_sorted() const;

    bool operator==(const Sequence&) const = default;

private:
    std::vector<int> values_;
};

// The augmented form 0 a_1 ... a_n on {0..n}, together with the cyclic
// predecessor map (x -> x-1, 0 -> n) and their product. The cycle counts of
// the product drive every distance formula below.
struct AugmentedCycle {
    std::vector<int> sequence;  // 0, a_1, ..., a_n
    Permutation predecessor;    // x -> x-1 cyclically
    Permutation product;        // predecessor * successor_cycle(sequence)

    // The plane permutation (sequence, product); its diagonal is the
    // successor map x -> x+1 cyclically, which sorting must preserve.
    PlanePermutation plane() const;
};

AugmentedCycle augment(const Sequence& s);

// Lower and upper bounds on transposition distance.
struct Bounds {
    int lower_cycles = 0;
    int lower_odd = 0;
    int lower_even = 0;
    int lower_best = 0;
    int upper = 0;
    // The three gaps are provably even; ceil rounding never fires in practice
    // and this flag records that it did not.
    bool parity_ok = true;
};

// Default comparison point: gamma = product^-1, which turns the gaps into
// (n+1-C)/2, (n+1-C_odd)/2 and C_even/2.
Bounds td_bounds(const Sequence& s);
// Gaps |C(product*gamma) - C(gamma)| / 2 etc. for a caller-chosen gamma
// on {0..n}. The upper bound does not depend on gamma.
Bounds td_bounds(const Sequence& s, const Permutation& gamma);

// Exact block-interchange distance (n+1 - C)/2.
int bid_exact(const Sequence& s);

// A cycle-gaining interchange for any unsorted state whose diagonal is the
// successor map: locate the largest x whose successor x+1 sits left of x,
// then the largest y > x between them; swapping the enclosed blocks always
// gains two cycles. Throws std::invalid_argument on a sorted state.
Interchange find_gain_interchange(const PlanePermutation& p);

// Reverse the segment a_i..a_j of a signed sequence (1-based, inclusive) and
// negate every entry in it. Defined here so that reversal sorts and
// block-interchange sorts share one trace format.
struct Reversal {
    int i = 0;
    int j = 0;
    bool operator==(const Reversal&) const = default;
};

struct SortStep {
    Interchange move;
    std::optional<Reversal> reversal;  // set for reversal traces only
    int cycles_before = 0;
    int cycles_after = 0;
    std::vector<int> state_after;  // user-facing sequence after the move
};

struct SortTrace {
    std::vector<SortStep> steps;
    std::vector<int> final_sequence;
    bool success = true;
};

// Sorts s with exactly bid_exact(s) interchanges, each gaining two cycles.
// With expand_to_transpositions, every non-adjacent interchange is rewritten
// as two adjacent-block swaps, so the trace has at most 2*bid(s) moves and
// witnesses the transposition upper bound.
SortTrace sort_by_block_interchanges(const Sequence& s, bool expand_to_transpositions = false);

// Number of sequences of size n at each block-interchange distance k,
// in closed form: 2*c(n+2, n+1-2k) / ((n+1)(n+2)). Exact division and the
// total sum n! are both asserted.
std::map<int, BigInt> bid_census_formula(int n);

// max over all gamma of |C(alpha*gamma) - C(gamma)| = n - C(alpha),
// attained at gamma = alpha^-1 and at gamma = identity.
struct CycleGap {
    int value = 0;
    Permutation witness_inverse;
    Permutation witness_identity;
};
CycleGap max_cycle_gap(const Permutation& alpha);

}  // namespace planeperm
