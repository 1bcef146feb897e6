#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "planeperm/block_distance.hpp"
#include "planeperm/plane_permutation.hpp"

namespace planeperm {

// A signed sequence: a_1..a_n with |a| a permutation of 1..n. Sorting means
// reaching 1 2 .. n with every sign positive, by segment reversals.
class SignedPermutation {
public:
    explicit SignedPermutation(std::vector<int> values);
    static SignedPermutation identity(int n);
    static SignedPermutation parse(std::string_view text);

    int size() const { return static_cast<int>(values_.size()); }
    const std::vector<int>& values() const { return values_; }
    bool is_sorted_positive() const;

    bool operator==(const SignedPermutation&) const = default;

private:
    std::vector<int> values_;
};

SignedPermutation apply_reversal(const SignedPermutation& a, const Reversal& r);

// The skew-symmetric sequence 0, a_1..a_n, -a_n..-a_1 on {0..n, -1..-n},
// with the cyclic predecessor (-1,-2,..,-n,n,n-1,..,1,0) and the product
// pi = predecessor * successor_cycle(sequence). Reversals of a become block
// interchanges of this sequence that swap a segment with its mirror image.
struct SkewEmbedding {
    std::vector<int> sequence;
    Permutation predecessor;
    Permutation pi;
    bool exact = false;  // some entry is negative
    int n = 0;

    PlanePermutation plane() const;
};

SkewEmbedding skew_embed(const SignedPermutation& a);

// The interchange induced on the skew embedding by reversing a_i..a_j:
// swap positions i..j with their mirror block 2n+1-j..2n+1-i. A transpose
// exactly when j = n.
Interchange to_interchange(const Reversal& r, int n);

// d_r(a) >= (2n+1 - C(pi)) / 2; the gap is always even.
int reversal_lower_bound(const SignedPermutation& a);

// Indices i in 1..n with pi(s_{i-1}) = s_{2n+1-i}: the next element after
// s_{i-1} in its pi-cycle sits at the mirror position.
std::vector<int> crossing_pairs(const SkewEmbedding& e);

// A reversal expected to gain two cycles, built directly from the position
// of the most negative entry. Empty when every entry is positive. Callers
// must verify the gain before trusting it (find_two_reversal does).
std::optional<Reversal> two_reversal_candidate(const SkewEmbedding& e);

// First reversal that gains two cycles: the constructed candidate if it
// checks out, otherwise the first hit of a scan over i <= j. Empty when no
// reversal gains two cycles.
std::optional<Reversal> find_two_reversal(const SkewEmbedding& e);

// Repeatedly applies find_two_reversal; when no reversal gains two cycles,
// falls back to the best available gain (ties to the smallest i, then j).
// Gives up (success = false) after 2n consecutive steps without a new
// cycle-count high-water mark.
SortTrace greedy_sort_reversals(const SignedPermutation& a);

// Breakpoint graph on {0..n, -1..-(n+1)}: theta1 pairs consecutive entries
// of 0, -a_1, a_1, ..., -a_n, a_n, -(n+1); theta2 pairs t with -(t+1).
// Components are counted by walking the graph and cross-checked against
// C(theta1*theta2) = 2 * components.
struct BreakpointMetrics {
    Permutation theta1;
    Permutation theta2;
    int c_bg = 0;          // connected components, each an alternating cycle
    int bg_bound = 0;      // n + 1 - c_bg
    int theta_bound = 0;   // (2n + 2 - C(theta1*theta2)) / 2, equal to bg_bound
    bool relation_holds = false;  // C(skew pi) == 2 * c_bg - 1
};

BreakpointMetrics breakpoint_metrics(const SignedPermutation& a);

}  // namespace planeperm
