#pragma once

#include <vector>

#include "planeperm/ground_set.hpp"

namespace planeperm {

// A bijection on a ground set, stored as the image of each element in
// canonical index order. Immutable after construction.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(const GroundSet& g);
    // image[i] = pi(g.element(i)); validated to be a bijection on g.
    static Permutation from_images(GroundSet g, std::vector<int> image);
    // cycle (c0 c1 ... ck): c0 -> c1 -> ... -> ck -> c0, everything else fixed.
    static Permutation from_cycle(const GroundSet& g, const std::vector<int>& cycle);
    static Permutation from_cycles(const GroundSet& g,
                                   const std::vector<std::vector<int>>& cycles);
    // The full cycle mapping each entry of seq to the next one (cyclically).
    // seq must list every ground element exactly once.
    static Permutation successor_cycle(const GroundSet& g, const std::vector<int>& seq);

    int apply(int x) const { return image_[ground_.index_of(x)]; }
    int operator()(int x) const { return apply(x); }

    const GroundSet& ground() const { return ground_; }
    int size() const { return ground_.size(); }
    const std::vector<int>& images() const { return image_; }

    Permutation inverse() const;
    bool is_identity() const;

    bool operator==(const Permutation& other) const;
    bool operator!=(const Permutation& other) const { return !(*this == other); }

private:
    GroundSet ground_;
    std::vector<int> image_;  // by canonical index
};

// compose(f, g)(x) = f(g(x));  a product written f*g applies g first.
Permutation compose(const Permutation& outer, const Permutation& inner);
// tau * pi * tau^-1
Permutation conjugate(const Permutation& pi, const Permutation& tau);

struct CycleStats {
    std::vector<std::vector<int>> cycles;  // canonical form, see cycle_stats()
    int count = 0;                         // number of cycles, fixed points included
    int odd_count = 0;                     // cycles of odd length
    int even_count = 0;                    // cycles of even length
    std::vector<int> cycle_type;           // lengths, non-increasing
};

// Canonical cycle decomposition: each cycle starts at its element of minimum
// canonical index and cycles are listed by that index in increasing order.
CycleStats cycle_stats(const Permutation& pi);

struct CycleCounts {
    int total = 0;
    int odd = 0;
    int even = 0;
};

// Same counts as cycle_stats without materializing the cycles.
CycleCounts cycle_counts(const Permutation& pi);
int cycle_count(const Permutation& pi);

}  // namespace planeperm
