#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "planeperm/block_distance.hpp"
#include "planeperm/permutation.hpp"
#include "planeperm/signed_reversal.hpp"

namespace planeperm {

// Every permutation of g, in lexicographic order of the image row.
template <typename F>
void for_each_permutation(const GroundSet& g, F&& f) {
    std::vector<int> image = g.elements();
    std::sort(image.begin(), image.end());
    do {
        f(Permutation::from_images(g, image));
    } while (std::next_permutation(image.begin(), image.end()));
}

// Every permutation of 1..n as a Sequence, in lexicographic order.
template <typename F>
void for_each_sequence(int n, F&& f) {
    std::vector<int> values(static_cast<std::size_t>(n));
    std::iota(values.begin(), values.end(), 1);
    do {
        f(Sequence(values));
    } while (std::next_permutation(values.begin(), values.end()));
}

// Every signed sequence of size n: magnitudes in lexicographic order, signs
// in binary counting order (bit t of the mask negates a_{t+1}).
template <typename F>
void for_each_signed_sequence(int n, F&& f) {
    std::vector<int> mags(static_cast<std::size_t>(n));
    std::iota(mags.begin(), mags.end(), 1);
    do {
        for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
            std::vector<int> values = mags;
            for (int t = 0; t < n; ++t)
                if (mask >> t & 1) values[t] = -values[t];
            f(SignedPermutation(std::move(values)));
        }
    } while (std::next_permutation(mags.begin(), mags.end()));
}

// Every ordering of g that keeps g.element(0) first.
template <typename F>
void for_each_anchored_order(const GroundSet& g, F&& f) {
    if (g.size() == 0) return;
    std::vector<int> rest(g.elements().begin() + 1, g.elements().end());
    std::sort(rest.begin(), rest.end());
    std::vector<int> seq(static_cast<std::size_t>(g.size()));
    seq[0] = g.element(0);
    do {
        std::copy(rest.begin(), rest.end(), seq.begin() + 1);
        f(const_cast<const std::vector<int>&>(seq));
    } while (std::next_permutation(rest.begin(), rest.end()));
}

// Every full cycle on g (anchored representation: the cycle is read off
// starting at g.element(0)).
template <typename F>
void for_each_full_cycle(const GroundSet& g, F&& f) {
    for_each_anchored_order(g, [&g, &f](const std::vector<int>& seq) {
        f(Permutation::successor_cycle(g, seq));
    });
}

}  // namespace planeperm
