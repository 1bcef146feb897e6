#include "planeperm/permutation.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace planeperm {

Permutation Permutation::identity(const GroundSet& g) {
    Permutation p;
    p.ground_ = g;
    p.image_ = g.elements();
    return p;
}

Permutation Permutation::from_images(GroundSet g, std::vector<int> image) {
    if (static_cast<int>(image.size()) != g.size())
        throw std::invalid_argument("image list has wrong length");
    std::vector<char> seen(image.size(), 0);
    for (int x : image) {
        int idx = g.index_of(x);  // throws if x is outside the ground set
        if (seen[idx]) throw std::invalid_argument("image repeats element " + std::to_string(x));
        seen[idx] = 1;
    }
    Permutation p;
    p.ground_ = std::move(g);
    p.image_ = std::move(image);
    return p;
}

Permutation Permutation::from_cycle(const GroundSet& g, const std::vector<int>& cycle) {
    return from_cycles(g, {cycle});
}

Permutation Permutation::from_cycles(const GroundSet& g,
                                     const std::vector<std::vector<int>>& cycles) {
    std::vector<int> image = g.elements();
    std::vector<char> used(image.size(), 0);
    for (const auto& cycle : cycles) {
        for (size_t r = 0; r < cycle.size(); ++r) {
            int from = cycle[r];
            int to = cycle[(r + 1) % cycle.size()];
            int idx = g.index_of(from);
            if (used[idx])
                throw std::invalid_argument("cycles overlap at " + std::to_string(from));
            used[idx] = 1;
            image[idx] = to;
        }
    }
    return from_images(g, std::move(image));
}

Permutation Permutation::successor_cycle(const GroundSet& g, const std::vector<int>& seq) {
    if (static_cast<int>(seq.size()) != g.size())
        throw std::invalid_argument("sequence does not cover the ground set");
    std::vector<int> image(seq.size());
    std::vector<char> seen(seq.size(), 0);
    for (size_t r = 0; r < seq.size(); ++r) {
        int idx = g.index_of(seq[r]);
        if (seen[idx])
            throw std::invalid_argument("sequence repeats element " + std::to_string(seq[r]));
        seen[idx] = 1;
        image[idx] = seq[(r + 1) % seq.size()];
    }
    Permutation p;
    p.ground_ = g;
    p.image_ = std::move(image);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> image(image_.size());
    for (size_t i = 0; i < image_.size(); ++i)
        image[ground_.index_of(image_[i])] = ground_.element(static_cast<int>(i));
    Permutation p;
    p.ground_ = ground_;
    p.image_ = std::move(image);
    return p;
}

bool Permutation::is_identity() const {
    return image_ == ground_.elements();
}

bool Permutation::operator==(const Permutation& other) const {
    return ground_ == other.ground_ && image_ == other.image_;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
    if (outer.ground() != inner.ground())
        throw std::invalid_argument("compose: permutations live on different ground sets");
    const auto& g = outer.ground();
    std::vector<int> image(inner.images().size());
    for (size_t i = 0; i < image.size(); ++i)
        image[i] = outer.images()[g.index_of(inner.images()[i])];
    return Permutation::from_images(g, std::move(image));
}

Permutation conjugate(const Permutation& pi, const Permutation& tau) {
    return compose(compose(tau, pi), tau.inverse());
}

CycleStats cycle_stats(const Permutation& pi) {
    const auto& g = pi.ground();
    int n = g.size();
    CycleStats out;
    std::vector<char> visited(n, 0);
    for (int start = 0; start < n; ++start) {
        if (visited[start]) continue;
        std::vector<int> cycle;
        int idx = start;
        while (!visited[idx]) {
            visited[idx] = 1;
            cycle.push_back(g.element(idx));
            idx = g.index_of(pi.images()[idx]);
        }
        int len = static_cast<int>(cycle.size());
        out.count += 1;
        (len % 2 ? out.odd_count : out.even_count) += 1;
        out.cycle_type.push_back(len);
        out.cycles.push_back(std::move(cycle));
    }
    std::sort(out.cycle_type.begin(), out.cycle_type.end(), std::greater<int>());
    return out;
}

CycleCounts cycle_counts(const Permutation& pi) {
    const auto& g = pi.ground();
    int n = g.size();
    CycleCounts out;
    std::vector<char> visited(n, 0);
    for (int start = 0; start < n; ++start) {
        if (visited[start]) continue;
        int len = 0;
        int idx = start;
        while (!visited[idx]) {
            visited[idx] = 1;
            ++len;
            idx = g.index_of(pi.images()[idx]);
        }
        out.total += 1;
        (len % 2 ? out.odd : out.even) += 1;
    }
    return out;
}

int cycle_count(const Permutation& pi) {
    return cycle_counts(pi).total;
}

}  // namespace planeperm
