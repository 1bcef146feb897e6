#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "planeperm/block_distance.hpp"
#include "planeperm/enumerate.hpp"
#include "planeperm/ground_set.hpp"
#include "planeperm/permutation.hpp"
#include "planeperm/plane_permutation.hpp"

using namespace planeperm;

namespace {

Permutation random_permutation(const GroundSet& g, std::mt19937_64& rng) {
    std::vector<int> image = g.elements();
    for (std::size_t t = image.size(); t > 1; --t) {
        std::swap(image[t - 1], image[rng() % t]);
    }
    return Permutation::from_images(g, std::move(image));
}

std::vector<Interchange> all_interchanges(int m) {
    std::vector<Interchange> out;
    for (int i = 1; i <= m - 1; ++i)
        for (int j = i; j <= m - 1; ++j)
            for (int k = j + 1; k <= m - 1; ++k)
                for (int l = k; l <= m - 1; ++l) out.push_back({i, j, k, l});
    return out;
}

// Splice the two blocks by hand: prefix, [k..l], [j+1..k-1], [i..j], suffix.
std::vector<int> spliced(const std::vector<int>& s, const Interchange& h) {
    std::vector<int> out(s.begin(), s.begin() + h.i);
    out.insert(out.end(), s.begin() + h.k, s.begin() + h.l + 1);
    out.insert(out.end(), s.begin() + h.j + 1, s.begin() + h.k);
    out.insert(out.end(), s.begin() + h.i, s.begin() + h.j + 1);
    out.insert(out.end(), s.begin() + h.l + 1, s.end());
    return out;
}

}  // namespace

TEST_CASE("plane permutations expose their two-row form") {
    const PlanePermutation p = augment(Sequence({3, 2, 1})).plane();
    CHECK(p.two_row() == "0 3 2 1\n2 1 0 3");
    CHECK(p.seq() == std::vector<int>{0, 3, 2, 1});
    CHECK(p.size() == 4);
    CHECK(p.ground() == GroundSet::zero_to(3));
}

TEST_CASE("plane permutations validate the sequence row") {
    const GroundSet g = GroundSet::zero_to(3);
    const Permutation pi = Permutation::identity(g);
    CHECK_THROWS_AS(PlanePermutation({0, 1, 2, 2}, pi), std::invalid_argument);
    CHECK_THROWS_AS(PlanePermutation({0, 1, 2}, pi), std::invalid_argument);
    CHECK_THROWS_AS(PlanePermutation({0, 1, 2, 4}, pi), std::invalid_argument);
}

TEST_CASE("the diagonal sends each image to the next sequence entry") {
    std::mt19937_64 rng(21);
    const GroundSet g = GroundSet::zero_to(5);
    for (int round = 0; round < 30; ++round) {
        std::vector<int> seq = random_permutation(g, rng).images();
        const Permutation pi = random_permutation(g, rng);
        const PlanePermutation p(seq, pi);
        const Permutation d = p.diagonal();
        const int m = p.size();
        for (int r = 0; r < m; ++r) {
            CHECK(d(pi(seq[static_cast<std::size_t>((r + m - 1) % m)])) ==
                  seq[static_cast<std::size_t>(r)]);
        }
        CHECK(d == compose(p.sequence_cycle(), pi.inverse()));
    }
    // sorting states have the successor diagonal
    const Permutation d = augment(Sequence({2, 4, 1, 3})).plane().diagonal();
    CHECK(d.images() == std::vector<int>{1, 2, 3, 4, 0});
}

TEST_CASE("interchange validation rejects out-of-range quadruples") {
    CHECK_NOTHROW(validate_interchange({1, 1, 2, 2}, 3));
    CHECK_THROWS_AS(validate_interchange({0, 1, 2, 2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(validate_interchange({1, 2, 2, 2}, 3), std::invalid_argument);  // j >= k
    CHECK_THROWS_AS(validate_interchange({1, 1, 2, 3}, 3), std::invalid_argument);  // l > m-1
    CHECK_THROWS_AS(validate_interchange({1, 1, 3, 2}, 4), std::invalid_argument);  // l < k
    CHECK(Interchange{1, 1, 2, 2}.is_transpose());
    CHECK_FALSE(Interchange{1, 1, 3, 3}.is_transpose());
}

TEST_CASE("apply_interchange swaps the blocks, keeps the diagonal, and moves four images") {
    for (int m : {3, 4, 5}) {
        const GroundSet g = GroundSet::zero_to(m - 1);
        const std::vector<Interchange> moves = all_interchanges(m);
        for_each_anchored_order(g, [&](const std::vector<int>& seq) {
            for_each_permutation(g, [&](const Permutation& pi) {
                const PlanePermutation p(seq, pi);
                for (const Interchange& h : moves) {
                    const PlanePermutation q = apply_interchange(p, h);
                    CHECK(q.seq() == spliced(seq, h));
                    CHECK(q.diagonal() == p.diagonal());

                    const int a = seq[static_cast<std::size_t>(h.i - 1)];
                    const int b = seq[static_cast<std::size_t>(h.j)];
                    const int kk = seq[static_cast<std::size_t>(h.k - 1)];
                    const int ll = seq[static_cast<std::size_t>(h.l)];
                    if (h.is_transpose()) {
                        CHECK(q.pi()(a) == pi(b));
                        CHECK(q.pi()(ll) == pi(a));
                        CHECK(q.pi()(b) == pi(ll));
                    } else {
                        CHECK(q.pi()(a) == pi(kk));
                        CHECK(q.pi()(kk) == pi(a));
                        CHECK(q.pi()(b) == pi(ll));
                        CHECK(q.pi()(ll) == pi(b));
                    }
                    for (int x : g.elements()) {
                        if (x == a || x == b || x == kk || x == ll) continue;
                        CHECK(q.pi()(x) == pi(x));
                    }
                }
            });
        });
    }
}

TEST_CASE("every move classifies into the labelled case table") {
    std::map<GainCase, long long> seen;
    for (int m : {4, 5}) {
        const GroundSet g = GroundSet::zero_to(m - 1);
        const std::vector<Interchange> moves = all_interchanges(m);
        for_each_anchored_order(g, [&](const std::vector<int>& seq) {
            for_each_permutation(g, [&](const Permutation& pi) {
                const PlanePermutation p(seq, pi);
                for (const Interchange& h : moves) {
                    // classify_gain itself throws on any label/delta mismatch
                    const GainClassification c = classify_gain(p, h);
                    ++seen[c.case_label];
                    CHECK((c.delta_cycles == -2 || c.delta_cycles == 0 || c.delta_cycles == 2));
                    CHECK(c.delta_odd % 2 == 0);
                    CHECK(c.delta_even % 2 == 0);
                    if (h.is_transpose()) {
                        CHECK(c.case_label != GainCase::other);
                        CHECK(c.case_label <= GainCase::transpose_6);
                        CHECK(std::abs(c.delta_odd) <= 2);
                        CHECK(std::abs(c.delta_even) <= 2);
                        switch (c.case_label) {
                            case GainCase::transpose_1: CHECK(c.delta_cycles == -2); break;
                            case GainCase::transpose_2: CHECK(c.delta_cycles == 2); break;
                            default: CHECK(c.delta_cycles == 0); break;
                        }
                    } else {
                        const bool split = c.case_label >= GainCase::interchange_a &&
                                           c.case_label <= GainCase::interchange_e;
                        CHECK(split == (c.delta_cycles == 2));
                    }
                }
            });
        });
    }
    // every label occurs somewhere in the exhaustive sweep
    for (int label = 0; label <= static_cast<int>(GainCase::other); ++label) {
        CAPTURE(label);
        CHECK(seen[static_cast<GainCase>(label)] > 0);
    }
}

TEST_CASE("a general interchange can shift the odd and even counts by four") {
    // two 2-cycles pairing the outer and inner block ends split into four fixed points
    const GroundSet g = GroundSet::zero_to(4);
    std::vector<int> seq = {0, 1, 2, 3, 4};
    const Permutation pi = Permutation::from_cycles(g, {{0, 2}, {1, 4}});
    const Interchange h{1, 1, 3, 4};
    const GainClassification c = classify_gain(PlanePermutation(seq, pi), h);
    CHECK(c.case_label == GainCase::interchange_e);
    CHECK(c.delta_cycles == 2);
    CHECK(c.delta_odd == 4);
    CHECK(c.delta_even == -2);
}

TEST_CASE("gain case names are stable") {
    CHECK(std::string(to_string(GainCase::transpose_2)) == "transpose case 2");
    CHECK(std::string(to_string(GainCase::interchange_e)) == "interchange case e");
    CHECK(std::string(to_string(GainCase::other)) == "other");
}
