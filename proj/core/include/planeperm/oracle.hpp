#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planeperm/block_distance.hpp"
#include "planeperm/signed_reversal.hpp"
#include "planeperm/stirling.hpp"

namespace planeperm {

enum class MoveKind { transposition, block_interchange, reversal };
const char* to_string(MoveKind kind);

// Budgets for exhaustive searches. State counts grow as n! (unsigned moves)
// or 2^n n! (signed reversals); raise deliberately.
struct Caps {
    int unsigned_bfs = 7;
    int signed_bfs = 5;
    int enumeration = 8;
    int conjecture = 7;
};

// Mixed-radix rank of a permutation of 1..n, 0 for the identity.
std::uint64_t lehmer_rank(const std::vector<int>& values);
std::vector<int> lehmer_unrank(std::uint64_t rank, int n);
// lehmer_rank of the magnitudes, then one sign bit per position.
std::uint64_t signed_rank(const std::vector<int>& values);
std::vector<int> signed_unrank(std::uint64_t rank, int n);

// Distance from the identity to every state by breadth-first search,
// indexed by lehmer_rank (signed_rank for reversal moves).
std::vector<int> distance_table(int n, MoveKind kind, const Caps& caps = {});

int bfs_distance(const Sequence& s, MoveKind kind, const Caps& caps = {});
int bfs_distance(const Sequence& from, const Sequence& to, MoveKind kind, const Caps& caps = {});
int bfs_distance(const SignedPermutation& a, const Caps& caps = {});

// distance -> number of states at that distance, by full BFS.
std::map<int, long long> census(int n, MoveKind kind, const Caps& caps = {});

// Full cycles omega on {1..n}, counted by the cycle count of
// omega * (1 2 .. n): once by enumeration, once in closed form
// 2*c(n+1,k)/(n(n+1)) for n-k even (no term otherwise).
std::map<int, BigInt> zagier_census(int n, const Caps& caps = {});
std::map<int, BigInt> zagier_formula(int n);

enum class CycleStatKind { cycles, odd, even };
const char* to_string(CycleStatKind kind);

// sum over all gamma of z^(stat(pi*gamma) - stat(gamma)), stored sparsely.
struct LaurentPoly {
    int ground_size = 0;
    std::map<int, long long> coeff;
    std::map<int, Permutation> first_witness;  // first gamma attaining each exponent

    int min_exponent() const;
    int max_exponent() const;
    const Permutation& argmin() const;
    const Permutation& argmax() const;
};

LaurentPoly distribution_poly(const Permutation& pi, CycleStatKind stat, const Caps& caps = {});
// "z^-1 + z", "24 + 18 z^2 + ..." style, ascending exponents.
std::string format_laurent(const LaurentPoly& poly);

enum class Conjecture { c71, c72 };

// Both conjectures conclude that the value n and the middle entry a_n share
// a cycle of the skew-embedding product. c71 tests it on exact embeddings
// that have a crossing pair; c72 tests it on every signed sequence.
struct ConjectureReport {
    Conjecture id = Conjecture::c71;
    int n_max = 0;
    long long states_checked = 0;  // states where the conclusion was tested
    std::map<int, long long> checked_by_n;
    std::optional<SignedPermutation> counterexample;
};

ConjectureReport check_conjecture(Conjecture which, int n_max, const Caps& caps = {});

// Exhaustive per-n comparison of the reversal lower bound against true BFS
// distance, the breakpoint-graph relation, and greedy sort performance.
struct TightnessRow {
    int n = 0;
    long long states = 0;
    long long bound_equals_distance = 0;
    long long relation_holds = 0;
    long long greedy_equals_bound = 0;
};

struct TightnessReport {
    std::vector<TightnessRow> rows;
    std::vector<SignedPermutation> relation_failures;
};

TightnessReport reversal_tightness_report(int n_max, const Caps& caps = {});

}  // namespace planeperm
