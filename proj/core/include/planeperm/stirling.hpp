#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace planeperm {

using BigInt = boost::multiprecision::cpp_int;

// Unsigned Stirling numbers of the first kind: the number of permutations of
// n elements with exactly k cycles. Exact for any n (big integers).
// k > n yields 0; negative arguments are rejected.
BigInt stirling_first_unsigned(int n, int k);

// Row n: counts for k = 0..n.
std::vector<BigInt> stirling_first_row(int n);

BigInt factorial(int n);

}  // namespace planeperm
