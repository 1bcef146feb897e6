#include "planeperm/stirling.hpp"

#include <stdexcept>

namespace planeperm {

// c(n, k) = c(n-1, k-1) + (n-1) * c(n-1, k), c(0, 0) = 1.
std::vector<BigInt> stirling_first_row(int n) {
    if (n < 0) throw std::invalid_argument("stirling: n must be >= 0");
    std::vector<BigInt> row{1};  // row for n = 0
    for (int m = 1; m <= n; ++m) {
        std::vector<BigInt> next(m + 1);
        for (int k = 1; k <= m; ++k) {
            next[k] = row[k - 1];
            if (k < m) next[k] += BigInt(m - 1) * row[k];
        }
        row = std::move(next);
    }
    return row;
}

BigInt stirling_first_unsigned(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling: arguments must be >= 0");
    if (k > n) return 0;
    return stirling_first_row(n)[k];
}

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace planeperm
