#include "wreath/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace wreath::arith {

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0) throw std::domain_error("divisors: n must be positive");
    std::vector<std::uint64_t> low, high;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

int moebius(std::uint64_t n) {
    if (n == 0) throw std::domain_error("moebius: n must be positive");
    int t = 0;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;  // squared prime factor
        ++t;
    }
    if (n > 1) ++t;
    return (t % 2 == 0) ? 1 : -1;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> divisor_chain_pairs(std::uint64_t n) {
    if (n == 0) throw std::domain_error("divisor_chain_pairs: n must be positive");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    for (std::uint64_t c : divisors(n))
        for (std::uint64_t d : divisors(c)) pairs.emplace_back(d, c);
    return pairs;
}

}  // namespace wreath::arith
