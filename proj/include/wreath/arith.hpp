#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace wreath::arith {

// All divisors of n, strictly ascending. n = 0 is a domain error.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Classical Moebius function: 1, 0 on non-squarefree, (-1)^t otherwise.
int moebius(std::uint64_t n);

// All pairs (d, c) with d | c and c | n, c-major then d-minor ascending.
std::vector<std::pair<std::uint64_t, std::uint64_t>> divisor_chain_pairs(std::uint64_t n);

}  // namespace wreath::arith
