#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "wreath/arith.hpp"

using namespace wreath::arith;

TEST_CASE("divisors of small inputs") {
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
    CHECK(divisors(6) == std::vector<std::uint64_t>{1, 2, 3, 6});
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK_THROWS_AS(divisors(0), std::domain_error);
}

TEST_CASE("divisor list is closed under d -> n/d and ascending") {
    for (std::uint64_t n = 1; n <= 360; ++n) {
        const auto ds = divisors(n);
        for (std::size_t i = 0; i + 1 < ds.size(); ++i) CHECK(ds[i] < ds[i + 1]);
        for (auto d : ds) {
            CHECK(n % d == 0);
            CHECK(std::find(ds.begin(), ds.end(), n / d) != ds.end());
        }
    }
}

TEST_CASE("moebius base values") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(6) == 1);
    CHECK(moebius(2) == -1);
    CHECK(moebius(30) == -1);
    CHECK_THROWS_AS(moebius(0), std::domain_error);
}

TEST_CASE("moebius divisor sums collapse to [n == 1]") {
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        int sum = 0;
        for (auto d : divisors(n)) sum += moebius(d);
        CHECK(sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("divisor chain pairs") {
    using P = std::pair<std::uint64_t, std::uint64_t>;
    CHECK(divisor_chain_pairs(1) == std::vector<P>{{1, 1}});
    CHECK(divisor_chain_pairs(2) == std::vector<P>{{1, 1}, {1, 2}, {2, 2}});
    CHECK(divisor_chain_pairs(4) ==
          std::vector<P>{{1, 1}, {1, 2}, {2, 2}, {1, 4}, {2, 4}, {4, 4}});
    CHECK_THROWS_AS(divisor_chain_pairs(0), std::domain_error);
}

TEST_CASE("chain pair count matches divisor-of-divisor sum") {
    for (std::uint64_t n = 1; n <= 240; ++n) {
        std::size_t expect = 0;
        for (auto c : divisors(n)) expect += divisors(c).size();
        CHECK(divisor_chain_pairs(n).size() == expect);
    }
}
