#include <doctest.h>

#include <cmath>
#include <string>

#include "wreath/fftcost.hpp"
#include "wreath/reps.hpp"
#include "wreath/words.hpp"

using namespace wreath;
using fftcost::CostParams;
using fftcost::DeltaPolicy;

TEST_CASE("naive cost is the squared order") {
    CHECK(fftcost::naive_cost(RSpec({2})) == BigNat(4));
    CHECK(fftcost::naive_cost(RSpec({2, 2})) == BigNat(64));
    CHECK(fftcost::naive_cost(RSpec({2, 2, 2})) == BigNat(16384));
}

TEST_CASE("cyclic base cost") {
    CHECK(fftcost::fft_bound(RSpec({2}), CostParams{}) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fftcost::fft_bound(RSpec({8}), CostParams{}) == doctest::Approx(24.0).epsilon(1e-12));
    CostParams half;
    half.big_o_constant = 0.5;
    CHECK(fftcost::fft_bound(RSpec({8}), half) == doctest::Approx(12.0).epsilon(1e-12));
}

TEST_CASE("the hand-derived W(2,2) bound") {
    // K term: |G|/|K| * T(K) = 2 * (2 * 2 * T(Z_2)) = 2 * 8 = 16.
    // constant orbits (period 1, stab 2, d = 1): 2*1*1 + 2*(2*1 + 1*2*log2(2)) = 10 each.
    // aperiodic orbit (period 2, stab 1, d = 1):  1*4*1 + 1*(2*1 + 1*2*log2(1)) = 6.
    const auto report = fftcost::cost_report(RSpec({2, 2}), CostParams{});
    CHECK(report.bound == doctest::Approx(42.0).epsilon(1e-12));
    CHECK(report.k_term == doctest::Approx(16.0).epsilon(1e-12));
    CHECK(report.naive_cost == BigNat(64));
    CHECK(report.reduced_complexity == doctest::Approx(5.25).epsilon(1e-12));
    REQUIRE(report.per_orbit_breakdown.size() == 3);
    // necklace order over class ids: (0,0), (0,1), (1,1)
    CHECK(report.per_orbit_breakdown[0].term_value == doctest::Approx(10.0));
    CHECK(report.per_orbit_breakdown[1].term_value == doctest::Approx(6.0));
    CHECK(report.per_orbit_breakdown[2].term_value == doctest::Approx(10.0));
    CHECK(report.per_orbit_breakdown[1].index_G_over_H == 2);
    CHECK(report.per_orbit_breakdown[1].m_eta == 1);
    CHECK(report.per_orbit_breakdown[0].delta_size == 2);
}

TEST_CASE("breakdown rows reproduce the bound and count the irreps") {
    for (const RSpec& R : {RSpec({2, 2}), RSpec({2, 3}), RSpec({3, 2}), RSpec({2, 2, 2}),
                           RSpec({2, 4}), RSpec({2, 2, 3})}) {
        const auto report = fftcost::cost_report(R, CostParams{});
        double sum = report.k_term;
        BigNat m_total(0);
        for (const auto& row : report.per_orbit_breakdown) {
            sum += row.term_value;
            m_total += BigNat(row.m_eta);
        }
        CHECK(std::abs(sum - report.bound) <= 1e-6 * report.bound);
        CHECK(m_total == reps::count_irreps(R));
        // one row per necklace orbit of base-class words
        const auto h = *reps::count_irreps(R.parent()).to_u64();
        std::vector<std::uint32_t> alphabet(h);
        for (std::uint32_t i = 0; i < h; ++i) alphabet[i] = i;
        CHECK(report.per_orbit_breakdown.size() ==
              words::orbit_representatives<std::uint32_t>(alphabet, R.top()).size());
        CHECK(report.reduced_complexity ==
              doctest::Approx(report.bound / report.group_order.to_double()));
    }
}

TEST_CASE("monotonicity in alpha and the constant") {
    CostParams lo;
    lo.alpha = 2.81;
    CostParams hi;
    hi.alpha = 3.0;
    const RSpec R({2, 2, 2});
    CHECK(fftcost::fft_bound(R, hi) >= fftcost::fft_bound(R, lo));

    CostParams big;
    big.big_o_constant = 2.0;
    CHECK(fftcost::fft_bound(R, big) > fftcost::fft_bound(R, CostParams{}));
    CHECK(fftcost::fft_bound(RSpec({8}), big) > fftcost::fft_bound(RSpec({8}), CostParams{}));
}

TEST_CASE("the zero delta policy strictly lowers the bound") {
    CostParams zero;
    zero.delta_policy = DeltaPolicy::zero;
    for (const RSpec& R : {RSpec({2, 2}), RSpec({2, 2, 2}), RSpec({3, 3})})
        CHECK(fftcost::fft_bound(R, zero) < fftcost::fft_bound(R, CostParams{}));
}

TEST_CASE("parameter validation") {
    CostParams bad;
    bad.alpha = 1.5;
    CHECK_THROWS_AS(fftcost::fft_bound(RSpec({2}), bad), std::domain_error);
    bad.alpha = 3.0;
    bad.big_o_constant = 0.0;
    CHECK_THROWS_AS(fftcost::fft_bound(RSpec({2}), bad), std::domain_error);
}

TEST_CASE("report JSON shape") {
    const std::string json = fftcost::to_json(fftcost::cost_report(RSpec({2, 2}), CostParams{}));
    for (const char* key :
         {"\"rspec\"", "\"group_order\"", "\"naive_cost\"", "\"bound\"",
          "\"reduced_complexity\"", "\"units\"", "\"k_term\"", "\"per_orbit_breakdown\"",
          "\"word\"", "\"d_eta\"", "\"m_eta\"", "\"index_G_over_H\"", "\"delta_size\"",
          "\"term_value\""})
        CHECK(json.find(key) != std::string::npos);
    CHECK(json.find("\"bound\":42") != std::string::npos);
    CHECK(json.find("\"reduced_complexity\":5.25") != std::string::npos);
    CHECK(json.find("scalar operations (model)") != std::string::npos);
}
