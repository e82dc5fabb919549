#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wreath/bignat.hpp"
#include "wreath/labeltree.hpp"
#include "wreath/rspec.hpp"

namespace wreath::fftcost {

// Size of the extension set Delta(eta): `stabilizer` reads it as the number
// of extensions of eta to its inertia group (s_i); `zero` drops those terms
// for the optimistic bound.
enum class DeltaPolicy { stabilizer, zero };

struct CostParams {
    double alpha = 3.0;           // exponent of matrix multiplication, >= 2
    double big_o_constant = 1.0;  // universal FFT constant, > 0
    DeltaPolicy delta_policy = DeltaPolicy::stabilizer;
    // logarithms are base 2; a cyclic base costs big_o_constant*n*log2(max(n,2))
};

struct OrbitTerm {
    std::vector<std::uint32_t> word;  // necklace representative over base-class ids
    BigNat d_eta;                     // dimension of the K-irrep (product of class dims)
    std::uint64_t m_eta;              // irreps of G induced by extensions = stabilizer order
    std::uint64_t index_G_over_H;     // [G : H_eta] = period
    std::uint64_t delta_size;         // |Delta(eta)| under the chosen policy
    double term_value;
};

struct CostReport {
    RSpec rspec;
    BigNat group_order;
    BigNat naive_cost;         // |G|^2 scalar multiply-adds
    double bound;              // units: scalar operations (model)
    double reduced_complexity; // bound / |G|
    double k_term;             // (|G|/|K|)*T(K); the whole bound when k = 1
    std::vector<OrbitTerm> per_orbit_breakdown;
};

void validate(const CostParams& p);

BigNat naive_cost(const RSpec& R);

// Recursive evaluation of the operation-count upper bound with
// K = base^{r_k}, T(K) = r_k*|base|^{r_k-1}*T(base) (row-column rule), and
// per-orbit terms m*(|G|/|H|)^2*d^alpha + |Delta|*(r_k*d^alpha +
// d^2*O*r_k*log2(s)), both bracketed groups summed inside the orbit sum.
double fft_bound(const RSpec& R, const CostParams& p,
                 std::uint64_t irrep_cap = labels::kDefaultIrrepCap);

CostReport cost_report(const RSpec& R, const CostParams& p,
                       std::uint64_t irrep_cap = labels::kDefaultIrrepCap);

// snake_case fields; reals rendered to 6 significant figures.
std::string to_json(const CostReport& r);

}  // namespace wreath::fftcost
