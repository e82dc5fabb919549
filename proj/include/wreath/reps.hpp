#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "wreath/bignat.hpp"
#include "wreath/labeltree.hpp"
#include "wreath/rspec.hpp"

namespace wreath::reps {

inline constexpr std::uint64_t kDefaultConjugacyCap = 5000;

// |W(r|k)| = |W(r|k-1)|^{r_k} * r_k, |W(r|1)| = r1.
BigNat group_order(const RSpec& R);

// Moebius recursion for the number of irreducible representations:
//   M_k = (1/r_k) * sum over d | c | r_k of mu(c/d) * M_{k-1}^{r_k/c} * d^2.
// The inner Moebius sum over c inverts the divisor lattice so that the
// d-slice counts length-r_k words over M_{k-1} classes whose rotation
// stabilizer has order exactly d; only the fully expanded double sum is
// evaluated here. The interior division is asserted exact at every level;
// an inexact division throws std::logic_error since it signals a formula
// bug.
BigNat count_irreps(const RSpec& R);

// Tree-census recursion; identical to count_irreps by the correspondence.
BigNat count_trees(const RSpec& R);

// dimension -> multiplicity over the full enumeration.
std::map<BigNat, BigNat> dims_multiset(const RSpec& R,
                                       std::uint64_t irrep_cap = labels::kDefaultIrrepCap);

struct CompletenessReport {
    RSpec rspec;
    BigNat group_order;
    BigNat irrep_count_recursion;
    BigNat irrep_count_enumerated;
    BigNat sum_dim_squares;
    std::optional<BigNat> conjugacy_class_count;
    bool pass = false;
};

// pass <=> every present count agrees and sum of dim^2 equals the order.
bool completeness_pass(const CompletenessReport& r);

CompletenessReport verify_completeness(const RSpec& R, bool include_conjugacy,
                                       std::uint64_t irrep_cap = labels::kDefaultIrrepCap,
                                       std::uint64_t conjugacy_cap = kDefaultConjugacyCap);

// Snake_case field names; BigNat values rendered as decimal strings.
std::string to_json(const CompletenessReport& r);

}  // namespace wreath::reps
