#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wreath/bignat.hpp"
#include "wreath/rspec.hpp"

namespace wreath::groups {

inline constexpr std::uint64_t kDefaultElementCap = 100'000;
inline constexpr std::uint64_t kDefaultConjugacyCap = 5000;

/// Recursive wreath element. Height 1 is a bare residue; height k is a tuple
/// of r_k height-(k-1) elements plus a cyclic shift. The shift acts on the
/// positions of the right factor:
///   (w; s) * (w'; s') = ((w_i * w'_{(i+s) mod r})_i ; s + s' mod r).
/// The convention is frozen so matrices and characters reproduce byte for
/// byte; any consistent choice yields an isomorphic group.
struct GroupElement {
    std::uint32_t shift = 0;           // residue at height 1, top shift above
    std::vector<GroupElement> parts;   // empty at height 1

    bool operator==(const GroupElement&) const = default;
};

GroupElement identity(const RSpec& R);

// Throws shape_error when either element does not match R.
GroupElement multiply(const RSpec& R, const GroupElement& g, const GroupElement& h);
GroupElement inverse(const RSpec& R, const GroupElement& g);

void check_shape(const GroupElement& g, const RSpec& R);

// Lexicographic linearization (parts first, shift last, recursively);
// callers must keep |G| within uint64 via the caps below.
std::uint64_t element_rank(const RSpec& R, const GroupElement& g);
GroupElement element_unrank(const RSpec& R, std::uint64_t rank);

// All |G| elements in ascending rank order; capacity error above the cap.
std::vector<GroupElement> enumerate_elements(const RSpec& R,
                                             std::uint64_t element_cap = kDefaultElementCap);

// Orbit flood-fill of the conjugation action over the full element list.
BigNat conjugacy_class_count(const RSpec& R, std::uint64_t order_cap = kDefaultConjugacyCap);

// Deterministic function of (R, seed): residues drawn pre-order (parts in
// position order, then the shift) from std::mt19937_64 seeded with `seed`,
// reduced by rejection sampling so every residue is exactly uniform.
GroupElement random_element(const RSpec& R, std::uint64_t seed);

// {"z":n} at height 1, {"p":[...],"z":s} above; byte-exact, no whitespace.
std::string element_to_json(const GroupElement& g);
GroupElement element_from_json(const std::string& text, const RSpec& R);

}  // namespace wreath::groups
