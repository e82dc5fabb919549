#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wreath/bignat.hpp"
#include "wreath/rspec.hpp"

namespace wreath::labels {

/// A vertex labeling of the complete tree T(r|k): value at this vertex plus
/// one subtree per child (empty at leaves). Values are 0-indexed residues.
/// A label is *compatible* when every leaf value is < r1 and every internal
/// value is < the stabilizer order of its children's equivalence-class word;
/// orbits of compatible labels under the tower's rotation action index the
/// irreducible representations.
struct LabelTree {
    std::uint32_t value = 0;
    std::vector<LabelTree> children;

    bool operator==(const LabelTree&) const = default;
};

// Same shape; internal vertices carry the count of inequivalent child
// sub-labels, leaves carry 1.
using CompanionLabel = LabelTree;

inline constexpr std::uint64_t kDefaultIrrepCap = 1'000'000;

struct TreeShapeStats {
    BigNat leaves;
    std::vector<BigNat> layer_sizes;  // index j = number of vertices in layer j
};

TreeShapeStats tree_shape_stats(const RSpec& R);

// Structural validation only (child counts per level); throws shape_error.
void check_shape(const LabelTree& t, const RSpec& R);

// Value-range validation on top of shape.
bool is_compatible(const LabelTree& t, const RSpec& R);

// Bottom-up canonical representative of the orbit: children canonicalized,
// then the children sequence replaced by its lex-least rotation under the
// byte order of serialized canonical forms. Idempotent; complete orbit
// invariant. Incompatible input throws compat_error.
LabelTree canonicalize(const LabelTree& t, const RSpec& R);

bool equivalent(const LabelTree& a, const LabelTree& b, const RSpec& R);

// One canonical label per orbit, ascending by serialized byte order.
std::vector<LabelTree> enumerate_labels(const RSpec& R,
                                        std::uint64_t irrep_cap = kDefaultIrrepCap);

// Product over internal vertices of the cyclic period of the children-class
// word: the induction index accumulated down the tower.
BigNat dimension(const LabelTree& t, const RSpec& R);

// Per-vertex count of distinct child classes (leaves 1), and its product.
// Kept distinct from dimension(): the two differ on words like (a,a,b,b).
CompanionLabel companion(const LabelTree& t, const RSpec& R);
BigNat companion_product(const LabelTree& t, const RSpec& R);

// Byte-exact canonical text: {"v":N} or {"v":N,"c":[...]}, no whitespace,
// key order fixed. This form defines the total order on labels.
std::string serialize(const LabelTree& t);

// Inverse of serialize; malformed text -> parse_error (with byte position),
// wrong schema or tree shape -> shape_error.
LabelTree parse(const std::string& text, const RSpec& R);

}  // namespace wreath::labels
