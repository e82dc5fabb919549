#include "wreath/labeltree.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <utility>

#include <nlohmann/json.hpp>

#include "wreath/errors.hpp"
#include "wreath/reps.hpp"
#include "wreath/words.hpp"

namespace wreath::labels {

namespace {

// words over serialized child forms; string order is byte order
using ClassWord = words::Word<std::string>;

std::size_t height_of(const RSpec& R) { return R.height(); }

void check_shape_rec(const LabelTree& t, const RSpec& R, std::size_t height) {
    if (height == 1) {
        if (!t.children.empty())
            throw shape_error("label shape: leaf at height 1 must have no children");
        return;
    }
    const std::uint32_t r = R.component(height - 1);
    if (t.children.size() != r)
        throw shape_error("label shape: expected " + std::to_string(r) + " children at height " +
                          std::to_string(height) + ", got " + std::to_string(t.children.size()));
    for (const LabelTree& c : t.children) check_shape_rec(c, R, height - 1);
}

// Canonicalizes t in place (bottom-up); returns false when a value is out of
// its compatible range. Shape is assumed checked.
bool canonicalize_rec(LabelTree& t, const RSpec& R, std::size_t height) {
    if (height == 1) return t.value < R.component(0);

    for (LabelTree& c : t.children)
        if (!canonicalize_rec(c, R, height - 1)) return false;

    ClassWord word(t.children.size());
    for (std::size_t i = 0; i < t.children.size(); ++i) word[i] = serialize(t.children[i]);

    const std::size_t s = words::stabilizer_order(word);
    if (t.value >= s) return false;

    // lex-least rotation offset of the class word; ties give identical
    // rotated sequences because serialization is injective
    const std::size_t n = word.size();
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::string& a = word[(j + i) % n];
            const std::string& b = word[(j + best) % n];
            if (a < b) { best = i; break; }
            if (b < a) break;
        }
    }
    if (best != 0) {
        std::vector<LabelTree> rotated(n);
        for (std::size_t j = 0; j < n; ++j) rotated[j] = std::move(t.children[(j + best) % n]);
        t.children = std::move(rotated);
    }
    return true;
}

BigNat dimension_rec(const LabelTree& canonical, const RSpec& R, std::size_t height) {
    if (height == 1) return BigNat(1);
    BigNat d(1);
    for (const LabelTree& c : canonical.children) d *= dimension_rec(c, R, height - 1);
    ClassWord word(canonical.children.size());
    for (std::size_t i = 0; i < canonical.children.size(); ++i)
        word[i] = serialize(canonical.children[i]);
    return d * BigNat(static_cast<std::uint64_t>(words::period(word)));
}

CompanionLabel companion_rec(const LabelTree& canonical, std::size_t height) {
    if (height == 1) return CompanionLabel{1, {}};
    CompanionLabel out;
    std::set<std::string> classes;
    for (const LabelTree& c : canonical.children) {
        classes.insert(serialize(c));
        out.children.push_back(companion_rec(c, height - 1));
    }
    out.value = static_cast<std::uint32_t>(classes.size());
    return out;
}

void serialize_rec(const LabelTree& t, std::string& out) {
    out += "{\"v\":";
    out += std::to_string(t.value);
    if (!t.children.empty()) {
        out += ",\"c\":[";
        for (std::size_t i = 0; i < t.children.size(); ++i) {
            if (i) out += ',';
            serialize_rec(t.children[i], out);
        }
        out += ']';
    }
    out += '}';
}

LabelTree from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw shape_error("label JSON: expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "v" && it.key() != "c")
            throw shape_error("label JSON: unknown key \"" + it.key() + "\"");
    if (!j.contains("v") || !j["v"].is_number_unsigned())
        throw shape_error("label JSON: \"v\" must be a non-negative integer");
    const auto v = j["v"].get<std::uint64_t>();
    if (v > std::numeric_limits<std::uint32_t>::max())
        throw shape_error("label JSON: \"v\" out of range");
    LabelTree t;
    t.value = static_cast<std::uint32_t>(v);
    if (j.contains("c")) {
        if (!j["c"].is_array()) throw shape_error("label JSON: \"c\" must be an array");
        for (const auto& cj : j["c"]) t.children.push_back(from_json(cj));
    }
    return t;
}

}  // namespace

TreeShapeStats tree_shape_stats(const RSpec& R) {
    const std::size_t k = R.height();
    TreeShapeStats stats;
    stats.leaves = BigNat(1);
    for (std::size_t i = 1; i < k; ++i) stats.leaves *= BigNat(R.component(i));
    stats.layer_sizes.assign(k, BigNat(1));
    for (std::size_t j = 1; j < k; ++j)
        stats.layer_sizes[j] = stats.layer_sizes[j - 1] * BigNat(R.component(k - j));
    return stats;
}

void check_shape(const LabelTree& t, const RSpec& R) { check_shape_rec(t, R, height_of(R)); }

bool is_compatible(const LabelTree& t, const RSpec& R) {
    check_shape(t, R);
    LabelTree scratch = t;
    return canonicalize_rec(scratch, R, height_of(R));
}

LabelTree canonicalize(const LabelTree& t, const RSpec& R) {
    check_shape(t, R);
    LabelTree out = t;
    if (!canonicalize_rec(out, R, height_of(R)))
        throw compat_error("canonicalize: label is not compatible with (" + R.str() + ")");
    return out;
}

bool equivalent(const LabelTree& a, const LabelTree& b, const RSpec& R) {
    return canonicalize(a, R) == canonicalize(b, R);
}

std::vector<LabelTree> enumerate_labels(const RSpec& R, std::uint64_t irrep_cap) {
    const BigNat total = reps::count_irreps(R);
    if (total > BigNat(irrep_cap))
        throw capacity_error("enumerate_labels: " + total.str() + " classes exceeds cap of " +
                             std::to_string(irrep_cap));

    std::vector<LabelTree> out;
    if (R.height() == 1) {
        for (std::uint32_t v = 0; v < R.component(0); ++v) out.push_back(LabelTree{v, {}});
    } else {
        const std::vector<LabelTree> sub = enumerate_labels(R.parent(), irrep_cap);
        std::vector<std::uint32_t> alphabet(sub.size());
        for (std::uint32_t i = 0; i < sub.size(); ++i) alphabet[i] = i;
        // the words cap is irrelevant here: the class count was capped above
        // and FKM never materializes the full word space
        words::for_each_orbit_representative<std::uint32_t>(
            alphabet, R.top(),
            [&](const words::Word<std::uint32_t>& w) {
                const std::size_t s = words::stabilizer_order(w);
                LabelTree t;
                t.children.reserve(w.size());
                for (std::uint32_t cls : w) t.children.push_back(sub[cls]);
                for (std::uint32_t j = 0; j < s; ++j) {
                    t.value = j;
                    out.push_back(t);
                }
            },
            std::numeric_limits<std::uint64_t>::max());
    }

    // ascending serialized order defines both the output and the class ids
    // the next level up will use as word letters
    std::vector<std::pair<std::string, std::size_t>> keyed(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) keyed[i] = {serialize(out[i]), i};
    std::sort(keyed.begin(), keyed.end());
    std::vector<LabelTree> sorted;
    sorted.reserve(out.size());
    for (const auto& [key, idx] : keyed) sorted.push_back(std::move(out[idx]));
    return sorted;
}

BigNat dimension(const LabelTree& t, const RSpec& R) {
    return dimension_rec(canonicalize(t, R), R, height_of(R));
}

CompanionLabel companion(const LabelTree& t, const RSpec& R) {
    return companion_rec(canonicalize(t, R), height_of(R));
}

BigNat companion_product(const LabelTree& t, const RSpec& R) {
    CompanionLabel c = companion(t, R);
    BigNat prod(1);
    auto walk = [&](auto&& self, const CompanionLabel& n) -> void {
        prod *= BigNat(n.value);
        for (const CompanionLabel& ch : n.children) self(self, ch);
    };
    walk(walk, c);
    return prod;
}

std::string serialize(const LabelTree& t) {
    std::string out;
    serialize_rec(t, out);
    return out;
}

LabelTree parse(const std::string& text, const RSpec& R) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("label parse: ") + e.what());
    }
    LabelTree t = from_json(j);
    check_shape(t, R);
    return t;
}

}  // namespace wreath::labels
