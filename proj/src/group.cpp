#include "wreath/group.hpp"

#include <limits>
#include <random>

#include <nlohmann/json.hpp>

#include "wreath/errors.hpp"
#include "wreath/reps.hpp"

namespace wreath::groups {

namespace {

void check_shape_rec(const GroupElement& g, const RSpec& R, std::size_t height) {
    const std::uint32_t r = R.component(height - 1);
    if (g.shift >= r) throw shape_error("element shape: residue out of range");
    if (height == 1) {
        if (!g.parts.empty()) throw shape_error("element shape: height-1 element has parts");
        return;
    }
    if (g.parts.size() != r)
        throw shape_error("element shape: expected " + std::to_string(r) + " parts");
    for (const GroupElement& p : g.parts) check_shape_rec(p, R, height - 1);
}

GroupElement multiply_rec(const RSpec& R, const GroupElement& g, const GroupElement& h,
                          std::size_t height) {
    const std::uint32_t r = R.component(height - 1);
    GroupElement out;
    out.shift = (g.shift + h.shift) % r;
    if (height > 1) {
        out.parts.resize(r);
        for (std::uint32_t i = 0; i < r; ++i)
            out.parts[i] = multiply_rec(R, g.parts[i], h.parts[(i + g.shift) % r], height - 1);
    }
    return out;
}

GroupElement inverse_rec(const RSpec& R, const GroupElement& g, std::size_t height) {
    const std::uint32_t r = R.component(height - 1);
    GroupElement out;
    out.shift = static_cast<std::uint32_t>((r - g.shift) % r);
    if (height > 1) {
        out.parts.resize(r);
        // (w; s)^{-1} = (phi_{-s}(w^{-1}); -s)
        for (std::uint32_t i = 0; i < r; ++i)
            out.parts[i] = inverse_rec(R, g.parts[(i + out.shift) % r], height - 1);
    }
    return out;
}

std::uint64_t rank_rec(const RSpec& R, const GroupElement& g, std::size_t height,
                       const std::vector<std::uint64_t>& orders) {
    if (height == 1) return g.shift;
    const std::uint64_t sub_order = orders[height - 2];
    std::uint64_t rank = 0;
    for (const GroupElement& p : g.parts)
        rank = rank * sub_order + rank_rec(R, p, height - 1, orders);
    return rank * R.component(height - 1) + g.shift;
}

GroupElement unrank_rec(const RSpec& R, std::uint64_t rank, std::size_t height,
                        const std::vector<std::uint64_t>& orders) {
    const std::uint32_t r = R.component(height - 1);
    GroupElement g;
    if (height == 1) {
        g.shift = static_cast<std::uint32_t>(rank);
        return g;
    }
    g.shift = static_cast<std::uint32_t>(rank % r);
    rank /= r;
    const std::uint64_t sub_order = orders[height - 2];
    g.parts.resize(r);
    for (std::uint32_t i = r; i-- > 0;) {
        g.parts[i] = unrank_rec(R, rank % sub_order, height - 1, orders);
        rank /= sub_order;
    }
    return g;
}

// per-height orders, required to fit uint64; cap errors use the given limit
std::vector<std::uint64_t> orders_u64(const RSpec& R, std::uint64_t cap, const char* who) {
    const BigNat order = reps::group_order(R);
    if (order > BigNat(cap))
        throw capacity_error(std::string(who) + ": group order " + order.str() +
                             " exceeds cap of " + std::to_string(cap));
    std::vector<std::uint64_t> orders(R.height());
    for (std::size_t j = 0; j < R.height(); ++j)
        orders[j] = *reps::group_order(R.prefix(j + 1)).to_u64();
    return orders;
}

std::uint64_t draw_uniform(std::mt19937_64& rng, std::uint64_t n) {
    // rejection below the wraparound threshold removes modulo bias and keeps
    // the stream identical on every platform
    const std::uint64_t threshold = (0 - n) % n;
    std::uint64_t v;
    do {
        v = rng();
    } while (v < threshold);
    return v % n;
}

GroupElement random_rec(const RSpec& R, std::mt19937_64& rng, std::size_t height) {
    const std::uint32_t r = R.component(height - 1);
    GroupElement g;
    if (height > 1) {
        g.parts.resize(r);
        for (std::uint32_t i = 0; i < r; ++i) g.parts[i] = random_rec(R, rng, height - 1);
    }
    g.shift = static_cast<std::uint32_t>(draw_uniform(rng, r));
    return g;
}

GroupElement element_from_json_rec(const nlohmann::json& j, const RSpec& R, std::size_t height) {
    if (!j.is_object()) throw shape_error("element JSON: expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "z" && it.key() != "p")
            throw shape_error("element JSON: unknown key \"" + it.key() + "\"");
    if (!j.contains("z") || !j["z"].is_number_unsigned())
        throw shape_error("element JSON: \"z\" must be a non-negative integer");
    GroupElement g;
    const auto z = j["z"].get<std::uint64_t>();
    if (z > std::numeric_limits<std::uint32_t>::max())
        throw shape_error("element JSON: \"z\" out of range");
    g.shift = static_cast<std::uint32_t>(z);
    if (height == 1) {
        if (j.contains("p")) throw shape_error("element JSON: height-1 element has no \"p\"");
    } else {
        if (!j.contains("p") || !j["p"].is_array())
            throw shape_error("element JSON: \"p\" must be an array");
        for (const auto& pj : j["p"]) g.parts.push_back(element_from_json_rec(pj, R, height - 1));
    }
    return g;
}

}  // namespace

void check_shape(const GroupElement& g, const RSpec& R) { check_shape_rec(g, R, R.height()); }

GroupElement identity(const RSpec& R) {
    GroupElement g;
    if (R.height() > 1) g.parts.assign(R.top(), identity(R.parent()));
    return g;
}

GroupElement multiply(const RSpec& R, const GroupElement& g, const GroupElement& h) {
    check_shape(g, R);
    check_shape(h, R);
    return multiply_rec(R, g, h, R.height());
}

GroupElement inverse(const RSpec& R, const GroupElement& g) {
    check_shape(g, R);
    return inverse_rec(R, g, R.height());
}

std::uint64_t element_rank(const RSpec& R, const GroupElement& g) {
    check_shape(g, R);
    const auto orders = orders_u64(R, std::numeric_limits<std::uint64_t>::max() / 2, "rank");
    return rank_rec(R, g, R.height(), orders);
}

GroupElement element_unrank(const RSpec& R, std::uint64_t rank) {
    const auto orders = orders_u64(R, std::numeric_limits<std::uint64_t>::max() / 2, "unrank");
    if (rank >= orders.back()) throw std::domain_error("unrank: rank out of range");
    return unrank_rec(R, rank, R.height(), orders);
}

std::vector<GroupElement> enumerate_elements(const RSpec& R, std::uint64_t element_cap) {
    const auto orders = orders_u64(R, element_cap, "enumerate_elements");
    std::vector<GroupElement> all;
    all.reserve(orders.back());
    for (std::uint64_t i = 0; i < orders.back(); ++i)
        all.push_back(unrank_rec(R, i, R.height(), orders));
    return all;
}

BigNat conjugacy_class_count(const RSpec& R, std::uint64_t order_cap) {
    const auto orders = orders_u64(R, order_cap, "conjugacy_class_count");
    const std::uint64_t n = orders.back();
    std::vector<GroupElement> all;
    all.reserve(n);
    std::vector<GroupElement> inv;
    inv.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        all.push_back(unrank_rec(R, i, R.height(), orders));
        inv.push_back(inverse_rec(R, all.back(), R.height()));
    }
    std::vector<bool> seen(n, false);
    std::uint64_t classes = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++classes;
        for (std::uint64_t h = 0; h < n; ++h) {
            const GroupElement c = multiply_rec(
                R, multiply_rec(R, all[h], all[i], R.height()), inv[h], R.height());
            seen[rank_rec(R, c, R.height(), orders)] = true;
        }
    }
    return BigNat(classes);
}

GroupElement random_element(const RSpec& R, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_rec(R, rng, R.height());
}

std::string element_to_json(const GroupElement& g) {
    std::string out;
    if (g.parts.empty()) {
        out = "{\"z\":" + std::to_string(g.shift) + "}";
    } else {
        out = "{\"p\":[";
        for (std::size_t i = 0; i < g.parts.size(); ++i) {
            if (i) out += ',';
            out += element_to_json(g.parts[i]);
        }
        out += "],\"z\":" + std::to_string(g.shift) + "}";
    }
    return out;
}

GroupElement element_from_json(const std::string& text, const RSpec& R) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("element parse: ") + e.what());
    }
    GroupElement g = element_from_json_rec(j, R, R.height());
    check_shape(g, R);
    return g;
}

}  // namespace wreath::groups
