#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "wreath/errors.hpp"

// Cyclic-word (necklace) machinery. Letters are opaque totally ordered
// tokens; downstream code feeds equivalence-class identifiers of sub-labels
// straight in, tests use plain chars. The cyclic left-rotation
//   x^i = x_{i+1} ... x_n x_1 ... x_i
// generates the Z_n action everything here quotients by.
namespace wreath::words {

inline constexpr std::uint64_t kDefaultWordCap = 10'000'000;

template <class L>
using Word = std::vector<L>;

// Left-rotation by i (reduced mod length).
template <class L>
Word<L> rotate(const Word<L>& x, std::size_t i) {
    const std::size_t n = x.size();
    if (n == 0) throw std::domain_error("rotate: empty word");
    Word<L> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = x[(j + i) % n];
    return out;
}

// Smallest i >= 1 with x^i = x. Always divides the length, but the loop
// does not assume that: it scans i = 1..n directly.
template <class L>
std::size_t period(const Word<L>& x) {
    const std::size_t n = x.size();
    if (n == 0) throw std::domain_error("period: empty word");
    for (std::size_t i = 1; i < n; ++i) {
        bool fixed = true;
        for (std::size_t j = 0; j < n && fixed; ++j) fixed = (x[(j + i) % n] == x[j]);
        if (fixed) return i;
    }
    return n;
}

// Order of the rotation stabilizer of x in Z_n, i.e. length / period.
template <class L>
std::size_t stabilizer_order(const Word<L>& x) {
    return x.size() / period(x);
}

// Lexicographically least rotation; the orbit representative used everywhere.
template <class L>
Word<L> canonical_rotation(const Word<L>& x) {
    const std::size_t n = x.size();
    if (n == 0) throw std::domain_error("canonical_rotation: empty word");
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
        // compare rotation i against rotation best without materializing
        for (std::size_t j = 0; j < n; ++j) {
            const L& a = x[(j + i) % n];
            const L& b = x[(j + best) % n];
            if (a < b) { best = i; break; }
            if (b < a) break;
        }
    }
    return rotate(x, best);
}

namespace detail {

// h^r with saturation at cap+1 so callers can test the cap without overflow.
inline std::uint64_t pow_capped(std::uint64_t h, std::size_t r, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < r; ++i) {
        if (v > cap / h) return cap + 1;
        v *= h;
    }
    return v;
}

}  // namespace detail

// Visits exactly one lexicographically least word per rotation orbit of
// alphabet^r, in ascending lexicographic order (FKM necklace generation).
// The alphabet must be strictly ascending; h^r beyond the cap is rejected.
template <class L>
void for_each_orbit_representative(const std::vector<L>& alphabet, std::size_t r,
                                   const std::function<void(const Word<L>&)>& visit,
                                   std::uint64_t word_cap = kDefaultWordCap) {
    if (alphabet.empty()) throw std::domain_error("orbit_representatives: empty alphabet");
    if (r == 0) throw std::domain_error("orbit_representatives: r must be >= 1");
    for (std::size_t i = 1; i < alphabet.size(); ++i)
        if (!(alphabet[i - 1] < alphabet[i]))
            throw std::domain_error("orbit_representatives: alphabet not strictly ascending");
    if (detail::pow_capped(alphabet.size(), r, word_cap) > word_cap)
        throw capacity_error("orbit_representatives: h^r exceeds cap");

    const std::size_t h = alphabet.size();
    if (h == 1) {
        // single orbit; also keeps the recursion depth bounded by log2(cap)
        visit(Word<L>(r, alphabet[0]));
        return;
    }
    std::vector<std::size_t> a(r + 1, 0);  // a[0] is the FKM sentinel
    Word<L> out(r);
    // Cattell-Ruskey-Sawada recursion; emits necklaces in lex order.
    auto gen = [&](auto&& self, std::size_t t, std::size_t p) -> void {
        if (t > r) {
            if (r % p == 0) {
                for (std::size_t j = 0; j < r; ++j) out[j] = alphabet[a[j + 1]];
                visit(out);
            }
            return;
        }
        a[t] = a[t - p];
        self(self, t + 1, p);
        for (std::size_t c = a[t - p] + 1; c < h; ++c) {
            a[t] = c;
            self(self, t + 1, t);
        }
    };
    gen(gen, 1, 1);
}

template <class L>
std::vector<Word<L>> orbit_representatives(const std::vector<L>& alphabet, std::size_t r,
                                           std::uint64_t word_cap = kDefaultWordCap) {
    std::vector<Word<L>> reps;
    for_each_orbit_representative<L>(alphabet, r, [&](const Word<L>& w) { reps.push_back(w); },
                                     word_cap);
    return reps;
}

}  // namespace wreath::words
