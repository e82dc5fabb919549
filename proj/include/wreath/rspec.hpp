#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wreath {

/// Truncated radix vector (r1,...,rk) parameterizing the whole tower:
/// the group W(r|k), its labeled tree, and every count derived from them.
/// Height k >= 1 and every component >= 1.
class RSpec {
public:
    explicit RSpec(std::vector<std::uint32_t> components) : components_(std::move(components)) {
        if (components_.empty()) throw std::domain_error("RSpec: height must be >= 1");
        for (auto r : components_)
            if (r == 0) throw std::domain_error("RSpec: components must be positive");
    }

    std::size_t height() const { return components_.size(); }
    std::uint32_t component(std::size_t i) const { return components_.at(i); }  // r_{i+1}
    std::uint32_t top() const { return components_.back(); }                    // r_k
    const std::vector<std::uint32_t>& components() const { return components_; }

    // The truncation (r1,...,rj), 1 <= j <= k.
    RSpec prefix(std::size_t j) const {
        if (j == 0 || j > height()) throw std::domain_error("RSpec: bad prefix length");
        return RSpec(std::vector<std::uint32_t>(components_.begin(), components_.begin() + j));
    }
    RSpec parent() const { return prefix(height() - 1); }

    bool operator==(const RSpec& o) const = default;

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < components_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(components_[i]);
        }
        return s;
    }

private:
    std::vector<std::uint32_t> components_;
};

}  // namespace wreath
