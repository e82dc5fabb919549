#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wreath {

/// Arbitrary-precision natural number. Closed under +, *, pow; division is
/// only offered in the exact form (nonzero remainder throws). Counting
/// quantities here grow doubly exponentially in the tower height, so nothing
/// in the library stores them in fixed-width integers.
class BigNat {
public:
    using rep = boost::multiprecision::cpp_int;

    BigNat() = default;
    BigNat(std::uint64_t v) : v_(v) {}  // NOLINT: implicit by design, mirrors integer literals

    // Accepts the raw backing integer; negative values are a logic error.
    explicit BigNat(rep v) : v_(std::move(v)) {
        if (v_ < 0) throw std::domain_error("BigNat: negative value");
    }

    static BigNat from_decimal(std::string_view text) {
        if (text.empty()) throw std::domain_error("BigNat: empty decimal string");
        for (char c : text)
            if (c < '0' || c > '9') throw std::domain_error("BigNat: bad decimal digit");
        return BigNat(rep(std::string(text)));
    }

    BigNat operator+(const BigNat& o) const { return BigNat(rep(v_ + o.v_)); }
    BigNat operator*(const BigNat& o) const { return BigNat(rep(v_ * o.v_)); }
    BigNat& operator+=(const BigNat& o) { v_ += o.v_; return *this; }
    BigNat& operator*=(const BigNat& o) { v_ *= o.v_; return *this; }

    BigNat pow(std::uint64_t e) const {
        return BigNat(rep(boost::multiprecision::pow(v_, static_cast<unsigned>(e))));
    }

    // Exact division: throws unless o divides *this with remainder zero.
    BigNat div_exact(const BigNat& o) const {
        if (o.v_ == 0) throw std::domain_error("BigNat: division by zero");
        rep q, r;
        boost::multiprecision::divide_qr(v_, o.v_, q, r);
        if (r != 0)
            throw std::logic_error("BigNat: inexact division (" + str() + " / " + o.str() + ")");
        return BigNat(std::move(q));
    }

    bool operator==(const BigNat& o) const = default;
    std::strong_ordering operator<=>(const BigNat& o) const {
        if (v_ < o.v_) return std::strong_ordering::less;
        if (v_ > o.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    bool is_zero() const { return v_ == 0; }

    std::optional<std::uint64_t> to_u64() const {
        if (v_ > rep(UINT64_MAX)) return std::nullopt;
        return v_.convert_to<std::uint64_t>();
    }

    double to_double() const { return v_.convert_to<double>(); }

    std::string str() const { return v_.str(); }

    const rep& raw() const { return v_; }

private:
    rep v_ = 0;
};

}  // namespace wreath
