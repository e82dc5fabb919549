#pragma once

#include <stdexcept>
#include <string>

namespace wreath {

// Input exceeds a configured size cap (word space, irrep count, group order).
// The CLI maps this to exit code 1.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Structural mismatch between a value and the RSpec it claims to follow
// (wrong child count, wrong height, residue of the wrong radix).
class shape_error : public std::invalid_argument {
public:
    explicit shape_error(const std::string& what) : std::invalid_argument(what) {}
};

// A label whose shape is fine but whose values break the compatibility rule.
class compat_error : public std::invalid_argument {
public:
    explicit compat_error(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed serialized input; message carries the byte position when known.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wreath
