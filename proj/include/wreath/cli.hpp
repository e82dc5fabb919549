#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "wreath/rspec.hpp"

namespace wreath::cli {

// Bad command line or malformed user input; maps to exit code 2.
class usage_error : public std::runtime_error {
public:
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// "2,2,3" -> RSpec(2,2,3); whitespace tolerated around commas.
RSpec parse_rspec(const std::string& text);

// Full command dispatch. Exit codes: 0 success, 1 capacity/internal,
// 2 usage or malformed input, 3 verify found a broken identity.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wreath::cli
