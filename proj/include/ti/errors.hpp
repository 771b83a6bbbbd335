#pragma once

#include <stdexcept>

namespace ti {

// Error taxonomy mirrored by the command line tool's exit codes:
// parse_error -> 3, domain_error -> 4. Anything thrown as a std::logic_error
// (including std::invalid_argument) is a violated programming contract.

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ti
