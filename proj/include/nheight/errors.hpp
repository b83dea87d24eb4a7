#ifndef NHEIGHT_ERRORS_HPP
#define NHEIGHT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nheight {

// Input violates a mathematical precondition (non-unit inverse, zero tuple, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Request exceeds a configured size cap (edge materialization, subset DP).
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Scan/verification configuration rejected before any work starts.
class config_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace nheight

#endif  // NHEIGHT_ERRORS_HPP
