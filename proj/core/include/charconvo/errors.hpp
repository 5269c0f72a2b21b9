#ifndef CHARCONVO_ERRORS_HPP
#define CHARCONVO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace charconvo {

// Rejected input: bad parameters, violated preconditions. The message names
// the offending condition.
struct parameter_error : std::runtime_error {
    explicit parameter_error(const std::string& what) : std::runtime_error(what) {}
};

// A search or enumeration would exceed its configured budget.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed serialized input.
struct format_error : std::runtime_error {
    explicit format_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace charconvo

#endif
