#pragma once

#include <stdexcept>
#include <string>

namespace hg {

// Raised when a closure or search would exceed its configured size bound.
// The CLI maps this to its own exit code so callers can tell "too big"
// apart from "wrong".
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised when two independent computations that must agree do not.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hg
