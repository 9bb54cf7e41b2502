#pragma once

#include <stdexcept>
#include <string>

namespace refcox {

// Bad data coming from outside the library: malformed files, unknown labels,
// violated operation preconditions.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A broken internal invariant (non-integral interpolation, failed
// reciprocity, nonzero residual). Reaching this is a bug.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Iterative root finding hit its iteration cap.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace refcox
