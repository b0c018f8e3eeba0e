#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace latsum {

// Truncation policy shared by every series evaluation in the library.
struct Accuracy {
    long double eps_rel = 1e-12L;
    std::size_t max_terms = 10'000'000;

    void validate() const {
        if (!(eps_rel > 0.0L) || !(eps_rel < 1.0L))
            throw std::domain_error("Accuracy: eps_rel must lie in (0, 1)");
        if (max_terms < 1)
            throw std::domain_error("Accuracy: max_terms must be positive");
    }
};

// A series or iteration hit its term cap before reaching the requested
// tolerance.
class ToleranceError : public std::runtime_error {
public:
    explicit ToleranceError(const std::string& what_arg)
        : std::runtime_error(what_arg) {}
};

// A resource guard tripped (table size, enumeration count, grid shape).
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& what_arg)
        : std::runtime_error(what_arg) {}
};

} // namespace latsum
