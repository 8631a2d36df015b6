#pragma once

#include <stdexcept>
#include <string>

namespace superrad {

// Thrown when an iterative numerical procedure (quadrature, eigensolver,
// root bracketing) fails to reach its requested accuracy.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace superrad
