#pragma once

#include <stdexcept>
#include <string>

namespace sbv {

// Malformed input text: scalar literals, files, serialized objects.
class format_error : public std::runtime_error {
public:
    explicit format_error(const std::string& what) : std::runtime_error(what) {}
};

// Node set violates 0 < t_1 < ... < t_{n+1} < 1.
class node_error : public std::runtime_error {
public:
    explicit node_error(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure: non-convergence, singular input, broken internal invariant.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sbv
