#pragma once

#include <stdexcept>
#include <string>

namespace comprat {

// Expansion would exceed the configured degree cap.
class expansion_cap_error : public std::runtime_error {
public:
    explicit expansion_cap_error(const std::string& what) : std::runtime_error(what) {}
};

// An intermediate denominator vanished during sector evaluation.
class singularity_error : public std::runtime_error {
public:
    explicit singularity_error(const std::string& what) : std::runtime_error(what) {}
};

// A linear solve met a numerically singular iterate.
class solve_failure_error : public std::runtime_error {
public:
    explicit solve_failure_error(const std::string& what) : std::runtime_error(what) {}
};

// A root bracket could not be established or an iteration budget ran out.
class nonconvergence_error : public std::runtime_error {
public:
    explicit nonconvergence_error(const std::string& what) : std::runtime_error(what) {}
};

// The requested quantity is below the resolution of the active precision.
class precision_insufficient_error : public std::runtime_error {
public:
    explicit precision_insufficient_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace comprat
