#pragma once

#include <stdexcept>
#include <string>

namespace lrc {

enum class ErrorKind {
    invalid_argument,
    index_out_of_range,
    length_mismatch,
    guard_exceeded,
    inconsistent_input,
    invalid_graph,
    invalid_polyhedron,
    not_exact_covering,
    precondition_violated,
    missing_parameter,
    invalid_parameter,
    unknown_name,
    parse_error,
    non_integral_count,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_argument: return "invalid-argument";
        case ErrorKind::index_out_of_range: return "index-out-of-range";
        case ErrorKind::length_mismatch: return "length-mismatch";
        case ErrorKind::guard_exceeded: return "guard-exceeded";
        case ErrorKind::inconsistent_input: return "inconsistent-input";
        case ErrorKind::invalid_graph: return "invalid-graph";
        case ErrorKind::invalid_polyhedron: return "invalid-polyhedron";
        case ErrorKind::not_exact_covering: return "not-exact-covering";
        case ErrorKind::precondition_violated: return "precondition-violated";
        case ErrorKind::missing_parameter: return "missing-parameter";
        case ErrorKind::invalid_parameter: return "invalid-parameter";
        case ErrorKind::unknown_name: return "unknown-name";
        case ErrorKind::parse_error: return "parse-error";
        case ErrorKind::non_integral_count: return "non-integral-count";
    }
    return "error";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace lrc
