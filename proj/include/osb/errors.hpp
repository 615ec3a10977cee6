#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace osb {

/// Base class for numerical failures raised while driving an operator.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The operator was evaluated outside its domain (e.g. a negative product
/// under a square root). Carries the output coordinate that could not be
/// computed.
class DomainError : public SolverError {
public:
    DomainError(const std::string& message, std::size_t coordinate)
        : SolverError(message), coordinate_(coordinate) {}

    std::size_t coordinate() const noexcept { return coordinate_; }

private:
    std::size_t coordinate_;
};

/// A non-finite value appeared in the iteration state.
class DivergenceError : public SolverError {
public:
    DivergenceError(const std::string& message, std::uint64_t step_index,
                    std::size_t coordinate)
        : SolverError(message), step_index_(step_index), coordinate_(coordinate) {}

    std::uint64_t step_index() const noexcept { return step_index_; }
    std::size_t coordinate() const noexcept { return coordinate_; }

private:
    std::uint64_t step_index_;
    std::size_t coordinate_;
};

/// The closed-form coordinate increment disagreed with the two-evaluation
/// reference beyond tolerance (raised only in the verified step mode).
class ConsistencyError : public SolverError {
public:
    using SolverError::SolverError;
};

/// Malformed input data (Matrix Market files, vector files).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line)
        : std::runtime_error(message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A caller-side mistake: bad flags, invalid metric request, and the like.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File could not be opened, read, or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace osb
