#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liftlocal {

// Base class for all errors thrown by the library.
class LiftError : public std::runtime_error {
public:
    explicit LiftError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input (polynomials, problem files, certificates).
class ParseError : public LiftError {
public:
    ParseError(const std::string& msg, std::size_t position)
        : LiftError(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    explicit ParseError(const std::string& msg) : LiftError(msg), position_(0) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Structurally invalid data: mismatched contexts, bad field declarations,
// violated type invariants.
class ValidationError : public LiftError {
public:
    explicit ValidationError(const std::string& msg) : LiftError(msg) {}
};

// Arithmetic between scalars of different fields.
class FieldMismatchError : public ValidationError {
public:
    explicit FieldMismatchError(const std::string& msg) : ValidationError(msg) {}
};

// A candidate search ran out of budget before finding a verified element.
class SearchExhaustedError : public LiftError {
public:
    SearchExhaustedError(int step, long attempts)
        : LiftError("candidate search exhausted at step " + std::to_string(step) +
                    " after " + std::to_string(attempts) + " attempts"),
          step_(step),
          attempts_(attempts) {}

    int step() const { return step_; }
    long attempts() const { return attempts_; }

private:
    int step_;
    long attempts_;
};

// The self map does not descend to the quotient ring.
class IllDefinedMapError : public LiftError {
public:
    explicit IllDefinedMapError(const std::string& msg) : LiftError(msg) {}
};

// The self map is not finite, so no lift exists under the pipeline's contract.
class NotFiniteError : public LiftError {
public:
    explicit NotFiniteError(const std::string& msg) : LiftError(msg) {}
};

// A condition the theory guarantees failed to hold; indicates a bug.
class InternalError : public LiftError {
public:
    explicit InternalError(const std::string& msg) : LiftError("internal error: " + msg) {}
};

// A brute-force oracle was asked to scan beyond its configured budget.
class BudgetExceededError : public LiftError {
public:
    explicit BudgetExceededError(const std::string& msg) : LiftError(msg) {}
};

}  // namespace liftlocal
