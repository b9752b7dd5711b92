#pragma once

#include <stdexcept>
#include <string>

namespace curvinv {

// Malformed text input: polynomial expressions, curve files, CLI usage.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    explicit ParseError(const std::string& msg)
        : std::runtime_error(msg), position_(0) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// A mathematical precondition does not hold for the given input
// (non-squarefree curve, common component, singular matrix, ...).
class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A singular point outside the supported vocabulary (ordinary m-fold,
// A3 tacnode), or an intersection point without rational coordinates.
// Callers fall back to the resultant / Hilbert-function paths.
class UnsupportedConfiguration : public MathError {
public:
    using MathError::MathError;
};

// Two independent computation paths disagree. Never expected; indicates a bug.
class OracleDisagreement : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace curvinv
