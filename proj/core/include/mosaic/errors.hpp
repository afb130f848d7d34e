#pragma once

#include <stdexcept>
#include <string>

namespace mosaic {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (JSON floorplans, permutation text, frontier files).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A precondition on the combinatorial objects is violated.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A configurable enumeration limit was exceeded.
class ResourceLimitError : public Error {
public:
    ResourceLimitError(const std::string& msg, int last_completed_level)
        : Error(msg), last_completed_level_(last_completed_level) {}
    int last_completed_level() const { return last_completed_level_; }

private:
    int last_completed_level_ = 0;
};

// Validation failures, one type per cause so callers can discriminate.
class NotAPartition : public DomainError {
public:
    using DomainError::DomainError;
};
class NotGeneric : public DomainError {
public:
    using DomainError::DomainError;
};
class TatamiViolation : public DomainError {
public:
    using DomainError::DomainError;
};

class SingleBlock : public DomainError {
public:
    using DomainError::DomainError;
};
class InvalidCorner : public DomainError {
public:
    using DomainError::DomainError;
};
class VectorNotInLabel : public DomainError {
public:
    using DomainError::DomainError;
};
class BadIndices : public DomainError {
public:
    using DomainError::DomainError;
};
class DimensionNotPowerOfTwo : public DomainError {
public:
    using DomainError::DomainError;
};
class NonPositiveDirection : public DomainError {
public:
    using DomainError::DomainError;
};

/// Input permutation contains a forbidden pattern; carries the occurrence.
class NotInClassF : public DomainError {
public:
    NotInClassF(const std::string& msg, std::string witness)
        : DomainError(msg), witness_(std::move(witness)) {}
    const std::string& witness() const { return witness_; }

private:
    std::string witness_;
};

}  // namespace mosaic
