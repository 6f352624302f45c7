#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sensorfft {

/// Broad failure category. The CLI maps these onto exit codes.
enum class ErrorKind {
    Format,            ///< malformed input document
    Row,               ///< one data row could not be parsed
    InsufficientData,  ///< too few usable samples
    Parameter,         ///< caller-supplied parameter out of range
    Selection,         ///< harmonic selection inconsistent with spectrum
    Verification,      ///< oracle cross-check failed
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class FormatError : public Error {
public:
    explicit FormatError(const std::string& what) : Error(ErrorKind::Format, what) {}
};

/// Carries the 1-based line number of the offending row (the header is line 1).
class RowError : public Error {
public:
    RowError(std::size_t row, const std::string& what)
        : Error(ErrorKind::Row, "row " + std::to_string(row) + ": " + what), row_(row) {}

    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

class InsufficientDataError : public Error {
public:
    explicit InsufficientDataError(const std::string& what) : Error(ErrorKind::InsufficientData, what) {}
};

class ParameterError : public Error {
public:
    explicit ParameterError(const std::string& what) : Error(ErrorKind::Parameter, what) {}
};

class SelectionError : public Error {
public:
    explicit SelectionError(const std::string& what) : Error(ErrorKind::Selection, what) {}
};

class VerificationError : public Error {
public:
    explicit VerificationError(const std::string& what) : Error(ErrorKind::Verification, what) {}
};

/// An error raised inside a pipeline stage, tagged with the stage name.
/// kind() is the kind of the underlying failure.
class StageError : public Error {
public:
    StageError(std::string stage, const Error& cause)
        : Error(cause.kind(), stage + ": " + cause.what()), stage_(std::move(stage)) {}

    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

}  // namespace sensorfft
