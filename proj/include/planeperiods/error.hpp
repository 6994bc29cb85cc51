#pragma once

#include <stdexcept>
#include <string>

namespace planeperiods {

/// Base class for every failure raised by the library. `stage()` names the
/// pipeline stage so the CLI can report where a run broke down.
class Error : public std::runtime_error {
public:
    Error(std::string stage, const std::string& what)
        : std::runtime_error(what), stage_(std::move(stage)) {}

    [[nodiscard]] const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

/// Precondition violated by the caller (bad degree, malformed label, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Numerical procedure failed to meet its tolerance.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Branch-point configuration is degenerate for the x-projection; shearing
/// the curve usually repairs it.
class NeedsShear : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Malformed or corrupted input file / payload.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Payload bytes do not match their checksum.
class ChecksumError : public FormatError {
public:
    using FormatError::FormatError;
};

/// Verification inputs describe different objects (degree, genus, labels).
class MetadataMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace planeperiods
