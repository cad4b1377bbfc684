#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace shapiro {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A query fell outside the tables it was asked against. required_bound() is
// the smallest table bound that would have answered it (0 when unknown).
class RangeError : public Error {
public:
    RangeError(const std::string& what, std::uint64_t required_bound)
        : Error(what), required_bound_(required_bound) {}

    std::uint64_t required_bound() const noexcept { return required_bound_; }

private:
    std::uint64_t required_bound_;
};

class CapacityError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

class MissingPrimeHeightError : public Error {
public:
    using Error::Error;
};

class IncompletePriorError : public Error {
public:
    using Error::Error;
};

class CorruptCacheError : public Error {
public:
    using Error::Error;
};

class VersionMismatchError : public CorruptCacheError {
public:
    using CorruptCacheError::CorruptCacheError;
};

}  // namespace shapiro
