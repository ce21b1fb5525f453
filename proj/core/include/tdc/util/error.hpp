#pragma once

#include <stdexcept>
#include <string>

namespace tdc {

/// Base class of all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid algorithm spec or configuration (a usage problem).
class SpecError : public Error {
public:
    using Error::Error;
};

/// Corrupt or otherwise invalid input data.
class DataError : public Error {
public:
    using Error::Error;
};

} // namespace tdc
