#pragma once

#include <stdexcept>
#include <string>

namespace gcs {

// Base of every error raised by the library. The CLI maps these onto exit
// code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidRow : public Error {
public:
    using Error::Error;
};

class InvalidGrading : public Error {
public:
    using Error::Error;
};

class ModulusMismatch : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class NotApplicable : public Error {
public:
    using Error::Error;
};

class InconsistentStratum : public Error {
public:
    using Error::Error;
};

} // namespace gcs
