#pragma once

#include <stdexcept>
#include <string>

namespace graphhash {

// Base for every error the library reports. Callers that only care about
// "something went wrong" catch this; the CLI maps it to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MalformedInput : public Error {
public:
    using Error::Error;
};

class DanglingEndpoint : public Error {
public:
    using Error::Error;
};

class DuplicateVertexId : public Error {
public:
    using Error::Error;
};

class NotABijection : public Error {
public:
    using Error::Error;
};

class SizeMismatch : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class InfeasibleDegree : public Error {
public:
    using Error::Error;
};

class RetryExhausted : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace graphhash
