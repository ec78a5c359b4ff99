#pragma once

#include <stdexcept>
#include <string>

namespace c4star {

/// Base of every domain error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class NotPrimePower : public Error
{
public:
    explicit NotPrimePower(long long q) :
        Error(std::to_string(q) + " is not a prime power")
    {
    }
};

class DivisionByZero : public Error
{
public:
    DivisionByZero() : Error("division by zero in finite field") {}
};

class SamePoint : public Error
{
public:
    SamePoint() : Error("the two points coincide") {}
};

class SameLine : public Error
{
public:
    SameLine() : Error("the two lines coincide") {}
};

class SameVertex : public Error
{
public:
    SameVertex() : Error("the two vertices coincide") {}
};

class InvalidParams : public Error
{
public:
    using Error::Error;
};

class ExcludedCase : public Error
{
public:
    using Error::Error;
};

class FrameTooSmall : public Error
{
public:
    using Error::Error;
};

class InvalidGraph : public Error
{
public:
    using Error::Error;
};

class ConflictingClauses : public Error
{
public:
    using Error::Error;
};

class InconsistentBounds : public Error
{
public:
    using Error::Error;
};

} // namespace c4star
