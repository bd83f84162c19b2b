#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wdm {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A parameter outside the documented domain of an operation.
class InvalidParameter : public Error
{
public:
    using Error::Error;
};

/// An exact search was asked to run above its configured vertex cap.
class CapabilityError : public Error
{
public:
    CapabilityError(const std::string & what, std::size_t cap, std::size_t requested) :
        Error(what + " (cap " + std::to_string(cap) + ", requested " + std::to_string(requested) + ")"),
        _cap(cap),
        _requested(requested)
    {
    }

    auto cap() const noexcept -> std::size_t { return _cap; }
    auto requested() const noexcept -> std::size_t { return _requested; }

private:
    std::size_t _cap;
    std::size_t _requested;
};

class ParseError : public Error
{
public:
    ParseError(std::size_t line, const std::string & what) :
        Error("line " + std::to_string(line) + ": " + what),
        _line(line)
    {
    }

    auto line() const noexcept -> std::size_t { return _line; }

private:
    std::size_t _line;
};

class PreconditionError : public Error
{
public:
    using Error::Error;
};

/// A bound evaluator was called outside its hypotheses.
class InapplicableBound : public Error
{
public:
    using Error::Error;
};

/// An applicable bound was contradicted by an exact quantity.
class BoundViolation : public Error
{
public:
    using Error::Error;
};

/// A WDM handed to solution extraction is outside the normal form the
/// replacement chain is defined for.
class NormalFormViolation : public Error
{
public:
    using Error::Error;
};

}
