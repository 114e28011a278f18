#pragma once

#include <stdexcept>
#include <string>

namespace nilweight
{

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Input that does not describe a valid object (bad cycle, degree mismatch, ...).
class MalformedInput : public Error
{
public:
  using Error::Error;
};

/// A configured size bound would be exceeded.
class ResourceError : public Error
{
public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error
{
public:
  using Error::Error;
};

/// A computed object failed one of its own certificates. Always a bug.
class InternalConsistencyError : public Error
{
public:
  using Error::Error;
};

/// The environment cannot support the requested computation.
class ConfigurationError : public Error
{
public:
  using Error::Error;
};

} // namespace nilweight
