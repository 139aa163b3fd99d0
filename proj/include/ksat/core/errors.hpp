#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ksat {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input does not describe a valid model, scenario, or file.
class SchemaError : public Error {
public:
  using Error::Error;
};

class InvalidFaultySet : public Error {
public:
  using Error::Error;
};

class InvalidQuorumMap : public Error {
public:
  using Error::Error;
};

class InvalidParameters : public Error {
public:
  using Error::Error;
};

/// An exact search exceeded its configured cap. `partial` is the best value
/// found before the search stopped (a lower bound on the exact answer).
class SizeLimitExceeded : public Error {
public:
  SizeLimitExceeded(const std::string& what, std::size_t partial)
      : Error(what), partial_(partial) {}
  std::size_t partial() const { return partial_; }

private:
  std::size_t partial_;
};

class UnresolvedInput : public Error {
public:
  using Error::Error;
};

class MalformedHistory : public Error {
public:
  using Error::Error;
};

class InvalidTransaction : public Error {
public:
  using Error::Error;
};

/// The trust model admits no multi-spend (inconsistency number 1, or no
/// faulty process that could act as the equivocating source).
class NotVulnerable : public Error {
public:
  using Error::Error;
};

}  // namespace ksat
