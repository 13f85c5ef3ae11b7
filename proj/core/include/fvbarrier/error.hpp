#pragma once

#include <stdexcept>
#include <string>

namespace fvbarrier {

/// Base for all library errors. The CLI maps the subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain parameters (non-positive radius, bad config field, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that cannot be processed, e.g. a camera outside the region.
class InfeasibleInput : public Error {
 public:
  using Error::Error;
};

}  // namespace fvbarrier
