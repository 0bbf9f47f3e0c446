#pragma once

#include <stdexcept>
#include <string>

namespace rectpack {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class StateBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidSplit : public Error {
 public:
  using Error::Error;
};

class NotExtractable : public Error {
 public:
  using Error::Error;
};

class MixedOrientation : public Error {
 public:
  using Error::Error;
};

class MalformedCorridor : public Error {
 public:
  using Error::Error;
};

class ChainNotFound : public Error {
 public:
  using Error::Error;
};

class StripBlocked : public Error {
 public:
  using Error::Error;
};

// Malformed JSON content or missing fields.
class SchemaError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace rectpack
