#pragma once

#include <stdexcept>
#include <string>

namespace aener {

// Failure classes map one-to-one onto CLI exit statuses (see cli.hpp).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input files, invariant violations, misaligned corpora.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Transport failures and bad responses from a text-generation endpoint.
class BackendError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace aener
