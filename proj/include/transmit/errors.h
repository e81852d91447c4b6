#pragma once

#include <stdexcept>
#include <string>

#include "transmit/bigint.h"

namespace transmit {

// Parameter or structural precondition violated by caller input.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size or resource cap would be exceeded. Carries the estimated size
// (in vertices) that triggered the refusal.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, BigInt estimated_size)
      : std::runtime_error(what), estimated_size_(std::move(estimated_size)) {}

  const BigInt& estimated_size() const { return estimated_size_; }

 private:
  BigInt estimated_size_;
};

// Transmission requested on a disconnected graph.
class ConnectivityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A closed form produced an inexact division. Every formula in the engine is
// integral, so this always means a transcription bug.
class ArithmeticError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace transmit
