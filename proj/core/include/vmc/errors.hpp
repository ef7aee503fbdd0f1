#pragma once

#include <stdexcept>
#include <string>

namespace vmc {

// Each fault names the model hypothesis it violates.
enum class ValidationFault {
  AsymmetricMatrix,
  NegativeEntry,
  NonpositiveAlpha,
  ReducibleMatrix,
};

const char* to_string(ValidationFault fault);

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationFault fault, std::string path, const std::string& message);

  ValidationFault fault() const { return fault_; }
  // JSON-pointer location of the offending field, e.g. "/V/0/1".
  const std::string& path() const { return path_; }

 private:
  ValidationFault fault_;
  std::string path_;
};

class NoConvergence : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class SizeOverflow : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace vmc
