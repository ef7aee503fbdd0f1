#pragma once

#include <stdexcept>
#include <string>

#include "vmc/model.hpp"

namespace vmc {

// Structural problems in a config document: missing field, wrong type, shape
// mismatch. Hypothesis violations surface as ValidationError instead.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& message);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Parses {"k": int, "V": [[...]], "alpha": [...]} and validates the model.
// Unknown keys are ignored so run configs can carry extra fields. Errors
// point at the offending field with a JSON-pointer path.
ModelParams parse_model_json(const std::string& text);

ModelParams load_model_file(const std::string& path);

}  // namespace vmc
