#include "vmc/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace vmc {

ConfigError::ConfigError(std::string path, const std::string& message)
    : std::runtime_error("config error at " + path + ": " + message), path_(std::move(path)) {}

namespace {

using nlohmann::json;

const json& require_field(const json& doc, const std::string& key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ConfigError("/" + key, "missing required field");
  return *it;
}

}  // namespace

ModelParams parse_model_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("/", std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("/", "top level must be an object");

  ModelParams params;

  const json& k_field = require_field(doc, "k");
  if (!k_field.is_number_integer() || k_field.get<int>() < 1)
    throw ConfigError("/k", "must be a positive integer");
  params.k = k_field.get<int>();

  const json& v_field = require_field(doc, "V");
  if (!v_field.is_array() || static_cast<int>(v_field.size()) != params.k)
    throw ConfigError("/V", "must be an array of k rows");
  params.V = Matrix(params.k, params.k);
  for (int i = 0; i < params.k; ++i) {
    const json& row = v_field[i];
    if (!row.is_array() || static_cast<int>(row.size()) != params.k)
      throw ConfigError("/V/" + std::to_string(i), "must be an array of k numbers");
    for (int j = 0; j < params.k; ++j) {
      if (!row[j].is_number())
        throw ConfigError("/V/" + std::to_string(i) + "/" + std::to_string(j), "must be a number");
      params.V(i, j) = row[j].get<double>();
    }
  }

  const json& alpha_field = require_field(doc, "alpha");
  if (!alpha_field.is_array() || static_cast<int>(alpha_field.size()) != params.k)
    throw ConfigError("/alpha", "must be an array of k numbers");
  params.alpha.resize(params.k);
  for (int i = 0; i < params.k; ++i) {
    if (!alpha_field[i].is_number())
      throw ConfigError("/alpha/" + std::to_string(i), "must be a number");
    params.alpha[i] = alpha_field[i].get<double>();
  }

  return validate(std::move(params));
}

ModelParams load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("/", "cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_model_json(buffer.str());
}

}  // namespace vmc
