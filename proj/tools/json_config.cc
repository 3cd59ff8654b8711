// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "json_config.h"

#include <istream>

#include <nlohmann/json.hpp>

namespace ssmtsp::cli {
namespace {

std::string Scalar(const nlohmann::json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  return value.dump();
}

}  // namespace

std::string JsonConfig::to_config(const CLI::App* app, bool default_also,
                                  bool /*write_description*/,
                                  std::string /*prefix*/) const {
  nlohmann::json out = nlohmann::json::object();
  for (const CLI::Option* opt : app->get_options()) {
    if (opt->get_lnames().empty() || !opt->get_configurable()) continue;
    const std::string& name = opt->get_lnames().front();
    if (opt->count() > 0) {
      const std::vector<std::string>& results = opt->results();
      if (opt->get_expected_max() > 1) {
        out[name] = results;
      } else if (opt->get_type_size() == 0) {
        out[name] = true;
      } else {
        out[name] = results.back();
      }
    } else if (default_also && !opt->get_default_str().empty()) {
      out[name] = opt->get_default_str();
    }
  }
  return out.dump(2);
}

std::vector<CLI::ConfigItem> JsonConfig::from_config(
    std::istream& input) const {
  nlohmann::json doc;
  try {
    input >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw CLI::ConversionError(std::string("config is not valid JSON: ") +
                               e.what());
  }
  if (!doc.is_object()) {
    throw CLI::ConversionError("config must be a JSON object");
  }
  std::vector<CLI::ConfigItem> items;
  for (const auto& [key, value] : doc.items()) {
    CLI::ConfigItem item;
    item.name = key;
    if (value.is_array()) {
      for (const auto& element : value) item.inputs.push_back(Scalar(element));
    } else {
      item.inputs.push_back(Scalar(value));
    }
    items.push_back(std::move(item));
  }
  return items;
}

}  // namespace ssmtsp::cli
