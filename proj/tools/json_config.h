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

// JSON reader/writer for CLI11 config files. A config is a flat object whose
// keys are long option names without the leading dashes; arrays feed
// multi-value options. Command-line flags take precedence.

#ifndef SSMTSP_TOOLS_JSON_CONFIG_H_
#define SSMTSP_TOOLS_JSON_CONFIG_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace ssmtsp::cli {

class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App* app, bool default_also,
                        bool write_description,
                        std::string prefix) const override;
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override;
};

}  // namespace ssmtsp::cli

#endif  // SSMTSP_TOOLS_JSON_CONFIG_H_
