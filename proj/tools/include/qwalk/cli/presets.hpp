// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "qwalk/cli/config.hpp"

namespace qwalk::cli {

std::vector<std::string> preset_names();

/// Throws ValidationError for an unknown name.
RunConfig preset(const std::string& name);
nlohmann::json preset_json(const std::string& name);

}  // namespace qwalk::cli
