// Copyright 2026 The nlmotion Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace nlmotion::cli {

/// Names accepted by preset_text: splitting, squeezing, kerr, parametric.
std::vector<std::string> preset_names();

/// Commented configuration text of a built-in scenario. Throws ConfigError
/// for an unknown name.
std::string preset_text(std::string_view name);

}  // namespace nlmotion::cli
