// Copyright 2026 The Crosscov Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CROSSCOV_JSON_UTIL_H_
#define CROSSCOV_JSON_UTIL_H_

#include <json.hpp>

#include "crosscov/minilang.h"

namespace crosscov {

// Ordered keys keep reports in insertion order, which makes them stable and
// readable.
using Json = nlohmann::ordered_json;

Json InputToJson(const Input& input);
Input InputFromJson(const Json& j);

}  // namespace crosscov

#endif  // CROSSCOV_JSON_UTIL_H_
