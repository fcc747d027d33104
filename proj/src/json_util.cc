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

#include "crosscov/json_util.h"

namespace crosscov {

Json InputToJson(const Input& input) {
  Json arr = Json::array();
  for (const Value& v : input) {
    if (const bool* b = std::get_if<bool>(&v)) {
      arr.push_back(*b);
    } else {
      arr.push_back(std::get<std::int64_t>(v));
    }
  }
  return arr;
}

Input InputFromJson(const Json& j) {
  if (!j.is_array()) throw FormatError("input must be a JSON array");
  Input out;
  for (const Json& v : j) {
    if (v.is_boolean()) {
      out.emplace_back(v.get<bool>());
    } else if (v.is_number_integer()) {
      out.emplace_back(v.get<std::int64_t>());
    } else {
      throw FormatError("input values must be integers or booleans");
    }
  }
  return out;
}

}  // namespace crosscov
