// Copyright 2026 The MPU Detector Authors.
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

#ifndef MPU_TEXT_H_
#define MPU_TEXT_H_

#include <string>
#include <string_view>

namespace mpu {

// ASCII whitespace: space, \t, \n, \v, \f, \r.
constexpr bool IsAsciiSpace(char c) {
  return c == ' ' || (c >= '\t' && c <= '\r');
}

// Trims and collapses every whitespace run to a single space.
std::string NormalizeWhitespace(std::string_view text);

bool IsBlank(std::string_view text);

}  // namespace mpu

#endif  // MPU_TEXT_H_
