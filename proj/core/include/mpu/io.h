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

#ifndef MPU_IO_H_
#define MPU_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

namespace mpu {

// Writes to a sibling temp file and renames it over `path`, so readers see
// either the old file or the complete new one. Throws std::runtime_error.
void WriteFileAtomic(const std::filesystem::path& path,
                     std::string_view contents);

// Throws DataError if the file cannot be read.
std::string ReadFile(const std::filesystem::path& path);

// Lowercase 16-digit hex of FNV-1a 64 over `bytes`.
std::string HashHex(std::string_view bytes);

}  // namespace mpu

#endif  // MPU_IO_H_
