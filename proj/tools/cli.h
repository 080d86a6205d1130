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

#ifndef MPU_TOOLS_CLI_H_
#define MPU_TOOLS_CLI_H_

#include <iosfwd>

namespace mpu::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kConfig = 2,
  kData = 3,
  kRuntime = 4,
};

// Entry point of the `mpu` tool. Subcommands: prior, augment, clean, synth,
// train, eval. Every output file is written atomically, and each command
// writes <first output>.manifest.json next to its outputs.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace mpu::cli

#endif  // MPU_TOOLS_CLI_H_
