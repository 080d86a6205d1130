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

#ifndef MPU_ERROR_H_
#define MPU_ERROR_H_

#include <stdexcept>
#include <string>

namespace mpu {

// Error families. Each maps onto one CLI exit code (see tools/cli.cc).

// Invalid hyperparameters, malformed config documents, degenerate corpora.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input data: unreadable files, malformed records, empty texts.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A risk batch that cannot be evaluated (empty class, misaligned arrays,
// non-finite scores).
class BatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace mpu

#endif  // MPU_ERROR_H_
