// Copyright 2026 The fairdial Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef FAIRDIAL_ERROR_HPP_
#define FAIRDIAL_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace fairdial {

// Values mirror fd_status in the C API.
enum class ErrorCode : int {
  kInput = 1,
  kParse = 2,
  kCapacity = 3,
  kIo = 4,
  kInvariant = 5,
  kDegenerate = 6,
  kFault = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace fairdial

#endif  // FAIRDIAL_ERROR_HPP_
