// Copyright 2026 The GOAS Solver Authors
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

#ifndef GOAS_ERROR_HPP_
#define GOAS_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace goas {

enum class ErrorCode {
  kCycleDetected,
  kMultipleParents,
  kDisconnectedVertex,
  kNegativeCost,
  kDuplicateId,
  kUnknownVertex,
  kNegativeBudget,
  kNotASubtree,
  kNonConstantCost,
  kZeroCost,
  kNonIntegerCost,
  kUnknownCostValue,
  kDuplicateCostValue,
  kTooManyCostValues,
  kTableTooLarge,
  kTooLarge,
  kInvalidArgument,
  kNotWellFormed,
  kNotNested,
  kSyntaxError,
  kInvalidConfig,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure surfaced by the library. The message names the offending
// vertex, edge, line or parameter.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace goas

#endif  // GOAS_ERROR_HPP_
