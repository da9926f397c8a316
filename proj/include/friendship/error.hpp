// Copyright 2026 The Authors.
//
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace friendship {

enum class ErrorCode {
  kInvalidOrder,
  kLoopRejected,
  kBadVertex,
  kDuplicateArc,
  kSameVertex,
  kParseError,
  kNotPrime,
  kBadDegree,
  kDivisionByZero,
  kFieldMismatch,
  kNotPrimePower,
  kBadCycleLength,
  kBlockCountMismatch,
  kHallViolation,
  kNotSbibd,
  kNotAWheel,
  kTooLarge,
  kInternalInvariantBroken,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidOrder: return "InvalidOrder";
    case ErrorCode::kLoopRejected: return "LoopRejected";
    case ErrorCode::kBadVertex: return "BadVertex";
    case ErrorCode::kDuplicateArc: return "DuplicateArc";
    case ErrorCode::kSameVertex: return "SameVertex";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kBadDegree: return "BadDegree";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kNotPrimePower: return "NotPrimePower";
    case ErrorCode::kBadCycleLength: return "BadCycleLength";
    case ErrorCode::kBlockCountMismatch: return "BlockCountMismatch";
    case ErrorCode::kHallViolation: return "HallViolation";
    case ErrorCode::kNotSbibd: return "NotSbibd";
    case ErrorCode::kNotAWheel: return "NotAWheel";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInternalInvariantBroken: return "InternalInvariantBroken";
  }
  return "Unknown";
}

/// Base exception for every failure raised by the library. The code is
/// stable and intended for programmatic dispatch; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a block family has no system of distinct representatives.
/// Carries a block subset whose complements jointly cover fewer varieties
/// than the subset has members.
class HallViolation : public Error {
 public:
  HallViolation(std::vector<std::size_t> deficient_blocks,
                std::size_t union_size)
      : Error(ErrorCode::kHallViolation,
              "block subset of size " +
                  std::to_string(deficient_blocks.size()) +
                  " has complement union of size " +
                  std::to_string(union_size)),
        deficient_blocks_(std::move(deficient_blocks)),
        union_size_(union_size) {}

  const std::vector<std::size_t>& deficient_blocks() const noexcept {
    return deficient_blocks_;
  }
  std::size_t union_size() const noexcept { return union_size_; }

 private:
  std::vector<std::size_t> deficient_blocks_;
  std::size_t union_size_;
};

}  // namespace friendship
