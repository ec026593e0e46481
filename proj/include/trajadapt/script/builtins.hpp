// Copyright 2026 The trajadapt Authors
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

#ifndef TRAJADAPT_SCRIPT_BUILTINS_HPP_
#define TRAJADAPT_SCRIPT_BUILTINS_HPP_

#include <span>
#include <string_view>

namespace trajadapt::script {

enum class BuiltinId {
  kGetTrajectory,
  kDetectObjects,
  kLen,
  kRange,
  kAbs,
  kMin,
  kMax,
  kSqrt,
  kSin,
  kCos,
  kAtan2,
  kFloor,
  kRound,
  kInt,
  kNorm3,
  kDist3,
  kLerp,
  kArcLengthParams,
  kNearestIndex,
  kSmoothTrajectory,
  kResampleTrajectory,
  kEnforceMinDistance,
  kScaleSpeedNear,
  kTruncateAtNearest,
  kAppendSpiral,
  kTranslateBlend,
  kRadialRescale,
};

inline constexpr int kVariadic = -1;

struct BuiltinInfo {
  BuiltinId id;
  std::string_view name;
  int min_args;
  int max_args;  // kVariadic for no upper bound
  std::string_view signature;
  std::string_view summary;
};

/// The closed set of callable names. Shared by the parser (call
/// resolution), the evaluator, and the prompt's builtin table.
std::span<const BuiltinInfo> builtin_table();
const BuiltinInfo* find_builtin(std::string_view name);

}  // namespace trajadapt::script

#endif  // TRAJADAPT_SCRIPT_BUILTINS_HPP_
