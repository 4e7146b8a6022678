// Copyright 2026 The tempcorr Authors
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

#ifndef TEMPCORR_ERROR_HPP
#define TEMPCORR_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace tempcorr {

enum class ErrorCode {
  kNotHermitian,
  kSpectrumOutOfRange,
  kNotTracePreserving,
  kDimensionMismatch,
  kNormTooLarge,
  kWrongDimension,
  kParamOutOfRange,
  kNotADensityMatrix,
  kShapeMismatch,
  kNotAMember,
  kUnnormalizedConditional,
  kTooManyVertices,
  kUnsupportedLength,
  kEmptyDecomposition,
  kScenarioMismatch,
  kInvalidStrategy,
  kDomainError,
  kNoValidRoot,
  kNotAProjector,
  kInvalidArgument,
  kSchema,
};

std::string_view to_string(ErrorCode code);

/// Every library failure is reported through this type. The message names
/// the violated bound and, where there is one, the magnitude of the violation.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tempcorr

#endif  // TEMPCORR_ERROR_HPP
