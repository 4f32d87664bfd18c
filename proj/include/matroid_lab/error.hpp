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

#ifndef MATROID_LAB_ERROR_HPP_
#define MATROID_LAB_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace matroid_lab {

enum class ErrorKind {
  kParse,
  kNotAMatroid,
  kOutOfRange,
  kOverlap,
  kTooLarge,
  kUnknownFamily,
  kUnsupportedParam,
  kNotAFlat,
  kNotNonModular,
  kInvalidCut,
  kLabelClash,
  kNotIntersectable,
  kIsOTE,
  kPreconditionFailed,
  kRestrictionMismatch,
  kNotInLattice,
  kCapacityExceeded,
};

inline std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kNotAMatroid: return "NotAMatroid";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kOverlap: return "OverlapError";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kUnknownFamily: return "UnknownFamily";
    case ErrorKind::kUnsupportedParam: return "UnsupportedParam";
    case ErrorKind::kNotAFlat: return "NotAFlat";
    case ErrorKind::kNotNonModular: return "NotNonModular";
    case ErrorKind::kInvalidCut: return "InvalidCut";
    case ErrorKind::kLabelClash: return "LabelClash";
    case ErrorKind::kNotIntersectable: return "NotIntersectable";
    case ErrorKind::kIsOTE: return "IsOTE";
    case ErrorKind::kPreconditionFailed: return "PreconditionFailed";
    case ErrorKind::kRestrictionMismatch: return "RestrictionMismatch";
    case ErrorKind::kNotInLattice: return "NotInLattice";
    case ErrorKind::kCapacityExceeded: return "CapacityExceeded";
  }
  return "Unknown";
}

// Every domain failure in the library is reported through this type; the
// kind distinguishes the error classes a caller may want to branch on.
class MatroidError : public std::runtime_error {
 public:
  MatroidError(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace matroid_lab

#endif  // MATROID_LAB_ERROR_HPP_
