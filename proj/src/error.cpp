// Copyright 2026 The qperturb Authors.
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

#include "qperturb/error.hpp"

namespace qperturb {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kInfeasibleDegreeSequence: return "InfeasibleDegreeSequence";
    case ErrorKind::kEmptyEdgeSet: return "EmptyEdgeSet";
    case ErrorKind::kNodeOutOfRange: return "NodeOutOfRange";
    case ErrorKind::kEdgeNotPresent: return "EdgeNotPresent";
    case ErrorKind::kConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::kNotATree: return "NotATree";
    case ErrorKind::kNotRegular: return "NotRegular";
    case ErrorKind::kNonZeroRemainder: return "NonZeroRemainder";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kLevelOutOfRange: return "LevelOutOfRange";
    case ErrorKind::kLengthMismatch: return "LengthMismatch";
    case ErrorKind::kZeroCut: return "ZeroCut";
    case ErrorKind::kDivisionByZero: return "DivisionByZero";
    case ErrorKind::kEmptyInput: return "EmptyInput";
    case ErrorKind::kInsufficientData: return "InsufficientData";
    case ErrorKind::kIoError: return "IoError";
    case ErrorKind::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace qperturb
