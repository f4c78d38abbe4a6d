// Copyright 2026 The SliceKit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "slicekit/error.h"

namespace slicekit {

std::string_view ErrcName(Errc code) {
  switch (code) {
    case Errc::kParseError: return "ParseError";
    case Errc::kValidationFailed: return "ValidationFailed";
    case Errc::kBudgetError: return "BudgetError";
    case Errc::kDuplicateVim: return "DuplicateVim";
    case Errc::kUnknownVim: return "UnknownVim";
    case Errc::kInvalidCapacity: return "InvalidCapacity";
    case Errc::kQuotaExceeded: return "QuotaExceeded";
    case Errc::kAddressExhausted: return "AddressExhausted";
    case Errc::kUnknownVm: return "UnknownVm";
    case Errc::kAlreadyReleased: return "AlreadyReleased";
    case Errc::kUnknownPackage: return "UnknownPackage";
    case Errc::kCatalogConflict: return "CatalogConflict";
    case Errc::kUnknownNsd: return "UnknownNsd";
    case Errc::kUnknownNsid: return "UnknownNsid";
    case Errc::kUnknownNs: return "UnknownNs";
    case Errc::kUnknownSlice: return "UnknownSlice";
    case Errc::kUnknownVnfd: return "UnknownVnfd";
    case Errc::kNoFeasiblePlacement: return "NoFeasiblePlacement";
    case Errc::kInvalidPlan: return "InvalidPlan";
    case Errc::kChainError: return "ChainError";
    case Errc::kInvalidState: return "InvalidState";
    case Errc::kSliceAttached: return "SliceAttached";
    case Errc::kDuplicate: return "Duplicate";
    case Errc::kUnknownParent: return "UnknownParent";
    case Errc::kInvalidShare: return "InvalidShare";
    case Errc::kShareExhausted: return "ShareExhausted";
    case Errc::kUnknownPath: return "UnknownPath";
    case Errc::kSliceNotServing: return "SliceNotServing";
    case Errc::kAlreadyAttached: return "AlreadyAttached";
    case Errc::kUnknownUe: return "UnknownUe";
    case Errc::kUesAttached: return "UesAttached";
    case Errc::kAlreadyRegistered: return "AlreadyRegistered";
    case Errc::kDisconnectedGraph: return "DisconnectedGraph";
    case Errc::kOutOfRange: return "OutOfRange";
    case Errc::kNonMonotonicTimestamp: return "NonMonotonicTimestamp";
    case Errc::kBadRange: return "BadRange";
    case Errc::kEmptySeries: return "EmptySeries";
    case Errc::kOverlappingSteps: return "OverlappingSteps";
    case Errc::kUnsupportedVersion: return "UnsupportedVersion";
    case Errc::kCorruptSnapshot: return "CorruptSnapshot";
    case Errc::kInvalidName: return "InvalidName";
    case Errc::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace slicekit
