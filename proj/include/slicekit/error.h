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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slicekit {

/// Domain error codes. The spelling returned by ErrcName() is part of the CLI
/// contract and is echoed verbatim on stderr.
enum class Errc {
  kParseError,
  kValidationFailed,
  kBudgetError,
  kDuplicateVim,
  kUnknownVim,
  kInvalidCapacity,
  kQuotaExceeded,
  kAddressExhausted,
  kUnknownVm,
  kAlreadyReleased,
  kUnknownPackage,
  kCatalogConflict,
  kUnknownNsd,
  kUnknownNsid,
  kUnknownNs,
  kUnknownSlice,
  kUnknownVnfd,
  kNoFeasiblePlacement,
  kInvalidPlan,
  kChainError,
  kInvalidState,
  kSliceAttached,
  kDuplicate,
  kUnknownParent,
  kInvalidShare,
  kShareExhausted,
  kUnknownPath,
  kSliceNotServing,
  kAlreadyAttached,
  kUnknownUe,
  kUesAttached,
  kAlreadyRegistered,
  kDisconnectedGraph,
  kOutOfRange,
  kNonMonotonicTimestamp,
  kBadRange,
  kEmptySeries,
  kOverlappingSteps,
  kUnsupportedVersion,
  kCorruptSnapshot,
  kInvalidName,
  kIoError,
};

std::string_view ErrcName(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }
  std::string_view name() const { return ErrcName(code_); }

 private:
  Errc code_;
};

/// Descriptor parse failure. The message starts with "syntax: " or
/// "invariant: " so callers and the CLI can tell the two apart.
class ParseError : public Error {
 public:
  enum class Kind { kSyntax, kInvariant };

  ParseError(Kind kind, const std::string &message)
      : Error(Errc::kParseError,
              (kind == Kind::kSyntax ? "syntax: " : "invariant: ") + message),
        kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace slicekit
