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

#include <ostream>
#include <string>
#include <vector>

#include "slicekit/registry.h"

namespace slicekit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

/// Runs one command against `engine`. `args` excludes the program name.
///
/// Returns 0 on success, 1 on a domain error (stderr carries
/// `<ErrorName>: <detail>`) and 2 on a usage error. Output goes to `out` as an
/// aligned table (default) or, with `--format=lines`, as space-separated
/// records with no header.
int Dispatch(const std::vector<std::string> &args, registry::Engine &engine, std::ostream &out,
             std::ostream &err);

}  // namespace slicekit::cli
