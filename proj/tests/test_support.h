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

#include <string>
#include <vector>

#include "slicekit/descriptor.h"
#include "slicekit/orchestrator.h"

namespace slicekit::testing {

std::string SourcePath(const std::string &relative);
std::string ReadFile(const std::string &path);

/// Texts of every document in descriptors/reference, sorted by file name.
std::vector<std::string> ReferenceDocuments();
descriptor::DescriptorPackage ReferencePackage();

std::vector<std::string> TransferDocuments();
descriptor::DescriptorPackage TransferPackage();

/// vim-cn sized to host the whole core segment (16, 131072, 1000) on
/// 10.0.1.0/24; vim-ran at the desktop default on 10.0.2.0/24.
void AddReferenceVims(orchestrator::Orchestrator &orchestrator);

}  // namespace slicekit::testing
