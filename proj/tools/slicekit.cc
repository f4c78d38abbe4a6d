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

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "slicekit/cli.h"
#include "slicekit/error.h"

// Loads the session named by SLICEKIT_STATE (when set and present), runs one
// command and writes the session back unless the command was malformed.
int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const char *state = std::getenv("SLICEKIT_STATE");
  slicekit::registry::Engine engine;
  try {
    if (state != nullptr && std::filesystem::exists(state)) engine = slicekit::registry::Load(state);
  } catch (const slicekit::Error &e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return slicekit::cli::kExitDomainError;
  }
  int code = slicekit::cli::Dispatch(args, engine, std::cout, std::cerr);
  if (state != nullptr && code != slicekit::cli::kExitUsageError) {
    try {
      slicekit::registry::Save(engine, state);
    } catch (const slicekit::Error &e) {
      std::cerr << e.name() << ": " << e.what() << "\n";
      return slicekit::cli::kExitDomainError;
    }
  }
  return code;
}
