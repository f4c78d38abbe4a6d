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
#include <string_view>
#include <utility>
#include <vector>

namespace slicekit::document {

/// One node of an indentation-structured key/value document.
///
/// Grammar (UTF-8, LF line endings, two-space indentation):
///
///   record  := key ":" " " scalar | key ":" NEWLINE block
///   block   := record+ | item+           (indented two spaces deeper)
///   item    := "- " scalar | "- " record (further records of the item
///                                         continue two spaces deeper)
///   scalar  := bare-token | '"' chars '"'
///
/// A key followed by no deeper block holds an empty block (an empty map, read
/// as an empty list where a list is expected). Emit() omits empty blocks.
/// Bare tokens contain no whitespace and do not start with a quote. Quoted
/// strings support the escapes \" \\ and \n. Blank lines and lines whose first
/// non-space character is '#' are ignored.
struct Node {
  enum class Kind { kScalar, kMap, kList };

  Kind kind = Kind::kScalar;
  std::string scalar;
  bool quoted = false;
  std::vector<std::pair<std::string, Node>> entries;
  std::vector<Node> items;
  int line = 0;

  static Node Scalar(std::string value, bool quoted = false);
  static Node Map();
  static Node List();

  bool is_scalar() const { return kind == Kind::kScalar; }
  bool is_map() const { return kind == Kind::kMap; }
  bool is_list() const { return kind == Kind::kList; }

  /// nullptr when absent or when this node is not a map.
  const Node *Find(std::string_view key) const;

  Node &Add(std::string key, Node value);
  Node &Add(std::string key, std::string scalar);
  Node &Append(Node item);

  /// Structural equality; source line numbers and quoting are ignored.
  bool SameAs(const Node &other) const;
};

/// Throws Error(kParseError) with a "syntax" prefix and line number.
Node Parse(std::string_view text);

/// Inverse of Parse for trees built from maps, lists and scalars. Scalars that
/// cannot be written bare are quoted. Output ends with a single LF.
std::string Emit(const Node &root);

/// True when the value can be emitted without quotes.
bool IsBareToken(std::string_view value);

}  // namespace slicekit::document
