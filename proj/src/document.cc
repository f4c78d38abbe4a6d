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

#include "slicekit/document.h"

#include <cctype>
#include <stdexcept>

#include "slicekit/error.h"

namespace slicekit::document {

namespace {

struct Line {
  int indent;
  std::string content;
  int number;
};

[[noreturn]] void SyntaxError(int line, const std::string &what) {
  throw ParseError(ParseError::Kind::kSyntax, "line " + std::to_string(line) + ": " + what);
}

bool IsKeyChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.';
}

// Length of a leading "key:" (followed by end of line or a space), 0 if none.
std::size_t KeyPrefixLength(std::string_view content) {
  std::size_t i = 0;
  while (i < content.size() && IsKeyChar(content[i])) ++i;
  if (i == 0 || i >= content.size() || content[i] != ':') return 0;
  if (i + 1 == content.size() || content[i + 1] == ' ') return i;
  return 0;
}

std::vector<Line> SplitLines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (raw.find('\r') != std::string_view::npos) SyntaxError(number, "carriage return");
    if (raw.find('\t') != std::string_view::npos) SyntaxError(number, "tab character");
    std::size_t indent = 0;
    while (indent < raw.size() && raw[indent] == ' ') ++indent;
    if (indent == raw.size() || raw[indent] == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (indent % 2 != 0) SyntaxError(number, "indentation must be a multiple of two spaces");
    std::string_view content = raw.substr(indent);
    if (content.back() == ' ') SyntaxError(number, "trailing whitespace");
    lines.push_back({static_cast<int>(indent), std::string(content), number});
    if (end == text.size()) break;
  }
  return lines;
}

class Parser {
 public:
  explicit Parser(std::vector<Line> lines) : lines_(std::move(lines)) {}

  Node Document() {
    if (lines_.empty()) SyntaxError(1, "empty document");
    if (lines_[0].indent != 0) SyntaxError(lines_[0].number, "document must start at column 0");
    if (IsItem(lines_[0].content)) SyntaxError(lines_[0].number, "document must be a record");
    Node root = ParseMap(0);
    if (pos_ < lines_.size()) SyntaxError(lines_[pos_].number, "unexpected indentation");
    return root;
  }

 private:
  static bool IsItem(const std::string &content) {
    return content == "-" || content.rfind("- ", 0) == 0;
  }

  Node ParseBlock(int indent) {
    if (IsItem(lines_[pos_].content)) return ParseList(indent);
    return ParseMap(indent);
  }

  Node ParseMap(int indent) {
    Node map = Node::Map();
    map.line = lines_[pos_].number;
    while (pos_ < lines_.size() && lines_[pos_].indent >= indent) {
      const Line &line = lines_[pos_];
      if (line.indent > indent) SyntaxError(line.number, "unexpected indentation");
      if (IsItem(line.content)) SyntaxError(line.number, "list item inside a record block");
      std::size_t key_len = KeyPrefixLength(line.content);
      if (key_len == 0) SyntaxError(line.number, "expected 'key:'");
      std::string key = line.content.substr(0, key_len);
      if (map.Find(key) != nullptr) SyntaxError(line.number, "duplicate key '" + key + "'");
      int number = line.number;
      if (key_len + 1 == line.content.size()) {
        ++pos_;
        if (pos_ >= lines_.size() || lines_[pos_].indent != indent + 2) {
          Node empty = Node::Map();
          empty.line = number;
          map.entries.emplace_back(key, std::move(empty));
        } else {
          map.entries.emplace_back(key, ParseBlock(indent + 2));
        }
      } else {
        std::string rest = line.content.substr(key_len + 2);
        Node value = ParseScalar(rest, number);
        ++pos_;
        map.entries.emplace_back(key, std::move(value));
      }
    }
    return map;
  }

  Node ParseList(int indent) {
    Node list = Node::List();
    list.line = lines_[pos_].number;
    while (pos_ < lines_.size() && lines_[pos_].indent >= indent) {
      Line &line = lines_[pos_];
      if (line.indent > indent) SyntaxError(line.number, "unexpected indentation");
      if (!IsItem(line.content)) SyntaxError(line.number, "record inside a list block");
      if (line.content == "-") SyntaxError(line.number, "empty list item");
      std::string rest = line.content.substr(2);
      if (rest.empty() || rest.front() == ' ') SyntaxError(line.number, "malformed list item");
      if (rest.front() != '"' && KeyPrefixLength(rest) > 0) {
        // The item's first record shares the dash line; re-home it one level deeper.
        line.indent = indent + 2;
        line.content = std::move(rest);
        list.items.push_back(ParseMap(indent + 2));
      } else {
        int number = line.number;
        list.items.push_back(ParseScalar(rest, number));
        ++pos_;
      }
    }
    return list;
  }

  static Node ParseScalar(const std::string &text, int line) {
    if (text.empty() || text.front() == ' ') SyntaxError(line, "expected a value after ': '");
    if (text.front() != '"') {
      for (char c : text) {
        if (c == ' ' || c == '"' || c == '\\') SyntaxError(line, "bare value contains '" + std::string(1, c) + "'");
      }
      Node n = Node::Scalar(text);
      n.line = line;
      return n;
    }
    std::string value;
    std::size_t i = 1;
    bool closed = false;
    while (i < text.size()) {
      char c = text[i];
      if (c == '\\') {
        if (i + 1 >= text.size()) SyntaxError(line, "dangling escape");
        char e = text[i + 1];
        if (e == '"' || e == '\\') value.push_back(e);
        else if (e == 'n') value.push_back('\n');
        else SyntaxError(line, "unknown escape");
        i += 2;
      } else if (c == '"') {
        closed = true;
        ++i;
        break;
      } else {
        value.push_back(c);
        ++i;
      }
    }
    if (!closed) SyntaxError(line, "unterminated string");
    if (i != text.size()) SyntaxError(line, "text after closing quote");
    Node n = Node::Scalar(std::move(value), true);
    n.line = line;
    return n;
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

std::string QuoteIfNeeded(const std::string &value) {
  if (IsBareToken(value)) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"' || c == '\\') {
      out.push_back('\\');
      out.push_back(c);
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

bool IsEmptyBlock(const Node &n) {
  return (n.is_map() && n.entries.empty()) || (n.is_list() && n.items.empty());
}

void EmitNode(const Node &node, int indent, std::string &out);

void EmitEntry(const std::string &key, const Node &value, int indent, std::string &out,
               bool dash) {
  std::string prefix(static_cast<std::size_t>(dash ? indent - 2 : indent), ' ');
  if (dash) prefix += "- ";
  if (value.is_scalar()) {
    out += prefix + key + ": " + QuoteIfNeeded(value.scalar) + "\n";
  } else {
    out += prefix + key + ":\n";
    EmitNode(value, indent + 2, out);
  }
}

void EmitNode(const Node &node, int indent, std::string &out) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  if (node.is_map()) {
    for (const auto &[key, value] : node.entries) {
      if (IsEmptyBlock(value)) continue;
      EmitEntry(key, value, indent, out, false);
    }
  } else if (node.is_list()) {
    for (const Node &item : node.items) {
      if (item.is_scalar()) {
        out += pad + "- " + QuoteIfNeeded(item.scalar) + "\n";
      } else if (item.is_map()) {
        bool first = true;
        for (const auto &[key, value] : item.entries) {
          if (IsEmptyBlock(value)) continue;
          EmitEntry(key, value, indent + 2, out, first);
          first = false;
        }
        if (first) throw std::logic_error("cannot emit an empty list item");
      } else {
        throw std::logic_error("nested lists are not representable");
      }
    }
  } else {
    throw std::logic_error("a scalar cannot be emitted as a block");
  }
}

}  // namespace

Node Node::Scalar(std::string value, bool quoted) {
  Node n;
  n.kind = Kind::kScalar;
  n.scalar = std::move(value);
  n.quoted = quoted;
  return n;
}

Node Node::Map() {
  Node n;
  n.kind = Kind::kMap;
  return n;
}

Node Node::List() {
  Node n;
  n.kind = Kind::kList;
  return n;
}

const Node *Node::Find(std::string_view key) const {
  if (!is_map()) return nullptr;
  for (const auto &[k, v] : entries) {
    if (k == key) return &v;
  }
  return nullptr;
}

Node &Node::Add(std::string key, Node value) {
  entries.emplace_back(std::move(key), std::move(value));
  return entries.back().second;
}

Node &Node::Add(std::string key, std::string value) {
  return Add(std::move(key), Scalar(std::move(value)));
}

Node &Node::Append(Node item) {
  items.push_back(std::move(item));
  return items.back();
}

bool Node::SameAs(const Node &other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case Kind::kScalar:
      return scalar == other.scalar;
    case Kind::kMap:
      if (entries.size() != other.entries.size()) return false;
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].first != other.entries[i].first) return false;
        if (!entries[i].second.SameAs(other.entries[i].second)) return false;
      }
      return true;
    case Kind::kList:
      if (items.size() != other.items.size()) return false;
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (!items[i].SameAs(other.items[i])) return false;
      }
      return true;
  }
  return false;
}

Node Parse(std::string_view text) {
  return Parser(SplitLines(text)).Document();
}

std::string Emit(const Node &root) {
  if (!root.is_map()) throw std::logic_error("document root must be a map");
  std::string out;
  EmitNode(root, 0, out);
  return out;
}

bool IsBareToken(std::string_view value) {
  if (value.empty() || value.front() == '#') return false;
  for (char c : value) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '"' || c == '\\') return false;
  }
  // "x:" would read back as a record.
  if (value.back() == ':') return false;
  if (value == "-") return false;
  return true;
}

}  // namespace slicekit::document
