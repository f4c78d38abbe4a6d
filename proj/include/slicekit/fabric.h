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

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace slicekit::fabric {

/// An undirected link between two VMs. `label` names its origin: an internal
/// vl name or "chain".
struct Edge {
  std::string a;
  std::string b;
  std::string label;

  friend bool operator==(const Edge &, const Edge &) = default;
};

struct SliceGraph {
  std::string slice_id;
  std::uint32_t vlan_tag = 0;
  std::vector<std::string> nodes;
  std::vector<Edge> edges;

  bool Contains(std::string_view vm_id) const;
  friend bool operator==(const SliceGraph &, const SliceGraph &) = default;
};

/// Builds and checks a graph without touching any registry. Throws
/// DisconnectedGraph when some node cannot reach another, and UnknownVm when an
/// edge names a node outside `nodes`. The tag is left at 0.
SliceGraph BuildGraph(std::string slice_id, std::vector<std::string> nodes, std::vector<Edge> edges);

/// Tags start at 100 and only grow. Retired tags are never issued again.
struct TagPool {
  static constexpr std::uint32_t kFirstTag = 100;

  std::uint32_t next_tag = kFirstTag;
  std::set<std::uint32_t> retired;

  friend bool operator==(const TagPool &, const TagPool &) = default;
};

struct IsolationEntry {
  std::string slice_id;
  std::uint32_t vlan_tag = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t cross_slice_edges = 0;

  friend bool operator==(const IsolationEntry &, const IsolationEntry &) = default;
};

struct IsolationReport {
  std::vector<IsolationEntry> slices;

  std::size_t cross_slice_edges() const;
  /// `<slice-id> <tag> <nodes> <edges> <cross-slice-edges>` per line.
  std::string ToString() const;
  friend bool operator==(const IsolationReport &, const IsolationReport &) = default;
};

/// One tenant-controller fabric covering both the RAN and the transport/core
/// scopes, sharing a single tag space. The management network is never part
/// of a slice graph.
class Fabric {
 public:
  /// AlreadyRegistered when the slice or any of its VMs is registered;
  /// DisconnectedGraph as for BuildGraph.
  const SliceGraph &Register(std::string slice_id, std::vector<std::string> nodes,
                             std::vector<Edge> edges);
  /// UnknownSlice.
  void Retract(std::string_view slice_id);

  /// UnknownVm when either VM is in no graph.
  bool Reachable(std::string_view vm_a, std::string_view vm_b) const;

  IsolationReport Report() const;
  /// `<slice-id> <tag> <vm-a> <vm-b>` per edge, slices in id order.
  std::string ExportEdges() const;

  const SliceGraph *Find(std::string_view slice_id) const;
  const std::map<std::string, SliceGraph, std::less<>> &graphs() const { return graphs_; }
  const TagPool &tags() const { return tags_; }

  static Fabric FromParts(std::vector<SliceGraph> graphs, TagPool tags);
  friend bool operator==(const Fabric &, const Fabric &) = default;

 private:
  std::map<std::string, SliceGraph, std::less<>> graphs_;
  std::map<std::string, std::string, std::less<>> owner_;
  TagPool tags_;
};

}  // namespace slicekit::fabric
