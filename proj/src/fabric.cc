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

#include "slicekit/fabric.h"

#include <algorithm>
#include <deque>

#include "slicekit/error.h"

namespace slicekit::fabric {

namespace {

using Adjacency = std::map<std::string_view, std::vector<std::string_view>>;

Adjacency AdjacencyOf(const SliceGraph &graph) {
  Adjacency adj;
  for (const std::string &n : graph.nodes) adj[n];
  for (const Edge &e : graph.edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  return adj;
}

std::set<std::string_view> Visit(const Adjacency &adj, std::string_view from) {
  std::set<std::string_view> seen{from};
  std::deque<std::string_view> queue{from};
  while (!queue.empty()) {
    std::string_view at = queue.front();
    queue.pop_front();
    for (std::string_view next : adj.at(at)) {
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen;
}

}  // namespace

bool SliceGraph::Contains(std::string_view vm_id) const {
  return std::find(nodes.begin(), nodes.end(), vm_id) != nodes.end();
}

SliceGraph BuildGraph(std::string slice_id, std::vector<std::string> nodes, std::vector<Edge> edges) {
  SliceGraph graph{std::move(slice_id), 0, std::move(nodes), std::move(edges)};
  std::set<std::string_view> unique(graph.nodes.begin(), graph.nodes.end());
  if (unique.size() != graph.nodes.size()) {
    throw Error(Errc::kAlreadyRegistered, "slice " + graph.slice_id + " lists a VM twice");
  }
  for (const Edge &e : graph.edges) {
    for (const std::string *end : {&e.a, &e.b}) {
      if (unique.count(*end) == 0) {
        throw Error(Errc::kUnknownVm, "edge endpoint " + *end + " is not a node of " + graph.slice_id);
      }
    }
  }
  if (!graph.nodes.empty()) {
    Adjacency adj = AdjacencyOf(graph);
    std::set<std::string_view> seen = Visit(adj, graph.nodes.front());
    if (seen.size() != graph.nodes.size()) {
      for (const std::string &n : graph.nodes) {
        if (seen.count(n) == 0) {
          throw Error(Errc::kDisconnectedGraph, "slice " + graph.slice_id + ": " + n +
                                                    " is unreachable from " + graph.nodes.front());
        }
      }
    }
  }
  return graph;
}

std::size_t IsolationReport::cross_slice_edges() const {
  std::size_t total = 0;
  for (const IsolationEntry &e : slices) total += e.cross_slice_edges;
  return total;
}

std::string IsolationReport::ToString() const {
  std::string out;
  for (const IsolationEntry &e : slices) {
    out += e.slice_id + " " + std::to_string(e.vlan_tag) + " " + std::to_string(e.nodes) + " " +
           std::to_string(e.edges) + " " + std::to_string(e.cross_slice_edges) + "\n";
  }
  return out;
}

const SliceGraph &Fabric::Register(std::string slice_id, std::vector<std::string> nodes,
                                   std::vector<Edge> edges) {
  if (graphs_.count(slice_id) != 0) {
    throw Error(Errc::kAlreadyRegistered, "slice " + slice_id + " is already registered");
  }
  for (const std::string &n : nodes) {
    auto it = owner_.find(n);
    if (it != owner_.end()) {
      throw Error(Errc::kAlreadyRegistered, "VM " + n + " already belongs to slice " + it->second);
    }
  }
  SliceGraph graph = BuildGraph(slice_id, std::move(nodes), std::move(edges));
  graph.vlan_tag = tags_.next_tag++;
  for (const std::string &n : graph.nodes) owner_.emplace(n, graph.slice_id);
  return graphs_.emplace(slice_id, std::move(graph)).first->second;
}

void Fabric::Retract(std::string_view slice_id) {
  auto it = graphs_.find(slice_id);
  if (it == graphs_.end()) {
    throw Error(Errc::kUnknownSlice, "slice " + std::string(slice_id) + " is not registered");
  }
  for (const std::string &n : it->second.nodes) owner_.erase(n);
  tags_.retired.insert(it->second.vlan_tag);
  graphs_.erase(it);
}

bool Fabric::Reachable(std::string_view vm_a, std::string_view vm_b) const {
  auto a = owner_.find(vm_a);
  auto b = owner_.find(vm_b);
  if (a == owner_.end() || b == owner_.end()) {
    throw Error(Errc::kUnknownVm, "VM " + std::string(a == owner_.end() ? vm_a : vm_b) +
                                      " is in no slice graph");
  }
  if (a->second != b->second) return false;
  const SliceGraph &graph = graphs_.at(a->second);
  return Visit(AdjacencyOf(graph), vm_a).count(vm_b) != 0;
}

IsolationReport Fabric::Report() const {
  IsolationReport report;
  for (const auto &[id, graph] : graphs_) {
    IsolationEntry entry{id, graph.vlan_tag, graph.nodes.size(), graph.edges.size(), 0};
    for (const Edge &e : graph.edges) {
      auto a = owner_.find(e.a);
      auto b = owner_.find(e.b);
      bool inside = a != owner_.end() && b != owner_.end() && a->second == id && b->second == id;
      if (!inside) ++entry.cross_slice_edges;
    }
    report.slices.push_back(std::move(entry));
  }
  return report;
}

std::string Fabric::ExportEdges() const {
  std::string out;
  for (const auto &[id, graph] : graphs_) {
    for (const Edge &e : graph.edges) {
      out += id + " " + std::to_string(graph.vlan_tag) + " " + e.a + " " + e.b + "\n";
    }
  }
  return out;
}

const SliceGraph *Fabric::Find(std::string_view slice_id) const {
  auto it = graphs_.find(slice_id);
  return it == graphs_.end() ? nullptr : &it->second;
}

Fabric Fabric::FromParts(std::vector<SliceGraph> graphs, TagPool tags) {
  Fabric fabric;
  fabric.tags_ = std::move(tags);
  for (SliceGraph &g : graphs) {
    for (const std::string &n : g.nodes) fabric.owner_.emplace(n, g.slice_id);
    std::string id = g.slice_id;
    fabric.graphs_.emplace(std::move(id), std::move(g));
  }
  return fabric;
}

}  // namespace slicekit::fabric
