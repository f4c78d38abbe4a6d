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

#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "slicekit/error.h"

namespace slicekit::fabric {
namespace {

Errc CodeOf(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return Errc::kIoError;
}

// Shape of the reference slice: four core VMs joined by three internal vls
// and one chain edge to the radio VM.
void RegisterReferenceShape(Fabric &fabric, const std::string &id, const std::string &prefix) {
  auto n = [&](const char *s) { return prefix + s; };
  fabric.Register(id, {n("hss"), n("mme"), n("spgwc"), n("spgwu"), n("enb")},
                  {{n("hss"), n("mme"), "s6a-vl"},
                   {n("mme"), n("spgwc"), "s11-vl"},
                   {n("spgwc"), n("spgwu"), "sx-vl"},
                   {n("mme"), n("enb"), "chain"}});
}

TEST(FabricTest, RegisterAssignsTags) {
  Fabric fabric;
  RegisterReferenceShape(fabric, "s1", "a-");
  const SliceGraph *g = fabric.Find("s1");
  ASSERT_NE(g, nullptr);
  EXPECT_EQ(g->nodes.size(), 5u);
  EXPECT_EQ(g->edges.size(), 4u);
  EXPECT_EQ(g->vlan_tag, 100u);
  RegisterReferenceShape(fabric, "s2", "b-");
  EXPECT_EQ(fabric.Find("s2")->vlan_tag, 101u);
}

TEST(FabricTest, RegisterErrors) {
  Fabric fabric;
  RegisterReferenceShape(fabric, "s1", "a-");
  EXPECT_EQ(CodeOf([&] { RegisterReferenceShape(fabric, "s1", "b-"); }), Errc::kAlreadyRegistered);
  EXPECT_EQ(CodeOf([&] { fabric.Register("s3", {"a-hss"}, {}); }), Errc::kAlreadyRegistered);
  EXPECT_EQ(CodeOf([&] { fabric.Register("s4", {"x", "y"}, {}); }), Errc::kDisconnectedGraph);
  EXPECT_EQ(CodeOf([&] { fabric.Register("s5", {"x"}, {{"x", "z", "chain"}}); }), Errc::kUnknownVm);
  EXPECT_EQ(fabric.graphs().size(), 1u);
  EXPECT_EQ(fabric.tags().next_tag, 101u);
}

TEST(FabricTest, SingleNodeGraphIsConnected) {
  Fabric fabric;
  fabric.Register("s", {"only"}, {});
  EXPECT_TRUE(fabric.Reachable("only", "only"));
}

TEST(FabricTest, RetractRestoresExceptTagPool) {
  Fabric fabric;
  RegisterReferenceShape(fabric, "keep", "k-");
  Fabric before = fabric;
  RegisterReferenceShape(fabric, "s", "a-");
  fabric.Retract("s");
  EXPECT_EQ(fabric.graphs(), before.graphs());
  EXPECT_EQ(fabric.Report().slices.size(), 1u);
  EXPECT_EQ(fabric.tags().retired, (std::set<std::uint32_t>{101}));
  EXPECT_EQ(CodeOf([&] { fabric.Retract("s"); }), Errc::kUnknownSlice);
  EXPECT_EQ(CodeOf([&] { fabric.Reachable("a-hss", "a-hss"); }), Errc::kUnknownVm);
}

TEST(FabricTest, RetiredTagsNeverReissued) {
  Fabric fabric;
  std::set<std::uint32_t> issued;
  for (int i = 0; i < 1000; ++i) {
    std::uint32_t tag = fabric.Register("s", {"vm"}, {}).vlan_tag;
    EXPECT_TRUE(issued.insert(tag).second);
    EXPECT_EQ(fabric.tags().retired.count(tag), 0u);
    fabric.Retract("s");
  }
  EXPECT_EQ(fabric.tags().retired.size(), 1000u);
}

TEST(FabricTest, ReachabilityIsolation) {
  Fabric fabric;
  RegisterReferenceShape(fabric, "s1", "a-");
  RegisterReferenceShape(fabric, "s2", "b-");
  EXPECT_TRUE(fabric.Reachable("a-hss", "a-enb"));
  EXPECT_TRUE(fabric.Reachable("a-hss", "a-hss"));
  EXPECT_FALSE(fabric.Reachable("a-hss", "b-hss"));
  IsolationReport r = fabric.Report();
  ASSERT_EQ(r.slices.size(), 2u);
  EXPECT_EQ(r.cross_slice_edges(), 0u);
  EXPECT_EQ(r.ToString(), "s1 100 5 4 0\ns2 101 5 4 0\n");
}

TEST(FabricTest, ExportEdges) {
  Fabric fabric;
  fabric.Register("s", {"x", "y"}, {{"x", "y", "chain"}});
  EXPECT_EQ(fabric.ExportEdges(), "s 100 x y\n");
}

TEST(FabricTest, FromPartsIsEqual) {
  Fabric fabric;
  RegisterReferenceShape(fabric, "s1", "a-");
  RegisterReferenceShape(fabric, "s2", "b-");
  fabric.Retract("s1");
  std::vector<SliceGraph> graphs;
  for (const auto &[id, g] : fabric.graphs()) graphs.push_back(g);
  EXPECT_EQ(Fabric::FromParts(graphs, fabric.tags()), fabric);
}

// Random spanning trees plus extra edges; reachability is compared against a
// union-find closure computed over all registered edges.
TEST(FabricPropertyTest, RandomGraphsMatchUnionFind) {
  std::mt19937 rng(11);
  for (int round = 0; round < 30; ++round) {
    Fabric fabric;
    std::vector<std::string> all;
    std::vector<Edge> all_edges;
    int slices = 1 + static_cast<int>(rng() % 5);
    for (int s = 0; s < slices; ++s) {
      int n = 1 + static_cast<int>(rng() % 6);
      std::vector<std::string> nodes;
      for (int i = 0; i < n; ++i) nodes.push_back("s" + std::to_string(s) + "-vm" + std::to_string(i));
      std::vector<Edge> edges;
      for (int i = 1; i < n; ++i) edges.push_back({nodes[rng() % i], nodes[i], "vl"});
      for (int extra = static_cast<int>(rng() % 3); extra > 0 && n > 1; --extra) {
        edges.push_back({nodes[rng() % n], nodes[rng() % n], "vl"});
      }
      fabric.Register("slice-" + std::to_string(s), nodes, edges);
      all.insert(all.end(), nodes.begin(), nodes.end());
      all_edges.insert(all_edges.end(), edges.begin(), edges.end());
    }
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < all.size(); ++i) index[all[i]] = i;
    std::vector<std::size_t> parent(all.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = root(parent[x]);
    };
    for (const Edge &e : all_edges) parent[root(index[e.a])] = root(index[e.b]);
    for (const std::string &a : all) {
      for (const std::string &b : all) {
        EXPECT_EQ(fabric.Reachable(a, b), root(index[a]) == root(index[b])) << a << " " << b;
      }
    }
    EXPECT_EQ(fabric.Report().cross_slice_edges(), 0u);
  }
}

}  // namespace
}  // namespace slicekit::fabric
