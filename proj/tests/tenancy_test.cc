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

#include "slicekit/tenancy.h"

#include <random>

#include "gtest/gtest.h"
#include "prb_oracle.h"
#include "slicekit/error.h"

namespace slicekit::tenancy {
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

SlicePath P(const char *text) { return *SlicePath::Parse(text); }

std::vector<std::uint64_t> Grants(const std::vector<PrbGrant> &g) {
  std::vector<std::uint64_t> out;
  for (const PrbGrant &x : g) out.push_back(x.granted);
  return out;
}

TEST(TenantTreeTest, TwoMvnosUnderOneMno) {
  TenantTree tree;
  tree.CreateMno("A");
  tree.CreateMvno("A", "foo");
  tree.CreateMvno("A", "bar");
  ASSERT_EQ(tree.mnos().size(), 1u);
  ASSERT_EQ(tree.mnos()[0].mvnos.size(), 2u);
  EXPECT_EQ(tree.mnos()[0].mvnos[0].mvno_id, "foo");
  EXPECT_EQ(tree.mnos()[0].cell.total_prbs, 100u);
}

TEST(TenantTreeTest, DuplicatesAndScoping) {
  TenantTree tree;
  tree.CreateMno("A");
  tree.CreateMno("B");
  tree.CreateMvno("A", "foo");
  EXPECT_EQ(CodeOf([&] { tree.CreateMvno("A", "foo"); }), Errc::kDuplicate);
  EXPECT_NO_THROW(tree.CreateMvno("B", "foo"));
  EXPECT_EQ(CodeOf([&] { tree.CreateMno("A"); }), Errc::kDuplicate);
  EXPECT_EQ(CodeOf([&] { tree.CreateMvno("C", "foo"); }), Errc::kUnknownParent);
  EXPECT_EQ(CodeOf([&] { tree.CreateRanSlice(P("A/zzz/s"), Rational(1, 2)); }), Errc::kUnknownParent);
}

TEST(TenantTreeTest, SharesUpToOne) {
  TenantTree tree;
  tree.CreateMno("A");
  tree.CreateMvno("A", "foo");
  tree.CreateRanSlice(P("A/foo/s1"), Rational::Parse("0.6"));
  tree.CreateRanSlice(P("A/foo/s2"), Rational::Parse("0.4"));
  try {
    tree.CreateRanSlice(P("A/foo/s3"), Rational::Parse("0.1"));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::kShareExhausted);
    EXPECT_EQ(std::string(e.what()).rfind("ShareExhausted(0.0)", 0), 0u);
  }
  EXPECT_EQ(CodeOf([&] { tree.CreateRanSlice(P("A/foo/s4"), Rational(0)); }), Errc::kInvalidShare);
  EXPECT_EQ(CodeOf([&] { tree.CreateRanSlice(P("A/foo/s1"), Rational(0)); }), Errc::kDuplicate);
}

TEST(TenantTreeTest, EffectiveShareUsesNormalizedQuota) {
  TenantTree tree;
  tree.CreateMno("A");
  tree.CreateMvno("A", "foo", Rational(3));
  tree.CreateMvno("A", "bar", Rational(1));
  tree.CreateRanSlice(P("A/foo/s"), Rational(1, 2));
  tree.CreateRanSlice(P("A/bar/s"), Rational(1));
  EXPECT_EQ(tree.EffectiveShare(P("A/foo/s")), Rational(3, 8));
  EXPECT_EQ(tree.EffectiveShare(P("A/bar/s")), Rational(1, 4));
}

class UeTest : public ::testing::Test {
 protected:
  void SetUp() override {
    tree.CreateMno("A");
    tree.CreateMvno("A", "foo");
    tree.CreateRanSlice(P("A/foo/s1"), Rational(1, 2));
    tree.Bind(P("A/foo/s1"), "slice-1");
  }
  TenantTree tree;
};

TEST_F(UeTest, AttachToServingSlice) {
  tree.AttachUe("ue1", P("A/foo/s1"), true);
  EXPECT_EQ(tree.Get(P("A/foo/s1")).ues, std::vector<std::string>{"ue1"});
  EXPECT_EQ(tree.FindUe("ue1"), P("A/foo/s1"));
  EXPECT_EQ(CodeOf([&] { tree.AttachUe("ue1", P("A/foo/s1"), true); }), Errc::kAlreadyAttached);
}

TEST_F(UeTest, AttachErrors) {
  EXPECT_EQ(CodeOf([&] { tree.AttachUe("ue", P("A/baz/s1"), true); }), Errc::kUnknownPath);
  EXPECT_EQ(CodeOf([&] { tree.AttachUe("ue", P("A/foo/s1"), false); }), Errc::kSliceNotServing);
  tree.CreateRanSlice(P("A/foo/s2"), Rational(1, 4));
  EXPECT_EQ(CodeOf([&] { tree.AttachUe("ue", P("A/foo/s2"), true); }), Errc::kSliceNotServing);
}

TEST_F(UeTest, DetachRestoresTree) {
  TenantTree before = tree;
  tree.AttachUe("ue1", P("A/foo/s1"), true);
  tree.DetachUe("ue1");
  EXPECT_EQ(tree, before);
  EXPECT_EQ(CodeOf([&] { tree.DetachUe("ue1"); }), Errc::kUnknownUe);
}

TEST_F(UeTest, ManyAttachesAndDetaches) {
  std::mt19937 rng(5);
  std::vector<std::string> ues;
  for (int i = 0; i < 200; ++i) {
    ues.push_back("ue" + std::to_string(i));
    tree.AttachUe(ues.back(), P("A/foo/s1"), true);
  }
  EXPECT_EQ(tree.Get(P("A/foo/s1")).ues.size(), 200u);
  std::shuffle(ues.begin(), ues.end(), rng);
  for (const std::string &ue : ues) tree.DetachUe(ue);
  EXPECT_TRUE(tree.Get(P("A/foo/s1")).ues.empty());
}

TEST_F(UeTest, UnbindNeedsNoUes) {
  tree.AttachUe("ue1", P("A/foo/s1"), true);
  EXPECT_EQ(CodeOf([&] { tree.Unbind(P("A/foo/s1")); }), Errc::kUesAttached);
  EXPECT_EQ(CodeOf([&] { tree.Bind(P("A/foo/s1"), "slice-2"); }), Errc::kAlreadyAttached);
  tree.DetachUe("ue1");
  tree.Unbind(P("A/foo/s1"));
  EXPECT_EQ(tree.FindBinding("slice-1"), std::nullopt);
}

TEST_F(UeTest, ExportImportRoundTrip) {
  tree.CreateMvno("A", "bar", Rational(1, 3));
  tree.CreateRanSlice(P("A/bar/x"), Rational(3, 7));
  tree.AttachUe("ue1", P("A/foo/s1"), true);
  tree.AttachUe("ue two", P("A/foo/s1"), true);
  std::string text = tree.Export();
  EXPECT_EQ(TenantTree::Import(text), tree);
  EXPECT_EQ(TenantTree::Import(text).Export(), text);
}

TEST(PrbTest, SingleSlice) {
  EXPECT_EQ(Grants(AllocatePrbs({100}, {{"s", Rational(1), 50}})), (std::vector<std::uint64_t>{50}));
}

TEST(PrbTest, BothSaturated) {
  auto g = AllocatePrbs({100}, {{"a", Rational::Parse("0.6"), 100}, {"b", Rational::Parse("0.4"), 100}});
  EXPECT_EQ(Grants(g), (std::vector<std::uint64_t>{60, 40}));
}

TEST(PrbTest, UnusedGuaranteeRedistributed) {
  auto g = AllocatePrbs({100}, {{"a", Rational::Parse("0.6"), 10}, {"b", Rational::Parse("0.4"), 100}});
  EXPECT_EQ(Grants(g), (std::vector<std::uint64_t>{10, 90}));
}

TEST(PrbTest, LeftoversGoInIdOrder) {
  // Thirds of 100: guarantees 33 each, one PRB left for the smallest id.
  auto g = AllocatePrbs({100}, {{"c", Rational(1), 100}, {"a", Rational(1), 100}, {"b", Rational(1), 100}});
  EXPECT_EQ(Grants(g), (std::vector<std::uint64_t>{33, 34, 33}));
}

TEST(PrbTest, Errors) {
  EXPECT_EQ(CodeOf([] { AllocatePrbs({100}, {{"a", Rational(0), 1}}); }), Errc::kInvalidShare);
  EXPECT_EQ(CodeOf([] { AllocatePrbs({100}, {{"a", Rational(1), 1}, {"a", Rational(1), 1}}); }), Errc::kDuplicate);
}

TEST(PrbTest, TreeAwareAllocation) {
  TenantTree tree;
  tree.CreateMno("A");
  tree.CreateMvno("A", "foo");
  tree.CreateRanSlice(P("A/foo/s1"), Rational::Parse("0.6"));
  tree.CreateRanSlice(P("A/foo/s2"), Rational::Parse("0.4"));
  auto g = AllocatePrbs(tree, "A", {{"foo/s1", 10}, {"foo/s2", 100}});
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0], (PrbGrant{"foo/s1", 10}));
  EXPECT_EQ(g[1], (PrbGrant{"foo/s2", 90}));
  EXPECT_EQ(CodeOf([&] { AllocatePrbs(tree, "A", {{"foo/s9", 1}}); }), Errc::kUnknownSlice);
  EXPECT_EQ(CodeOf([&] { AllocatePrbs(tree, "Z", {}); }), Errc::kUnknownParent);
}

void CheckProperties(std::uint32_t n, const std::vector<PrbDemand> &in, const std::vector<PrbGrant> &out) {
  Rational sum;
  for (const auto &d : in) sum += d.share;
  std::uint64_t total = 0, demanded = 0;
  for (std::size_t i = 0; i < in.size(); ++i) {
    std::uint64_t floor_share = static_cast<std::uint64_t>((in[i].share / sum * Rational(n)).Floor());
    ASSERT_GE(out[i].granted, std::min(in[i].demand, floor_share));
    ASSERT_LE(out[i].granted, in[i].demand);
    total += out[i].granted;
    demanded += in[i].demand;
  }
  ASSERT_LE(total, n);
  if (demanded >= n) ASSERT_EQ(total, n);
}

TEST(PrbPropertyTest, RandomVectorsMatchOracle) {
  std::mt19937 rng(17);
  for (int round = 0; round < 20000; ++round) {
    std::size_t k = 1 + rng() % 5;
    std::uint32_t n = 1 + rng() % 150;
    std::vector<PrbDemand> in;
    for (std::size_t i = 0; i < k; ++i) {
      in.push_back({"s" + std::to_string(rng() % 1000) + "-" + std::to_string(i),
                    Rational(1 + static_cast<std::int64_t>(rng() % 20), 20), rng() % (n + 30)});
    }
    auto out = AllocatePrbs({n}, in);
    CheckProperties(n, in, out);
    ASSERT_EQ(Grants(out), slicekit::testing::OraclePrbs(n, in));
  }
}

TEST(PrbPropertyTest, ScaleInvariance) {
  std::mt19937 rng(19);
  for (int round = 0; round < 2000; ++round) {
    std::vector<PrbDemand> in, scaled;
    for (int i = 0; i < 3; ++i) {
      Rational share(1 + static_cast<std::int64_t>(rng() % 10), 30);
      std::uint64_t demand = rng() % 120;
      in.push_back({"s" + std::to_string(i), share, demand});
      scaled.push_back({"s" + std::to_string(i), share * Rational(7, 3), demand});
    }
    ASSERT_EQ(AllocatePrbs({100}, in), AllocatePrbs({100}, scaled));
  }
}

}  // namespace
}  // namespace slicekit::tenancy
