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

#include "slicekit/descriptor.h"

#include <random>

#include "gtest/gtest.h"
#include "slicekit/error.h"
#include "test_support.h"

namespace slicekit::descriptor {
namespace {

using slicekit::testing::ReferenceDocuments;
using slicekit::testing::ReferencePackage;
using slicekit::testing::ReadFile;
using slicekit::testing::SourcePath;

std::string Ref(const std::string &name) {
  return ReadFile(SourcePath("descriptors/reference/" + name));
}

template <typename F>
ParseError CatchParse(F &&f) {
  try {
    f();
  } catch (const ParseError &e) {
    return e;
  }
  ADD_FAILURE() << "expected ParseError";
  return ParseError(ParseError::Kind::kSyntax, "none");
}

const char *kMinimalVnfd =
    "kind: vnfd\n"
    "id: v\n"
    "mgmt-network: mgmt\n"
    "vdus:\n"
    "  - id: a\n"
    "    image: img\n"
    "    vcpus: 2\n"
    "    memory-mb: 2048\n"
    "    storage-gb: 10\n"
    "    interfaces:\n"
    "      - name: eth0\n"
    "        network: mgmt\n";

TEST(ParseVnfdTest, EpcHasFourVdusInOrder) {
  Vnfd epc = ParseVnfd(Ref("oai-epc.vnfd.nsdsl"));
  ASSERT_EQ(epc.vdus.size(), 4u);
  EXPECT_EQ(epc.vdus[0].id, "hss");
  EXPECT_EQ(epc.vdus[1].id, "mme");
  EXPECT_EQ(epc.vdus[2].id, "spgw-c");
  EXPECT_EQ(epc.vdus[3].id, "spgw-u");
  for (const Vdu &vdu : epc.vdus) {
    EXPECT_EQ(vdu.flavor, (Flavor{1, 16384, 20}));
    int mgmt = 0;
    for (const Interface &i : vdu.interfaces) mgmt += i.network == "mgmt";
    EXPECT_EQ(mgmt, 1);
  }
  EXPECT_EQ(epc.internal_vls.size(), 3u);
  EXPECT_EQ(epc.hooks.day1.size(), 3u);
  EXPECT_TRUE(epc.unknown_keys.empty());
}

TEST(ParseVnfdTest, EmptyVduListIsInvariantError) {
  std::string text = "kind: vnfd\nid: v\nmgmt-network: mgmt\nvdus:\n";
  ParseError e = CatchParse([&] { ParseVnfd(text); });
  EXPECT_EQ(e.kind(), ParseError::Kind::kInvariant);
  EXPECT_NE(std::string(e.what()).find("≥1 VDU"), std::string::npos) << e.what();

  text = "kind: vnfd\nid: v\nmgmt-network: mgmt\nvdus: none\n";
  EXPECT_EQ(CatchParse([&] { ParseVnfd(text); }).kind(), ParseError::Kind::kSyntax);
}

TEST(ParseVnfdTest, DuplicateVduId) {
  std::string text = Ref("oai-epc.vnfd.nsdsl");
  auto pos = text.find("id: hss");
  text.replace(pos, 7, "id: mme");
  ParseError e = CatchParse([&] { ParseVnfd(text); });
  EXPECT_EQ(e.kind(), ParseError::Kind::kInvariant);
  EXPECT_NE(std::string(e.what()).find("duplicate VDU id 'mme'"), std::string::npos) << e.what();
}

TEST(ParseVnfdTest, InvariantViolations) {
  struct Case {
    std::string from, to, needle;
  };
  std::vector<Case> cases = {
      {"vcpus: 2", "vcpus: 0", "flavor"},
      {"network: mgmt", "network: ext-typo", "unknown network"},
  };
  for (const Case &c : cases) {
    std::string text = kMinimalVnfd;
    text.replace(text.find(c.from), c.from.size(), c.to);
    ParseError e = CatchParse([&] { ParseVnfd(text); });
    EXPECT_EQ(e.kind(), ParseError::Kind::kInvariant) << c.to;
    EXPECT_NE(std::string(e.what()).find(c.needle), std::string::npos) << e.what();
  }
  // Two mgmt interfaces.
  std::string two_mgmt = std::string(kMinimalVnfd) + "      - name: eth1\n        network: mgmt\n";
  EXPECT_EQ(CatchParse([&] { ParseVnfd(two_mgmt); }).kind(), ParseError::Kind::kInvariant);
  // Duplicate interface name.
  std::string dup_itf = std::string(kMinimalVnfd) + "      - name: eth0\n        network: external\n";
  EXPECT_EQ(CatchParse([&] { ParseVnfd(dup_itf); }).kind(), ParseError::Kind::kInvariant);
  // Internal vl with a dangling endpoint.
  std::string vl = std::string(kMinimalVnfd) +
                   "internal-vls:\n  - name: data\n    endpoints:\n      - a.eth0\n      - b.eth0\n";
  EXPECT_EQ(CatchParse([&] { ParseVnfd(vl); }).kind(), ParseError::Kind::kInvariant);
  // Metric on a missing VDU.
  std::string metric = std::string(kMinimalVnfd) +
                       "metrics:\n  - name: cpu_utilization_pct\n    vdu: nope\n";
  EXPECT_EQ(CatchParse([&] { ParseVnfd(metric); }).kind(), ParseError::Kind::kInvariant);
}

TEST(ParseVnfdTest, SchemaErrorsAreSyntax) {
  std::string no_image = kMinimalVnfd;
  no_image.erase(no_image.find("    image: img\n"), 15);
  EXPECT_EQ(CatchParse([&] { ParseVnfd(no_image); }).kind(), ParseError::Kind::kSyntax);
  std::string bad_int = kMinimalVnfd;
  bad_int.replace(bad_int.find("vcpus: 2"), 8, "vcpus: two");
  EXPECT_EQ(CatchParse([&] { ParseVnfd(bad_int); }).kind(), ParseError::Kind::kSyntax);
  std::string wrong_kind = kMinimalVnfd;
  wrong_kind.replace(0, 10, "kind: nsd\n");
  EXPECT_EQ(CatchParse([&] { ParseVnfd(wrong_kind); }).kind(), ParseError::Kind::kSyntax);
  std::string bad_metric = std::string(kMinimalVnfd) + "metrics:\n  - name: latency\n    vdu: a\n";
  EXPECT_EQ(CatchParse([&] { ParseVnfd(bad_metric); }).kind(), ParseError::Kind::kSyntax);
}

TEST(ParseVnfdTest, UnknownKeysAreRecordedNotRejected) {
  std::string text = std::string(kMinimalVnfd) + "colour: blue\n";
  text.insert(text.find("    image:"), "    zone: a\n");
  Vnfd v = ParseVnfd(text);
  EXPECT_EQ(v.unknown_keys, (std::vector<std::string>{"vdus[0].zone", "colour"}));
}

TEST(ParseNsdTest, EnbNsdHasOneConstituent) {
  Vnfd enb = ParseVnfd(Ref("srslte-enb.vnfd.nsdsl"));
  Nsd nsd = ParseNsd(Ref("enb.nsd.nsdsl"), std::span<const Vnfd>(&enb, 1));
  EXPECT_EQ(nsd.constituent_vnfds, (std::vector<std::string>{"srslte-enb"}));
  ASSERT_EQ(nsd.external_cps.size(), 1u);
  EXPECT_EQ(nsd.external_cps[0].name, "s1");
  EXPECT_EQ(nsd.external_cps[0].interface, (InterfaceRef{"enb", "s1"}));
}

TEST(ParseNsdTest, ZeroConstituentsRejected) {
  EXPECT_THROW(ParseNsd("kind: nsd\nid: n\n"), ParseError);
  EXPECT_EQ(CatchParse([] { ParseNsd("kind: nsd\nid: n\nvnfds:\n"); }).kind(),
            ParseError::Kind::kInvariant);
  Nsd n = ParseNsd(Ref("enb.nsd.nsdsl"));
  n.constituent_vnfds.clear();
  n.external_cps.clear();
  EXPECT_THROW(ParseNsd(Serialize(n)), ParseError);
}

TEST(ParseNsdTest, CpNamingNonexistentInterface) {
  Vnfd enb = ParseVnfd(Ref("srslte-enb.vnfd.nsdsl"));
  std::string text = Ref("enb.nsd.nsdsl");
  text.replace(text.find("enb.s1"), 6, "enb.s9");
  ParseError e = CatchParse([&] { ParseNsd(text, std::span<const Vnfd>(&enb, 1)); });
  EXPECT_EQ(e.kind(), ParseError::Kind::kInvariant);
  // The mgmt interface is not exposable either.
  text = Ref("enb.nsd.nsdsl");
  text.replace(text.find("enb.s1"), 6, "enb.eth0");
  EXPECT_EQ(CatchParse([&] { ParseNsd(text, std::span<const Vnfd>(&enb, 1)); }).kind(),
            ParseError::Kind::kInvariant);
  // Owner outside the constituent list.
  text = Ref("enb.nsd.nsdsl");
  text.replace(text.find("vnfd: srslte-enb"), 16, "vnfd: other");
  EXPECT_EQ(CatchParse([&] { ParseNsd(text); }).kind(), ParseError::Kind::kInvariant);
}

TEST(ParseNsidTest, ReferenceNsidChainsTwoSegments) {
  Nsid nsid = ParseNsid(Ref("paper.nsid.nsdsl"));
  ASSERT_EQ(nsid.segments.size(), 2u);
  EXPECT_EQ(nsid.segments[0].nsd, "epc");
  EXPECT_EQ(nsid.segments[0].vim_affinity, "vim-cn");
  EXPECT_EQ(nsid.segments[1].vim_affinity, "vim-ran");
  ASSERT_EQ(nsid.chain_links.size(), 1u);
  EXPECT_EQ(nsid.chain_links[0].from, (ChainEndpoint{0, "s1"}));
  EXPECT_EQ(nsid.chain_links[0].to, (ChainEndpoint{1, "s1"}));

  auto package = ReferencePackage();
  EXPECT_NO_THROW(ParseNsid(Ref("paper.nsid.nsdsl"), package.nsds));
}

TEST(ParseNsidTest, TwoSegmentsWithoutChainAreDisconnected) {
  std::string text = "kind: nsid\nid: s\nsegments:\n  - nsd: a\n  - nsd: b\n";
  ParseError e = CatchParse([&] { ParseNsid(text); });
  EXPECT_EQ(e.kind(), ParseError::Kind::kInvariant);
  EXPECT_NE(std::string(e.what()).find("chain graph disconnected"), std::string::npos);
}

TEST(ParseNsidTest, SingleSegmentIsConnected) {
  Nsid nsid = ParseNsid("kind: nsid\nid: s\nsegments:\n  - nsd: a\n");
  EXPECT_EQ(nsid.segments.size(), 1u);
  EXPECT_TRUE(nsid.chain_links.empty());
  EXPECT_FALSE(nsid.segments[0].vim_affinity.has_value());
}

TEST(ParseNsidTest, ChainEndpointErrors) {
  auto package = ReferencePackage();
  std::string text = Ref("paper.nsid.nsdsl");
  std::string wrong_cp = text;
  wrong_cp.replace(wrong_cp.find("to: 1.s1"), 8, "to: 1.s2");
  EXPECT_NO_THROW(ParseNsid(wrong_cp));
  EXPECT_EQ(CatchParse([&] { ParseNsid(wrong_cp, package.nsds); }).kind(),
            ParseError::Kind::kInvariant);
  std::string bad_index = text;
  bad_index.replace(bad_index.find("to: 1.s1"), 8, "to: 7.s1");
  EXPECT_EQ(CatchParse([&] { ParseNsid(bad_index); }).kind(), ParseError::Kind::kInvariant);
  std::string self_loop = text;
  self_loop.replace(self_loop.find("to: 1.s1"), 8, "to: 0.s1");
  EXPECT_EQ(CatchParse([&] { ParseNsid(self_loop); }).kind(), ParseError::Kind::kInvariant);
  std::string malformed = text;
  malformed.replace(malformed.find("to: 1.s1"), 8, "to: s1");
  EXPECT_EQ(CatchParse([&] { ParseNsid(malformed); }).kind(), ParseError::Kind::kSyntax);
}

TEST(ParseAnyTest, RoundTripsEveryReferenceDocument) {
  for (const std::string &text : ReferenceDocuments()) {
    AnyDescriptor first = ParseAny(text);
    std::string again = std::visit([](const auto &d) { return Serialize(d); }, first);
    AnyDescriptor second = ParseAny(again);
    EXPECT_EQ(first, second);
    EXPECT_EQ(std::visit([](const auto &d) { return Serialize(d); }, second), again);
  }
}

TEST(AssemblePackageTest, RequiresExactlyOneNsid) {
  auto docs = ReferenceDocuments();
  std::vector<std::string> no_nsid;
  for (const auto &d : docs) {
    if (d.find("kind: nsid") == std::string::npos) no_nsid.push_back(d);
  }
  EXPECT_THROW(AssemblePackage(no_nsid), ParseError);
  docs.push_back(Ref("paper.nsid.nsdsl"));
  EXPECT_THROW(AssemblePackage(docs), ParseError);
}

TEST(ValidatePackageTest, ReferencePackageIsClean) {
  auto package = ReferencePackage();
  EXPECT_EQ(package.vnfds.size(), 2u);
  EXPECT_EQ(package.nsds.size(), 2u);
  ValidationReport report = ValidatePackage(package);
  EXPECT_TRUE(report.ok()) << report.ToString();
}

TEST(ValidatePackageTest, MissingEnbVnfd) {
  auto package = ReferencePackage();
  std::erase_if(package.vnfds, [](const Vnfd &v) { return v.id == "srslte-enb"; });
  ValidationReport report = ValidatePackage(package);
  ASSERT_EQ(report.findings.size(), 1u) << report.ToString();
  EXPECT_EQ(report.findings[0].code, "unresolved-constituent");
  EXPECT_EQ(report.findings[0].id, "enb");
  EXPECT_EQ(report.findings[0].level, Level::kNsd);
}

TEST(ValidatePackageTest, DuplicateVnfdId) {
  auto package = ReferencePackage();
  Vnfd copy = package.vnfds[0];
  package.vnfds.push_back(copy);
  ValidationReport report = ValidatePackage(package);
  ASSERT_EQ(report.findings.size(), 1u) << report.ToString();
  EXPECT_EQ(report.findings[0].code, "duplicate-id");
}

TEST(ValidatePackageTest, UnknownKeysBecomeFindings) {
  auto docs = ReferenceDocuments();
  for (auto &d : docs) {
    if (d.find("kind: nsd\nid: enb") != std::string::npos) d += "owner: ops\n";
  }
  ValidationReport report = ValidatePackage(AssemblePackage(docs));
  ASSERT_EQ(report.findings.size(), 1u);
  EXPECT_EQ(report.findings[0].ToString(), "nsd enb unknown-key owner");
}

// Every single broken cross-reference yields exactly one finding.
TEST(ValidatePackageTest, CompletenessPropertyOverSingleMutations) {
  const DescriptorPackage base = ReferencePackage();
  std::mt19937 rng(11);
  int mutations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    DescriptorPackage p = base;
    std::string broken = "zz" + std::to_string(trial);
    switch (trial % 5) {
      case 0: p.vnfds[rng() % p.vnfds.size()].id = broken; break;
      case 1: p.nsid.segments[rng() % p.nsid.segments.size()].nsd = broken; break;
      case 2: p.nsds[rng() % p.nsds.size()].external_cps[0].interface.interface = broken; break;
      case 3: (rng() % 2 ? p.nsid.chain_links[0].from : p.nsid.chain_links[0].to).cp = broken; break;
      case 4: p.nsds.push_back(p.nsds[rng() % p.nsds.size()]); break;
    }
    ValidationReport report = ValidatePackage(p);
    EXPECT_EQ(report.findings.size(), 1u) << "trial " << trial << "\n" << report.ToString();
    EXPECT_EQ(report, ValidatePackage(p));
    ++mutations;
  }
  EXPECT_EQ(mutations, 200);
}

TEST(ValidatePackageTest, FindingsSortedByLevelThenId) {
  auto package = ReferencePackage();
  package.nsid.segments[1].nsd = "missing";
  package.vnfds[0].id = "ghost-a";
  package.vnfds[1].id = "ghost-b";
  ValidationReport report = ValidatePackage(package);
  ASSERT_EQ(report.findings.size(), 3u);
  EXPECT_EQ(report.ToString(),
            "nsd enb unresolved-constituent srslte-enb\n"
            "nsd epc unresolved-constituent oai-epc\n"
            "nsid e2e-slice unresolved-segment missing\n");
}

TEST(ResourceBudgetTest, ReferencePackageTotals) {
  auto budget = ResourceBudget(ReferencePackage());
  ASSERT_EQ(budget.size(), 2u);
  EXPECT_EQ(budget.at("vim-cn"), (Resources{4, 65536, 80}));
  EXPECT_EQ(budget.at("vim-ran"), (Resources{1, 16384, 20}));
}

TEST(ResourceBudgetTest, MissingAffinityNeedsDefault) {
  auto package = ReferencePackage();
  package.nsid.segments[1].vim_affinity.reset();
  EXPECT_THROW(ResourceBudget(package), Error);
  auto budget = ResourceBudget(package, std::string("vim-cn"));
  EXPECT_EQ(budget.size(), 1u);
  EXPECT_EQ(budget.at("vim-cn"), (Resources{5, 81920, 100}));
}

TEST(ResourceBudgetTest, SingleVduPackageEqualsItsFlavor) {
  DescriptorPackage p;
  p.vnfds.push_back(ParseVnfd(kMinimalVnfd));
  p.nsds.push_back(ParseNsd("kind: nsd\nid: n\nvnfds:\n  - v\n"));
  p.nsid = ParseNsid("kind: nsid\nid: s\nsegments:\n  - nsd: n\n    vim: x\n");
  EXPECT_EQ(ResourceBudget(p).at("x"), (Resources{2, 2048, 10}));
}

// Oracle: flat iteration over every VDU reached through each segment.
TEST(ResourceBudgetTest, RandomPackagesMatchFlatSum) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    DescriptorPackage p;
    int vnfd_count = 1 + static_cast<int>(rng() % 4);
    for (int v = 0; v < vnfd_count; ++v) {
      Vnfd vnfd;
      vnfd.id = "v" + std::to_string(v);
      vnfd.mgmt_network = "mgmt";
      int vdus = 1 + static_cast<int>(rng() % 5);
      for (int d = 0; d < vdus; ++d) {
        Vdu vdu;
        vdu.id = "d" + std::to_string(d);
        vdu.image = "img";
        vdu.flavor = {1 + static_cast<std::uint32_t>(rng() % 8), 1 + static_cast<std::uint32_t>(rng() % 9000),
                      1 + static_cast<std::uint32_t>(rng() % 100)};
        vdu.interfaces.push_back({"eth0", "mgmt"});
        vnfd.vdus.push_back(vdu);
      }
      p.vnfds.push_back(vnfd);
    }
    int nsd_count = 1 + static_cast<int>(rng() % 3);
    for (int n = 0; n < nsd_count; ++n) {
      Nsd nsd;
      nsd.id = "n" + std::to_string(n);
      for (int v = 0; v < vnfd_count; ++v) {
        if (rng() % 2 == 0 || v == n % vnfd_count) nsd.constituent_vnfds.push_back("v" + std::to_string(v));
      }
      p.nsds.push_back(nsd);
    }
    p.nsid.id = "s";
    int segs = 1 + static_cast<int>(rng() % 4);
    for (int s = 0; s < segs; ++s) {
      p.nsid.segments.push_back({"n" + std::to_string(rng() % nsd_count),
                                 "vim" + std::to_string(rng() % 3)});
    }

    std::map<std::string, Resources> oracle;
    for (const Segment &s : p.nsid.segments) {
      for (const Nsd &nsd : p.nsds) {
        if (nsd.id != s.nsd) continue;
        for (const std::string &vid : nsd.constituent_vnfds) {
          for (const Vnfd &vnfd : p.vnfds) {
            if (vnfd.id != vid) continue;
            for (const Vdu &vdu : vnfd.vdus) {
              Resources &r = oracle[*s.vim_affinity];
              r.vcpus += vdu.flavor.vcpus;
              r.memory_mb += vdu.flavor.memory_mb;
              r.storage_gb += vdu.flavor.storage_gb;
            }
          }
        }
      }
    }
    EXPECT_EQ(ResourceBudget(p), oracle);
  }
}

}  // namespace
}  // namespace slicekit::descriptor
