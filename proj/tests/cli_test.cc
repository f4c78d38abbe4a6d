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

#include "slicekit/cli.h"

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "gtest/gtest.h"
#include "slicekit/error.h"
#include "test_support.h"

namespace slicekit::cli {
namespace {

using registry::Engine;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result Exec(Engine &engine, const std::vector<std::string> &args) {
  std::ostringstream out, err;
  int code = Dispatch(args, engine, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> Lines(const std::string &text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> Fields(const std::string &line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string f; in >> f;) out.push_back(f);
  return out;
}

std::string Ref(const std::string &file = "") {
  return testing::SourcePath("descriptors/reference") + (file.empty() ? "" : "/" + file);
}

void ReferenceViaCli(Engine &engine) {
  ASSERT_EQ(Exec(engine, {"vim", "create", "vim-cn", "--vcpus", "16", "--memory-mb", "131072", "--storage-gb",
                         "1000", "--subnet", "10.0.1.0/24"})
                .code,
            0);
  ASSERT_EQ(Exec(engine, {"vim", "create", "vim-ran", "--subnet", "10.0.2.0/24"}).code, 0);
  ASSERT_EQ(Exec(engine, {"pkg", "onboard", Ref()}).code, 0);
}

TEST(CliTest, SliceCreatePrintsSliceAndVms) {
  Engine engine;
  ReferenceViaCli(engine);
  Result r = Exec(engine, {"--format=lines", "slice", "create", Ref("paper.nsid.nsdsl"), "--vim", "epc=vim-cn",
                          "--vim", "enb=vim-ran"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_EQ(lines[0], "slice slice-1 Day0Done");
  EXPECT_EQ(lines[1], "vm vim-cn/vm-1 oai-epc hss vim-cn 10.0.1.2 Active");
  EXPECT_EQ(lines[4], "vm vim-cn/vm-4 oai-epc spgw-u vim-cn 10.0.1.5 Active");
  EXPECT_EQ(lines[5], "vm vim-ran/vm-1 srslte-enb enb vim-ran 10.0.2.2 Active");
}

TEST(CliTest, ValidateReportsDanglingReference) {
  Engine engine;
  Result r = Exec(engine, {"--format=lines", "pkg", "validate", testing::SourcePath("tests/data/broken.nsdsl")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "nsd enb unresolved-constituent srslte-enb\n");
  EXPECT_EQ(r.err.rfind("ValidationFailed: ", 0), 0u);
  EXPECT_EQ(Exec(engine, {"pkg", "validate", Ref()}).code, 0);
}

TEST(CliTest, SecondDay1IsInvalidState) {
  Engine engine;
  ReferenceViaCli(engine);
  ASSERT_EQ(Exec(engine, {"slice", "create", "e2e-slice"}).code, 0);
  EXPECT_EQ(Exec(engine, {"slice", "day1", "slice-1"}).code, 0);
  Result r = Exec(engine, {"slice", "day1", "slice-1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("InvalidState: ", 0), 0u);
}

TEST(CliTest, UsageErrorsExitTwo) {
  Engine engine;
  EXPECT_EQ(Exec(engine, {}).code, 2);
  EXPECT_EQ(Exec(engine, {"frobnicate"}).code, 2);
  EXPECT_EQ(Exec(engine, {"vim", "explode"}).code, 2);
  EXPECT_EQ(Exec(engine, {"vim", "list", "--bogus"}).code, 2);
  EXPECT_EQ(Exec(engine, {"--format=xml", "vim", "list"}).code, 2);
  EXPECT_EQ(Exec(engine, {"vim", "create"}).code, 2);
  EXPECT_EQ(Exec(engine, {"slice", "create", "x", "--vim", "novalue"}).code, 2);
  EXPECT_EQ(Exec(engine, {"metric", "record", "vm", "disk_pct", "1", "1"}).code, 2);
  EXPECT_EQ(Exec(engine, {"--help"}).code, 0);
  EXPECT_EQ(engine, Engine());
}

TEST(CliTest, DomainErrorsEchoErrorNames) {
  Engine engine;
  ReferenceViaCli(engine);
  auto name_of = [&](std::vector<std::string> args) {
    Result r = Exec(engine, args);
    EXPECT_EQ(r.code, 1) << r.out;
    return r.err.substr(0, r.err.find(':'));
  };
  EXPECT_EQ(name_of({"vim", "create", "vim-cn"}), "DuplicateVim");
  EXPECT_EQ(name_of({"vim", "create", "tiny", "--subnet", "10.0.9.0/30"}), "InvalidCapacity");
  EXPECT_EQ(name_of({"vim", "usage", "vim-x"}), "UnknownVim");
  EXPECT_EQ(name_of({"slice", "day1", "slice-7"}), "UnknownSlice");
  EXPECT_EQ(name_of({"slice", "create", "nope"}), "UnknownNsid");
  EXPECT_EQ(name_of({"pkg", "onboard", "/nonexistent/file"}), "IoError");
  EXPECT_EQ(name_of({"tenant", "mvno", "A", "foo"}), "UnknownParent");
  EXPECT_EQ(name_of({"metric", "summarize", "vm", "cpu_utilization_pct"}), "EmptySeries");
  EXPECT_EQ(name_of({"metric", "record", "vim-cn/vm-1", "cpu_utilization_pct", "1", "5"}), "UnknownVm");
  EXPECT_EQ(name_of({"metric", "query", "vm", "cpu_utilization_pct", "--from", "5", "--to", "1"}), "BadRange");
  EXPECT_EQ(name_of({"state", "load", "/nonexistent/file"}), "IoError");
}

TEST(CliTest, LinesFormatsParseBack) {
  Engine engine;
  ReferenceViaCli(engine);
  ASSERT_EQ(Exec(engine, {"slice", "create", "e2e-slice"}).code, 0);
  ASSERT_EQ(Exec(engine, {"slice", "day1", "slice-1"}).code, 0);
  const auto &o = engine.orchestrator();

  Result events = Exec(engine, {"--format=lines", "slice", "events"});
  EXPECT_EQ(events.out, o.ExportEvents());
  EXPECT_EQ(events.out, testing::ReadFile(testing::SourcePath("tests/golden/reference_slice.events")));

  Result fabric = Exec(engine, {"--format=lines", "fabric", "report"});
  EXPECT_EQ(fabric.out, o.fabric().Report().ToString());
  Result edges = Exec(engine, {"--format=lines", "fabric", "report", "--edges"});
  EXPECT_EQ(edges.out, o.fabric().ExportEdges());

  Result usage = Exec(engine, {"--format=lines", "vim", "usage"});
  std::size_t vm_rows = 0;
  for (const std::string &line : Lines(usage.out)) {
    auto f = Fields(line);
    if (f[0] == "vim") {
      ASSERT_EQ(f.size(), 9u);
      nfvi::VimUsage u = o.vims().Get(f[1]).Usage();
      EXPECT_EQ(std::stoull(f[2]), u.allocated.vcpus);
      EXPECT_EQ(std::stoull(f[3]), u.capacity.vcpus);
      EXPECT_EQ(std::stoull(f[4]), u.allocated.memory_mb);
      EXPECT_EQ(std::stoull(f[5]), u.capacity.memory_mb);
      EXPECT_EQ(std::stoull(f[6]), u.allocated.storage_gb);
      EXPECT_EQ(std::stoull(f[7]), u.capacity.storage_gb);
    } else {
      ASSERT_EQ(f[0], "vm");
      ASSERT_EQ(f.size(), 7u);
      const nfvi::VmRecord *vm = o.vims().Get(f[4]).FindVm(f[1]);
      ASSERT_NE(vm, nullptr);
      EXPECT_EQ(f[2], vm->vnfd_id);
      EXPECT_EQ(f[3], vm->vdu_id);
      EXPECT_EQ(f[5], vm->mgmt_ip.ToString());
      ++vm_rows;
    }
  }
  EXPECT_EQ(vm_rows, 5u);

  Result list = Exec(engine, {"--format=lines", "slice", "list"});
  EXPECT_EQ(list.out, "slice-1 e2e-slice Running 2 5 -\n");
}

TEST(CliTest, TableFormatAlignsColumns) {
  Engine engine;
  ReferenceViaCli(engine);
  Result r = Exec(engine, {"vim", "list"});
  EXPECT_EQ(r.out,
            "VIM      VCPUS  MEMORY_MB  STORAGE_GB  SUBNET\n"
            "vim-cn   16     131072     1000        10.0.1.0/24\n"
            "vim-ran  8      32768      500         10.0.2.0/24\n");
}

TEST(CliTest, PrbAllocate) {
  Engine engine;
  ASSERT_EQ(Exec(engine, {"tenant", "mno", "A"}).code, 0);
  ASSERT_EQ(Exec(engine, {"tenant", "mvno", "A", "foo"}).code, 0);
  ASSERT_EQ(Exec(engine, {"tenant", "slice", "A/foo/s1", "0.6"}).code, 0);
  ASSERT_EQ(Exec(engine, {"tenant", "slice", "A/foo/s2", "0.4"}).code, 0);
  Result r = Exec(engine, {"--format=lines", "prb", "allocate", "A", "foo/s1=10", "foo/s2=100"});
  EXPECT_EQ(r.out, "foo/s1 10\nfoo/s2 90\n");
  Result full = Exec(engine, {"tenant", "slice", "A/foo/s3", "0.1"});
  EXPECT_EQ(full.code, 1);
  EXPECT_EQ(full.err.rfind("ShareExhausted: ShareExhausted(0.0)", 0), 0u);
}

TEST(CliTest, BudgetAndScenario) {
  Engine engine;
  Result budget = Exec(engine, {"--format=lines", "pkg", "budget", Ref()});
  EXPECT_EQ(budget.out, "vim-cn 4 65536 80\nvim-ran 1 16384 20\n");

  std::string dir = testing::SourcePath("descriptors/paper-4_1");
  ASSERT_EQ(Exec(engine, {"vim", "create", "vim-1"}).code, 0);
  ASSERT_EQ(Exec(engine, {"vim", "create", "vim-2"}).code, 0);
  ASSERT_EQ(Exec(engine, {"pkg", "onboard", dir}).code, 0);
  ASSERT_EQ(Exec(engine, {"slice", "create", dir + "/transfer.nsid.nsdsl"}).code, 0);
  Result sc = Exec(engine, {"--format=lines", "scenario", "run", dir + "/paper-4_1.scenario"});
  ASSERT_EQ(sc.code, 0) << sc.err;
  auto lines = Lines(sc.out);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(Fields(lines[0])[2], "33.9");
  EXPECT_EQ(Fields(lines[1])[2], "6500");
  EXPECT_EQ(Fields(lines[2])[2], "36.2");
  EXPECT_EQ(Fields(lines[3])[2], "7200");
  EXPECT_EQ(Fields(lines[0])[4], "80");
  EXPECT_EQ(Fields(lines[2])[4], "160");
}

// Every CLI path must leave the engine exactly as the direct calls do.
TEST(CliPairedTest, CliEqualsDirectCalls) {
  using descriptor::MetricName;
  using tenancy::SlicePath;
  Engine via_cli, direct;
  std::string scenario = testing::SourcePath("descriptors/paper-4_1/paper-4_1.scenario");

  struct Step {
    std::vector<std::string> args;
    std::function<void(Engine &)> call;
  };
  auto P = [](const char *t) { return *SlicePath::Parse(t); };
  // The same call, expected to fail exactly as the command does.
  auto Try = [](std::function<void(Engine &)> f) {
    return [f](Engine &e) {
      try {
        f(e);
        ADD_FAILURE() << "expected failure";
      } catch (const Error &) {
      }
    };
  };
  std::vector<Step> steps = {
      {{"vim", "create", "vim-cn", "--vcpus", "16", "--memory-mb", "131072", "--storage-gb", "1000", "--subnet",
        "10.0.1.0/24"},
       [](Engine &e) { e.orchestrator().CreateVim("vim-cn", {16, 131072, 1000, nfvi::Cidr::Parse("10.0.1.0/24")}); }},
      {{"vim", "create", "vim-ran"},
       [](Engine &e) { e.orchestrator().CreateVim("vim-ran", nfvi::DefaultCapacity(nfvi::Cidr::Parse("10.0.2.0/24"))); }},
      {{"vim", "create", "vim-ran"},
       Try([](Engine &e) { e.orchestrator().CreateVim("vim-ran", nfvi::DefaultCapacity(nfvi::Cidr::Parse("10.0.3.0/24"))); })},
      {{"pkg", "onboard", Ref()}, [](Engine &e) { e.orchestrator().Onboard(testing::ReferencePackage()); }},
      {{"pkg", "onboard", Ref()}, [](Engine &e) { e.orchestrator().Onboard(testing::ReferencePackage()); }},
      {{"slice", "create", "e2e-slice"},
       [](Engine &e) {
         auto &o = e.orchestrator();
         o.InstantiateSlice("e2e-slice", o.PlanPlacement("e2e-slice"));
       }},
      {{"ns", "create", "enb", "vim-ran"}, [](Engine &e) { e.orchestrator().InstantiateNs("enb", "vim-ran"); }},
      {{"ns", "create", "enb", "vim-ran"}, Try([](Engine &e) { e.orchestrator().InstantiateNs("enb", "vim-ran"); })},
      {{"ns", "terminate", "ns-3"}, [](Engine &e) { e.orchestrator().TerminateNs("ns-3"); }},
      {{"slice", "create", "e2e-slice"},
       [](Engine &e) {
         auto &o = e.orchestrator();
         o.InstantiateSlice("e2e-slice", o.PlanPlacement("e2e-slice"));
       }},
      {{"slice", "create", "e2e-slice", "--vim", "1=vim-cn"},
       Try([](Engine &e) {
         auto &o = e.orchestrator();
         o.InstantiateSlice("e2e-slice", o.PlanPlacement("e2e-slice", {{"1", "vim-cn"}}));
       })},
      {{"slice", "day1", "slice-2"}, [](Engine &e) { e.orchestrator().Day1Configure("slice-2"); }},
      {{"slice", "day2", "slice-2", "oai-epc", "mcc=001"},
       [](Engine &e) { e.orchestrator().Day2Reconfigure("slice-2", "oai-epc", {{"mcc", "001"}}); }},
      {{"tenant", "mno", "24288", "--prbs", "50"}, [](Engine &e) { e.tenants().CreateMno("24288", {50}); }},
      {{"tenant", "mvno", "24288", "foo", "--quota", "3/2"},
       [](Engine &e) { e.tenants().CreateMvno("24288", "foo", Rational(3, 2)); }},
      {{"tenant", "slice", "24288/foo/embb", "0.5"},
       [&](Engine &e) { e.tenants().CreateRanSlice(P("24288/foo/embb"), Rational(1, 2)); }},
      {{"tenant", "bind", "24288/foo/embb", "slice-2"},
       [&](Engine &e) { e.BindTenant(P("24288/foo/embb"), "slice-2"); }},
      {{"tenant", "attach", "ue-1", "24288/foo/embb"}, [&](Engine &e) { e.AttachUe("ue-1", P("24288/foo/embb")); }},
      {{"tenant", "attach", "ue-2", "24288/foo/embb"}, [&](Engine &e) { e.AttachUe("ue-2", P("24288/foo/embb")); }},
      {{"tenant", "detach", "ue-1"}, [](Engine &e) { e.tenants().DetachUe("ue-1"); }},
      {{"slice", "terminate", "slice-2"}, Try([](Engine &e) { e.orchestrator().TerminateSlice("slice-2"); })},
      {{"metric", "record", "vim-ran/vm-1", "cpu_utilization_pct", "3", "12.5"},
       [](Engine &e) { e.RecordMetric({"vim-ran/vm-1", MetricName::kCpuUtilizationPct, 3, 12.5}); }},
      {{"metric", "record", "vim-ran/vm-1", "cpu_utilization_pct", "3", "12.5"},
       Try([](Engine &e) { e.RecordMetric({"vim-ran/vm-1", MetricName::kCpuUtilizationPct, 3, 12.5}); })},
      {{"slice", "terminate", "slice-1"}, [](Engine &e) { e.orchestrator().TerminateSlice("slice-1"); }},
      {{"tenant", "detach", "ue-2"}, [](Engine &e) { e.tenants().DetachUe("ue-2"); }},
      {{"tenant", "unbind", "24288/foo/embb"}, [&](Engine &e) { e.UnbindTenant(P("24288/foo/embb")); }},
      {{"slice", "terminate", "slice-2"}, [](Engine &e) { e.orchestrator().TerminateSlice("slice-2"); }},
      {{"scenario", "run", scenario},
       Try([&](Engine &e) { e.RunScenario(telemetry::ParseScenario(testing::ReadFile(scenario))); })},
      {{"vim", "list"}, nullptr},
      {{"slice", "list"}, nullptr},
      {{"fabric", "report"}, nullptr},
  };
  for (std::size_t i = 0; i < steps.size(); ++i) {
    Result r = Exec(via_cli, steps[i].args);
    ASSERT_NE(r.code, 2) << "step " << i << ": " << r.err;
    if (steps[i].call) steps[i].call(direct);
    ASSERT_EQ(via_cli, direct) << "step " << i << " " << steps[i].args[0] << " " << steps[i].args[1];
  }
}

TEST(CliTest, StateSaveLoad) {
  Engine engine;
  ReferenceViaCli(engine);
  ASSERT_EQ(Exec(engine, {"slice", "create", "e2e-slice"}).code, 0);
  std::string path = (std::filesystem::temp_directory_path() / "slicekit_cli_test.slk").string();
  ASSERT_EQ(Exec(engine, {"state", "save", path}).code, 0);
  Engine loaded;
  ASSERT_EQ(Exec(loaded, {"state", "load", path}).code, 0);
  EXPECT_EQ(loaded, engine);
  std::filesystem::remove(path);
}

TEST(CliToolTest, SessionPersistsThroughEnvironment) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "slicekit_cli_tool_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::string state = (dir / "session.slk").string();
  std::string out = (dir / "out.txt").string();
  auto sh = [&](const std::string &args) {
    std::string cmd = "SLICEKIT_STATE=" + state + " " + SLICEKIT_TOOL + " " + args + " >" + out + " 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  EXPECT_EQ(sh("vim create vim-cn --vcpus 16 --memory-mb 131072 --storage-gb 1000"), 0);
  EXPECT_EQ(sh("vim create vim-ran"), 0);
  EXPECT_EQ(sh("pkg onboard " + Ref()), 0);
  EXPECT_EQ(sh("--format=lines slice create " + Ref("paper.nsid.nsdsl") + " --vim epc=vim-cn --vim enb=vim-ran"), 0);
  EXPECT_EQ(Lines(testing::ReadFile(out)).size(), 6u);
  EXPECT_EQ(sh("slice day1 slice-1"), 0);
  EXPECT_EQ(sh("slice day1 slice-1"), 1);
  EXPECT_EQ(sh("no-such-command"), 2);
  Engine loaded = registry::Load(state);
  EXPECT_EQ(loaded.orchestrator().GetSlice("slice-1").state, orchestrator::LifecycleState::kRunning);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace slicekit::cli
