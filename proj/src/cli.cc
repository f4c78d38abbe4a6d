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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "slicekit/error.h"

namespace slicekit::cli {

namespace {

using descriptor::MetricName;
using registry::Engine;

// Output model.

struct Table {
  /// Leading word of every row in `lines` mode; empty for single-kind output.
  std::string tag;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// Bare when non-empty, free of whitespace and not opening with a quote.
std::string LineField(const std::string &value) {
  bool bare = !value.empty() && value[0] != '"' &&
              std::none_of(value.begin(), value.end(), [](unsigned char c) { return std::isspace(c); });
  if (bare) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

class Output {
 public:
  Table &Add(std::string tag, std::vector<std::string> columns) {
    parts_.push_back(Table{std::move(tag), std::move(columns), {}});
    return std::get<Table>(parts_.back());
  }
  void Raw(std::string text) { parts_.push_back(std::move(text)); }

  void Print(std::ostream &out, bool lines) const {
    bool first = true;
    for (const auto &part : parts_) {
      if (const auto *raw = std::get_if<std::string>(&part)) {
        out << *raw;
        continue;
      }
      const Table &t = std::get<Table>(part);
      if (lines) {
        for (const auto &row : t.rows) {
          std::string line = t.tag;
          for (const auto &f : row) line += (line.empty() ? "" : " ") + LineField(f);
          out << line << "\n";
        }
        continue;
      }
      if (!first) out << "\n";
      first = false;
      std::vector<std::size_t> width(t.columns.size());
      for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
      for (const auto &row : t.rows) {
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
      }
      auto print_row = [&](const std::vector<std::string> &row) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
          line += row[i];
          if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        out << line << "\n";
      };
      print_row(t.columns);
      for (const auto &row : t.rows) print_row(row);
    }
  }

 private:
  std::deque<std::variant<Table, std::string>> parts_;
};

// Inputs.

std::string ReadText(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kIoError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Files as given; directories contribute their *.nsdsl files in name order.
std::vector<std::string> ReadDocuments(const std::vector<std::string> &paths) {
  std::vector<std::string> texts;
  for (const std::string &p : paths) {
    std::error_code ec;
    if (std::filesystem::is_directory(p, ec)) {
      std::vector<std::filesystem::path> files;
      for (const auto &entry : std::filesystem::directory_iterator(p)) {
        if (entry.path().extension() == ".nsdsl") files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end());
      for (const auto &f : files) texts.push_back(ReadText(f.string()));
    } else {
      texts.push_back(ReadText(p));
    }
  }
  return texts;
}

tenancy::SlicePath ParsePath(const std::string &text) {
  auto path = tenancy::SlicePath::Parse(text);
  if (!path) throw Error(Errc::kUnknownPath, "'" + text + "' is not a plmn/mvno/slice path");
  return *path;
}

std::pair<std::string, std::string> SplitPair(const std::string &text) {
  auto eq = text.find('=');
  return {text.substr(0, eq), text.substr(eq + 1)};
}

const CLI::Validator kKeyValue(
    [](std::string &text) {
      auto eq = text.find('=');
      return eq == std::string::npos || eq == 0 ? std::string("expected key=value, got '" + text + "'")
                                                : std::string();
    },
    "KEY=VALUE");

MetricName ToMetric(const std::string &text) { return *descriptor::ParseMetricName(text); }

const CLI::Validator kMetricName(
    [](std::string &text) {
      return descriptor::ParseMetricName(text) ? std::string() : "unknown metric '" + text + "'";
    },
    "METRIC");

std::string Num(std::uint64_t v) { return std::to_string(v); }

std::vector<std::string> VmRow(const nfvi::VmRecord &vm, const std::string &vim) {
  return {vm.vm_id, vm.vnfd_id, vm.vdu_id, vim, vm.mgmt_ip.ToString(), std::string(nfvi::VmStateText(vm.state))};
}

const std::vector<std::string> kVmColumns = {"VM", "VNFD", "VDU", "VIM", "MGMT_IP", "STATE"};

std::string HostOf(const Engine &engine, const std::string &vm_id) {
  const nfvi::Vim *vim = engine.orchestrator().vims().FindHost(vm_id);
  return vim == nullptr ? "-" : vim->name();
}

// Option storage shared by every subcommand.
struct Args {
  std::string format = "table";
  std::string name, name2, path, text;
  std::vector<std::string> list;
  std::optional<std::uint64_t> vcpus, memory_mb, storage_gb;
  std::optional<std::string> subnet, default_vim;
  std::uint32_t prbs = 100;
  std::string quota = "1";
  std::uint64_t ts = 0;
  double value = 0;
  std::optional<std::uint64_t> from, to;
  bool edges = false;
};

}  // namespace

int Dispatch(const std::vector<std::string> &argv, Engine &engine, std::ostream &out, std::ostream &err) {
  CLI::App app{"Network slice orchestration toolkit", "slicekit"};
  app.require_subcommand(1);
  app.fallthrough();
  Args a;
  Output o;
  std::function<void()> run;
  app.add_option("--format", a.format, "Output format")->check(CLI::IsMember({"table", "lines"}));

  auto leaf = [&](CLI::App *parent, const std::string &name, const std::string &help,
                  std::function<void()> action) {
    CLI::App *cmd = parent->add_subcommand(name, help);
    cmd->callback([&run, action] { run = action; });
    return cmd;
  };
  auto group = [&](const std::string &name, const std::string &help) {
    CLI::App *g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };
  auto &orch = engine.orchestrator();

  // vim
  CLI::App *vim = group("vim", "Virtualized infrastructure managers");
  CLI::App *vim_create = leaf(vim, "create", "Register a VIM", [&] {
    std::string subnet = a.subnet.value_or("10.0." + Num(orch.vims().size() + 1) + ".0/24");
    nfvi::VimCapacity cap = nfvi::DefaultCapacity(nfvi::Cidr::Parse(subnet));
    if (a.vcpus) cap.vcpus = *a.vcpus;
    if (a.memory_mb) cap.memory_mb = *a.memory_mb;
    if (a.storage_gb) cap.storage_gb = *a.storage_gb;
    const nfvi::Vim &v = orch.CreateVim(a.name, cap);
    o.Add("vim", {"VIM", "VCPUS", "MEMORY_MB", "STORAGE_GB", "SUBNET"})
        .rows.push_back({v.name(), Num(cap.vcpus), Num(cap.memory_mb), Num(cap.storage_gb),
                         cap.mgmt_subnet.ToString()});
  });
  vim_create->add_option("name", a.name, "VIM name")->required();
  vim_create->add_option("--vcpus", a.vcpus);
  vim_create->add_option("--memory-mb", a.memory_mb);
  vim_create->add_option("--storage-gb", a.storage_gb);
  vim_create->add_option("--subnet", a.subnet, "Management subnet (default 10.0.<n>.0/24)");
  leaf(vim, "list", "List VIMs", [&] {
    Table &t = o.Add("", {"VIM", "VCPUS", "MEMORY_MB", "STORAGE_GB", "SUBNET"});
    for (const auto &v : orch.vims().vims()) {
      const auto &cap = v.ledger().capacity;
      t.rows.push_back({v.name(), Num(cap.vcpus), Num(cap.memory_mb), Num(cap.storage_gb), cap.mgmt_subnet.ToString()});
    }
  });
  CLI::App *vim_usage = leaf(vim, "usage", "Allocation ledgers and VMs", [&] {
    Table &t = o.Add("vim", {"VIM", "VCPUS", "VCPUS_CAP", "MEMORY_MB", "MEMORY_MB_CAP", "STORAGE_GB",
                             "STORAGE_GB_CAP", "ACTIVE_VMS"});
    Table &vms = o.Add("vm", kVmColumns);
    std::vector<const nfvi::Vim *> selected;
    if (a.list.empty()) {
      for (const auto &v : orch.vims().vims()) selected.push_back(&v);
    } else {
      for (const auto &n : a.list) selected.push_back(&orch.vims().Get(n));
    }
    for (const nfvi::Vim *v : selected) {
      nfvi::VimUsage u = v->Usage();
      std::size_t active = std::count_if(u.vms.begin(), u.vms.end(),
                                         [](const auto &vm) { return vm.state == nfvi::VmState::kActive; });
      t.rows.push_back({u.name, Num(u.allocated.vcpus), Num(u.capacity.vcpus), Num(u.allocated.memory_mb),
                        Num(u.capacity.memory_mb), Num(u.allocated.storage_gb), Num(u.capacity.storage_gb),
                        Num(active)});
      for (const auto &vm : u.vms) vms.rows.push_back(VmRow(vm, u.name));
    }
  });
  vim_usage->add_option("vims", a.list, "VIM names (default all)");

  // pkg
  CLI::App *pkg = group("pkg", "Descriptor packages");
  CLI::App *pkg_validate = leaf(pkg, "validate", "Validate descriptor files", [&] {
    std::vector<std::string> docs = ReadDocuments(a.list);
    std::vector<descriptor::Vnfd> vnfds;
    std::vector<descriptor::Nsd> nsds;
    std::vector<descriptor::Nsid> nsids;
    for (const auto &text : docs) {
      auto any = descriptor::ParseAny(text);
      if (auto *v = std::get_if<descriptor::Vnfd>(&any)) vnfds.push_back(std::move(*v));
      if (auto *n = std::get_if<descriptor::Nsd>(&any)) nsds.push_back(std::move(*n));
      if (auto *n = std::get_if<descriptor::Nsid>(&any)) nsids.push_back(std::move(*n));
    }
    if (nsids.empty()) nsids.emplace_back();
    std::set<descriptor::Finding> findings;
    for (const auto &nsid : nsids) {
      for (const auto &f : descriptor::ValidatePackage(vnfds, nsds, nsid).findings) findings.insert(f);
    }
    if (findings.empty()) {
      o.Add("", {"STATUS", "VNFDS", "NSDS", "NSIDS"})
          .rows.push_back({"valid", Num(vnfds.size()), Num(nsds.size()), Num(docs.size() - vnfds.size() - nsds.size())});
      return;
    }
    Table &t = o.Add("", {"LEVEL", "ID", "CODE", "DETAIL"});
    for (const auto &f : findings) t.rows.push_back({std::string(descriptor::LevelText(f.level)), f.id, f.code, f.detail});
    throw Error(Errc::kValidationFailed, Num(findings.size()) + " finding(s)");
  });
  pkg_validate->add_option("paths", a.list, "Descriptor files or directories")->required();
  CLI::App *pkg_onboard = leaf(pkg, "onboard", "Onboard a package into the catalog", [&] {
    std::vector<std::string> docs = ReadDocuments(a.list);
    descriptor::DescriptorPackage package = descriptor::AssemblePackage(docs);
    std::string id = orch.Onboard(package);
    o.Add("package", {"PACKAGE", "NSID", "VNFDS", "NSDS"})
        .rows.push_back({id, package.nsid.id, Num(package.vnfds.size()), Num(package.nsds.size())});
  });
  pkg_onboard->add_option("paths", a.list, "Descriptor files or directories")->required();
  CLI::App *pkg_budget = leaf(pkg, "budget", "Resource budget per VIM", [&] {
    std::vector<std::string> docs = ReadDocuments(a.list);
    auto budget = descriptor::ResourceBudget(descriptor::AssemblePackage(docs), a.default_vim);
    Table &t = o.Add("", {"VIM", "VCPUS", "MEMORY_MB", "STORAGE_GB"});
    for (const auto &[name, r] : budget) t.rows.push_back({name, Num(r.vcpus), Num(r.memory_mb), Num(r.storage_gb)});
  });
  pkg_budget->add_option("paths", a.list, "Descriptor files or directories")->required();
  pkg_budget->add_option("--default-vim", a.default_vim, "VIM charged for segments without affinity");

  // ns
  CLI::App *ns = group("ns", "Standalone network services");
  CLI::App *ns_create = leaf(ns, "create", "Instantiate an NSD on a VIM", [&] {
    const orchestrator::NsInstance &n = orch.InstantiateNs(a.name, a.name2);
    o.Add("ns", {"NS", "NSD", "VIM", "VMS"}).rows.push_back({n.ns_id, n.nsd_id, n.vim_id, Num(n.vm_ids.size())});
    Table &vms = o.Add("vm", kVmColumns);
    for (const auto &id : n.vm_ids) vms.rows.push_back(VmRow(*orch.vims().Get(n.vim_id).FindVm(id), n.vim_id));
  });
  ns_create->add_option("nsd", a.name, "NSD id")->required();
  ns_create->add_option("vim", a.name2, "VIM name")->required();
  CLI::App *ns_terminate = leaf(ns, "terminate", "Terminate a standalone NS", [&] {
    orch.TerminateNs(a.name);
    const auto &n = orch.GetNs(a.name);
    o.Add("ns", {"NS", "STATE"}).rows.push_back({n.ns_id, std::string(orchestrator::StateText(n.state))});
  });
  ns_terminate->add_option("ns", a.name, "NS id")->required();

  // slice
  auto slice_row = [&](const std::string &id) {
    const auto &s = orch.GetSlice(id);
    o.Add("slice", {"SLICE", "STATE"}).rows.push_back({s.slice_id, std::string(orchestrator::StateText(s.state))});
  };
  CLI::App *slice = group("slice", "End-to-end network slices");
  CLI::App *slice_create = leaf(slice, "create", "Instantiate an NSID", [&] {
    std::string nsid_id = a.name;
    std::error_code ec;
    if (std::filesystem::is_regular_file(a.name, ec)) {
      auto any = descriptor::ParseAny(ReadText(a.name));
      auto *nsid = std::get_if<descriptor::Nsid>(&any);
      if (nsid == nullptr) throw Error(Errc::kUnknownNsid, a.name + " is not an NSID document");
      nsid_id = nsid->id;
    }
    orchestrator::PlacementOverrides overrides;
    for (const auto &kv : a.list) overrides.insert(SplitPair(kv));
    const auto &s = orch.InstantiateSlice(nsid_id, orch.PlanPlacement(nsid_id, overrides));
    std::string id = s.slice_id;
    slice_row(id);
    Table &vms = o.Add("vm", kVmColumns);
    for (const auto &vm : orch.SliceVms(id)) vms.rows.push_back(VmRow(vm, HostOf(engine, vm.vm_id)));
  });
  slice_create->add_option("nsid", a.name, "NSID file or id")->required();
  slice_create->add_option("--vim", a.list, "Placement override: segment index or NSD id = VIM")->check(kKeyValue);
  CLI::App *slice_day1 = leaf(slice, "day1", "Apply day-1 configuration", [&] {
    orch.Day1Configure(a.name);
    slice_row(a.name);
  });
  slice_day1->add_option("slice", a.name)->required();
  CLI::App *slice_day2 = leaf(slice, "day2", "Reconfigure a running VNF", [&] {
    descriptor::ParamMap params;
    for (const auto &kv : a.list) params.push_back(SplitPair(kv));
    orch.Day2Reconfigure(a.name, a.name2, params);
    slice_row(a.name);
  });
  slice_day2->add_option("slice", a.name)->required();
  slice_day2->add_option("vnfd", a.name2)->required();
  slice_day2->add_option("params", a.list, "key=value parameters")->check(kKeyValue);
  CLI::App *slice_terminate = leaf(slice, "terminate", "Terminate a slice", [&] {
    orch.TerminateSlice(a.name);
    slice_row(a.name);
  });
  slice_terminate->add_option("slice", a.name)->required();
  leaf(slice, "list", "List slices", [&] {
    Table &t = o.Add("", {"SLICE", "NSID", "STATE", "NS", "VMS", "TENANT"});
    for (const auto &[id, s] : orch.slices()) {
      t.rows.push_back({id, s.nsid_id, std::string(orchestrator::StateText(s.state)), Num(s.ns_ids.size()),
                        Num(orch.SliceVms(id).size()), s.tenant_ref.value_or("-")});
    }
  });
  CLI::App *slice_events = leaf(slice, "events", "Event log", [&] {
    if (a.format == "lines") {
      for (const auto &e : orch.events()) {
        if (a.name.empty() || e.slice_id == a.name) o.Raw(e.ToLine() + "\n");
      }
      return;
    }
    Table &t = o.Add("", {"TS", "SLICE", "KIND", "DETAIL"});
    for (const auto &e : orch.events()) {
      if (a.name.empty() || e.slice_id == a.name) t.rows.push_back({Num(e.ts), e.slice_id, e.kind, e.detail});
    }
  });
  slice_events->add_option("slice", a.name, "Only this slice's events");

  // tenant
  CLI::App *tenant = group("tenant", "Operators, MVNOs, RAN slices and UEs");
  CLI::App *t_mno = leaf(tenant, "mno", "Create an MNO", [&] {
    engine.tenants().CreateMno(a.name, {a.prbs});
    o.Add("mno", {"PLMN", "PRBS"}).rows.push_back({a.name, Num(a.prbs)});
  });
  t_mno->add_option("plmn", a.name)->required();
  t_mno->add_option("--prbs", a.prbs, "PRBs of the cell");
  CLI::App *t_mvno = leaf(tenant, "mvno", "Create an MVNO", [&] {
    Rational quota = Rational::Parse(a.quota);
    engine.tenants().CreateMvno(a.name, a.name2, quota);
    o.Add("mvno", {"PLMN", "MVNO", "QUOTA"}).rows.push_back({a.name, a.name2, quota.ToString()});
  });
  t_mvno->add_option("plmn", a.name)->required();
  t_mvno->add_option("mvno", a.name2)->required();
  t_mvno->add_option("--quota", a.quota, "Relative weight within the MNO");
  CLI::App *t_slice = leaf(tenant, "slice", "Create a RAN slice", [&] {
    tenancy::SlicePath path = ParsePath(a.path);
    engine.tenants().CreateRanSlice(path, Rational::Parse(a.text));
    o.Add("ran-slice", {"PATH", "SHARE", "EFFECTIVE"})
        .rows.push_back({path.ToString(), engine.tenants().Get(path).guaranteed_share.ToString(),
                         engine.tenants().EffectiveShare(path).ToString()});
  });
  t_slice->add_option("path", a.path, "plmn/mvno/slice")->required();
  t_slice->add_option("share", a.text, "Guaranteed share of the MVNO quota")->required();
  CLI::App *t_attach = leaf(tenant, "attach", "Attach a UE", [&] {
    tenancy::SlicePath path = ParsePath(a.path);
    engine.AttachUe(a.name, path);
    o.Add("ue", {"UE", "PATH"}).rows.push_back({a.name, path.ToString()});
  });
  t_attach->add_option("ue", a.name)->required();
  t_attach->add_option("path", a.path)->required();
  CLI::App *t_detach = leaf(tenant, "detach", "Detach a UE", [&] {
    engine.tenants().DetachUe(a.name);
    o.Add("ue", {"UE", "PATH"}).rows.push_back({a.name, "-"});
  });
  t_detach->add_option("ue", a.name)->required();
  CLI::App *t_bind = leaf(tenant, "bind", "Serve a RAN slice with a slice instance", [&] {
    tenancy::SlicePath path = ParsePath(a.path);
    engine.BindTenant(path, a.name);
    o.Add("bind", {"PATH", "SLICE"}).rows.push_back({path.ToString(), a.name});
  });
  t_bind->add_option("path", a.path)->required();
  t_bind->add_option("slice", a.name)->required();
  CLI::App *t_unbind = leaf(tenant, "unbind", "Release a RAN slice's instance", [&] {
    tenancy::SlicePath path = ParsePath(a.path);
    engine.UnbindTenant(path);
    o.Add("bind", {"PATH", "SLICE"}).rows.push_back({path.ToString(), "-"});
  });
  t_unbind->add_option("path", a.path)->required();
  leaf(tenant, "show", "Tenant tree document", [&] { o.Raw(engine.tenants().Export()); });

  // prb
  CLI::App *prb = group("prb", "Radio resource scheduling");
  CLI::App *prb_allocate = leaf(prb, "allocate", "Allocate one TTI of PRBs", [&] {
    std::map<std::string, std::uint64_t> demands;
    for (const auto &kv : a.list) {
      auto [key, value] = SplitPair(kv);
      std::uint64_t d = 0;
      auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), d);
      if (ec != std::errc() || p != value.data() + value.size()) {
        throw Error(Errc::kOutOfRange, "demand '" + value + "' is not a PRB count");
      }
      demands[key] = d;
    }
    Table &t = o.Add("", {"SLICE", "GRANTED"});
    for (const auto &g : tenancy::AllocatePrbs(engine.tenants(), a.name, demands)) {
      t.rows.push_back({g.slice_id, Num(g.granted)});
    }
  });
  prb_allocate->add_option("plmn", a.name)->required();
  prb_allocate->add_option("demands", a.list, "mvno/slice=prbs")->check(kKeyValue);

  // fabric
  CLI::App *fab = group("fabric", "Slice isolation fabric");
  CLI::App *fab_report = leaf(fab, "report", "Isolation report", [&] {
    const auto &fabric = orch.fabric();
    if (a.edges) {
      Table &t = o.Add("", {"SLICE", "TAG", "VM_A", "VM_B"});
      for (const auto &[id, g] : fabric.graphs()) {
        for (const auto &e : g.edges) t.rows.push_back({id, Num(g.vlan_tag), e.a, e.b});
      }
      return;
    }
    Table &t = o.Add("", {"SLICE", "TAG", "NODES", "EDGES", "CROSS_SLICE_EDGES"});
    for (const auto &e : fabric.Report().slices) {
      t.rows.push_back({e.slice_id, Num(e.vlan_tag), Num(e.nodes), Num(e.edges), Num(e.cross_slice_edges)});
    }
  });
  fab_report->add_flag("--edges", a.edges, "List edges instead of per-slice totals");

  // metric
  CLI::App *metric = group("metric", "VM metrics");
  CLI::App *m_record = leaf(metric, "record", "Record a sample", [&] {
    engine.RecordMetric({a.name, ToMetric(a.name2), a.ts, a.value});
    o.Add("sample", {"VM", "METRIC", "TS", "VALUE"})
        .rows.push_back({a.name, a.name2, Num(a.ts), telemetry::FormatValue(a.value)});
  });
  m_record->add_option("vm", a.name)->required();
  m_record->add_option("metric", a.name2)->required()->check(kMetricName);
  m_record->add_option("ts", a.ts)->required();
  m_record->add_option("value", a.value)->required();
  CLI::App *m_query = leaf(metric, "query", "Samples in a time range", [&] {
    auto points = engine.metrics().QueryRange(a.name, ToMetric(a.name2), a.from.value_or(0),
                                              a.to.value_or(std::numeric_limits<std::uint64_t>::max()));
    Table &t = o.Add("", {"TS", "VALUE"});
    for (const auto &p : points) t.rows.push_back({Num(p.ts), telemetry::FormatValue(p.value)});
  });
  m_query->add_option("vm", a.name)->required();
  m_query->add_option("metric", a.name2)->required()->check(kMetricName);
  m_query->add_option("--from", a.from);
  m_query->add_option("--to", a.to);
  CLI::App *m_summarize = leaf(metric, "summarize", "Max, mean and sample count", [&] {
    auto s = engine.metrics().Summarize(a.name, ToMetric(a.name2));
    o.Add("", {"MAX", "MEAN", "COUNT"})
        .rows.push_back({telemetry::FormatValue(s.max), telemetry::FormatValue(s.mean), Num(s.sample_count)});
  });
  m_summarize->add_option("vm", a.name)->required();
  m_summarize->add_option("metric", a.name2)->required()->check(kMetricName);
  leaf(metric, "export", "All series as vm_id,metric,ts,value", [&] { o.Raw(engine.metrics().ExportCsv()); });

  // scenario
  CLI::App *scenario = group("scenario", "Workload scenarios");
  CLI::App *sc_run = leaf(scenario, "run", "Replay a scenario file", [&] {
    auto sc = telemetry::ParseScenario(ReadText(a.path));
    auto samples = engine.RunScenario(sc);
    std::set<telemetry::SeriesKey> keys;
    for (const auto &s : samples) keys.insert({s.vm_id, s.metric});
    Table &t = o.Add("", {"VM", "METRIC", "MAX", "MEAN", "COUNT"});
    for (const auto &[vm, m] : keys) {
      auto s = engine.metrics().Summarize(vm, m);
      t.rows.push_back({vm, std::string(descriptor::MetricNameText(m)), telemetry::FormatValue(s.max),
                        telemetry::FormatValue(s.mean), Num(s.sample_count)});
    }
  });
  sc_run->add_option("file", a.path, "Scenario file")->required();

  // state
  CLI::App *state = group("state", "Snapshots");
  CLI::App *st_save = leaf(state, "save", "Write a snapshot", [&] {
    registry::Save(engine, a.path);
    o.Add("", {"SAVED"}).rows.push_back({a.path});
  });
  st_save->add_option("path", a.path)->required();
  CLI::App *st_load = leaf(state, "load", "Replace the session with a snapshot", [&] {
    engine = registry::Load(a.path);
    o.Add("", {"LOADED"}).rows.push_back({a.path});
  });
  st_load->add_option("path", a.path)->required();

  std::vector<const char *> raw{"slicekit"};
  for (const auto &s : argv) raw.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << e.get_name() << ": " << e.what() << "\n";
    return kExitUsageError;
  }

  try {
    run();
  } catch (const Error &e) {
    o.Print(out, a.format == "lines");
    err << e.name() << ": " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception &e) {
    err << ErrcName(Errc::kIoError) << ": " << e.what() << "\n";
    return kExitDomainError;
  }
  o.Print(out, a.format == "lines");
  return kExitOk;
}

}  // namespace slicekit::cli
