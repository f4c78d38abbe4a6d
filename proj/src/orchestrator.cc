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

#include "slicekit/orchestrator.h"

#include <algorithm>
#include <array>
#include <cstdio>
#include <stdexcept>

#include "slicekit/error.h"

namespace slicekit::orchestrator {

namespace {

using descriptor::DescriptorPackage;
using descriptor::Nsd;
using descriptor::Resources;
using descriptor::Vnfd;

constexpr std::array<LifecycleState, 8> kAllStates = {
    LifecycleState::kOnboarded,  LifecycleState::kInstantiating, LifecycleState::kDay0Done,
    LifecycleState::kDay1Configured, LifecycleState::kRunning,   LifecycleState::kTerminating,
    LifecycleState::kTerminated, LifecycleState::kFailed,
};

std::uint64_t Fnv1a(std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

Resources SaturatingMinus(Resources a, const Resources &b) {
  a.vcpus = a.vcpus > b.vcpus ? a.vcpus - b.vcpus : 0;
  a.memory_mb = a.memory_mb > b.memory_mb ? a.memory_mb - b.memory_mb : 0;
  a.storage_gb = a.storage_gb > b.storage_gb ? a.storage_gb - b.storage_gb : 0;
  return a;
}

[[noreturn]] void BadState(const SliceInstance &slice, std::string_view op, std::string_view wanted) {
  throw Error(Errc::kInvalidState, "slice " + slice.slice_id + " is " +
                                       std::string(StateText(slice.state)) + "; " + std::string(op) +
                                       " requires " + std::string(wanted));
}

}  // namespace

std::string_view StateText(LifecycleState state) {
  switch (state) {
    case LifecycleState::kOnboarded: return "Onboarded";
    case LifecycleState::kInstantiating: return "Instantiating";
    case LifecycleState::kDay0Done: return "Day0Done";
    case LifecycleState::kDay1Configured: return "Day1Configured";
    case LifecycleState::kRunning: return "Running";
    case LifecycleState::kTerminating: return "Terminating";
    case LifecycleState::kTerminated: return "Terminated";
    case LifecycleState::kFailed: return "Failed";
  }
  return "";
}

std::optional<LifecycleState> ParseState(std::string_view text) {
  for (LifecycleState s : kAllStates) {
    if (StateText(s) == text) return s;
  }
  return std::nullopt;
}

bool IsTerminal(LifecycleState state) {
  return state == LifecycleState::kTerminated || state == LifecycleState::kFailed;
}

bool IsLegalTransition(LifecycleState from, LifecycleState to) {
  if (IsTerminal(from)) return false;
  if (to == LifecycleState::kFailed) return true;
  // Terminate is also admitted before day-1 has completed.
  if (to == LifecycleState::kTerminating) {
    return from == LifecycleState::kDay0Done || from == LifecycleState::kDay1Configured ||
           from == LifecycleState::kRunning;
  }
  return static_cast<int>(to) == static_cast<int>(from) + 1;
}

std::string Event::ToLine() const {
  return std::to_string(ts) + " " + slice_id + " " + kind + " " + detail;
}

std::string ParamsText(const descriptor::ParamMap &params) {
  if (params.empty()) return "-";
  std::string out;
  for (const auto &[k, v] : params) {
    if (!out.empty()) out += ",";
    out += k + "=" + v;
  }
  return out;
}

// Catalog.

PackageId Catalog::IdOf(const DescriptorPackage &package) {
  std::vector<std::string> parts;
  for (const Vnfd &v : package.vnfds) parts.push_back(descriptor::Serialize(v));
  for (const Nsd &n : package.nsds) parts.push_back(descriptor::Serialize(n));
  std::sort(parts.begin(), parts.end());
  parts.push_back(descriptor::Serialize(package.nsid));
  std::string canonical;
  for (const std::string &p : parts) {
    canonical += std::to_string(p.size()) + ":" + p;
  }
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(Fnv1a(canonical)));
  return "pkg-" + std::string(buf);
}

PackageId Catalog::Onboard(const DescriptorPackage &package) {
  descriptor::ValidationReport report = descriptor::ValidatePackage(package);
  if (!report.ok()) throw Error(Errc::kValidationFailed, report.ToString());
  PackageId id = IdOf(package);
  if (Find(id) != nullptr) return id;
  for (const Vnfd &v : package.vnfds) {
    const Vnfd *known = FindVnfd(v.id);
    if (known != nullptr && !(*known == v)) {
      throw Error(Errc::kCatalogConflict, "vnfd " + v.id + " is onboarded with different content");
    }
  }
  for (const Nsd &n : package.nsds) {
    const Nsd *known = FindNsd(n.id);
    if (known != nullptr && !(*known == n)) {
      throw Error(Errc::kCatalogConflict, "nsd " + n.id + " is onboarded with different content");
    }
  }
  if (FindNsid(package.nsid.id) != nullptr) {
    throw Error(Errc::kCatalogConflict, "nsid " + package.nsid.id + " is onboarded in another package");
  }
  entries_.push_back({id, package});
  return id;
}

const CatalogEntry *Catalog::Find(std::string_view package_id) const {
  for (const CatalogEntry &e : entries_) {
    if (e.id == package_id) return &e;
  }
  return nullptr;
}

const Vnfd *Catalog::FindVnfd(std::string_view id) const {
  for (const CatalogEntry &e : entries_) {
    if (const Vnfd *v = e.package.FindVnfd(id)) return v;
  }
  return nullptr;
}

const Nsd *Catalog::FindNsd(std::string_view id) const {
  for (const CatalogEntry &e : entries_) {
    if (const Nsd *n = e.package.FindNsd(id)) return n;
  }
  return nullptr;
}

const CatalogEntry *Catalog::FindNsid(std::string_view id) const {
  for (const CatalogEntry &e : entries_) {
    if (e.package.nsid.id == id) return &e;
  }
  return nullptr;
}

Catalog Catalog::FromParts(std::vector<CatalogEntry> entries) {
  Catalog catalog;
  catalog.entries_ = std::move(entries);
  return catalog;
}

const ResolvedCp *NsInstance::FindCp(std::string_view name) const {
  for (const ResolvedCp &cp : cps) {
    if (cp.name == name) return &cp;
  }
  return nullptr;
}

// Orchestrator.

nfvi::Vim &Orchestrator::CreateVim(std::string name, nfvi::VimCapacity capacity) {
  return vims_.Create(std::move(name), capacity);
}

PackageId Orchestrator::Onboard(const DescriptorPackage &package) { return catalog_.Onboard(package); }

PlacementPlan Orchestrator::PlanPlacement(std::string_view nsid_id, const PlacementOverrides &overrides) const {
  const CatalogEntry *entry = catalog_.FindNsid(nsid_id);
  if (entry == nullptr) throw Error(Errc::kUnknownNsid, "nsid " + std::string(nsid_id) + " is not onboarded");
  const DescriptorPackage &package = entry->package;
  const auto &segments = package.nsid.segments;

  std::vector<Resources> free;
  for (const nfvi::Vim &vim : vims_.vims()) free.push_back(vim.free());
  auto vim_index = [&](const std::string &name) {
    for (std::size_t i = 0; i < vims_.vims().size(); ++i) {
      if (vims_.vims()[i].name() == name) return i;
    }
    throw Error(Errc::kUnknownVim, "unknown VIM '" + name + "'");
  };

  PlacementPlan plan;
  std::vector<bool> placed(segments.size(), false);
  for (std::size_t i = 0; i < segments.size(); ++i) {
    plan.assignments.push_back({i, segments[i].nsd, ""});
    std::optional<std::string> chosen = segments[i].vim_affinity;
    if (auto it = overrides.find(segments[i].nsd); it != overrides.end()) chosen = it->second;
    if (auto it = overrides.find(std::to_string(i)); it != overrides.end()) chosen = it->second;
    if (!chosen) continue;
    std::size_t v = vim_index(*chosen);
    free[v] = SaturatingMinus(free[v], descriptor::SegmentBudget(package, i));
    plan.assignments[i].vim_id = *chosen;
    placed[i] = true;
  }
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (placed[i]) continue;
    Resources budget = descriptor::SegmentBudget(package, i);
    bool done = false;
    for (std::size_t v = 0; v < free.size() && !done; ++v) {
      if (budget.FitsWithin(free[v])) {
        free[v] -= budget;
        plan.assignments[i].vim_id = vims_.vims()[v].name();
        done = true;
      }
    }
    if (!done) {
      throw Error(Errc::kNoFeasiblePlacement,
                  "NoFeasiblePlacement(" + segments[i].nsd + "): segment " + std::to_string(i) +
                      " needs (" + std::to_string(budget.vcpus) + ", " + std::to_string(budget.memory_mb) +
                      ", " + std::to_string(budget.storage_gb) + ") and no VIM has it free");
    }
  }
  return plan;
}

void Orchestrator::Log(std::string_view slice_id, std::string_view kind, std::string detail) {
  events_.push_back({clock_.Tick(), std::string(slice_id), std::string(kind), std::move(detail)});
}

void Orchestrator::Transition(SliceInstance &slice, LifecycleState to) {
  if (!IsLegalTransition(slice.state, to)) {
    throw std::logic_error("illegal transition " + std::string(StateText(slice.state)) + "->" +
                           std::string(StateText(to)));
  }
  Log(slice.slice_id, event::kState,
      std::string(StateText(slice.state)) + "->" + std::string(StateText(to)));
  slice.state = to;
  for (const std::string &ns_id : slice.ns_ids) ns_.at(ns_id).state = to;
}

Orchestrator::AllocatedNs Orchestrator::AllocateNs(const Nsd &nsd, nfvi::Vim &vim,
                                                   const std::optional<std::string> &slice_id,
                                                   std::string_view log_id, std::size_t &allocation_index,
                                                   const InstantiateOptions &options) {
  AllocatedNs out{&nsd, &vim, {}, {}};
  for (const std::string &vnfd_id : nsd.constituent_vnfds) {
    const Vnfd *vnfd = catalog_.FindVnfd(vnfd_id);
    if (vnfd == nullptr) throw Error(Errc::kUnknownVnfd, "vnfd " + vnfd_id + " is not onboarded");
    for (const descriptor::Vdu &vdu : vnfd->vdus) {
      if (options.fail_allocation && options.fail_allocation(allocation_index)) {
        throw Error(Errc::kQuotaExceeded, "QuotaExceeded(injected) on " + vim.name() + " for " +
                                              vnfd_id + "/" + vdu.id);
      }
      ++allocation_index;
      LogicalTime ts = clock_.Tick();
      const nfvi::VmRecord &vm = vim.Allocate(vdu, vnfd_id, slice_id, ts);
      events_.push_back({ts, std::string(log_id), std::string(event::kVmCreated),
                         vm.vm_id + " " + vnfd_id + "/" + vdu.id + " " + vim.name() + " " +
                             vm.mgmt_ip.ToString()});
      out.origins.emplace_back(vnfd_id, vdu.id);
      out.vm_ids.push_back(vm.vm_id);
    }
  }
  return out;
}

NsInstance Orchestrator::AssembleNs(const AllocatedNs &allocated, const std::optional<std::string> &slice_id,
                                    std::string_view log_id) {
  const Nsd &nsd = *allocated.nsd;
  auto vm_of = [&](const std::string &vnfd, const std::string &vdu) -> const std::string * {
    for (std::size_t i = 0; i < allocated.origins.size(); ++i) {
      if (allocated.origins[i].first == vnfd && allocated.origins[i].second == vdu) return &allocated.vm_ids[i];
    }
    return nullptr;
  };
  NsInstance ns;
  ns.ns_id = "ns-" + std::to_string(next_ns_++);
  ns.nsd_id = nsd.id;
  ns.vim_id = allocated.vim->name();
  ns.slice_id = slice_id;
  ns.vm_ids = allocated.vm_ids;
  for (const descriptor::ExternalCp &cp : nsd.external_cps) {
    const std::string *vm = vm_of(cp.vnfd, cp.interface.vdu);
    if (vm == nullptr) {
      throw Error(Errc::kChainError, "cp " + cp.name + " of nsd " + nsd.id + " does not resolve to a VM");
    }
    ns.cps.push_back({cp.name, *vm, cp.interface.interface});
  }
  std::vector<std::string> seen_vnfds;
  for (const std::string &vnfd_id : nsd.constituent_vnfds) {
    if (std::find(seen_vnfds.begin(), seen_vnfds.end(), vnfd_id) != seen_vnfds.end()) continue;
    seen_vnfds.push_back(vnfd_id);
    const Vnfd &vnfd = *catalog_.FindVnfd(vnfd_id);
    for (const descriptor::InternalVl &vl : vnfd.internal_vls) {
      for (std::size_t i = 0; i < vl.endpoints.size(); ++i) {
        for (std::size_t j = i + 1; j < vl.endpoints.size(); ++j) {
          const std::string *a = vm_of(vnfd_id, vl.endpoints[i].vdu);
          const std::string *b = vm_of(vnfd_id, vl.endpoints[j].vdu);
          if (a != nullptr && b != nullptr) ns.internal_edges.push_back({*a, *b, vl.name});
        }
      }
    }
  }
  Log(log_id, event::kNsCreated,
      ns.ns_id + " " + ns.nsd_id + " " + ns.vim_id + " " + std::to_string(ns.vm_ids.size()));
  return ns;
}

const NsInstance &Orchestrator::InstantiateNs(std::string_view nsd_id, std::string_view vim_id,
                                              const std::optional<std::string> &slice_id) {
  const Nsd *nsd = catalog_.FindNsd(nsd_id);
  if (nsd == nullptr) throw Error(Errc::kUnknownNsd, "nsd " + std::string(nsd_id) + " is not onboarded");
  nfvi::Vim &vim = vims_.Get(vim_id);
  nfvi::Vim::Mark mark = vim.mark();
  std::size_t saved_events = events_.size();
  std::uint64_t saved_ns = next_ns_;
  std::string log_id = slice_id.value_or("-");
  try {
    std::size_t index = 0;
    AllocatedNs allocated = AllocateNs(*nsd, vim, slice_id, log_id, index, {});
    NsInstance ns = AssembleNs(allocated, slice_id, log_id);
    ns.standalone = true;
    ns.state = LifecycleState::kDay0Done;
    std::string id = ns.ns_id;
    return ns_.emplace(id, std::move(ns)).first->second;
  } catch (const Error &e) {
    vim.RollbackTo(mark);
    events_.resize(saved_events);
    next_ns_ = saved_ns;
    Log(log_id, event::kInstantiateFailed, std::string(nsd_id) + " " + std::string(e.name()));
    throw;
  }
}

void Orchestrator::TerminateNs(std::string_view ns_id) {
  auto it = ns_.find(ns_id);
  if (it == ns_.end()) throw Error(Errc::kUnknownNs, "unknown NS '" + std::string(ns_id) + "'");
  NsInstance &ns = it->second;
  if (!ns.standalone) {
    throw Error(Errc::kInvalidState, "NS " + ns.ns_id + " belongs to a slice; terminate the slice");
  }
  if (ns.state != LifecycleState::kDay0Done) {
    throw Error(Errc::kInvalidState, "NS " + ns.ns_id + " is " + std::string(StateText(ns.state)));
  }
  std::string log_id = ns.slice_id.value_or("-");
  ns.state = LifecycleState::kTerminating;
  nfvi::Vim &vim = vims_.Get(ns.vim_id);
  for (const std::string &vm : ns.vm_ids) {
    LogicalTime ts = clock_.Tick();
    vim.Release(vm, ts);
    events_.push_back({ts, log_id, std::string(event::kVmReleased), vm});
  }
  ns.state = LifecycleState::kTerminated;
  Log(log_id, event::kNsTerminated, ns.ns_id);
}

const SliceInstance &Orchestrator::InstantiateSlice(std::string_view nsid_id, const PlacementPlan &plan,
                                                    const InstantiateOptions &options) {
  const CatalogEntry *entry = catalog_.FindNsid(nsid_id);
  if (entry == nullptr) throw Error(Errc::kUnknownNsid, "nsid " + std::string(nsid_id) + " is not onboarded");
  const descriptor::Nsid &nsid = entry->package.nsid;
  if (plan.assignments.size() != nsid.segments.size()) {
    throw Error(Errc::kInvalidPlan, "plan has " + std::to_string(plan.assignments.size()) +
                                        " assignments for " + std::to_string(nsid.segments.size()) + " segments");
  }
  for (std::size_t i = 0; i < plan.assignments.size(); ++i) {
    const Assignment &a = plan.assignments[i];
    if (a.segment != i || a.nsd_id != nsid.segments[i].nsd || vims_.Find(a.vim_id) == nullptr) {
      throw Error(Errc::kInvalidPlan, "assignment " + std::to_string(i) + " does not match segment " +
                                          nsid.segments[i].nsd + " on a registered VIM");
    }
  }

  std::string slice_id = "slice-" + std::to_string(next_slice_++);
  SliceInstance &slice = slices_[slice_id];
  slice.slice_id = slice_id;
  slice.nsid_id = nsid.id;
  Transition(slice, LifecycleState::kInstantiating);

  std::vector<nfvi::Vim::Mark> marks;
  for (const nfvi::Vim &vim : vims_.vims()) marks.push_back(vim.mark());
  std::size_t saved_events = events_.size();
  std::uint64_t saved_ns = next_ns_;
  try {
    // Step 1: every VDU of every segment.
    std::vector<AllocatedNs> allocated;
    std::size_t index = 0;
    for (std::size_t i = 0; i < nsid.segments.size(); ++i) {
      const Nsd *nsd = catalog_.FindNsd(nsid.segments[i].nsd);
      if (nsd == nullptr) throw Error(Errc::kUnknownNsd, "nsd " + nsid.segments[i].nsd + " is not onboarded");
      allocated.push_back(
          AllocateNs(*nsd, vims_.Get(plan.assignments[i].vim_id), slice_id, slice_id, index, options));
    }
    // Step 2: service instances.
    std::vector<NsInstance> instances;
    for (const AllocatedNs &a : allocated) instances.push_back(AssembleNs(a, slice_id, slice_id));
    // Step 3: chaining.
    std::vector<ChainEdge> chain;
    for (const descriptor::ChainLink &link : nsid.chain_links) {
      auto resolve = [&](const descriptor::ChainEndpoint &end) {
        const ResolvedCp *cp = end.segment < instances.size() ? instances[end.segment].FindCp(end.cp) : nullptr;
        if (cp == nullptr) throw Error(Errc::kChainError, "chain endpoint " + end.ToString() + " is unresolvable");
        return cp->vm_id;
      };
      ChainEdge edge{link.from, link.to, resolve(link.from), resolve(link.to)};
      Log(slice_id, event::kChainEdge, edge.from.ToString() + "=" + edge.vm_a + " " + edge.to.ToString() + "=" + edge.vm_b);
      chain.push_back(std::move(edge));
    }
    std::vector<std::string> nodes;
    std::vector<fabric::Edge> edges;
    for (const NsInstance &ns : instances) {
      nodes.insert(nodes.end(), ns.vm_ids.begin(), ns.vm_ids.end());
      edges.insert(edges.end(), ns.internal_edges.begin(), ns.internal_edges.end());
    }
    for (const ChainEdge &c : chain) edges.push_back({c.vm_a, c.vm_b, "chain"});
    fabric::BuildGraph(slice_id, nodes, edges);

    for (NsInstance &ns : instances) {
      slice.ns_ids.push_back(ns.ns_id);
      std::string id = ns.ns_id;
      ns_.emplace(std::move(id), std::move(ns));
    }
    slice.chain_edges = std::move(chain);
    Transition(slice, LifecycleState::kDay0Done);
    const fabric::SliceGraph &graph = fabric_.Register(slice_id, std::move(nodes), std::move(edges));
    Log(slice_id, event::kFabricRegister,
        "tag " + std::to_string(graph.vlan_tag) + " nodes " + std::to_string(graph.nodes.size()) + " edges " +
            std::to_string(graph.edges.size()));
    return slice;
  } catch (const Error &e) {
    for (std::size_t i = 0; i < marks.size(); ++i) vims_.vims()[i].RollbackTo(marks[i]);
    for (const std::string &ns_id : slice.ns_ids) ns_.erase(ns_id);
    slice.ns_ids.clear();
    slice.chain_edges.clear();
    events_.resize(saved_events);
    next_ns_ = saved_ns;
    if (fabric_.Find(slice_id) != nullptr) fabric_.Retract(slice_id);
    Transition(slice, LifecycleState::kFailed);
    Log(slice_id, event::kInstantiateFailed, std::string(e.name()) + " " + e.what());
    throw;
  }
}

SliceInstance &Orchestrator::MutableSlice(std::string_view slice_id) {
  auto it = slices_.find(slice_id);
  if (it == slices_.end()) throw Error(Errc::kUnknownSlice, "unknown slice '" + std::string(slice_id) + "'");
  return it->second;
}

void Orchestrator::Day1Configure(std::string_view slice_id) {
  SliceInstance &slice = MutableSlice(slice_id);
  if (slice.state != LifecycleState::kDay0Done) BadState(slice, "day1", "Day0Done");
  for (const std::string &ns_id : slice.ns_ids) {
    const NsInstance &ns = ns_.at(ns_id);
    const nfvi::Vim &vim = vims_.Get(ns.vim_id);
    for (const std::string &vm_id : ns.vm_ids) {
      const nfvi::VmRecord *vm = vim.FindVm(vm_id);
      const Vnfd *vnfd = catalog_.FindVnfd(vm->vnfd_id);
      if (vnfd->hooks.day1.empty()) continue;
      Log(slice.slice_id, event::kDay1Config, vm_id + " " + vnfd->id + " " + ParamsText(vnfd->hooks.day1));
    }
  }
  Transition(slice, LifecycleState::kDay1Configured);
  Transition(slice, LifecycleState::kRunning);
}

void Orchestrator::Day2Reconfigure(std::string_view slice_id, std::string_view vnfd_id,
                                   const descriptor::ParamMap &params) {
  SliceInstance &slice = MutableSlice(slice_id);
  if (slice.state != LifecycleState::kRunning) BadState(slice, "day2", "Running");
  bool constituent = false;
  for (const std::string &ns_id : slice.ns_ids) {
    const Nsd *nsd = catalog_.FindNsd(ns_.at(ns_id).nsd_id);
    const auto &list = nsd->constituent_vnfds;
    constituent = constituent || std::find(list.begin(), list.end(), vnfd_id) != list.end();
  }
  if (!constituent) {
    throw Error(Errc::kUnknownVnfd, "vnfd " + std::string(vnfd_id) + " is not part of slice " + slice.slice_id);
  }
  Log(slice.slice_id, event::kDay2Config, std::string(vnfd_id) + " " + ParamsText(params));
}

void Orchestrator::TerminateSlice(std::string_view slice_id) {
  SliceInstance &slice = MutableSlice(slice_id);
  if (slice.tenant_ref) {
    throw Error(Errc::kSliceAttached, "slice " + slice.slice_id + " is bound to tenant slice " + *slice.tenant_ref);
  }
  if (slice.state != LifecycleState::kRunning && slice.state != LifecycleState::kDay0Done &&
      slice.state != LifecycleState::kDay1Configured) {
    BadState(slice, "terminate", "Day0Done, Day1Configured or Running");
  }
  Transition(slice, LifecycleState::kTerminating);
  for (const std::string &ns_id : slice.ns_ids) {
    const NsInstance &ns = ns_.at(ns_id);
    nfvi::Vim &vim = vims_.Get(ns.vim_id);
    for (const std::string &vm : ns.vm_ids) {
      LogicalTime ts = clock_.Tick();
      vim.Release(vm, ts);
      events_.push_back({ts, slice.slice_id, std::string(event::kVmReleased), vm});
    }
  }
  std::uint32_t tag = fabric_.Find(slice.slice_id)->vlan_tag;
  fabric_.Retract(slice.slice_id);
  Log(slice.slice_id, event::kFabricRetract, "tag " + std::to_string(tag));
  Transition(slice, LifecycleState::kTerminated);
}

void Orchestrator::SetTenantRef(std::string_view slice_id, std::optional<std::string> ref) {
  MutableSlice(slice_id).tenant_ref = std::move(ref);
}

const SliceInstance &Orchestrator::GetSlice(std::string_view slice_id) const {
  return const_cast<Orchestrator *>(this)->MutableSlice(slice_id);
}

const SliceInstance *Orchestrator::FindSlice(std::string_view slice_id) const {
  auto it = slices_.find(slice_id);
  return it == slices_.end() ? nullptr : &it->second;
}

const NsInstance &Orchestrator::GetNs(std::string_view ns_id) const {
  auto it = ns_.find(ns_id);
  if (it == ns_.end()) throw Error(Errc::kUnknownNs, "unknown NS '" + std::string(ns_id) + "'");
  return it->second;
}

std::vector<nfvi::VmRecord> Orchestrator::SliceVms(std::string_view slice_id) const {
  std::vector<nfvi::VmRecord> out;
  for (const std::string &ns_id : GetSlice(slice_id).ns_ids) {
    const NsInstance &ns = ns_.at(ns_id);
    const nfvi::Vim &vim = vims_.Get(ns.vim_id);
    for (const std::string &vm : ns.vm_ids) out.push_back(*vim.FindVm(vm));
  }
  return out;
}

std::string Orchestrator::ExportEvents() const {
  std::string out;
  for (const Event &e : events_) out += e.ToLine() + "\n";
  return out;
}

Orchestrator::State Orchestrator::ExportState() const {
  return {vims_, fabric_, catalog_, clock_, ns_, slices_, events_, next_ns_, next_slice_};
}

Orchestrator Orchestrator::FromState(State state) {
  Orchestrator o;
  o.vims_ = std::move(state.vims);
  o.fabric_ = std::move(state.fabric);
  o.catalog_ = std::move(state.catalog);
  o.clock_ = state.clock;
  o.ns_ = std::move(state.ns);
  o.slices_ = std::move(state.slices);
  o.events_ = std::move(state.events);
  o.next_ns_ = state.next_ns;
  o.next_slice_ = state.next_slice;
  return o;
}

}  // namespace slicekit::orchestrator
