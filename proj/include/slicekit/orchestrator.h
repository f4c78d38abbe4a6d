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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slicekit/descriptor.h"
#include "slicekit/fabric.h"
#include "slicekit/nfvi.h"

namespace slicekit::orchestrator {

using nfvi::LogicalTime;

enum class LifecycleState {
  kOnboarded,
  kInstantiating,
  kDay0Done,
  kDay1Configured,
  kRunning,
  kTerminating,
  kTerminated,
  kFailed,
};

std::string_view StateText(LifecycleState state);
std::optional<LifecycleState> ParseState(std::string_view text);
bool IsTerminal(LifecycleState state);
/// The forward chain Onboarded->...->Terminated, plus Day0Done and
/// Day1Configured->Terminating and any non-terminal state->Failed.
bool IsLegalTransition(LifecycleState from, LifecycleState to);

class LogicalClock {
 public:
  LogicalTime now() const { return now_; }
  LogicalTime Tick() { return ++now_; }
  void Set(LogicalTime t) { now_ = t; }
  friend bool operator==(const LogicalClock &, const LogicalClock &) = default;

 private:
  LogicalTime now_ = 0;
};

/// Event kinds written to the log.
namespace event {
inline constexpr std::string_view kState = "state";
inline constexpr std::string_view kVmCreated = "vm-created";
inline constexpr std::string_view kNsCreated = "ns-created";
inline constexpr std::string_view kChainEdge = "chain-edge";
inline constexpr std::string_view kFabricRegister = "fabric-register";
inline constexpr std::string_view kDay1Config = "day1-config";
inline constexpr std::string_view kDay2Config = "day2-config";
inline constexpr std::string_view kVmReleased = "vm-released";
inline constexpr std::string_view kFabricRetract = "fabric-retract";
inline constexpr std::string_view kInstantiateFailed = "instantiate-failed";
inline constexpr std::string_view kNsTerminated = "ns-terminated";
}  // namespace event

struct Event {
  LogicalTime ts = 0;
  std::string slice_id;
  std::string kind;
  std::string detail;

  /// `<logical-ts> <slice-id> <event-kind> <detail>`
  std::string ToLine() const;
  friend bool operator==(const Event &, const Event &) = default;
};

using PackageId = std::string;

struct CatalogEntry {
  PackageId id;
  descriptor::DescriptorPackage package;

  friend bool operator==(const CatalogEntry &, const CatalogEntry &) = default;
};

/// Immutable store of onboarded packages. Descriptor ids are unique per level
/// across the whole catalog; a package may repeat a descriptor only verbatim.
class Catalog {
 public:
  /// ValidationFailed, CatalogConflict. Identical content yields the same id.
  PackageId Onboard(const descriptor::DescriptorPackage &package);

  const CatalogEntry *Find(std::string_view package_id) const;
  const descriptor::Vnfd *FindVnfd(std::string_view id) const;
  const descriptor::Nsd *FindNsd(std::string_view id) const;
  /// The package whose NSID carries `id`.
  const CatalogEntry *FindNsid(std::string_view id) const;
  const std::vector<CatalogEntry> &entries() const { return entries_; }

  static PackageId IdOf(const descriptor::DescriptorPackage &package);
  static Catalog FromParts(std::vector<CatalogEntry> entries);
  friend bool operator==(const Catalog &, const Catalog &) = default;

 private:
  std::vector<CatalogEntry> entries_;
};

struct ResolvedCp {
  std::string name;
  std::string vm_id;
  std::string interface;

  friend bool operator==(const ResolvedCp &, const ResolvedCp &) = default;
};

struct NsInstance {
  std::string ns_id;
  std::string nsd_id;
  std::string vim_id;
  std::optional<std::string> slice_id;
  /// True when created by `InstantiateNs` rather than as part of a slice.
  bool standalone = false;
  std::vector<std::string> vm_ids;
  std::vector<ResolvedCp> cps;
  std::vector<fabric::Edge> internal_edges;
  LifecycleState state = LifecycleState::kOnboarded;

  const ResolvedCp *FindCp(std::string_view name) const;
  friend bool operator==(const NsInstance &, const NsInstance &) = default;
};

struct ChainEdge {
  descriptor::ChainEndpoint from;
  descriptor::ChainEndpoint to;
  std::string vm_a;
  std::string vm_b;

  friend bool operator==(const ChainEdge &, const ChainEdge &) = default;
};

struct SliceInstance {
  std::string slice_id;
  std::string nsid_id;
  std::vector<std::string> ns_ids;
  std::vector<ChainEdge> chain_edges;
  /// "plmn/mvno/ran-slice" of the tenant slice bound to this instance.
  std::optional<std::string> tenant_ref;
  LifecycleState state = LifecycleState::kOnboarded;

  friend bool operator==(const SliceInstance &, const SliceInstance &) = default;
};

struct Assignment {
  std::size_t segment = 0;
  std::string nsd_id;
  std::string vim_id;

  friend bool operator==(const Assignment &, const Assignment &) = default;
};

struct PlacementPlan {
  std::vector<Assignment> assignments;

  friend bool operator==(const PlacementPlan &, const PlacementPlan &) = default;
};

/// Key is a segment index or an NSD id; value is a VIM name.
using PlacementOverrides = std::map<std::string, std::string>;

struct InstantiateOptions {
  /// Fault injection: consulted before the n-th VDU allocation (0-based) of
  /// the call; returning true makes that allocation fail with QuotaExceeded.
  std::function<bool(std::size_t)> fail_allocation;
};

/// NFVO and VNFM in one control loop. Commands run one at a time; every
/// instance mutation is logged with a fresh logical timestamp.
class Orchestrator {
 public:
  // Infrastructure.
  nfvi::Vim &CreateVim(std::string name, nfvi::VimCapacity capacity);
  nfvi::VimRegistry &vims() { return vims_; }
  const nfvi::VimRegistry &vims() const { return vims_; }
  const fabric::Fabric &fabric() const { return fabric_; }
  const Catalog &catalog() const { return catalog_; }
  LogicalClock &clock() { return clock_; }
  const LogicalClock &clock() const { return clock_; }

  /// ValidationFailed, CatalogConflict.
  PackageId Onboard(const descriptor::DescriptorPackage &package);

  /// UnknownNsid, UnknownVim, NoFeasiblePlacement.
  PlacementPlan PlanPlacement(std::string_view nsid_id, const PlacementOverrides &overrides = {}) const;

  /// UnknownNsd, UnknownVim, QuotaExceeded, AddressExhausted. VMs of a failed
  /// call are released before the error propagates.
  const NsInstance &InstantiateNs(std::string_view nsd_id, std::string_view vim_id,
                                  const std::optional<std::string> &slice_id = std::nullopt);
  /// UnknownNs; InvalidState when the NS is part of a slice or already ended.
  void TerminateNs(std::string_view ns_id);

  /// Steps 1-3 of slice creation. On failure every VIM is rolled back to its
  /// pre-call state, the slice is kept in Failed, and the error propagates.
  const SliceInstance &InstantiateSlice(std::string_view nsid_id, const PlacementPlan &plan,
                                        const InstantiateOptions &options = {});
  /// InvalidState unless Day0Done.
  void Day1Configure(std::string_view slice_id);
  /// InvalidState unless Running; UnknownVnfd unless a constituent.
  void Day2Reconfigure(std::string_view slice_id, std::string_view vnfd_id,
                       const descriptor::ParamMap &params);
  /// SliceAttached while bound to a tenant slice; InvalidState.
  void TerminateSlice(std::string_view slice_id);

  /// Sets or clears the tenant binding. UnknownSlice.
  void SetTenantRef(std::string_view slice_id, std::optional<std::string> ref);

  const SliceInstance &GetSlice(std::string_view slice_id) const;
  const SliceInstance *FindSlice(std::string_view slice_id) const;
  const NsInstance &GetNs(std::string_view ns_id) const;
  const std::map<std::string, SliceInstance, std::less<>> &slices() const { return slices_; }
  const std::map<std::string, NsInstance, std::less<>> &ns_instances() const { return ns_; }
  /// VM records of a slice, in NS order then allocation order.
  std::vector<nfvi::VmRecord> SliceVms(std::string_view slice_id) const;

  const std::vector<Event> &events() const { return events_; }
  std::string ExportEvents() const;

  /// Persisted form. Members mirror the private state one to one.
  struct State {
    nfvi::VimRegistry vims;
    fabric::Fabric fabric;
    Catalog catalog;
    LogicalClock clock;
    std::map<std::string, NsInstance, std::less<>> ns;
    std::map<std::string, SliceInstance, std::less<>> slices;
    std::vector<Event> events;
    std::uint64_t next_ns = 1;
    std::uint64_t next_slice = 1;
  };
  State ExportState() const;
  static Orchestrator FromState(State state);

  friend bool operator==(const Orchestrator &, const Orchestrator &) = default;

 private:
  void Log(std::string_view slice_id, std::string_view kind, std::string detail);
  void Transition(SliceInstance &slice, LifecycleState to);
  SliceInstance &MutableSlice(std::string_view slice_id);
  struct AllocatedNs {
    const descriptor::Nsd *nsd = nullptr;
    nfvi::Vim *vim = nullptr;
    /// (vnfd id, vdu id) per VM, parallel to vm_ids.
    std::vector<std::pair<std::string, std::string>> origins;
    std::vector<std::string> vm_ids;
  };
  /// Step 1 for one NSD: one VM per VDU in descriptor order. Callers roll back.
  AllocatedNs AllocateNs(const descriptor::Nsd &nsd, nfvi::Vim &vim,
                         const std::optional<std::string> &slice_id, std::string_view log_id,
                         std::size_t &allocation_index, const InstantiateOptions &options);
  /// Step 2: resolves cps and internal edges and names the instance.
  NsInstance AssembleNs(const AllocatedNs &allocated, const std::optional<std::string> &slice_id,
                        std::string_view log_id);

  nfvi::VimRegistry vims_;
  fabric::Fabric fabric_;
  Catalog catalog_;
  LogicalClock clock_;
  std::map<std::string, NsInstance, std::less<>> ns_;
  std::map<std::string, SliceInstance, std::less<>> slices_;
  std::vector<Event> events_;
  std::uint64_t next_ns_ = 1;
  std::uint64_t next_slice_ = 1;
};

/// "k=v,k=v"; "-" when empty.
std::string ParamsText(const descriptor::ParamMap &params);

}  // namespace slicekit::orchestrator
