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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "slicekit/descriptor.h"

namespace slicekit::nfvi {

using descriptor::Flavor;
using descriptor::Resources;

/// Logical time. Nothing in the engine reads a wall clock.
using LogicalTime = std::uint64_t;

struct Ipv4 {
  std::uint32_t value = 0;

  std::string ToString() const;
  static std::optional<Ipv4> Parse(std::string_view text);
  friend auto operator<=>(const Ipv4 &, const Ipv4 &) = default;
};

struct Cidr {
  Ipv4 network;
  int prefix = 32;

  /// Throws Error(kInvalidCapacity) for malformed text or set host bits.
  static Cidr Parse(std::string_view text);
  std::uint64_t size() const { return std::uint64_t{1} << (32 - prefix); }
  /// Addresses left once network, gateway (.1) and broadcast are reserved.
  std::uint64_t assignable() const { return size() >= 3 ? size() - 3 : 0; }
  Ipv4 At(std::uint64_t offset) const { return {network.value + static_cast<std::uint32_t>(offset)}; }
  std::string ToString() const;
  friend bool operator==(const Cidr &, const Cidr &) = default;
};

struct VimCapacity {
  std::uint64_t vcpus = 0;
  std::uint64_t memory_mb = 0;
  std::uint64_t storage_gb = 0;
  Cidr mgmt_subnet;

  Resources resources() const { return {vcpus, memory_mb, storage_gb}; }
  friend bool operator==(const VimCapacity &, const VimCapacity &) = default;
};

/// A desktop-class host: 8 vcpus, 32 GB of RAM, 500 GB of disk.
VimCapacity DefaultCapacity(const Cidr &subnet);

enum class VmState { kBuilding, kActive, kReleased };

std::string_view VmStateText(VmState state);

struct VmRecord {
  std::string vm_id;
  std::string vdu_id;
  std::string vnfd_id;
  std::optional<std::string> slice_id;
  Flavor flavor;
  Ipv4 mgmt_ip;
  VmState state = VmState::kBuilding;

  friend bool operator==(const VmRecord &, const VmRecord &) = default;
};

enum class LedgerEvent { kAllocate, kRelease };

struct LedgerEntry {
  LogicalTime ts = 0;
  LedgerEvent event = LedgerEvent::kAllocate;
  std::string vm_id;
  Flavor flavor;

  /// `<logical-ts> <event> <vm-id> <vcpus> <memory-mb> <storage-gb>`
  std::string ToLine() const;
  friend bool operator==(const LedgerEntry &, const LedgerEntry &) = default;
};

struct Ledger {
  VimCapacity capacity;
  Resources allocated;
  std::vector<LedgerEntry> history;

  /// Allocation totals recomputed from the history alone.
  Resources Replay() const;
  friend bool operator==(const Ledger &, const Ledger &) = default;
};

struct VimUsage {
  std::string name;
  VimCapacity capacity;
  Resources allocated;
  std::vector<VmRecord> vms;

  friend bool operator==(const VimUsage &, const VimUsage &) = default;
};

/// One simulated VIM. A single owner mutates it; copies are consistent
/// snapshots. No oversubscription: allocation never exceeds capacity.
class Vim {
 public:
  /// Throws Error(kInvalidCapacity) unless every resource is positive and the
  /// subnet leaves at least 8 assignable addresses.
  Vim(std::string name, VimCapacity capacity);

  const std::string &name() const { return name_; }
  const Ledger &ledger() const { return ledger_; }
  Resources free() const { return ledger_.capacity.resources() - ledger_.allocated; }

  /// All-or-nothing. Quota is checked in the order vcpus, memory, storage and
  /// the first insufficient resource is named in Error(kQuotaExceeded). The VM
  /// receives the lowest free management address.
  const VmRecord &Allocate(const descriptor::Vdu &vdu, const std::string &vnfd_id,
                           const std::optional<std::string> &slice_id, LogicalTime ts);

  /// UnknownVm, AlreadyReleased.
  void Release(std::string_view vm_id, LogicalTime ts);

  const VmRecord *FindVm(std::string_view vm_id) const;
  /// Every VM ever created here (including released) in creation order.
  const std::vector<VmRecord> &vms() const { return vms_; }
  VimUsage Usage() const;
  std::string ExportHistory() const;

  /// Undo point for transactional callers.
  struct Mark {
    std::size_t history_size = 0;
    std::uint64_t next_seq = 0;
  };
  Mark mark() const { return {ledger_.history.size(), next_seq_}; }
  /// Reverts every ledger event after `mark`, restoring this VIM field-for-field.
  void RollbackTo(const Mark &mark);

  std::uint64_t next_seq() const { return next_seq_; }
  /// Rebuilds a VIM from persisted parts; derived indexes are recomputed.
  static Vim FromParts(std::string name, Ledger ledger, std::vector<VmRecord> vms,
                       std::uint64_t next_seq);

  friend bool operator==(const Vim &, const Vim &) = default;

 private:

  std::uint64_t LowestFreeOffset() const;

  std::string name_;
  Ledger ledger_;
  std::vector<VmRecord> vms_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::set<std::uint64_t> used_offsets_;
  std::uint64_t next_seq_ = 1;
};

/// VIMs in registration order.
class VimRegistry {
 public:
  /// DuplicateVim, InvalidCapacity.
  Vim &Create(std::string name, VimCapacity capacity);
  /// UnknownVim.
  Vim &Get(std::string_view name);
  const Vim &Get(std::string_view name) const;
  const Vim *Find(std::string_view name) const;
  Vim *Find(std::string_view name);

  /// The VIM hosting `vm_id`, if any.
  const Vim *FindHost(std::string_view vm_id) const;

  std::vector<Vim> &vims() { return vims_; }
  const std::vector<Vim> &vims() const { return vims_; }
  std::size_t size() const { return vims_.size(); }

  friend bool operator==(const VimRegistry &, const VimRegistry &) = default;

 private:
  std::vector<Vim> vims_;
};

}  // namespace slicekit::nfvi
