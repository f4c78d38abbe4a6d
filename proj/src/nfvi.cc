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

#include "slicekit/nfvi.h"

#include <charconv>

#include "slicekit/document.h"
#include "slicekit/error.h"

namespace slicekit::nfvi {

namespace {

constexpr std::uint64_t kMinAssignable = 8;

std::string_view EventText(LedgerEvent e) {
  return e == LedgerEvent::kAllocate ? "allocate" : "release";
}

[[noreturn]] void BadCapacity(const std::string &what) {
  throw Error(Errc::kInvalidCapacity, what);
}

}  // namespace

std::string Ipv4::ToString() const {
  return std::to_string(value >> 24) + "." + std::to_string((value >> 16) & 0xff) + "." +
         std::to_string((value >> 8) & 0xff) + "." + std::to_string(value & 0xff);
}

std::optional<Ipv4> Ipv4::Parse(std::string_view text) {
  std::uint32_t result = 0;
  const char *p = text.data();
  const char *end = p + text.size();
  for (int octet = 0; octet < 4; ++octet) {
    unsigned part = 0;
    auto [next, ec] = std::from_chars(p, end, part);
    if (ec != std::errc() || next == p || part > 255 || next - p > 3) return std::nullopt;
    result = (result << 8) | part;
    p = next;
    if (octet < 3) {
      if (p == end || *p != '.') return std::nullopt;
      ++p;
    }
  }
  if (p != end) return std::nullopt;
  return Ipv4{result};
}

Cidr Cidr::Parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) BadCapacity("subnet '" + std::string(text) + "' lacks a prefix");
  auto addr = Ipv4::Parse(text.substr(0, slash));
  int prefix = -1;
  std::string_view p = text.substr(slash + 1);
  auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), prefix);
  if (!addr || ec != std::errc() || ptr != p.data() + p.size() || prefix < 0 || prefix > 32) {
    BadCapacity("malformed subnet '" + std::string(text) + "'");
  }
  Cidr cidr{*addr, prefix};
  std::uint64_t mask = cidr.size() - 1;
  if ((addr->value & mask) != 0) BadCapacity("subnet '" + std::string(text) + "' has host bits set");
  return cidr;
}

std::string Cidr::ToString() const { return network.ToString() + "/" + std::to_string(prefix); }

VimCapacity DefaultCapacity(const Cidr &subnet) { return {8, 32768, 500, subnet}; }

std::string_view VmStateText(VmState state) {
  switch (state) {
    case VmState::kBuilding: return "Building";
    case VmState::kActive: return "Active";
    case VmState::kReleased: return "Released";
  }
  return "";
}

std::string LedgerEntry::ToLine() const {
  return std::to_string(ts) + " " + std::string(EventText(event)) + " " + vm_id + " " +
         std::to_string(flavor.vcpus) + " " + std::to_string(flavor.memory_mb) + " " +
         std::to_string(flavor.storage_gb);
}

Resources Ledger::Replay() const {
  Resources total;
  for (const LedgerEntry &e : history) {
    Resources f(e.flavor);
    if (e.event == LedgerEvent::kAllocate) total += f;
    else total -= f;
  }
  return total;
}

Vim::Vim(std::string name, VimCapacity capacity) : name_(std::move(name)) {
  if (!document::IsBareToken(name_) || name_.find('/') != std::string::npos) {
    throw Error(Errc::kInvalidName, "invalid VIM name '" + name_ + "'");
  }
  if (capacity.vcpus == 0 || capacity.memory_mb == 0 || capacity.storage_gb == 0) {
    BadCapacity("VIM '" + name_ + "' capacity must be positive in every resource");
  }
  if (capacity.mgmt_subnet.assignable() < kMinAssignable) {
    BadCapacity("subnet " + capacity.mgmt_subnet.ToString() + " has fewer than " +
                std::to_string(kMinAssignable) + " assignable addresses");
  }
  ledger_.capacity = capacity;
}

std::uint64_t Vim::LowestFreeOffset() const {
  // Offset 0 is the network address and 1 the gateway.
  std::uint64_t candidate = 2;
  for (auto it = used_offsets_.lower_bound(2); it != used_offsets_.end() && *it == candidate; ++it) {
    ++candidate;
  }
  return candidate;
}

const VmRecord &Vim::Allocate(const descriptor::Vdu &vdu, const std::string &vnfd_id,
                              const std::optional<std::string> &slice_id, LogicalTime ts) {
  Resources want(vdu.flavor);
  Resources room = free();
  auto exceeded = [&](std::string_view resource, std::uint64_t asked, std::uint64_t left) {
    throw Error(Errc::kQuotaExceeded, "QuotaExceeded(" + std::string(resource) + ") on " + name_ +
                                          ": requested " + std::to_string(asked) + ", free " +
                                          std::to_string(left));
  };
  if (want.vcpus > room.vcpus) exceeded("vcpus", want.vcpus, room.vcpus);
  if (want.memory_mb > room.memory_mb) exceeded("memory", want.memory_mb, room.memory_mb);
  if (want.storage_gb > room.storage_gb) exceeded("storage", want.storage_gb, room.storage_gb);
  std::uint64_t offset = LowestFreeOffset();
  // The last address is broadcast.
  if (offset >= ledger_.capacity.mgmt_subnet.size() - 1) {
    throw Error(Errc::kAddressExhausted, "management subnet of " + name_ + " is exhausted");
  }

  VmRecord vm;
  vm.vm_id = name_ + "/vm-" + std::to_string(next_seq_);
  vm.vdu_id = vdu.id;
  vm.vnfd_id = vnfd_id;
  vm.slice_id = slice_id;
  vm.flavor = vdu.flavor;
  vm.mgmt_ip = ledger_.capacity.mgmt_subnet.At(offset);
  vm.state = VmState::kBuilding;

  ++next_seq_;
  used_offsets_.insert(offset);
  ledger_.allocated += want;
  ledger_.history.push_back({ts, LedgerEvent::kAllocate, vm.vm_id, vm.flavor});
  index_.emplace(vm.vm_id, vms_.size());
  vms_.push_back(std::move(vm));
  vms_.back().state = VmState::kActive;
  return vms_.back();
}

void Vim::Release(std::string_view vm_id, LogicalTime ts) {
  auto it = index_.find(vm_id);
  if (it == index_.end()) throw Error(Errc::kUnknownVm, "unknown VM '" + std::string(vm_id) + "' on " + name_);
  VmRecord &vm = vms_[it->second];
  if (vm.state == VmState::kReleased) {
    throw Error(Errc::kAlreadyReleased, "VM '" + vm.vm_id + "' is already released");
  }
  vm.state = VmState::kReleased;
  used_offsets_.erase(vm.mgmt_ip.value - ledger_.capacity.mgmt_subnet.network.value);
  ledger_.allocated -= Resources(vm.flavor);
  ledger_.history.push_back({ts, LedgerEvent::kRelease, vm.vm_id, vm.flavor});
}

const VmRecord *Vim::FindVm(std::string_view vm_id) const {
  auto it = index_.find(vm_id);
  return it == index_.end() ? nullptr : &vms_[it->second];
}

VimUsage Vim::Usage() const {
  return {name_, ledger_.capacity, ledger_.allocated, vms_};
}

std::string Vim::ExportHistory() const {
  std::string out;
  for (const LedgerEntry &e : ledger_.history) out += e.ToLine() + "\n";
  return out;
}

void Vim::RollbackTo(const Mark &mark) {
  const std::uint64_t base = ledger_.capacity.mgmt_subnet.network.value;
  while (ledger_.history.size() > mark.history_size) {
    const LedgerEntry &e = ledger_.history.back();
    auto it = index_.find(e.vm_id);
    VmRecord &vm = vms_[it->second];
    if (e.event == LedgerEvent::kAllocate) {
      // Allocations append, so undoing newest-first always pops the tail.
      used_offsets_.erase(vm.mgmt_ip.value - base);
      ledger_.allocated -= Resources(vm.flavor);
      index_.erase(it);
      vms_.pop_back();
    } else {
      vm.state = VmState::kActive;
      used_offsets_.insert(vm.mgmt_ip.value - base);
      ledger_.allocated += Resources(vm.flavor);
    }
    ledger_.history.pop_back();
  }
  next_seq_ = mark.next_seq;
}

Vim Vim::FromParts(std::string name, Ledger ledger, std::vector<VmRecord> vms,
                   std::uint64_t next_seq) {
  Vim vim(std::move(name), ledger.capacity);
  vim.ledger_ = std::move(ledger);
  vim.vms_ = std::move(vms);
  vim.next_seq_ = next_seq;
  const std::uint64_t base = vim.ledger_.capacity.mgmt_subnet.network.value;
  for (std::size_t i = 0; i < vim.vms_.size(); ++i) {
    vim.index_.emplace(vim.vms_[i].vm_id, i);
    if (vim.vms_[i].state != VmState::kReleased) vim.used_offsets_.insert(vim.vms_[i].mgmt_ip.value - base);
  }
  return vim;
}

Vim &VimRegistry::Create(std::string name, VimCapacity capacity) {
  if (Find(name) != nullptr) throw Error(Errc::kDuplicateVim, "VIM '" + name + "' already exists");
  vims_.emplace_back(std::move(name), capacity);
  return vims_.back();
}

Vim &VimRegistry::Get(std::string_view name) {
  Vim *vim = Find(name);
  if (vim == nullptr) throw Error(Errc::kUnknownVim, "unknown VIM '" + std::string(name) + "'");
  return *vim;
}

const Vim &VimRegistry::Get(std::string_view name) const {
  return const_cast<VimRegistry *>(this)->Get(name);
}

const Vim *VimRegistry::Find(std::string_view name) const {
  return const_cast<VimRegistry *>(this)->Find(name);
}

Vim *VimRegistry::Find(std::string_view name) {
  for (Vim &v : vims_) {
    if (v.name() == name) return &v;
  }
  return nullptr;
}

const Vim *VimRegistry::FindHost(std::string_view vm_id) const {
  for (const Vim &v : vims_) {
    if (v.FindVm(vm_id) != nullptr) return &v;
  }
  return nullptr;
}

}  // namespace slicekit::nfvi
