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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace slicekit::descriptor {

/// Network name an interface uses when it faces outside its VNF, i.e. when it
/// is exposed through an NSD connection point rather than an internal vl.
inline constexpr std::string_view kExternalNetwork = "external";

struct Flavor {
  std::uint32_t vcpus = 0;
  std::uint32_t memory_mb = 0;
  std::uint32_t storage_gb = 0;

  friend bool operator==(const Flavor &, const Flavor &) = default;
};

/// Aggregate compute/memory/storage amount. Used for budgets and ledgers.
struct Resources {
  std::uint64_t vcpus = 0;
  std::uint64_t memory_mb = 0;
  std::uint64_t storage_gb = 0;

  Resources() = default;
  Resources(std::uint64_t v, std::uint64_t m, std::uint64_t s)
      : vcpus(v), memory_mb(m), storage_gb(s) {}
  explicit Resources(const Flavor &f) : vcpus(f.vcpus), memory_mb(f.memory_mb), storage_gb(f.storage_gb) {}

  Resources &operator+=(const Resources &o) {
    vcpus += o.vcpus;
    memory_mb += o.memory_mb;
    storage_gb += o.storage_gb;
    return *this;
  }
  /// Component-wise; callers guarantee no underflow.
  Resources &operator-=(const Resources &o) {
    vcpus -= o.vcpus;
    memory_mb -= o.memory_mb;
    storage_gb -= o.storage_gb;
    return *this;
  }
  friend Resources operator+(Resources a, const Resources &b) { return a += b; }
  friend Resources operator-(Resources a, const Resources &b) { return a -= b; }
  /// True when every component fits.
  bool FitsWithin(const Resources &limit) const {
    return vcpus <= limit.vcpus && memory_mb <= limit.memory_mb && storage_gb <= limit.storage_gb;
  }

  friend bool operator==(const Resources &, const Resources &) = default;
};

struct Interface {
  std::string name;
  std::string network;

  friend bool operator==(const Interface &, const Interface &) = default;
};

struct Vdu {
  std::string id;
  std::string image;
  Flavor flavor;
  std::vector<Interface> interfaces;

  const Interface *FindInterface(std::string_view name) const;
  friend bool operator==(const Vdu &, const Vdu &) = default;
};

/// "vdu.interface" reference to one VDU interface inside a VNFD.
struct InterfaceRef {
  std::string vdu;
  std::string interface;

  std::string ToString() const { return vdu + "." + interface; }
  /// Splits at the first '.'; nullopt when either side is empty.
  static std::optional<InterfaceRef> Parse(std::string_view text);
  friend bool operator==(const InterfaceRef &, const InterfaceRef &) = default;
};

struct InternalVl {
  std::string name;
  std::vector<InterfaceRef> endpoints;

  friend bool operator==(const InternalVl &, const InternalVl &) = default;
};

enum class MetricName { kCpuUtilizationPct, kMemoryUtilizationMb, kThroughputMbps };

std::string_view MetricNameText(MetricName name);
std::optional<MetricName> ParseMetricName(std::string_view text);

struct MetricSpec {
  MetricName name = MetricName::kCpuUtilizationPct;
  std::string target_vdu;
  std::uint32_t collection_period_s = 1;

  friend bool operator==(const MetricSpec &, const MetricSpec &) = default;
};

/// Ordered key/value parameters of a day-0/1/2 hook.
using ParamMap = std::vector<std::pair<std::string, std::string>>;

struct LifecycleHooks {
  ParamMap day0;
  ParamMap day1;
  ParamMap day2;

  friend bool operator==(const LifecycleHooks &, const LifecycleHooks &) = default;
};

struct Vnfd {
  std::string id;
  std::string mgmt_network;
  std::vector<Vdu> vdus;
  std::vector<InternalVl> internal_vls;
  LifecycleHooks hooks;
  std::vector<MetricSpec> metrics;
  /// Dotted paths of keys the schema does not know; reported by validation.
  std::vector<std::string> unknown_keys;

  const Vdu *FindVdu(std::string_view id) const;
  friend bool operator==(const Vnfd &, const Vnfd &) = default;
};

struct ExternalCp {
  std::string name;
  std::string vnfd;
  InterfaceRef interface;

  friend bool operator==(const ExternalCp &, const ExternalCp &) = default;
};

struct Nsd {
  std::string id;
  std::vector<std::string> constituent_vnfds;
  std::vector<ExternalCp> external_cps;
  std::vector<std::string> unknown_keys;

  const ExternalCp *FindCp(std::string_view name) const;
  friend bool operator==(const Nsd &, const Nsd &) = default;
};

struct Segment {
  std::string nsd;
  std::optional<std::string> vim_affinity;

  friend bool operator==(const Segment &, const Segment &) = default;
};

/// "segment-index.cp-name".
struct ChainEndpoint {
  std::size_t segment = 0;
  std::string cp;

  std::string ToString() const { return std::to_string(segment) + "." + cp; }
  friend bool operator==(const ChainEndpoint &, const ChainEndpoint &) = default;
};

struct ChainLink {
  ChainEndpoint from;
  ChainEndpoint to;

  friend bool operator==(const ChainLink &, const ChainLink &) = default;
};

struct Nsid {
  std::string id;
  std::vector<Segment> segments;
  std::vector<ChainLink> chain_links;
  std::vector<std::string> unknown_keys;

  friend bool operator==(const Nsid &, const Nsid &) = default;
};

struct DescriptorPackage {
  std::vector<Vnfd> vnfds;
  std::vector<Nsd> nsds;
  Nsid nsid;

  const Vnfd *FindVnfd(std::string_view id) const;
  const Nsd *FindNsd(std::string_view id) const;
  friend bool operator==(const DescriptorPackage &, const DescriptorPackage &) = default;
};

// Parsing. All parsers throw ParseError; invariant failures name the first
// violated invariant. The context overloads additionally resolve references
// against already-parsed lower-level descriptors that are supplied.
Vnfd ParseVnfd(std::string_view text);
Nsd ParseNsd(std::string_view text, std::span<const Vnfd> known_vnfds = {});
Nsid ParseNsid(std::string_view text, std::span<const Nsd> known_nsds = {});

using AnyDescriptor = std::variant<Vnfd, Nsd, Nsid>;

/// Dispatches on the document's `kind`.
AnyDescriptor ParseAny(std::string_view text);

/// Assembles a package from documents of any kind (order free). Cross-document
/// references are left to ValidatePackage. Throws ParseError when a document
/// fails to parse or when the set does not hold exactly one NSID.
DescriptorPackage AssemblePackage(std::span<const std::string> documents);

std::string Serialize(const Vnfd &vnfd);
std::string Serialize(const Nsd &nsd);
std::string Serialize(const Nsid &nsid);

// Validation.

enum class Level { kVnfd = 0, kNsd = 1, kNsid = 2 };

std::string_view LevelText(Level level);

struct Finding {
  Level level = Level::kVnfd;
  std::string id;
  std::string code;
  std::string detail;

  std::string ToString() const;
  friend auto operator<=>(const Finding &, const Finding &) = default;
};

struct ValidationReport {
  std::vector<Finding> findings;

  bool ok() const { return findings.empty(); }
  /// One finding per line, LF terminated.
  std::string ToString() const;
  friend bool operator==(const ValidationReport &, const ValidationReport &) = default;
};

ValidationReport ValidatePackage(std::span<const Vnfd> vnfds, std::span<const Nsd> nsds,
                                 const Nsid &nsid);
ValidationReport ValidatePackage(const DescriptorPackage &package);

/// Sum of every VDU flavor the segment would instantiate. Throws BudgetError
/// when the segment's NSD or one of its VNFDs does not resolve.
Resources SegmentBudget(const DescriptorPackage &package, std::size_t segment);

/// Per-VIM totals grouped by segment affinity. Segments without affinity are
/// charged to `default_vim`; BudgetError when that is needed and absent.
std::map<std::string, Resources> ResourceBudget(const DescriptorPackage &package,
                                                const std::optional<std::string> &default_vim = std::nullopt);

}  // namespace slicekit::descriptor
