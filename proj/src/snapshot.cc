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

#include <zlib.h>

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

#include "slicekit/error.h"
#include "slicekit/registry.h"

namespace slicekit::registry {

namespace {

using namespace descriptor;
using orchestrator::ChainEdge;
using orchestrator::Event;
using orchestrator::LifecycleState;
using orchestrator::NsInstance;
using orchestrator::ResolvedCp;
using orchestrator::SliceInstance;

constexpr char kMagic[4] = {'S', 'L', 'K', '1'};

enum class RecordKind : std::uint8_t {
  kCounters = 1,
  kPackage = 2,
  kVim = 3,
  kNs = 4,
  kSlice = 5,
  kEvent = 6,
  kGraph = 7,
  kTags = 8,
  kMno = 9,
  kSeries = 10,
};

[[noreturn]] void Corrupt(const std::string &what) { throw Error(Errc::kCorruptSnapshot, "snapshot: " + what); }

class Writer {
 public:
  void U8(std::uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void U32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) U8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void U64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) U8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void I64(std::int64_t v) { U64(static_cast<std::uint64_t>(v)); }
  void F64(double v) { U64(std::bit_cast<std::uint64_t>(v)); }
  void Bool(bool v) { U8(v ? 1 : 0); }
  void Str(std::string_view s) {
    U32(static_cast<std::uint32_t>(s.size()));
    out_.append(s);
  }
  std::string &bytes() { return out_; }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}

  std::uint8_t U8() {
    Need(1);
    return static_cast<std::uint8_t>(in_[pos_++]);
  }
  std::uint32_t U32() {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t{U8()} << (8 * i);
    return v;
  }
  std::uint64_t U64() {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t{U8()} << (8 * i);
    return v;
  }
  std::int64_t I64() { return static_cast<std::int64_t>(U64()); }
  double F64() { return std::bit_cast<double>(U64()); }
  bool Bool() {
    std::uint8_t v = U8();
    if (v > 1) Corrupt("bad boolean");
    return v == 1;
  }
  std::string Str() {
    std::uint32_t n = U32();
    Need(n);
    std::string s(in_.substr(pos_, n));
    pos_ += n;
    return s;
  }
  std::string_view Take(std::size_t n) {
    Need(n);
    std::string_view s = in_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  bool done() const { return pos_ == in_.size(); }

 private:
  void Need(std::size_t n) const {
    if (in_.size() - pos_ < n) Corrupt("truncated record");
  }

  std::string_view in_;
  std::size_t pos_ = 0;
};

template <typename E>
E Enum(Reader &r, std::uint8_t limit) {
  std::uint8_t v = r.U8();
  if (v > limit) Corrupt("enum value out of range");
  return static_cast<E>(v);
}

// Every encodable type has Put(Writer&, const T&) and Get(Reader&, T&).

void Put(Writer &w, const std::string &s) { w.Str(s); }
void Get(Reader &r, std::string &s) { s = r.Str(); }

template <typename T>
void Put(Writer &w, const std::vector<T> &v) {
  w.U32(static_cast<std::uint32_t>(v.size()));
  for (const T &x : v) Put(w, x);
}
template <typename T>
void Get(Reader &r, std::vector<T> &v) {
  std::uint32_t n = r.U32();
  v.clear();
  for (std::uint32_t i = 0; i < n; ++i) Get(r, v.emplace_back());
}

template <typename T>
void Put(Writer &w, const std::optional<T> &v) {
  w.Bool(v.has_value());
  if (v) Put(w, *v);
}
template <typename T>
void Get(Reader &r, std::optional<T> &v) {
  v.reset();
  if (r.Bool()) Get(r, v.emplace());
}

template <typename A, typename B>
void Put(Writer &w, const std::pair<A, B> &p) {
  Put(w, p.first);
  Put(w, p.second);
}
template <typename A, typename B>
void Get(Reader &r, std::pair<A, B> &p) {
  Get(r, p.first);
  Get(r, p.second);
}

void Put(Writer &w, const Rational &v) {
  w.I64(v.num());
  w.I64(v.den());
}
void Get(Reader &r, Rational &v) {
  std::int64_t num = r.I64(), den = r.I64();
  if (den <= 0) Corrupt("bad rational");
  v = Rational(num, den);
}

void Put(Writer &w, const Flavor &f) {
  w.U32(f.vcpus);
  w.U32(f.memory_mb);
  w.U32(f.storage_gb);
}
void Get(Reader &r, Flavor &f) {
  f.vcpus = r.U32();
  f.memory_mb = r.U32();
  f.storage_gb = r.U32();
}

void Put(Writer &w, const Resources &v) {
  w.U64(v.vcpus);
  w.U64(v.memory_mb);
  w.U64(v.storage_gb);
}
void Get(Reader &r, Resources &v) {
  v.vcpus = r.U64();
  v.memory_mb = r.U64();
  v.storage_gb = r.U64();
}

// Descriptors.

void Put(Writer &w, const Interface &v) { Put(w, v.name); Put(w, v.network); }
void Get(Reader &r, Interface &v) { Get(r, v.name); Get(r, v.network); }

void Put(Writer &w, const Vdu &v) {
  Put(w, v.id);
  Put(w, v.image);
  Put(w, v.flavor);
  Put(w, v.interfaces);
}
void Get(Reader &r, Vdu &v) {
  Get(r, v.id);
  Get(r, v.image);
  Get(r, v.flavor);
  Get(r, v.interfaces);
}

void Put(Writer &w, const InterfaceRef &v) { Put(w, v.vdu); Put(w, v.interface); }
void Get(Reader &r, InterfaceRef &v) { Get(r, v.vdu); Get(r, v.interface); }

void Put(Writer &w, const InternalVl &v) { Put(w, v.name); Put(w, v.endpoints); }
void Get(Reader &r, InternalVl &v) { Get(r, v.name); Get(r, v.endpoints); }

void Put(Writer &w, const MetricSpec &v) {
  w.U8(static_cast<std::uint8_t>(v.name));
  Put(w, v.target_vdu);
  w.U32(v.collection_period_s);
}
void Get(Reader &r, MetricSpec &v) {
  v.name = Enum<MetricName>(r, 2);
  Get(r, v.target_vdu);
  v.collection_period_s = r.U32();
}

void Put(Writer &w, const Vnfd &v) {
  Put(w, v.id);
  Put(w, v.mgmt_network);
  Put(w, v.vdus);
  Put(w, v.internal_vls);
  Put(w, v.hooks.day0);
  Put(w, v.hooks.day1);
  Put(w, v.hooks.day2);
  Put(w, v.metrics);
  Put(w, v.unknown_keys);
}
void Get(Reader &r, Vnfd &v) {
  Get(r, v.id);
  Get(r, v.mgmt_network);
  Get(r, v.vdus);
  Get(r, v.internal_vls);
  Get(r, v.hooks.day0);
  Get(r, v.hooks.day1);
  Get(r, v.hooks.day2);
  Get(r, v.metrics);
  Get(r, v.unknown_keys);
}

void Put(Writer &w, const ExternalCp &v) {
  Put(w, v.name);
  Put(w, v.vnfd);
  Put(w, v.interface);
}
void Get(Reader &r, ExternalCp &v) {
  Get(r, v.name);
  Get(r, v.vnfd);
  Get(r, v.interface);
}

void Put(Writer &w, const Nsd &v) {
  Put(w, v.id);
  Put(w, v.constituent_vnfds);
  Put(w, v.external_cps);
  Put(w, v.unknown_keys);
}
void Get(Reader &r, Nsd &v) {
  Get(r, v.id);
  Get(r, v.constituent_vnfds);
  Get(r, v.external_cps);
  Get(r, v.unknown_keys);
}

void Put(Writer &w, const Segment &v) { Put(w, v.nsd); Put(w, v.vim_affinity); }
void Get(Reader &r, Segment &v) { Get(r, v.nsd); Get(r, v.vim_affinity); }

void Put(Writer &w, const ChainEndpoint &v) {
  w.U64(v.segment);
  Put(w, v.cp);
}
void Get(Reader &r, ChainEndpoint &v) {
  v.segment = r.U64();
  Get(r, v.cp);
}

void Put(Writer &w, const ChainLink &v) { Put(w, v.from); Put(w, v.to); }
void Get(Reader &r, ChainLink &v) { Get(r, v.from); Get(r, v.to); }

void Put(Writer &w, const Nsid &v) {
  Put(w, v.id);
  Put(w, v.segments);
  Put(w, v.chain_links);
  Put(w, v.unknown_keys);
}
void Get(Reader &r, Nsid &v) {
  Get(r, v.id);
  Get(r, v.segments);
  Get(r, v.chain_links);
  Get(r, v.unknown_keys);
}

void Put(Writer &w, const orchestrator::CatalogEntry &v) {
  Put(w, v.id);
  Put(w, v.package.vnfds);
  Put(w, v.package.nsds);
  Put(w, v.package.nsid);
}
void Get(Reader &r, orchestrator::CatalogEntry &v) {
  Get(r, v.id);
  Get(r, v.package.vnfds);
  Get(r, v.package.nsds);
  Get(r, v.package.nsid);
}

// Infrastructure.

void Put(Writer &w, const nfvi::Cidr &v) {
  w.U32(v.network.value);
  w.U8(static_cast<std::uint8_t>(v.prefix));
}
void Get(Reader &r, nfvi::Cidr &v) {
  v.network.value = r.U32();
  v.prefix = r.U8();
  if (v.prefix > 32) Corrupt("bad prefix");
}

void Put(Writer &w, const nfvi::VimCapacity &v) {
  w.U64(v.vcpus);
  w.U64(v.memory_mb);
  w.U64(v.storage_gb);
  Put(w, v.mgmt_subnet);
}
void Get(Reader &r, nfvi::VimCapacity &v) {
  v.vcpus = r.U64();
  v.memory_mb = r.U64();
  v.storage_gb = r.U64();
  Get(r, v.mgmt_subnet);
}

void Put(Writer &w, const nfvi::LedgerEntry &v) {
  w.U64(v.ts);
  w.U8(static_cast<std::uint8_t>(v.event));
  Put(w, v.vm_id);
  Put(w, v.flavor);
}
void Get(Reader &r, nfvi::LedgerEntry &v) {
  v.ts = r.U64();
  v.event = Enum<nfvi::LedgerEvent>(r, 1);
  Get(r, v.vm_id);
  Get(r, v.flavor);
}

void Put(Writer &w, const nfvi::VmRecord &v) {
  Put(w, v.vm_id);
  Put(w, v.vdu_id);
  Put(w, v.vnfd_id);
  Put(w, v.slice_id);
  Put(w, v.flavor);
  w.U32(v.mgmt_ip.value);
  w.U8(static_cast<std::uint8_t>(v.state));
}
void Get(Reader &r, nfvi::VmRecord &v) {
  Get(r, v.vm_id);
  Get(r, v.vdu_id);
  Get(r, v.vnfd_id);
  Get(r, v.slice_id);
  Get(r, v.flavor);
  v.mgmt_ip.value = r.U32();
  v.state = Enum<nfvi::VmState>(r, 2);
}

void Put(Writer &w, const nfvi::Vim &v) {
  Put(w, v.name());
  Put(w, v.ledger().capacity);
  Put(w, v.ledger().allocated);
  Put(w, v.ledger().history);
  Put(w, v.vms());
  w.U64(v.next_seq());
}
nfvi::Vim GetVim(Reader &r) {
  std::string name;
  nfvi::Ledger ledger;
  std::vector<nfvi::VmRecord> vms;
  Get(r, name);
  Get(r, ledger.capacity);
  Get(r, ledger.allocated);
  Get(r, ledger.history);
  Get(r, vms);
  std::uint64_t next_seq = r.U64();
  return nfvi::Vim::FromParts(std::move(name), std::move(ledger), std::move(vms), next_seq);
}

void Put(Writer &w, const fabric::Edge &v) {
  Put(w, v.a);
  Put(w, v.b);
  Put(w, v.label);
}
void Get(Reader &r, fabric::Edge &v) {
  Get(r, v.a);
  Get(r, v.b);
  Get(r, v.label);
}

void Put(Writer &w, const fabric::SliceGraph &v) {
  Put(w, v.slice_id);
  w.U32(v.vlan_tag);
  Put(w, v.nodes);
  Put(w, v.edges);
}
void Get(Reader &r, fabric::SliceGraph &v) {
  Get(r, v.slice_id);
  v.vlan_tag = r.U32();
  Get(r, v.nodes);
  Get(r, v.edges);
}

// Orchestration.

void Put(Writer &w, const ResolvedCp &v) {
  Put(w, v.name);
  Put(w, v.vm_id);
  Put(w, v.interface);
}
void Get(Reader &r, ResolvedCp &v) {
  Get(r, v.name);
  Get(r, v.vm_id);
  Get(r, v.interface);
}

void Put(Writer &w, const NsInstance &v) {
  Put(w, v.ns_id);
  Put(w, v.nsd_id);
  Put(w, v.vim_id);
  Put(w, v.slice_id);
  w.Bool(v.standalone);
  Put(w, v.vm_ids);
  Put(w, v.cps);
  Put(w, v.internal_edges);
  w.U8(static_cast<std::uint8_t>(v.state));
}
void Get(Reader &r, NsInstance &v) {
  Get(r, v.ns_id);
  Get(r, v.nsd_id);
  Get(r, v.vim_id);
  Get(r, v.slice_id);
  v.standalone = r.Bool();
  Get(r, v.vm_ids);
  Get(r, v.cps);
  Get(r, v.internal_edges);
  v.state = Enum<LifecycleState>(r, 7);
}

void Put(Writer &w, const ChainEdge &v) {
  Put(w, v.from);
  Put(w, v.to);
  Put(w, v.vm_a);
  Put(w, v.vm_b);
}
void Get(Reader &r, ChainEdge &v) {
  Get(r, v.from);
  Get(r, v.to);
  Get(r, v.vm_a);
  Get(r, v.vm_b);
}

void Put(Writer &w, const SliceInstance &v) {
  Put(w, v.slice_id);
  Put(w, v.nsid_id);
  Put(w, v.ns_ids);
  Put(w, v.chain_edges);
  Put(w, v.tenant_ref);
  w.U8(static_cast<std::uint8_t>(v.state));
}
void Get(Reader &r, SliceInstance &v) {
  Get(r, v.slice_id);
  Get(r, v.nsid_id);
  Get(r, v.ns_ids);
  Get(r, v.chain_edges);
  Get(r, v.tenant_ref);
  v.state = Enum<LifecycleState>(r, 7);
}

void Put(Writer &w, const Event &v) {
  w.U64(v.ts);
  Put(w, v.slice_id);
  Put(w, v.kind);
  Put(w, v.detail);
}
void Get(Reader &r, Event &v) {
  v.ts = r.U64();
  Get(r, v.slice_id);
  Get(r, v.kind);
  Get(r, v.detail);
}

// Tenancy.

void Put(Writer &w, const tenancy::RanSlice &v) {
  Put(w, v.slice_id);
  Put(w, v.guaranteed_share);
  Put(w, v.instance);
  Put(w, v.ues);
}
void Get(Reader &r, tenancy::RanSlice &v) {
  Get(r, v.slice_id);
  Get(r, v.guaranteed_share);
  Get(r, v.instance);
  Get(r, v.ues);
}

void Put(Writer &w, const tenancy::Mvno &v) {
  Put(w, v.mvno_id);
  Put(w, v.quota);
  Put(w, v.ran_slices);
}
void Get(Reader &r, tenancy::Mvno &v) {
  Get(r, v.mvno_id);
  Get(r, v.quota);
  Get(r, v.ran_slices);
}

void Put(Writer &w, const tenancy::Mno &v) {
  Put(w, v.plmn_id);
  w.U32(v.cell.total_prbs);
  Put(w, v.mvnos);
}
void Get(Reader &r, tenancy::Mno &v) {
  Get(r, v.plmn_id);
  v.cell.total_prbs = r.U32();
  Get(r, v.mvnos);
}

void Put(Writer &w, const telemetry::Point &v) {
  w.U64(v.ts);
  w.F64(v.value);
}
void Get(Reader &r, telemetry::Point &v) {
  v.ts = r.U64();
  v.value = r.F64();
}

// Record framing.

template <typename F>
void Record(Writer &out, RecordKind kind, F &&body) {
  Writer w;
  body(w);
  out.U8(static_cast<std::uint8_t>(kind));
  out.U32(static_cast<std::uint32_t>(w.bytes().size()));
  out.bytes().append(w.bytes());
}

template <typename T>
void PutRecord(Writer &out, RecordKind kind, const T &value) {
  Record(out, kind, [&](Writer &w) { Put(w, value); });
}

std::uint32_t Checksum(std::string_view bytes) {
  return static_cast<std::uint32_t>(
      crc32(0L, reinterpret_cast<const Bytef *>(bytes.data()), static_cast<uInt>(bytes.size())));
}

}  // namespace

std::string EncodeSnapshot(const Engine &engine) {
  const orchestrator::Orchestrator::State s = engine.orchestrator().ExportState();
  Writer payload;
  Record(payload, RecordKind::kCounters, [&](Writer &w) {
    w.U64(s.clock.now());
    w.U64(s.next_ns);
    w.U64(s.next_slice);
  });
  for (const auto &entry : s.catalog.entries()) PutRecord(payload, RecordKind::kPackage, entry);
  for (const auto &vim : s.vims.vims()) PutRecord(payload, RecordKind::kVim, vim);
  for (const auto &[id, ns] : s.ns) PutRecord(payload, RecordKind::kNs, ns);
  for (const auto &[id, slice] : s.slices) PutRecord(payload, RecordKind::kSlice, slice);
  for (const auto &e : s.events) PutRecord(payload, RecordKind::kEvent, e);
  for (const auto &[id, graph] : s.fabric.graphs()) PutRecord(payload, RecordKind::kGraph, graph);
  Record(payload, RecordKind::kTags, [&](Writer &w) {
    w.U32(s.fabric.tags().next_tag);
    w.U32(static_cast<std::uint32_t>(s.fabric.tags().retired.size()));
    for (std::uint32_t tag : s.fabric.tags().retired) w.U32(tag);
  });
  for (const auto &mno : engine.tenants().mnos()) PutRecord(payload, RecordKind::kMno, mno);
  for (const auto &[key, points] : engine.metrics().series()) {
    Record(payload, RecordKind::kSeries, [&](Writer &w) {
      Put(w, key.first);
      w.U8(static_cast<std::uint8_t>(key.second));
      Put(w, points);
    });
  }

  Writer file;
  file.bytes().append(kMagic, sizeof(kMagic));
  file.U32(kSnapshotVersion);
  file.bytes().append(payload.bytes());
  file.U32(Checksum(payload.bytes()));
  return std::move(file.bytes());
}

Engine DecodeSnapshot(std::string_view bytes) {
  if (bytes.size() < 12 || std::memcmp(bytes.data(), kMagic, sizeof(kMagic)) != 0) Corrupt("missing SLK1 header");
  Reader header(bytes.substr(4, 4));
  std::uint32_t version = header.U32();
  if (version != kSnapshotVersion) {
    throw Error(Errc::kUnsupportedVersion, "snapshot format version " + std::to_string(version) +
                                               " is not supported (expected " +
                                               std::to_string(kSnapshotVersion) + ")");
  }
  std::string_view payload = bytes.substr(8, bytes.size() - 12);
  Reader trailer(bytes.substr(bytes.size() - 4));
  if (trailer.U32() != Checksum(payload)) Corrupt("checksum mismatch");

  orchestrator::Orchestrator::State s;
  std::vector<orchestrator::CatalogEntry> catalog;
  std::vector<fabric::SliceGraph> graphs;
  fabric::TagPool tags;
  std::vector<tenancy::Mno> mnos;
  std::map<telemetry::SeriesKey, std::vector<telemetry::Point>> series;
  bool have_counters = false, have_tags = false;

  Reader stream(payload);
  while (!stream.done()) {
    std::uint8_t kind = stream.U8();
    std::uint32_t length = stream.U32();
    Reader r(stream.Take(length));
    switch (static_cast<RecordKind>(kind)) {
      case RecordKind::kCounters:
        s.clock.Set(r.U64());
        s.next_ns = r.U64();
        s.next_slice = r.U64();
        have_counters = true;
        break;
      case RecordKind::kPackage:
        Get(r, catalog.emplace_back());
        break;
      case RecordKind::kVim:
        s.vims.vims().push_back(GetVim(r));
        break;
      case RecordKind::kNs: {
        NsInstance ns;
        Get(r, ns);
        std::string id = ns.ns_id;
        s.ns.emplace(std::move(id), std::move(ns));
        break;
      }
      case RecordKind::kSlice: {
        SliceInstance slice;
        Get(r, slice);
        std::string id = slice.slice_id;
        s.slices.emplace(std::move(id), std::move(slice));
        break;
      }
      case RecordKind::kEvent:
        Get(r, s.events.emplace_back());
        break;
      case RecordKind::kGraph:
        Get(r, graphs.emplace_back());
        break;
      case RecordKind::kTags: {
        tags.next_tag = r.U32();
        std::uint32_t n = r.U32();
        for (std::uint32_t i = 0; i < n; ++i) tags.retired.insert(r.U32());
        have_tags = true;
        break;
      }
      case RecordKind::kMno:
        Get(r, mnos.emplace_back());
        break;
      case RecordKind::kSeries: {
        std::string vm;
        Get(r, vm);
        auto metric = Enum<MetricName>(r, 2);
        Get(r, series[{vm, metric}]);
        break;
      }
      default:
        Corrupt("unknown record kind " + std::to_string(kind));
    }
    if (!r.done()) Corrupt("record kind " + std::to_string(kind) + " has trailing bytes");
  }
  if (!have_counters || !have_tags) Corrupt("required record missing");

  s.catalog = orchestrator::Catalog::FromParts(std::move(catalog));
  s.fabric = fabric::Fabric::FromParts(std::move(graphs), tags);
  Engine engine;
  engine.orchestrator() = orchestrator::Orchestrator::FromState(std::move(s));
  engine.tenants() = tenancy::TenantTree::FromParts(std::move(mnos));
  engine.metrics() = telemetry::MetricStore::FromParts(std::move(series));
  return engine;
}

void Save(const Engine &engine, const std::string &path) {
  std::string bytes = EncodeSnapshot(engine);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::kIoError, "cannot write " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(Errc::kIoError, "cannot write " + path);
}

Engine Load(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kIoError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return DecodeSnapshot(ss.str());
}

}  // namespace slicekit::registry
